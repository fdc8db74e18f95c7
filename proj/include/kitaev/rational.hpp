#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace kitaev {

// mpq_class keeps values canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Vec = std::vector<Rational>;

Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Vec zero_vec(std::size_t n);
Vec basis_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);

}  // namespace kitaev
