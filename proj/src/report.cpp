#include "kitaev/report.hpp"

#include <sstream>

namespace kitaev {

void Report::pass(const std::string& name, const std::string& detail) {
    checks_.push_back({name, true, detail});
}

void Report::fail(const std::string& name, const std::string& detail) {
    checks_.push_back({name, false, detail});
}

void Report::add(const std::string& name, bool passed, const std::string& detail) {
    checks_.push_back({name, passed, detail});
}

void Report::warn(const std::string& message) { warnings_.push_back(message); }

void Report::merge(const Report& other, const std::string& prefix) {
    for (const auto& c : other.checks_) {
        checks_.push_back({prefix.empty() ? c.name : prefix + "/" + c.name, c.passed, c.detail});
    }
    for (const auto& w : other.warnings_) {
        warnings_.push_back(prefix.empty() ? w : prefix + ": " + w);
    }
}

bool Report::ok() const { return failures() == 0; }

std::size_t Report::failures() const {
    std::size_t n = 0;
    for (const auto& c : checks_) n += c.passed ? 0 : 1;
    return n;
}

const Check* Report::find(const std::string& name) const {
    for (const auto& c : checks_) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

const Check* Report::first_failure() const {
    for (const auto& c : checks_) {
        if (!c.passed) return &c;
    }
    return nullptr;
}

std::string Report::to_string() const {
    std::ostringstream out;
    for (const auto& c : checks_) {
        out << (c.passed ? "pass " : "FAIL ") << c.name;
        if (!c.detail.empty()) out << " (" << c.detail << ")";
        out << "\n";
    }
    for (const auto& w : warnings_) out << "warning: " << w << "\n";
    return out.str();
}

}  // namespace kitaev
