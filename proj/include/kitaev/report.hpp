#pragma once

#include <string>
#include <vector>

namespace kitaev {

struct Check {
    std::string name;
    bool passed = true;
    std::string detail;
};

// Ordered list of named checks plus free-form warnings.
class Report {
public:
    void pass(const std::string& name, const std::string& detail = {});
    void fail(const std::string& name, const std::string& detail);
    void add(const std::string& name, bool passed, const std::string& detail = {});
    void warn(const std::string& message);
    void merge(const Report& other, const std::string& prefix = {});

    bool ok() const;
    std::size_t failures() const;
    const std::vector<Check>& checks() const { return checks_; }
    const std::vector<std::string>& warnings() const { return warnings_; }
    const Check* find(const std::string& name) const;
    const Check* first_failure() const;
    std::string to_string() const;

private:
    std::vector<Check> checks_;
    std::vector<std::string> warnings_;
};

}  // namespace kitaev
