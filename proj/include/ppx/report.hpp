#pragma once

#include <string>
#include <vector>

namespace ppx {

struct Check {
    std::string id;
    std::string params;
    bool pass = false;
    std::string expected;
    std::string actual;
};

/// Outcome of a verification suite. Passes iff every check passes.
struct Report {
    std::string suite;
    std::vector<Check> checks;

    bool passed() const;
    std::size_t failures() const;

    void add(std::string id, std::string params, bool pass, std::string expected, std::string actual);
    /// Records a check whose expected and actual renderings must agree.
    void expect_equal(std::string id, std::string params, const std::string& expected, const std::string& actual);
    /// Appends all checks of `other`, prefixing their ids with its suite name.
    void merge(const Report& other);
};

} // namespace ppx
