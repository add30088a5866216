#include "ppx/report.hpp"

#include <algorithm>

namespace ppx {

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

void Report::add(std::string id, std::string params, bool pass, std::string expected, std::string actual)
{
    checks.push_back({std::move(id), std::move(params), pass, std::move(expected), std::move(actual)});
}

void Report::expect_equal(std::string id, std::string params, const std::string& expected, const std::string& actual)
{
    add(std::move(id), std::move(params), expected == actual, expected, actual);
}

void Report::merge(const Report& other)
{
    for (const auto& c : other.checks) {
        Check copy = c;
        copy.id = other.suite + "/" + c.id;
        checks.push_back(std::move(copy));
    }
}

} // namespace ppx
