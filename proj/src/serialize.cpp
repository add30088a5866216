#include "ppx/serialize.hpp"

#include <stdexcept>

namespace ppx {

json to_json(const Integer& v) { return v.str(); }

json to_json(const Rational& v) { return v.num().str() + "/" + v.den().str(); }

json to_json(const IntPoly& v)
{
    json arr = json::array();
    for (const auto& c : v.coeffs()) arr.push_back(c.str());
    return arr;
}

json to_json(const RatFunc& v) { return {{"num", to_json(v.num())}, {"den", to_json(v.den())}}; }

json to_json(const QuotientElem& v) { return to_json(v.rep()); }

json to_json(const Report& r)
{
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"id", c.id},
                          {"params", c.params},
                          {"pass", c.pass},
                          {"expected", c.expected},
                          {"actual", c.actual}});
    }
    return {{"report", r.suite}, {"checks", std::move(checks)}, {"status", r.passed() ? "pass" : "fail"}};
}

Integer integer_from_json(const json& j)
{
    if (!j.is_string()) throw std::invalid_argument("integer must be a decimal string");
    return Integer(j.get<std::string>());
}

Rational rational_from_json(const json& j)
{
    if (!j.is_string()) throw std::invalid_argument("rational must be a string");
    return Rational::parse(j.get<std::string>());
}

IntPoly intpoly_from_json(const json& j)
{
    if (!j.is_array()) throw std::invalid_argument("polynomial must be an array");
    std::vector<Integer> c;
    c.reserve(j.size());
    for (const auto& x : j) c.push_back(integer_from_json(x));
    return IntPoly(std::move(c));
}

RatFunc ratfunc_from_json(const json& j)
{
    return RatFunc(intpoly_from_json(j.at("num")), intpoly_from_json(j.at("den")));
}

} // namespace ppx
