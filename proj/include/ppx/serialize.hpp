#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ppx/integer.hpp"
#include "ppx/intpoly.hpp"
#include "ppx/matrix.hpp"
#include "ppx/quotient.hpp"
#include "ppx/rational.hpp"
#include "ppx/ratfunc.hpp"
#include "ppx/report.hpp"

// JSON forms of ring elements. Integers are always decimal strings so that
// values beyond 64 bits survive any JSON reader.
//
//   Integer   "123"
//   Rational  "num/den"
//   IntPoly   ["c0", "c1", ...]          ascending in q
//   RatFunc   {"num": [...], "den": [...]}
//   Quotient  representative as IntPoly
//   Matrix    row-major array of rows

namespace ppx {

using json = nlohmann::json;

json to_json(const Integer& v);
json to_json(const Rational& v);
json to_json(const IntPoly& v);
json to_json(const RatFunc& v);
json to_json(const QuotientElem& v);
json to_json(const Report& r);

template <Ring R>
json to_json(const SquareMatrix<R>& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Integer integer_from_json(const json& j);
Rational rational_from_json(const json& j);
IntPoly intpoly_from_json(const json& j);
RatFunc ratfunc_from_json(const json& j);

/// {"sequence": name, "terms": [{"n": 1, "value": ...}, ...]}
template <class T>
json sequence_to_json(const std::string& name, const std::vector<T>& terms)
{
    json out = {{"sequence", name}, {"terms", json::array()}};
    for (std::size_t i = 0; i < terms.size(); ++i) {
        out["terms"].push_back({{"n", i + 1}, {"value", to_json(terms[i])}});
    }
    return out;
}

} // namespace ppx
