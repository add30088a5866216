#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ppx/report.hpp"

namespace ppx {

/// Size class of a suite; each class has its own default cap on max-n.
enum class SuiteScale { Integer, QPolynomial, Matrix };

struct SuiteParams {
    std::optional<unsigned long> max_n;
    std::optional<unsigned long> m;
    std::optional<unsigned long> p;
};

struct SuiteInfo {
    std::string name;
    SuiteScale scale;
    std::string summary;
};

/// Invalid suite name or parameters (a usage error, not a verification failure).
class SuiteUsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// All suites, in the order `verify all` runs them.
const std::vector<SuiteInfo>& suite_catalog();
const SuiteInfo* find_suite(const std::string& name);

/// Caps on max-n by scale: 64 integer, 20 q-polynomial, 12 matrix. A global
/// override replaces all three.
unsigned long default_cap(SuiteScale scale);
unsigned long effective_cap(SuiteScale scale, std::optional<unsigned long> override_cap);
/// Largest m accepted by the root-of-unity and m-fold suites.
inline constexpr unsigned long kMaxM = 3;

/// Runs one suite. Throws SuiteUsageError for bad parameters; theorem
/// violations raised during the run are recorded as failed checks.
Report run_suite(const std::string& name, const SuiteParams& params, std::optional<unsigned long> cap = {});

/// Runs every suite at default parameters, concurrently, merging the reports
/// in catalog order.
Report run_all_suites(std::optional<unsigned long> cap = {});

} // namespace ppx
