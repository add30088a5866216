#include "ppx/cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ppx/errors.hpp"
#include "ppx/expseq.hpp"
#include "ppx/pascal.hpp"
#include "ppx/qexpseq.hpp"
#include "ppx/serialize.hpp"
#include "ppx/suites.hpp"

namespace ppx {

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::optional<unsigned long> env_cap()
{
    const char* raw = std::getenv("PPX_MAX_N");
    if (!raw || !*raw) return std::nullopt;
    try {
        std::size_t used = 0;
        unsigned long v = std::stoul(raw, &used);
        if (used != std::string(raw).size() || v == 0) throw std::invalid_argument("bad");
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("PPX_MAX_N must be a positive integer, got '") + raw + "'");
    }
}

std::optional<unsigned long> resolve_cap(const std::optional<unsigned long>& flag)
{
    if (flag) return flag;
    return env_cap();
}

std::string text_value(const Integer& v) { return v.str(); }
std::string text_value(const Rational& v) { return v.str(); }
std::string text_value(const IntPoly& v) { return v.str(); }
std::string text_value(const RatFunc& v) { return v.str(); }

template <class T>
void emit_sequence(std::ostream& out, const std::string& name, const std::vector<T>& terms, const std::string& format)
{
    if (format == "json") {
        out << sequence_to_json(name, terms).dump() << "\n";
    } else if (format == "csv") {
        for (std::size_t i = 0; i < terms.size(); ++i) out << (i ? "," : "") << text_value(terms[i]);
        out << "\n";
    } else {
        for (const auto& t : terms) out << text_value(t) << "\n";
    }
}

int cmd_seq(const std::string& name, unsigned long n, const std::string& format, std::optional<unsigned long> cap,
            std::ostream& out)
{
    static const std::vector<std::string> integer_names = {"e", "c", "a", "u", "r"};
    static const std::vector<std::string> q_names = {"eq", "Eq", "uq", "rq", "cq"};
    bool is_integer = std::find(integer_names.begin(), integer_names.end(), name) != integer_names.end();
    bool is_q = std::find(q_names.begin(), q_names.end(), name) != q_names.end();
    if (!is_integer && !is_q) throw UsageError("unknown sequence: " + name);
    unsigned long limit = effective_cap(is_integer ? SuiteScale::Integer : SuiteScale::QPolynomial, cap);
    if (n < 1) throw UsageError("N must be at least 1");
    if (n > limit) throw UsageError("N=" + std::to_string(n) + " exceeds the cap " + std::to_string(limit));

    if (name == "e") emit_sequence(out, name, e_seq(n), format);
    else if (name == "c") emit_sequence(out, name, c_seq(n), format);
    else if (name == "a") emit_sequence(out, name, a_seq(n), format);
    else if (name == "u") emit_sequence(out, name, u_seq(n), format);
    else if (name == "r") emit_sequence(out, name, r_seq(n), format);
    else if (name == "eq") emit_sequence(out, name, eq_seq(n), format);
    else if (name == "Eq") emit_sequence(out, name, big_eq_seq(n), format);
    else if (name == "uq") emit_sequence(out, name, u_q_seq(n), format);
    else if (name == "rq") emit_sequence(out, name, r_q_seq(n), format);
    else emit_sequence(out, name, c_q_seq(n), format);
    return kExitOk;
}

void emit_report_text(std::ostream& out, const Report& rep, bool verbose)
{
    for (const auto& c : rep.checks) {
        if (!verbose && c.pass) continue;
        out << (c.pass ? "PASS " : "FAIL ") << c.id << " [" << c.params << "]";
        if (!c.pass || verbose) out << " expected: " << c.expected << " actual: " << c.actual;
        out << "\n";
    }
    out << rep.suite << ": " << (rep.passed() ? "pass" : "fail") << " (" << rep.checks.size() - rep.failures()
        << "/" << rep.checks.size() << " checks passed)\n";
}

int cmd_verify(const std::string& suite, const SuiteParams& params, const std::string& format, bool verbose,
               std::optional<unsigned long> cap, std::ostream& out)
{
    Report rep;
    if (suite == "all") {
        if (params.max_n || params.m || params.p) throw UsageError("verify all takes no suite parameters");
        rep = run_all_suites(cap);
    } else {
        if (!find_suite(suite)) throw UsageError("unknown suite: " + suite);
        try {
            rep = run_suite(suite, params, cap);
        } catch (const SuiteUsageError& ex) {
            throw UsageError(ex.what());
        }
    }
    if (format == "json") {
        out << to_json(rep).dump() << "\n";
    } else {
        emit_report_text(out, rep, verbose);
    }
    return report_exit_code(rep);
}

template <Ring R>
void emit_matrix_text(std::ostream& out, const SquareMatrix<R>& m)
{
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) out << (j ? ", " : "") << m(i, j).str();
        out << "\n";
    }
}

template <class T>
void emit_list(std::ostream& out, const std::vector<T>& xs, const std::string& format)
{
    if (format == "json") {
        json arr = json::array();
        for (const auto& x : xs) arr.push_back(to_json(x));
        out << arr.dump() << "\n";
        return;
    }
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << xs[i].str();
    out << "\n";
}

template <Ring R>
void emit_matrix(std::ostream& out, const SquareMatrix<R>& m, const std::string& format)
{
    if (format == "json") out << to_json(m).dump() << "\n";
    else emit_matrix_text(out, m);
}

int cmd_pascal(unsigned long n, const std::string& variant, std::optional<unsigned long> m, const std::string& action,
               const std::string& format, std::optional<unsigned long> cap, std::ostream& out)
{
    const unsigned long limit = effective_cap(SuiteScale::Matrix, cap);
    if (n < 1) throw UsageError("n must be at least 1");
    if (n > limit) throw UsageError("n=" + std::to_string(n) + " exceeds the cap " + std::to_string(limit));
    if ((variant == "m") != m.has_value()) throw UsageError("--m is required exactly when --variant m");
    if (m && (*m < 1 || *m > kMaxM)) throw UsageError("--m must be in [1, " + std::to_string(kMaxM) + "]");
    if (action == "factor") {
        if (n < 2) throw UsageError("factor needs n >= 2");
        if (variant == "m" && n <= *m) throw UsageError("factor with --variant m needs n > m");
    }

    if (variant == "classic") {
        if (action == "print") emit_matrix(out, pascal_matrix(n), format);
        else emit_list(out, factor_pascal(n), format);
    } else if (variant == "q") {
        if (action == "print") emit_matrix(out, q_pascal(n), format);
        else emit_list(out, factor_q_pascal(n), format);
    } else {
        if (action == "print") emit_matrix(out, pascal_m(n, *m), format);
        else emit_list(out, factor_pascal_m(n, *m), format);
    }
    return kExitOk;
}

} // namespace

ExitCode report_exit_code(const Report& rep)
{
    return rep.passed() ? kExitOk : kExitVerificationFailed;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Power product expansions of exp and exp_q: sequences, matrices and verification suites", "ppx"};
    app.require_subcommand(1);

    std::optional<unsigned long> cap_flag;
    std::string format = "text";
    const std::vector<std::string> formats = {"text", "json", "csv"};

    auto* seq = app.add_subcommand("seq", "Print terms 1..N of a sequence");
    std::string seq_name;
    unsigned long seq_n = 0;
    seq->add_option("name", seq_name, "e, c, a, u, r, eq, Eq, uq, rq or cq")->required();
    seq->add_option("N", seq_n, "Number of terms")->required();
    seq->add_option("--format", format, "json, csv or text")->check(CLI::IsMember(formats));
    seq->add_option("--cap", cap_flag, "Override the cap on N");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    SuiteParams params;
    bool verbose = false;
    verify->add_option("suite", suite, "Suite name, or 'all'")->required();
    verify->add_option("--max-n", params.max_n, "Largest index checked");
    verify->add_option("--m", params.m, "Root-of-unity order / fold");
    verify->add_option("--p", params.p, "Prime for cor44");
    verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--verbose,-v", verbose, "List passing checks too");
    verify->add_option("--cap", cap_flag, "Override the cap on --max-n");

    auto* pascal = app.add_subcommand("pascal", "Print or factor a Pascal matrix");
    unsigned long pascal_n = 0;
    std::string variant = "classic";
    std::optional<unsigned long> pascal_m_opt;
    std::string action = "print";
    pascal->add_option("n", pascal_n, "Dimension")->required();
    pascal->add_option("--variant", variant, "classic, q or m")->check(CLI::IsMember({"classic", "q", "m"}));
    pascal->add_option("--m", pascal_m_opt, "Fold for --variant m");
    pascal->add_option("--action", action, "print or factor")->check(CLI::IsMember({"print", "factor"}));
    pascal->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    pascal->add_option("--cap", cap_flag, "Override the cap on n");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        auto cap = resolve_cap(cap_flag);
        if (seq->parsed()) return cmd_seq(seq_name, seq_n, format, cap, out);
        if (verify->parsed()) {
            if (format == "csv") throw UsageError("verify supports text or json output");
            return cmd_verify(suite, params, format, verbose, cap, out);
        }
        return cmd_pascal(pascal_n, variant, pascal_m_opt, action, format == "csv" ? "text" : format, cap, out);
    } catch (const UsageError& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const TheoremViolation& ex) {
        err << "verification failure: " << ex.what() << "\n";
        return kExitVerificationFailed;
    }
}

} // namespace ppx
