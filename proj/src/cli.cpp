#include "sqlab/cli.hpp"

#include "sqlab/binomial.hpp"
#include "sqlab/dyadic.hpp"
#include "sqlab/errors.hpp"
#include "sqlab/ideal.hpp"
#include "sqlab/module.hpp"
#include "sqlab/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

namespace sqlab::cli {

namespace {

struct Config {
    std::string format = "text";
    int degree_cap = default_degree_cap;
    unsigned jobs = 1;

    bool json() const { return format == "json"; }
    Limits limits() const { return Limits{degree_cap, 0}; }
};

class SelfCheckFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json envelope(const std::string& command)
{
    return Json{{"schema", json_schema_version}, {"command", command}};
}

int env_degree_cap()
{
    const char* raw = std::getenv(degree_cap_env);
    if (!raw || !*raw)
        return default_degree_cap;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v < 1 || v > 1'000'000)
        throw std::invalid_argument(std::string(degree_cap_env) + " must be a positive integer, got \"" + raw + "\"");
    return static_cast<int>(v);
}

int parse_sphere(std::string s)
{
    if (!s.empty() && (s[0] == 'S' || s[0] == 's'))
        s.erase(0, 1);
    if (!s.empty() && s[0] == '^')
        s.erase(0, 1);
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size())
        throw std::invalid_argument("cannot read a sphere from \"" + s + "\"");
    return v;
}

void cmd_adem(const Config& cfg, const std::string& expr, std::ostream& out)
{
    const auto input = parse_element(expr);
    const auto result = adem_normalize(input, cfg.limits());
    if (cfg.json()) {
        auto j = envelope("adem");
        j["input"] = to_string(input);
        j["result"] = to_string(result);
        out << j.dump(2) << '\n';
    } else {
        out << to_string(result) << '\n';
    }
}

void cmd_binom(const Config& cfg, std::int64_t a, std::int64_t b, std::ostream& out)
{
    if (a < 0 || b < 0)
        throw std::invalid_argument("binom needs non-negative arguments");
    const int v = binom_pair_mod2(a, b) ? 1 : 0;
    if (cfg.json()) {
        auto j = envelope("binom");
        j["a"] = a;
        j["b"] = b;
        j["value"] = v;
        out << j.dump(2) << '\n';
    } else {
        out << v << '\n';
    }
}

void cmd_ffunc(const Config& cfg, std::int64_t n, std::ostream& out)
{
    if (n < 1)
        throw std::invalid_argument("ffunc needs a positive integer");
    const auto split = find_split(static_cast<std::uint64_t>(n));
    const auto f = johnson_merzel_f(static_cast<std::uint64_t>(n));
    if (cfg.json()) {
        auto j = envelope("ffunc");
        j["n"] = n;
        j["alpha"] = split.alpha.to_string();
        j["beta"] = split.beta.to_string();
        j["padding"] = split.padding;
        j["value"] = f;
        out << j.dump(2) << '\n';
    } else {
        out << f << '\n';
    }
}

void cmd_ideal(const Config& cfg, int d, int k, const std::string& expr, std::ostream& out)
{
    if (k < 0)
        throw std::invalid_argument("ideal index k must be non-negative");
    SteenrodElement e;
    if (!expr.empty()) {
        e = parse_element(expr);
    } else {
        if (d < 1)
            throw std::invalid_argument("ideal needs a positive degree");
        e = SteenrodElement::sq(d);
    }
    const bool member = ideal_member(e, k, cfg.limits());
    if (cfg.json()) {
        auto j = envelope("ideal");
        j["element"] = to_string(e);
        j["k"] = k;
        j["member"] = member;
        out << j.dump(2) << '\n';
    } else {
        out << (member ? "true" : "false") << '\n';
    }
}

void cmd_bound(const Config& cfg, int sphere_dim, const std::string& relation, const std::string& expr,
               std::ostream& out)
{
    if (sphere_dim < 3 || sphere_dim % 2 == 0)
        throw std::invalid_argument("bound needs an odd sphere dimension 2n+1 >= 3");
    const int n = (sphere_dim - 1) / 2;
    Factorization f;
    if (!expr.empty()) {
        f = factor_by_right_square(expr, "expr", cfg.limits());
    } else {
        const CatalogRelation* r = relation.empty() ? relation_for_sphere(sphere_dim) : find_relation(relation);
        if (!r)
            throw std::invalid_argument(relation.empty()
                                            ? "no catalog relation for S^" + std::to_string(sphere_dim) +
                                                  "; pass --relation or --expr"
                                            : "unknown relation \"" + relation + "\"");
        f = to_factorization(*r, cfg.limits());
    }
    const auto report = lower_bound(n, f, cfg.jobs, cfg.limits());
    if (cfg.json()) {
        auto j = envelope("bound");
        j["report"] = to_json(report);
        out << j.dump(2) << '\n';
    } else {
        out << to_text(report);
    }
}

void cmd_table1(const Config& cfg, const std::string& only, std::ostream& out)
{
    std::optional<int> wanted;
    if (!only.empty())
        wanted = parse_sphere(only);

    Json rows = Json::array();
    std::ostringstream text;
    bool all_match = true;
    bool any = false;
    for (const auto& r : relation_catalog()) {
        if (!r.table_bound || (wanted && *wanted != r.sphere_dim))
            continue;
        any = true;
        const auto report = lower_bound((r.sphere_dim - 1) / 2, to_factorization(r, cfg.limits()), cfg.jobs,
                                        cfg.limits());
        const bool match = report.lower_bound == *r.table_bound;
        all_match = all_match && match;
        rows.push_back({{"sphere", "S^" + std::to_string(r.sphere_dim)},
                        {"relation", r.display},
                        {"bound", report.lower_bound},
                        {"expected", *r.table_bound},
                        {"match", match}});
        text << "S^" << r.sphere_dim << ": k >= " << report.lower_bound << (match ? "" : "  MISMATCH") << "  ["
             << r.display << "]\n";
    }
    if (!any)
        throw std::invalid_argument("no table row for sphere \"" + only + "\"");
    if (cfg.json()) {
        auto j = envelope("table1");
        j["rows"] = std::move(rows);
        out << j.dump(2) << '\n';
    } else {
        out << text.str();
    }
    if (!all_match)
        throw SelfCheckFailure("table1: computed bounds disagree with the table");
}

void cmd_theorem1(const Config& cfg, int t, std::ostream& out)
{
    if (t < 1)
        throw std::invalid_argument("theorem1 needs t >= 1");
    const auto report = theorem_one_bounds(t, cfg.jobs, cfg.limits());
    if (cfg.json()) {
        auto j = envelope("theorem1");
        j["report"] = to_json(report);
        out << j.dump(2) << '\n';
    } else {
        out << to_text(report);
    }
    if (report.part1.lower_bound < report.required || report.part2.lower_bound < report.required)
        throw SelfCheckFailure("theorem1: a family bound is below 2^t + 1");
}

void cmd_distinguish(const Config& cfg, int n, int q, std::ostream& out)
{
    const auto report = distinguish(n, q);
    if (cfg.json()) {
        auto j = envelope("distinguish");
        j["report"] = to_json(report);
        out << j.dump(2) << '\n';
    } else {
        out << to_text(report);
    }
    if (!report.modules_differ)
        throw SelfCheckFailure("distinguish: the two fibres were not separated");
}

void cmd_module(const Config& cfg, int n, int k, std::ostream& out)
{
    const auto x = make_X(n, k);
    if (cfg.json()) {
        auto j = envelope("module");
        j["n"] = n;
        j["k"] = k;
        j["table"] = x.to_text();
        out << j.dump(2) << '\n';
    } else {
        out << x.to_text();
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config cfg;
    try {
        cfg.degree_cap = env_degree_cap();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }

    CLI::App app{"Steenrod algebra workbench: Adem relations, ideal membership, loop bounds and Nishida relations",
                 "sqlab"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--degree-cap", cfg.degree_cap,
                   std::string("Largest degree handled (default 512, or $") + degree_cap_env + ")")
        ->check(CLI::PositiveNumber);
    app.add_option("--jobs", cfg.jobs, "Parallel workers for k-scans")->check(CLI::Range(1u, 256u))->capture_default_str();

    std::vector<std::string> expr_words;
    auto* adem = app.add_subcommand("adem", "Admissible normal form of an element");
    adem->add_option("expr", expr_words, "Element, e.g. \"Sq2 Sq2\"; unquoted words are joined")->required();

    std::int64_t a = 0, b = 0;
    auto* binom = app.add_subcommand("binom", "Parity of (a,b) = (a+b)!/(a! b!)");
    binom->add_option("a", a)->required();
    binom->add_option("b", b)->required();

    std::int64_t ff_n = 0;
    auto* ffunc = app.add_subcommand("ffunc", "Johnson-Merzel function F(n)");
    ffunc->add_option("n", ff_n)->required();

    std::vector<int> ideal_args;
    std::string ideal_expr;
    auto* ideal = app.add_subcommand("ideal", "Is Sq^d in L(k) = A{Sq^1, ..., Sq^{2^k}}?");
    ideal->add_option("args", ideal_args, "d k, or only k with --expr")->required()->expected(1, 2);
    ideal->add_option("--expr", ideal_expr, "Test this homogeneous element instead of Sq^d");

    int sphere_dim = 0;
    std::string relation, bound_expr;
    auto* bound = app.add_subcommand("bound", "Loop bound on S^{2n+1} from a factorization of Sq^{2n+2}");
    bound->add_option("sphere", sphere_dim, "Sphere dimension 2n+1")->required();
    auto* rel_opt = bound->add_option("--relation", relation, "Catalog relation: sq6 sq10 sq18 sq12 sq14 sq10-short or 1-5");
    bound->add_option("--expr", bound_expr, "Expanded factorization, e.g. \"Sq2 Sq4 + Sq5 Sq1\"")->excludes(rel_opt);

    std::string only;
    auto* table1 = app.add_subcommand("table1", "Reproduce the five loop bounds for S^5, S^9, S^17, S^11, S^13");
    table1->add_option("--only", only, "Single row, e.g. S5");

    int dn = 0, dq = 0;
    auto* dist = app.add_subcommand("distinguish", "Separate the [2] and Psi fibres by Sq^{2^n}_*");
    dist->add_option("n", dn)->required();
    dist->add_option("q", dq)->required();

    int t = 0;
    auto* thm1 = app.add_subcommand("theorem1", "Both parametric family bounds for parameter t");
    thm1->add_option("t", t)->required();

    int mn = 0, mk = 0;
    auto* module = app.add_subcommand("module", "Print the Steenrod module X(n,k)");
    module->add_option("n", mn)->required();
    module->add_option("k", mk)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }

    try {
        if (*adem) {
            std::string expr;
            for (const auto& w : expr_words)
                expr += (expr.empty() ? "" : " ") + w;
            cmd_adem(cfg, expr, out);
        }
        else if (*binom)
            cmd_binom(cfg, a, b, out);
        else if (*ffunc)
            cmd_ffunc(cfg, ff_n, out);
        else if (*ideal) {
            const bool with_expr = !ideal_expr.empty();
            if (ideal_args.size() != (with_expr ? 1u : 2u))
                throw std::invalid_argument(with_expr ? "ideal --expr takes only k" : "ideal needs d and k");
            cmd_ideal(cfg, with_expr ? 0 : ideal_args[0], ideal_args.back(), ideal_expr, out);
        }
        else if (*bound)
            cmd_bound(cfg, sphere_dim, relation, bound_expr, out);
        else if (*table1)
            cmd_table1(cfg, only, out);
        else if (*dist)
            cmd_distinguish(cfg, dn, dq, out);
        else if (*thm1)
            cmd_theorem1(cfg, t, out);
        else if (*module)
            cmd_module(cfg, mn, mk, out);
    } catch (const DegreeCapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return resource_cap;
    } catch (const FuelExhausted& e) {
        err << "error: " << e.what() << '\n';
        return resource_cap;
    } catch (const SelfCheckFailure& e) {
        err << "self-check failed: " << e.what() << '\n';
        return self_check_failed;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return internal_error;
    }
    return ok;
}

}  // namespace sqlab::cli
