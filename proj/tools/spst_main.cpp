// spst - exact computations in the stable Specht basis: transition tables,
// restriction multiplicities, stable Kronecker coefficients, and a small
// expression evaluator over symmetric functions.

#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "spst/characters.hpp"
#include "spst/errors.hpp"
#include "spst/expr.hpp"
#include "spst/kronecker.hpp"
#include "spst/partition.hpp"
#include "spst/plethysm.hpp"
#include "spst/store.hpp"
#include "spst/symfunc.hpp"
#include "spst/transitions.hpp"

namespace {

using namespace spst;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

Partition parse_partition_arg(const std::string& text, const char* what) {
    auto parsed = Partition::parse(text);
    if (!parsed)
        throw CLI::ValidationError(std::string(what) + ": '" + text +
                                   "' is not a partition (expected e.g. [4,2,1] or [])");
    return *parsed;
}

std::string latex_partition(const Partition& p) {
    bool wide = false;
    for (int part : p.parts()) wide |= part >= 10;
    std::string out = "(";
    for (int i = 0; i < p.length(); ++i) {
        if (i && wide) out += ',';
        out += std::to_string(p.part(i));
    }
    out += ')';
    return out;
}

std::string latex_terms(const std::map<Partition, mpz_class, PartitionCanonLess>& terms,
                        const std::string& atom_prefix) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : terms) {
        bool negative = c < 0;
        if (first) {
            if (negative) out += '-';
            first = false;
        } else {
            out += negative ? '-' : '+';
        }
        mpz_class a = abs(c);
        if (p.empty()) {
            out += a.get_str();
            continue;
        }
        if (a != 1) out += a.get_str();
        out += atom_prefix + "_{" + latex_partition(p) + "}";
    }
    return out;
}

struct TableRow {
    Partition lhs;
    std::map<Partition, mpz_class, PartitionCanonLess> terms;
};

std::vector<TableRow> schur_to_dagger_rows(int max_degree, const CoeffMatrix& a) {
    std::vector<TableRow> rows;
    for (const Partition& lambda : partitions_up_to(max_degree)) {
        if (lambda.empty()) continue;
        TableRow row;
        row.lhs = lambda;
        for (const auto& [key, value] : a.entries)
            if (key.first == lambda) row.terms[key.second] = value;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<TableRow> dagger_to_schur_rows(int max_degree, const CoeffMatrix& b) {
    std::vector<TableRow> rows;
    for (const Partition& nu : partitions_up_to(max_degree)) {
        if (nu.empty()) continue;
        TableRow row;
        row.lhs = nu;
        for (const auto& [key, value] : b.entries)
            if (key.first == nu) row.terms[key.second] = value;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string text_terms(const std::map<Partition, mpz_class, PartitionCanonLess>& terms,
                       const std::string& atom) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : terms) {
        bool negative = c < 0;
        if (first) {
            if (negative) out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        mpz_class a = abs(c);
        if (p.empty()) {
            out += a.get_str();
            continue;
        }
        if (a != 1) {
            out += a.get_str();
            out += '*';
        }
        out += atom + p.to_string();
    }
    return out;
}

nlohmann::json rows_to_json(const std::vector<TableRow>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const TableRow& row : rows) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [p, c] : row.terms) {
            nlohmann::json term;
            term["partition"] = p.parts();
            term["value"] = c.get_str();
            terms.push_back(std::move(term));
        }
        nlohmann::json r;
        r["lhs"] = row.lhs.parts();
        r["terms"] = std::move(terms);
        out.push_back(std::move(r));
    }
    return out;
}

void print_rows_text(const std::vector<TableRow>& rows, bool dagger_lhs) {
    for (const TableRow& row : rows) {
        std::string lhs = (dagger_lhs ? "sdag" : "s") + row.lhs.to_string();
        std::cout << lhs << " = " << text_terms(row.terms, dagger_lhs ? "s" : "sdag") << "\n";
    }
}

void print_rows_latex(const std::vector<TableRow>& rows, bool dagger_lhs) {
    for (const TableRow& row : rows) {
        std::string lhs = dagger_lhs ? "s^{\\dagger}_{" + latex_partition(row.lhs) + "}"
                                     : "s_{" + latex_partition(row.lhs) + "}";
        std::cout << lhs << " & = & "
                  << latex_terms(row.terms, dagger_lhs ? "s" : "s^{\\dagger}") << " \\\\\n";
    }
}

struct GlobalOptions {
    bool no_cache = false;
    std::optional<Store> store;

    TableOptions table_options() {
        TableOptions options;
        if (!no_cache) {
            if (!store) store = Store::from_environment();
            options.store = &*store;
        }
        options.warnings = &std::cerr;
        return options;
    }
};

int run_tables(GlobalOptions& global, int max_degree, const std::string& direction,
               const std::string& format) {
    TableOptions options = global.table_options();
    bool want_s2d = direction != "dagger2s";
    bool want_d2s = direction != "s2dagger";

    std::vector<TableRow> s2d, d2s;
    if (want_s2d) s2d = schur_to_dagger_rows(max_degree, *table(TableKind::A, max_degree, options));
    if (want_d2s) d2s = dagger_to_schur_rows(max_degree, *table(TableKind::B, max_degree, options));

    if (format == "json") {
        nlohmann::json out;
        out["max_degree"] = max_degree;
        if (want_s2d) out["s2dagger"] = rows_to_json(s2d);
        if (want_d2s) out["dagger2s"] = rows_to_json(d2s);
        std::cout << out.dump() << "\n";
        return 0;
    }
    bool both = want_s2d && want_d2s;
    if (want_s2d) {
        if (both) std::cout << "== s2dagger ==\n";
        format == "latex" ? print_rows_latex(s2d, false) : print_rows_text(s2d, false);
    }
    if (want_d2s) {
        if (both) std::cout << "\n== dagger2s ==\n";
        format == "latex" ? print_rows_latex(d2s, true) : print_rows_text(d2s, true);
    }
    return 0;
}

int run_coef(const std::string& kind_name, const Partition& row, const Partition& col) {
    TableKind kind = table_kind_from_name(kind_name);
    mpz_class value;
    switch (kind) {
        case TableKind::A: value = a_stable(row, col); break;
        case TableKind::B: value = b_stable(row, col); break;
        case TableKind::SToM: {
            auto r = schur_to_m_row(row);
            auto it = r.find(col);
            value = it == r.end() ? mpz_class(0) : it->second;
            break;
        }
        case TableKind::MToS: {
            auto r = m_to_schur_row(row);
            auto it = r.find(col);
            value = it == r.end() ? mpz_class(0) : it->second;
            break;
        }
        case TableKind::MToSp: value = is_horizontal_strip(row, col) ? 1 : 0; break;
        case TableKind::SpToM: {
            auto r = specht_to_m_row(row);
            auto it = r.find(col);
            value = it == r.end() ? mpz_class(0) : it->second;
            break;
        }
    }
    std::cout << value.get_str() << "\n";
    return 0;
}

int run_restrict(const Partition& lambda, int t, const std::string& format, bool show_character) {
    CharacterVector chi = schur_module_character(lambda, t);
    auto decomposition = decompose(chi);
    if (format == "json") {
        nlohmann::json decomposition_json = nlohmann::json::array();
        for (const auto& [mu, mult] : decomposition) {
            nlohmann::json entry;
            entry["partition"] = mu.parts();
            entry["mult"] = mult.get_str();
            decomposition_json.push_back(std::move(entry));
        }
        nlohmann::json out;
        out["t"] = t;
        out["lambda"] = lambda.parts();
        out["decomposition"] = std::move(decomposition_json);
        if (show_character) out["character"] = nlohmann::json::parse(character_to_json(chi));
        std::cout << out.dump() << "\n";
        return 0;
    }
    if (show_character) std::cout << character_to_json(chi) << "\n";
    for (const auto& [mu, mult] : decomposition)
        std::cout << mu.to_string() << ": " << mult.get_str() << "\n";
    return 0;
}

int run_kron(const Partition& alpha, const Partition& beta, const Partition& gamma,
             std::optional<int> finite_t) {
    mpz_class value = finite_t ? kronecker_finite(alpha, beta, gamma, *finite_t)
                               : stable_kronecker(alpha, beta, gamma);
    std::cout << value.get_str() << "\n";
    return 0;
}

int run_eval(const std::string& text, int cap, const std::string& basis, bool json) {
    ExprPtr expr = parse_expression(text);
    SymFunc value = eval(*expr, cap);
    if (basis == "p") {
        std::cout << (json ? to_json_string(value) : to_text(value)) << "\n";
        return 0;
    }
    SymFunc schur = from_power(value, Basis::Schur);
    if (basis == "schur") {
        std::cout << (json ? to_json_string(schur) : to_text(schur)) << "\n";
        return 0;
    }
    StableSpechtExpansion dagger = schur_to_stable_specht(schur);
    std::cout << (json ? to_json_string(dagger) : to_text(dagger)) << "\n";
    return 0;
}

struct SuiteResult {
    std::string name;
    bool passed = true;
    long checks = 0;
    double seconds = 0;
    std::string first_failure;

    void fail(const std::string& message) {
        if (passed) first_failure = message;
        passed = false;
    }
};

SuiteResult verify_inversion(int max_degree, const TableOptions& options) {
    SuiteResult result{"inversion"};
    auto a = table(TableKind::A, max_degree, options);
    auto b = table(TableKind::B, max_degree, options);
    CoeffMatrix product = matrix_product(*a, *b);
    for (const Partition& lambda : partitions_up_to(max_degree)) {
        for (const Partition& nu : partitions_up_to(max_degree)) {
            mpz_class expected = lambda == nu ? 1 : 0;
            ++result.checks;
            if (product.entry(lambda, nu) != expected)
                result.fail("sum_mu a(" + lambda.to_string() + ",mu) b(mu," + nu.to_string() +
                            ") = " + product.entry(lambda, nu).get_str());
        }
    }
    return result;
}

SuiteResult verify_signs(int max_degree, const TableOptions& options) {
    SuiteResult result{"signs"};
    auto b = table(TableKind::B, max_degree, options);
    for (const Partition& lambda : partitions_up_to(max_degree)) {
        for (const Partition& nu : partitions_up_to(max_degree)) {
            mpz_class value = b->entry(lambda, nu);
            if ((lambda.size() + nu.size()) % 2) value = -value;
            ++result.checks;
            if (value < 0)
                result.fail("(-1)^{|l|-|n|} b(" + lambda.to_string() + "," + nu.to_string() +
                            ") < 0");
        }
    }
    return result;
}

SuiteResult verify_stability(int max_degree) {
    SuiteResult result{"stability"};
    int bound = std::min(max_degree, 4);
    for (const Partition& lambda : partitions_up_to(bound)) {
        for (const Partition& nu : partitions_up_to(bound)) {
            int t0 = std::max(lambda.size() + nu.size(), nu.part(0) + nu.size());
            if (t0 + 1 > kMaxSymmetricGroupSize) continue;
            mpz_class stable = a_stable(lambda, nu);
            mpz_class at_t0 = a_finite(lambda, nu, t0);
            mpz_class at_t1 = a_finite(lambda, nu, t0 + 1);
            ++result.checks;
            if (at_t0 != stable || at_t1 != stable)
                result.fail("a(" + lambda.to_string() + "," + nu.to_string() + "): t0=" +
                            at_t0.get_str() + " t0+1=" + at_t1.get_str() + " stable=" +
                            stable.get_str());
        }
    }
    return result;
}

SuiteResult verify_oracle(int max_degree) {
    SuiteResult result{"oracle"};
    int bound = std::min(max_degree, 4);
    auto shapes = partitions_up_to(bound);
    for (int t = 1; t <= 9; ++t) {
        for (const Partition& lambda : shapes) {
            auto decomposition = decompose(schur_module_character(lambda, t));
            for (const Partition& nu : shapes) {
                if (nu.part(0) + nu.size() > t) continue;
                mpz_class from_characters = 0;
                auto it = decomposition.find(pad(nu, t));
                if (it != decomposition.end()) from_characters = it->second;
                mpz_class littlewood = a_finite(lambda, nu, t);
                ++result.checks;
                if (littlewood != from_characters)
                    result.fail("a(" + lambda.to_string() + "," + nu.to_string() + ")(t=" +
                                std::to_string(t) + "): characters=" + from_characters.get_str() +
                                " plethysm=" + littlewood.get_str());
                if (t >= lambda.size() + nu.size() && littlewood != a_stable(lambda, nu))
                    result.fail("a(" + lambda.to_string() + "," + nu.to_string() +
                                ") stable mismatch at t=" + std::to_string(t));
            }
        }
    }
    return result;
}

int run_verify(GlobalOptions& global, const std::string& suite, int max_degree) {
    TableOptions options = global.table_options();
    std::vector<SuiteResult> results;
    auto timed = [&](auto&& fn) {
        auto start = std::chrono::steady_clock::now();
        SuiteResult r = fn();
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        results.push_back(std::move(r));
    };
    if (suite == "inversion" || suite == "all") timed([&] { return verify_inversion(max_degree, options); });
    if (suite == "signs" || suite == "all") timed([&] { return verify_signs(max_degree, options); });
    if (suite == "stability" || suite == "all") timed([&] { return verify_stability(max_degree); });
    if (suite == "oracle" || suite == "all") timed([&] { return verify_oracle(max_degree); });

    bool all_passed = true;
    for (const SuiteResult& r : results) {
        std::printf("%-10s %s  (%ld checks, %.2fs)\n", r.name.c_str(),
                    r.passed ? "PASS" : "FAIL", r.checks, r.seconds);
        if (!r.passed) {
            std::printf("           first failure: %s\n", r.first_failure.c_str());
            all_passed = false;
        }
    }
    return all_passed ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact stable Specht / Schur transition tables and stable Kronecker coefficients"};
    app.require_subcommand(1);
    GlobalOptions global;
    app.add_flag("--no-cache", global.no_cache, "skip the on-disk table cache");

    // tables
    auto* tables_cmd = app.add_subcommand("tables", "print the expansion tables between the Schur and stable Specht bases");
    tables_cmd->fallthrough();
    int tables_degree = 5;
    std::string tables_direction = "both";
    std::string tables_format = "text";
    tables_cmd->add_option("--max-degree", tables_degree, "largest partition size")
        ->check(CLI::Range(1, 12));
    tables_cmd->add_option("--direction", tables_direction, "which table(s) to print")
        ->check(CLI::IsMember({"s2dagger", "dagger2s", "both"}));
    tables_cmd->add_option("--format", tables_format, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    // coef
    auto* coef_cmd = app.add_subcommand("coef", "single transition coefficient");
    coef_cmd->fallthrough();
    std::string coef_kind;
    std::string coef_row, coef_col;
    coef_cmd->add_option("kind", coef_kind, "a|b|s2m|m2s|m2sp|sp2m")
        ->required()
        ->check(CLI::IsMember({"a", "b", "s2m", "m2s", "m2sp", "sp2m"}));
    coef_cmd->add_option("row", coef_row, "row partition, e.g. [2,1]")->required();
    coef_cmd->add_option("col", coef_col, "column partition")->required();

    // restrict
    auto* restrict_cmd = app.add_subcommand("restrict", "Specht decomposition of the Schur module S_lambda(C^t)");
    restrict_cmd->fallthrough();
    std::string restrict_lambda;
    int restrict_t = 0;
    std::string restrict_format = "text";
    bool restrict_character = false;
    restrict_cmd->add_option("lambda", restrict_lambda, "partition")->required();
    restrict_cmd->add_option("--t", restrict_t, "symmetric group size")
        ->required()
        ->check(CLI::Range(1, kMaxSymmetricGroupSize));
    restrict_cmd->add_option("--format", restrict_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    restrict_cmd->add_flag("--character", restrict_character, "also print the restricted character");

    // kron
    auto* kron_cmd = app.add_subcommand("kron", "stable or finite Kronecker coefficient");
    kron_cmd->fallthrough();
    std::string kron_a, kron_b, kron_g;
    bool kron_stable = false;
    int kron_t = 0;
    kron_cmd->add_option("alpha", kron_a)->required();
    kron_cmd->add_option("beta", kron_b)->required();
    kron_cmd->add_option("gamma", kron_g)->required();
    auto* stable_flag = kron_cmd->add_flag("--stable", kron_stable, "stable coefficient (default)");
    auto* t_option = kron_cmd->add_option("--t", kron_t, "evaluate at finite t")
                         ->check(CLI::Range(1, kMaxSymmetricGroupSize));
    stable_flag->excludes(t_option);

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a symmetric-function expression");
    eval_cmd->fallthrough();
    std::string eval_text;
    int eval_cap = 8;
    std::string eval_basis = "schur";
    bool eval_json = false;
    eval_cmd->add_option("expr", eval_text, "expression, e.g. \"s[2]@[1+h[1]]\"")->required();
    eval_cmd->add_option("--cap", eval_cap, "degree cap")->check(CLI::Range(0, 12));
    eval_cmd->add_option("--basis", eval_basis, "output basis")
        ->check(CLI::IsMember({"schur", "p", "sdag"}));
    eval_cmd->add_flag("--json", eval_json, "JSON output");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run invariant suites; nonzero exit on failure");
    verify_cmd->fallthrough();
    std::string verify_suite = "all";
    int verify_degree = 6;
    verify_cmd->add_option("--suite", verify_suite)
        ->check(CLI::IsMember({"inversion", "signs", "stability", "oracle", "all"}));
    verify_cmd->add_option("--max-degree", verify_degree)->check(CLI::Range(1, 12));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (tables_cmd->parsed())
            return run_tables(global, tables_degree, tables_direction, tables_format);
        if (coef_cmd->parsed())
            return run_coef(coef_kind, parse_partition_arg(coef_row, "row"),
                            parse_partition_arg(coef_col, "col"));
        if (restrict_cmd->parsed())
            return run_restrict(parse_partition_arg(restrict_lambda, "lambda"), restrict_t,
                                restrict_format, restrict_character);
        if (kron_cmd->parsed())
            return run_kron(parse_partition_arg(kron_a, "alpha"),
                            parse_partition_arg(kron_b, "beta"),
                            parse_partition_arg(kron_g, "gamma"),
                            *t_option ? std::optional<int>(kron_t) : std::nullopt);
        if (eval_cmd->parsed()) return run_eval(eval_text, eval_cap, eval_basis, eval_json);
        if (verify_cmd->parsed()) return run_verify(global, verify_suite, verify_degree);
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const PadTooSmallError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
