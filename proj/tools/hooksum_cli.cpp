// Command-line front end: exact hook sums, asymptotic constants,
// convergence tables, Monte Carlo integral checks, identity verification.
// Reports go to stdout (table, CSV or JSON); diagnostics go to stderr.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hooksum/asymptotics.hpp"
#include "hooksum/convergence.hpp"
#include "hooksum/errors.hpp"
#include "hooksum/monte_carlo.hpp"
#include "hooksum/special_functions.hpp"
#include "hooksum/tableaux.hpp"

using nlohmann::json;
using namespace hooksum;

namespace {

struct Config {
    std::string format = "table";
    int precision = 9;
    std::uint64_t work_limit = 10'000'000;
};

std::string fmt_double(double v, int prec) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    return buf;
}

// Doubles enter JSON after a round-trip through their printed form, so the
// serialized number parses back to exactly the reported precision.
double rounded(double v, int prec) {
    return std::strtod(fmt_double(v, prec).c_str(), nullptr);
}

void print_table(const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c)
            width[c] = std::max(width[c], r[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) std::cout << "  ";
            std::cout << cells[c];
            for (std::size_t pad = cells[c].size(); pad < width[c]; ++pad)
                std::cout << ' ';
        }
        std::cout << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
}

void print_csv(const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    auto line = [](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) std::cout << ',';
            std::cout << cells[c];
        }
        std::cout << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
}

void emit(const Config& cfg, const std::string& command, const json& params,
          const std::vector<std::string>& header,
          const std::vector<std::vector<std::string>>& rows,
          const json& json_rows) {
    if (cfg.format == "table") {
        print_table(header, rows);
    } else if (cfg.format == "csv") {
        print_csv(header, rows);
    } else {
        json out;
        out["command"] = command;
        out["params"] = params;
        out["rows"] = json_rows;
        std::cout << out.dump() << '\n';
    }
}

void emit_result(const Config& cfg, const std::string& command,
                 const json& params,
                 const std::vector<std::pair<std::string, std::string>>& kv,
                 const json& result) {
    if (cfg.format == "table") {
        for (const auto& [key, val] : kv)
            std::cout << key << " = " << val << '\n';
    } else if (cfg.format == "csv") {
        std::vector<std::string> header, row;
        for (const auto& [key, val] : kv) {
            header.push_back(key);
            row.push_back(val);
        }
        print_csv(header, {row});
    } else {
        json out;
        out["command"] = command;
        out["params"] = params;
        out["result"] = result;
        std::cout << out.dump() << '\n';
    }
}

int run_exact(const Config& cfg, unsigned k, unsigned l, unsigned p,
              const std::vector<std::uint64_t>& ns, bool single) {
    SumOptions opt;
    opt.work_limit = cfg.work_limit;
    std::vector<std::vector<std::string>> rows;
    json jrows = json::array();
    for (std::uint64_t n : ns) {
        BigCount s = hook_sum_exact(HookShape(k, l), p, n, opt);
        rows.push_back({std::to_string(n), s.get_str()});
        jrows.push_back({{"n", n}, {"value", s.get_str()}});
    }
    if (cfg.format == "table" && single) {
        std::cout << rows[0][1] << '\n';
        return 0;
    }
    json params = {{"k", k}, {"l", l}, {"p", p},
                   {"work_limit", cfg.work_limit}};
    emit(cfg, "exact", params, {"n", "value"}, rows, jrows);
    return 0;
}

int run_asym(const Config& cfg, unsigned k, unsigned l, double z,
             std::uint64_t n, bool has_n) {
    AsymptoticForm f = hook_asymptotic(k, l, z);
    const double a = std::exp(f.log_a);
    const double base = std::exp(f.log_base);
    std::vector<std::pair<std::string, std::string>> kv = {
        {"a", fmt_double(a, cfg.precision)},
        {"g", fmt_double(f.g, cfg.precision)},
        {"base", fmt_double(base, cfg.precision)},
    };
    json result = {{"a", rounded(a, cfg.precision)},
                   {"g", rounded(f.g, cfg.precision)},
                   {"base", rounded(base, cfg.precision)}};
    if (has_n) {
        const double lg = f.log_evaluate(n);
        const double log10_a = lg / std::log(10.0);
        kv.emplace_back("n", std::to_string(n));
        kv.emplace_back("log10_A", fmt_double(log10_a, cfg.precision));
        result["n"] = n;
        result["log10_A"] = rounded(log10_a, cfg.precision);
        if (log10_a < 308.0) {
            kv.emplace_back("A", fmt_double(std::exp(lg), cfg.precision));
            result["A"] = rounded(std::exp(lg), cfg.precision);
        }
    }
    json params = {{"k", k}, {"l", l}, {"z", z}};
    emit_result(cfg, "asym", params, kv, result);
    return 0;
}

int run_ratio(const Config& cfg, unsigned k, unsigned l, unsigned p,
              const std::vector<std::uint64_t>& ns, const std::string& mode) {
    RatioMode m = mode == "closed_form" ? RatioMode::closed_form
                                        : RatioMode::enumerate_sum;
    auto rows = ratio_table(k, l, p, ns, m, cfg.work_limit);
    const bool with_lhs =
        p == 1 && ((k == 2 && l == 1) || (k == 1 && l == 2));

    std::vector<std::string> header = {"n", "exact_log", "asym_log", "ratio"};
    if (with_lhs) header.push_back("lhs");
    std::vector<std::vector<std::string>> cells;
    json jrows = json::array();
    for (const auto& r : rows) {
        std::vector<std::string> c = {std::to_string(r.n),
                                      fmt_double(r.exact_log, cfg.precision),
                                      fmt_double(r.asym_log, cfg.precision),
                                      fmt_double(r.ratio, cfg.precision)};
        json j = {{"n", r.n},
                  {"exact_log", rounded(r.exact_log, cfg.precision)},
                  {"asym_log", rounded(r.asym_log, cfg.precision)},
                  {"ratio", rounded(r.ratio, cfg.precision)}};
        if (with_lhs) {
            const double v = lhs_221(r.n);
            c.push_back(fmt_double(v, cfg.precision));
            j["lhs"] = rounded(v, cfg.precision);
        }
        cells.push_back(std::move(c));
        jrows.push_back(std::move(j));
    }
    json params = {{"k", k},       {"l", l},
                   {"p", p},       {"mode", mode},
                   {"work_limit", cfg.work_limit}};
    emit(cfg, "ratio", params, header, cells, jrows);
    return 0;
}

int run_integral(const Config& cfg, unsigned k, unsigned l, double z,
                 std::uint64_t samples, std::uint64_t seed,
                 const std::string& method) {
    McMethod m = method == "factorized" ? McMethod::factorized
                                        : McMethod::direct;
    McEstimate e = mc_full_I(k, l, z, samples, seed, m);
    const double closed = std::exp(full_I(k, l, z));
    double zscore;
    if (e.std_error > 0.0) {
        zscore = (e.mean - closed) / e.std_error;
    } else {
        zscore = std::fabs(e.mean - closed) <=
                         1e-12 * std::max(1.0, std::fabs(closed))
                     ? 0.0
                     : std::numeric_limits<double>::infinity();
    }
    std::vector<std::pair<std::string, std::string>> kv = {
        {"mean", fmt_double(e.mean, cfg.precision)},
        {"std_error", fmt_double(e.std_error, cfg.precision)},
        {"closed_form", fmt_double(closed, cfg.precision)},
        {"z_score", fmt_double(zscore, cfg.precision)},
    };
    json result = {{"mean", rounded(e.mean, cfg.precision)},
                   {"std_error", rounded(e.std_error, cfg.precision)},
                   {"closed_form", rounded(closed, cfg.precision)},
                   {"z_score", rounded(zscore, cfg.precision)},
                   {"samples", samples},
                   {"seed", seed}};
    json params = {{"k", k},           {"l", l},       {"z", z},
                   {"samples", samples}, {"seed", seed}, {"method", method}};
    emit_result(cfg, "integral", params, kv, result);
    if (!(std::fabs(zscore) <= 5.0)) {
        std::cerr << "integral self-check failed: |z-score| = "
                  << std::fabs(zscore) << " > 5\n";
        return 4;
    }
    return 0;
}

int run_identity(const Config& cfg, const std::string& name,
                 std::uint64_t n_max) {
    SumOptions opt;
    opt.work_limit = cfg.work_limit;
    std::uint64_t first_failure = 0;
    std::string detail;
    for (std::uint64_t n = 2; n <= n_max && first_failure == 0; ++n) {
        if (name == "motzkin") {
            auto c = motzkin_identity_check(n);
            if (!c.holds) {
                first_failure = n;
                detail = "lhs = " + c.lhs.get_str() +
                         ", rhs = " + c.rhs.get_str();
            }
        } else if (name == "s11") {
            for (unsigned p : {1u, 2u}) {
                BigCount closed = s11_closed(p, n);
                BigCount summed = hook_sum_exact(HookShape(1, 1), p, n, opt);
                if (closed != summed) {
                    first_failure = n;
                    detail = "p = " + std::to_string(p) +
                             ": closed = " + closed.get_str() +
                             ", sum = " + summed.get_str();
                    break;
                }
            }
        } else {  // s21
            BigCount closed = s21_closed(n);
            BigCount summed = hook_sum_exact(HookShape(2, 1), 1, n, opt);
            if (closed != summed) {
                first_failure = n;
                detail = "closed = " + closed.get_str() +
                         ", sum = " + summed.get_str();
            }
        }
    }
    const bool ok = first_failure == 0;
    std::vector<std::pair<std::string, std::string>> kv = {
        {"identity", name},
        {"n_max", std::to_string(n_max)},
        {"status", ok ? "all pass"
                      : "FAIL at n = " + std::to_string(first_failure) +
                            " (" + detail + ")"},
    };
    json result = {{"identity", name}, {"n_max", n_max}, {"all_pass", ok}};
    if (!ok) {
        result["first_failure"] = first_failure;
        result["detail"] = detail;
    }
    emit_result(cfg, "identity", {{"name", name}, {"n_max", n_max}}, kv,
                result);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hook sums of standard-Young-tableau counts: exact values, "
                 "asymptotic constants, convergence and integral checks"};
    app.require_subcommand(1);
    // global options (--format, --precision, --work-limit) may be given
    // after the subcommand as well
    app.fallthrough();

    Config cfg;
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--precision", cfg.precision,
                   "Significant digits for floats")
        ->check(CLI::Range(4, 15))
        ->capture_default_str();
    app.add_option("--work-limit", cfg.work_limit,
                   "Maximum partitions enumerated per sum")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    unsigned k = 1, l = 1, p = 1;
    double z = 0.5;
    std::uint64_t n_single = 0, samples = 1'000'000, seed = 0, n_max = 100;
    std::vector<std::uint64_t> n_list;
    std::string mode = "enumerate", method = "direct", name;

    auto* exact = app.add_subcommand("exact", "Exact S_{k,l}^{(p)}(n)");
    exact->add_option("--k", k)->required();
    exact->add_option("--l", l)->required();
    exact->add_option("--p", p)->required()->check(CLI::PositiveNumber);
    auto* opt_n = exact->add_option("--n", n_single);
    auto* opt_nl = exact->add_option("--n-list", n_list)->delimiter(',');
    opt_n->excludes(opt_nl);

    auto* asym = app.add_subcommand(
        "asym", "Asymptotic constants a, g, base for S_{k,l}^{(2z)}");
    asym->add_option("--k", k)->required();
    asym->add_option("--l", l)->required();
    asym->add_option("--z", z)->required();
    auto* asym_n = asym->add_option("--n", n_single);

    auto* ratio = app.add_subcommand(
        "ratio", "Exact-vs-asymptote convergence table");
    ratio->add_option("--k", k)->required();
    ratio->add_option("--l", l)->required();
    ratio->add_option("--p", p)->required()->check(CLI::PositiveNumber);
    ratio->add_option("--n-list", n_list)->required()->delimiter(',');
    ratio->add_option("--mode", mode)
        ->check(CLI::IsMember({"enumerate", "closed_form"}))
        ->capture_default_str();

    auto* integral = app.add_subcommand(
        "integral", "Monte Carlo check of I(k,l,2z) against the closed form");
    integral->add_option("--k", k)->required();
    integral->add_option("--l", l)->required();
    integral->add_option("--z", z)->required();
    integral->add_option("--samples", samples)->capture_default_str();
    integral->add_option("--seed", seed)->capture_default_str();
    integral->add_option("--method", method)
        ->check(CLI::IsMember({"direct", "factorized"}))
        ->capture_default_str();

    auto* identity = app.add_subcommand(
        "identity", "Verify a named exact identity up to n-max");
    identity->add_option("--name", name)
        ->required()
        ->check(CLI::IsMember({"motzkin", "s11", "s21"}));
    identity->add_option("--n-max", n_max)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (exact->parsed()) {
            if (n_list.empty() && opt_n->count() == 0) {
                std::cerr << "exact: one of --n / --n-list is required\n";
                return 2;
            }
            bool single = n_list.empty();
            std::vector<std::uint64_t> ns =
                single ? std::vector<std::uint64_t>{n_single} : n_list;
            return run_exact(cfg, k, l, p, ns, single);
        }
        if (asym->parsed())
            return run_asym(cfg, k, l, z, n_single, asym_n->count() > 0);
        if (ratio->parsed()) return run_ratio(cfg, k, l, p, n_list, mode);
        if (integral->parsed())
            return run_integral(cfg, k, l, z, samples, seed, method);
        if (identity->parsed()) return run_identity(cfg, name, n_max);
    } catch (const WorkLimitExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
