#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "expcheck/analytic.hpp"
#include "expcheck/difference_kernel.hpp"
#include "expcheck/equality.hpp"
#include "expcheck/gof.hpp"

using nlohmann::ordered_json;
using namespace expcheck;

namespace {

constexpr std::uint64_t kDefaultSeed = 4242424242ULL;

// Exit codes: 0 success, 1 verification failure, 2 input/config error.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

int emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + out_path);
    out << payload;
    return 0;
}

// ---------------------------------------------------------------------------
// Verification suites

struct SuiteResult {
    std::string name;
    long cases_run = 0;
    long cases_passed = 0;
    bool has_failure = false;
    std::string failing_case;
    std::string failing_lhs;
    std::string failing_rhs;

    void record(bool ok, const std::string& label, const std::string& lhs, const std::string& rhs) {
        ++cases_run;
        if (ok) {
            ++cases_passed;
        } else if (!has_failure) {
            has_failure = true;
            failing_case = label;
            failing_lhs = lhs;
            failing_rhs = rhs;
        }
    }
};

bool all_passed(const std::vector<SuiteResult>& suites) {
    for (const auto& s : suites) {
        if (s.cases_passed != s.cases_run) return false;
    }
    return true;
}

ordered_json suites_json(const std::vector<SuiteResult>& suites) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : suites) {
        ordered_json item;
        item["suite"] = s.name;
        item["cases_run"] = s.cases_run;
        item["cases_passed"] = s.cases_passed;
        if (s.has_failure) {
            item["first_failure"] = {
                {"case", s.failing_case}, {"lhs", s.failing_lhs}, {"rhs", s.failing_rhs}};
        } else {
            item["first_failure"] = nullptr;
        }
        arr.push_back(item);
    }
    return arr;
}

std::string suites_text(const std::string& title, const std::vector<SuiteResult>& suites) {
    std::ostringstream out;
    out << title << "\n";
    char line[160];
    std::snprintf(line, sizeof(line), "  %-36s %8s %8s  %s\n", "suite", "run", "passed", "status");
    out << line;
    for (const auto& s : suites) {
        std::snprintf(line, sizeof(line), "  %-36s %8ld %8ld  %s\n", s.name.c_str(), s.cases_run,
                      s.cases_passed, s.cases_passed == s.cases_run ? "ok" : "FAIL");
        out << line;
        if (s.has_failure) {
            out << "      first failure: " << s.failing_case << ": lhs=" << s.failing_lhs
                << " rhs=" << s.failing_rhs << "\n";
        }
    }
    out << (all_passed(suites) ? "all suites passed\n" : "FAILURES detected\n");
    return out.str();
}

int finish_verification(const std::string& command, const ordered_json& grid,
                        const std::vector<SuiteResult>& suites, const std::string& format,
                        const std::string& out_path) {
    if (format == "json") {
        ordered_json j;
        j["command"] = command;
        j["grid"] = grid;
        j["suites"] = suites_json(suites);
        j["all_passed"] = all_passed(suites);
        emit(j.dump(2) + "\n", out_path);
    } else {
        emit(suites_text(command, suites), out_path);
    }
    return all_passed(suites) ? 0 : 1;
}

std::vector<Rational> ruiz_probes() {
    // 20 fixed rational probes spanning [-19/4, 19/4] in steps of 1/2.
    std::vector<Rational> probes;
    for (int k = 0; k < 20; ++k) probes.push_back(make_rational(2 * k - 19, 4));
    return probes;
}

std::vector<SuiteResult> run_identity_suites(int n_max, int s_max, int t_max, int r_max) {
    if (n_max < 2 || s_max < 1 || t_max < 1 || r_max < 1) {
        throw ConfigError("verify-identities: grid bounds out of range (need n>=2, s,t,r>=1)");
    }
    std::vector<SuiteResult> suites;

    const std::pair<DifferenceIdentity, const char*> recurrences[] = {
        {DifferenceIdentity::binomial_lift, "recurrence-binomial"},
        {DifferenceIdentity::shifted_binomial, "recurrence-shifted-binomial"},
        {DifferenceIdentity::geometric_sum, "recurrence-geometric"},
    };
    for (const auto& [which, name] : recurrences) {
        SuiteResult suite{name};
        for (int s = 1; s <= s_max; ++s) {
            for (int r = 1; r <= r_max; ++r) {
                auto sides = difference_identity_sides(which, static_cast<unsigned>(s),
                                                       static_cast<unsigned>(r));
                suite.record(sides.lhs == sides.rhs,
                             "s=" + std::to_string(s) + ",r=" + std::to_string(r),
                             to_string(sides.lhs), to_string(sides.rhs));
            }
        }
        suites.push_back(std::move(suite));
    }

    {
        SuiteResult suite{"ruiz-row"};
        for (unsigned n = 0; n <= 10; ++n) {
            for (const auto& x : ruiz_probes()) {
                auto row = difference_row(n, x);
                const Rational expected(factorial_integer(n));
                bool ok = row[n] == expected;
                std::string bad_entry = to_string(row[n]);
                std::string want = to_string(expected);
                for (unsigned i = 0; ok && i < n; ++i) {
                    if (row[i] != Rational(0)) {
                        ok = false;
                        bad_entry = to_string(row[i]);
                        want = "0";
                    }
                }
                suite.record(ok, "n=" + std::to_string(n) + ",x=" + to_string(x), bad_entry, want);
            }
        }
        suites.push_back(std::move(suite));
    }

    {
        SuiteResult suite{"coefficient-triple-sum"};
        for (int n = 2; n <= n_max; ++n) {
            for (int s = 1; s <= n - 1; ++s) {
                for (int t = 1; t <= t_max; ++t) {
                    auto triple = coefficient_triple_sum(IndexContext(n, s, t));
                    const bool ok = triple.lhs == triple.rhs && triple.lhs == triple.closed;
                    suite.record(ok,
                                 "n=" + std::to_string(n) + ",s=" + std::to_string(s) +
                                     ",t=" + std::to_string(t),
                                 to_string(triple.lhs) + "|" + to_string(triple.rhs),
                                 to_string(triple.closed));
                }
            }
        }
        suites.push_back(std::move(suite));
    }
    return suites;
}

struct AnalyticGrid {
    int n_max = 6;
    int order = 12;
    int steps = 8;
    int perturb = -1;  // coefficient index bumped by +1; negative means off
};

std::vector<SuiteResult> run_analytic_suites(const AnalyticGrid& grid) {
    if (grid.n_max < 2) throw ConfigError("verify-analytic: need n >= 2");
    if (grid.steps < 1) throw ConfigError("verify-analytic: need at least one induction step");
    const int min_order = std::max(12, grid.n_max + 2);
    if (grid.order < min_order) {
        throw ConfigError("verify-analytic: order " + std::to_string(grid.order) +
                          " too small for the grid; need at least " + std::to_string(min_order));
    }
    if (grid.perturb > grid.order) {
        throw ConfigError("verify-analytic: perturbed coefficient beyond the series order");
    }

    auto maybe_perturb = [&](MaclaurinJet jet) {
        if (grid.perturb >= 0) {
            return jet.with_coefficient(grid.perturb, jet.coeff(grid.perturb) + 1);
        }
        return jet;
    };

    const std::vector<DensityJetModel> closed_form_models = {
        DensityJetModel(Rational(1), Rational(-1)),
        DensityJetModel(Rational(2), Rational(-4)),
        DensityJetModel(make_rational(3, 2), make_rational(-5, 7)),
        DensityJetModel(make_rational(1, 2), make_rational(2, 3)),
    };
    const std::vector<DensityJetModel> density_models = {
        DensityJetModel(Rational(1), Rational(-1)),
        DensityJetModel(Rational(2), Rational(-4)),
    };

    std::vector<SuiteResult> suites;

    {
        SuiteResult suite{"pattern-derivative-closed-form"};
        for (std::size_t mi = 0; mi < closed_form_models.size(); ++mi) {
            const auto& model = closed_form_models[mi];
            MaclaurinJet f = maybe_perturb(model.jet(grid.order));
            for (unsigned m = 1; m <= 6; ++m) {
                MaclaurinJet g = cdf_power_density(m, f);
                for (int d = -static_cast<int>(m); d <= 6; ++d) {
                    const Rational actual = g.derivative_at_zero(static_cast<int>(m) + d);
                    const Rational expected = pattern_g_derivative(m, d, model.f0, model.f1);
                    suite.record(actual == expected,
                                 "model=" + std::to_string(mi) + ",m=" + std::to_string(m) +
                                     ",d=" + std::to_string(d),
                                 to_string(actual), to_string(expected));
                }
            }
        }
        suites.push_back(std::move(suite));
    }

    {
        SuiteResult suite{"kernel-derivative-closed-form"};
        for (std::size_t mi = 0; mi < density_models.size(); ++mi) {
            MaclaurinJet f = maybe_perturb(density_models[mi].jet(grid.order));
            auto ders = derivative_table(f, grid.order);
            for (int n = 3; n <= grid.n_max; ++n) {
                for (int s = 2; s <= n - 1; ++s) {
                    MaclaurinJet k = kernel_jet(n, s, f);
                    for (int m = s - 1; m <= s + 4; ++m) {
                        const Rational closed = kernel_derivative_closed(n, s, m, ders);
                        const Rational extracted = k.derivative_at_zero(m);
                        suite.record(closed == extracted,
                                     "model=" + std::to_string(mi) + ",n=" + std::to_string(n) +
                                         ",s=" + std::to_string(s) + ",m=" + std::to_string(m),
                                     to_string(closed), to_string(extracted));
                    }
                }
            }
        }
        suites.push_back(std::move(suite));
    }

    {
        SuiteResult suite{"density-equation"};
        for (std::size_t mi = 0; mi < density_models.size(); ++mi) {
            MaclaurinJet f = maybe_perturb(density_models[mi].jet(grid.order));
            for (int n = 2; n <= grid.n_max; ++n) {
                for (int s = 1; s <= n - 1; ++s) {
                    auto sides = density_equation_sides(n, s, f, grid.order);
                    int first_diff = -1;
                    for (int k = 0; k <= grid.order && first_diff < 0; ++k) {
                        if (sides.lhs.coeff(k) != sides.rhs.coeff(k)) first_diff = k;
                    }
                    suite.record(first_diff < 0,
                                 "model=" + std::to_string(mi) + ",n=" + std::to_string(n) +
                                     ",s=" + std::to_string(s) +
                                     (first_diff >= 0
                                          ? ",first differing coefficient " + std::to_string(first_diff)
                                          : ""),
                                 first_diff >= 0 ? to_string(sides.lhs.coeff(first_diff)) : "",
                                 first_diff >= 0 ? to_string(sides.rhs.coeff(first_diff)) : "");
                }
            }
        }
        suites.push_back(std::move(suite));
    }

    {
        // A bumped coefficient must break the equation: the check has teeth.
        SuiteResult suite{"density-equation-witness"};
        DensityJetModel unit(Rational(1), Rational(-1));
        MaclaurinJet f = unit.jet(grid.order);
        MaclaurinJet witness = f.with_coefficient(2, f.coeff(2) + 1);
        for (int n = 2; n <= grid.n_max; ++n) {
            for (int s = 1; s <= n - 1; ++s) {
                auto sides = density_equation_sides(n, s, witness, grid.order);
                suite.record(sides.lhs != sides.rhs,
                             "n=" + std::to_string(n) + ",s=" + std::to_string(s),
                             "sides equal", "sides must differ");
            }
        }
        suites.push_back(std::move(suite));
    }

    {
        SuiteResult suite{"induction-pattern"};
        const std::pair<int, int> seeds[] = {{1, -1}, {2, -4}, {3, -9}};
        for (const auto& [a, b] : seeds) {
            DensityJetModel model{Rational(a), Rational(b)};
            for (int n = 2; n <= grid.n_max; ++n) {
                for (int s = 1; s <= n - 1; ++s) {
                    const std::string label = "f0=" + std::to_string(a) + ",n=" + std::to_string(n) +
                                              ",s=" + std::to_string(s);
                    try {
                        auto stepped = induction_solve(n, s, model.f0, model.f1, grid.steps);
                        bool ok = true;
                        std::string got;
                        std::string want;
                        for (int t = 1; t <= grid.steps && ok; ++t) {
                            const Rational expected = model.derivative(static_cast<unsigned>(t + 1));
                            const auto& step = stepped[static_cast<std::size_t>(t - 1)];
                            if (step.derivative != expected || step.unknown_coefficient == 0) {
                                ok = false;
                                got = to_string(step.derivative);
                                want = to_string(expected);
                            }
                        }
                        suite.record(ok, label, got, want);
                    } catch (const UnderdeterminedError& e) {
                        suite.record(false, label, e.what(), "nonzero unknown coefficient");
                    }
                }
            }
        }
        suites.push_back(std::move(suite));
    }
    return suites;
}

// ---------------------------------------------------------------------------
// CSV ingestion: one numeric column, optional header, '#' comments.

std::vector<double> read_csv_column(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open input file: " + path);

    std::vector<double> values;
    std::string line;
    int lineno = 0;
    bool header_allowed = true;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
            line.pop_back();
        }
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        std::string body = line.substr(start);
        if (body[0] == '#') continue;

        char* end = nullptr;
        const double v = std::strtod(body.c_str(), &end);
        if (end == body.c_str() || *end != '\0') {
            if (header_allowed) {
                header_allowed = false;
                continue;
            }
            throw ConfigError("line " + std::to_string(lineno) + ": not a number: '" + body + "'");
        }
        header_allowed = false;
        if (!std::isfinite(v)) {
            throw ConfigError("line " + std::to_string(lineno) + ": non-finite value");
        }
        if (v < 0.0) {
            throw ConfigError("line " + std::to_string(lineno) + ": negative value " +
                              format_double(v));
        }
        values.push_back(v);
    }

    const int min_m = std::max(2 * n, 20);
    if (static_cast<int>(values.size()) < min_m) {
        throw ConfigError("input has " + std::to_string(values.size()) + " values; need at least " +
                          std::to_string(min_m));
    }
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    if (*lo == *hi) {
        throw ConfigError("degenerate data: all values equal; the sum-versus-maximum comparison "
                          "needs spread");
    }
    return values;
}

// ---------------------------------------------------------------------------
// Subcommand payloads

int run_simulate(int n, int s, const DistributionSpec& spec, int replicates, std::uint64_t seed,
                 const std::string& format, const std::string& out_path) {
    const EqualityCheckReport report = equality_check(n, s, spec, replicates, seed);
    if (format == "json") {
        ordered_json j;
        j["n"] = report.n;
        j["s"] = report.s;
        j["N"] = report.replicates;
        j["ks_statistic"] = report.ks_statistic;
        j["p_value"] = report.p_value;
        j["seed"] = report.seed;
        emit(j.dump(2) + "\n", out_path);
    } else {
        std::ostringstream out;
        out << "distributional equality check\n"
            << "  family:       " << spec.label() << "\n"
            << "  n, s:         " << report.n << ", " << report.s << "\n"
            << "  replicates:   " << report.replicates << " per side\n"
            << "  KS statistic: " << format_double(report.ks_statistic) << "\n"
            << "  p-value:      " << format_double(report.p_value) << "\n"
            << "  seed:         " << report.seed << "\n";
        emit(out.str(), out_path);
    }
    return 0;
}

int run_gof(const std::string& input, int n, int resamples, StatisticKind kind, int null_replicates,
            std::uint64_t seed, const std::string& format, const std::string& out_path) {
    const std::vector<double> values = read_csv_column(input, n);
    const GofReport report = gof_exponentiality(values, n, resamples, kind, null_replicates, seed);
    if (format == "json") {
        ordered_json j;
        j["statistic_kind"] = statistic_name(report.kind);
        j["value"] = report.value;
        j["p_value"] = report.p_value;
        j["m"] = report.m;
        j["n"] = report.n;
        j["B"] = report.resamples;
        j["M_null"] = report.null_replicates;
        j["seed"] = report.seed;
        emit(j.dump(2) + "\n", out_path);
    } else {
        std::ostringstream out;
        out << "exponentiality test\n"
            << "  statistic:   " << statistic_name(report.kind) << " = "
            << format_double(report.value) << "\n"
            << "  p-value:     " << format_double(report.p_value) << " (calibrated on "
            << report.null_replicates << " null replicates)\n"
            << "  sample size: " << report.m << "\n"
            << "  subsets:     " << report.resamples << " of size " << report.n << "\n"
            << "  seed:        " << report.seed << "\n";
        emit(out.str(), out_path);
    }
    return 0;
}

int run_power(const std::vector<DistributionSpec>& panel, int m, int n, int resamples,
              StatisticKind kind, int null_replicates, int trials, double alpha,
              std::uint64_t seed, const std::string& format, const std::string& out_path) {
    const auto rows = power_study(panel, m, n, resamples, kind, null_replicates, trials, alpha, seed);
    if (format == "json") {
        ordered_json j;
        j["command"] = "power";
        j["m"] = m;
        j["n"] = n;
        j["B"] = resamples;
        j["M_null"] = null_replicates;
        j["trials"] = trials;
        j["alpha"] = alpha;
        j["statistic_kind"] = statistic_name(kind);
        j["seed"] = seed;
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) {
            arr.push_back({{"spec", row.spec.label()}, {"rejection_rate", row.rejection_rate}});
        }
        j["rows"] = arr;
        emit(j.dump(2) + "\n", out_path);
    } else {
        std::ostringstream out;
        out << "power study: m=" << m << " n=" << n << " B=" << resamples
            << " M_null=" << null_replicates << " trials=" << trials << " alpha=" << alpha
            << " statistic=" << statistic_name(kind) << " seed=" << seed << "\n";
        char line[160];
        std::snprintf(line, sizeof(line), "  %-36s %s\n", "family", "rejection rate");
        out << line;
        for (const auto& row : rows) {
            std::snprintf(line, sizeof(line), "  %-36s %.4f\n", row.spec.label().c_str(),
                          row.rejection_rate);
            out << line;
        }
        emit(out.str(), out_path);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"expcheck: exact identity verification and a Monte Carlo exponentiality test"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;
    std::uint64_t seed = kDefaultSeed;

    // verify-identities
    auto* ids = app.add_subcommand("verify-identities",
                                   "Check the finite-difference identities over an exact grid");
    int ids_n = 6, ids_s = 8, ids_t = 4, ids_r = 12;
    ids->add_option("--n", ids_n, "Largest n for the coefficient triple sums");
    ids->add_option("--s", ids_s, "Largest s for the recurrence checks");
    ids->add_option("--t-max", ids_t, "Largest t for the coefficient triple sums");
    ids->add_option("--r-max", ids_r, "Largest r for the recurrence checks");

    // verify-analytic
    auto* ana = app.add_subcommand("verify-analytic",
                                   "Check series-level derivative identities and the induction solver");
    AnalyticGrid ana_grid;
    ana->add_option("--n", ana_grid.n_max, "Largest n in the series grids");
    ana->add_option("--order", ana_grid.order, "Series truncation order");
    ana->add_option("--t-max", ana_grid.steps, "Induction steps to solve");
    ana->add_option("--perturb", ana_grid.perturb, "Bump series coefficient k by one (negative control)")
        ->group("");

    // simulate
    auto* sim = app.add_subcommand("simulate", "Simulate both sides of the distributional equation");
    std::string sim_family = "exponential";
    double sim_rate = 1.0, sim_shape = 1.0, sim_scale = 1.0, sim_sigma = 1.0, sim_upper = 1.0;
    int sim_n = 3, sim_s = 1, sim_N = 20000;
    sim->add_option("--family", sim_family,
                    "exponential | weibull | gamma | lognormal | uniform | half-normal");
    sim->add_option("--rate", sim_rate, "Rate (exponential, gamma)");
    sim->add_option("--shape", sim_shape, "Shape (weibull, gamma)");
    sim->add_option("--scale", sim_scale, "Scale (weibull) or log-mean (lognormal)");
    sim->add_option("--sigma", sim_sigma, "Log-sd (lognormal) or sd (half-normal)");
    sim->add_option("--upper", sim_upper, "Upper bound (uniform)");
    sim->add_option("--n", sim_n, "Total sample size in the equation");
    sim->add_option("--s", sim_s, "Number of shifted terms");
    sim->add_option("--N", sim_N, "Replicates per side");

    // gof
    auto* gof = app.add_subcommand("gof", "Exponentiality test on a CSV column");
    std::string gof_input;
    std::string gof_stat = "ks";
    int gof_n = 3, gof_B = 2000, gof_M = 500;
    gof->add_option("--input", gof_input, "CSV file: one numeric column, '#' comments")->required();
    gof->add_option("--n", gof_n, "Subset size");
    gof->add_option("--B", gof_B, "Resampled subsets per cloud");
    gof->add_option("--statistic", gof_stat, "ks | cvm")
        ->check(CLI::IsMember({"ks", "cvm"}));
    gof->add_option("--M-null", gof_M, "Null calibration replicates");

    // power
    auto* pow_cmd = app.add_subcommand("power", "Rejection-rate table over a family panel");
    std::string pow_family;
    double pow_rate = 1.0, pow_shape = 1.0, pow_scale = 1.0, pow_sigma = 1.0, pow_upper = 1.0;
    std::string pow_stat = "ks";
    int pow_m = 500, pow_n = 3, pow_B = 2000, pow_M = 500, pow_trials = 100;
    double pow_alpha = 0.05;
    pow_cmd->add_option("--family", pow_family, "Single alternative family (default: built-in panel)");
    pow_cmd->add_option("--rate", pow_rate, "Rate (exponential, gamma)");
    pow_cmd->add_option("--shape", pow_shape, "Shape (weibull, gamma)");
    pow_cmd->add_option("--scale", pow_scale, "Scale (weibull) or log-mean (lognormal)");
    pow_cmd->add_option("--sigma", pow_sigma, "Log-sd (lognormal) or sd (half-normal)");
    pow_cmd->add_option("--upper", pow_upper, "Upper bound (uniform)");
    pow_cmd->add_option("--m", pow_m, "Sample size per trial");
    pow_cmd->add_option("--n", pow_n, "Subset size");
    pow_cmd->add_option("--B", pow_B, "Resampled subsets per cloud");
    pow_cmd->add_option("--M-null", pow_M, "Null calibration replicates");
    pow_cmd->add_option("--trials", pow_trials, "Datasets per family");
    pow_cmd->add_option("--alpha", pow_alpha, "Rejection level");
    pow_cmd->add_option("--statistic", pow_stat, "ks | cvm")->check(CLI::IsMember({"ks", "cvm"}));

    for (auto* sub : {ids, ana, sim, gof, pow_cmd}) {
        sub->add_option("--seed", seed, "Base seed (default " + std::to_string(kDefaultSeed) + ")");
        sub->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", out_path, "Write the report to a file instead of stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*ids) {
            ordered_json grid{{"n_max", ids_n}, {"s_max", ids_s}, {"t_max", ids_t}, {"r_max", ids_r}};
            return finish_verification("verify-identities", grid,
                                       run_identity_suites(ids_n, ids_s, ids_t, ids_r), format,
                                       out_path);
        }
        if (*ana) {
            ordered_json grid{{"n_max", ana_grid.n_max},
                              {"order", ana_grid.order},
                              {"steps", ana_grid.steps}};
            return finish_verification("verify-analytic", grid, run_analytic_suites(ana_grid),
                                       format, out_path);
        }
        if (*sim) {
            auto family = parse_family(sim_family);
            if (!family) throw ConfigError("unknown family: " + sim_family);
            const auto spec = DistributionSpec::from_params(*family, sim_rate, sim_shape, sim_scale,
                                                            sim_sigma, sim_upper);
            return run_simulate(sim_n, sim_s, spec, sim_N, seed, format, out_path);
        }
        if (*gof) {
            const StatisticKind kind = gof_stat == "cvm" ? StatisticKind::cvm : StatisticKind::ks;
            return run_gof(gof_input, gof_n, gof_B, kind, gof_M, seed, format, out_path);
        }
        if (*pow_cmd) {
            std::vector<DistributionSpec> panel;
            if (pow_family.empty()) {
                panel = {DistributionSpec::exponential(1.0), DistributionSpec::gamma(1.0, 2.0),
                         DistributionSpec::uniform(1.0), DistributionSpec::weibull(2.0, 1.0),
                         DistributionSpec::half_normal(1.0)};
            } else {
                auto family = parse_family(pow_family);
                if (!family) throw ConfigError("unknown family: " + pow_family);
                const auto spec = DistributionSpec::from_params(*family, pow_rate, pow_shape,
                                                                pow_scale, pow_sigma, pow_upper);
                panel = {DistributionSpec::exponential(1.0)};
                if (spec.family != Family::exponential) panel.push_back(spec);
            }
            const StatisticKind kind = pow_stat == "cvm" ? StatisticKind::cvm : StatisticKind::ks;
            return run_power(panel, pow_m, pow_n, pow_B, kind, pow_M, pow_trials, pow_alpha, seed,
                             format, out_path);
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
