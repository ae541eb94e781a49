// Acceptance suite: each criterion prints one [PASS]/[FAIL] line; the binary
// exits nonzero if any selected criterion fails. Criterion numbers may be
// passed as arguments to run a subset, e.g. `expcheck_acceptance 1 2 3`.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "expcheck/analytic.hpp"
#include "expcheck/difference_kernel.hpp"
#include "expcheck/equality.hpp"
#include "expcheck/gof.hpp"

using namespace expcheck;

namespace {

constexpr std::uint64_t kSeed = 4242424242ULL;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& why) {
        if (!condition && ok) {
            ok = false;
            detail = why;
        }
    }
};

// --- 1. exact identity grids -----------------------------------------------

Outcome criterion1() {
    Outcome out;
    long recurrence_cases = 0;
    for (auto which : {DifferenceIdentity::binomial_lift, DifferenceIdentity::shifted_binomial,
                       DifferenceIdentity::geometric_sum}) {
        for (unsigned s = 1; s <= 8; ++s) {
            for (unsigned r = 1; r <= 12; ++r) {
                auto sides = difference_identity_sides(which, s, r);
                ++recurrence_cases;
                out.require(sides.lhs == sides.rhs,
                            "recurrence mismatch at s=" + std::to_string(s) +
                                " r=" + std::to_string(r));
            }
        }
    }
    out.require(recurrence_cases == 288, "expected 288 recurrence cases");

    for (unsigned n = 0; n <= 10; ++n) {
        for (int k = 0; k < 20; ++k) {
            const Rational x = make_rational(2 * k - 19, 4);
            auto row = difference_row(n, x);
            for (unsigned i = 0; i < n; ++i) {
                out.require(row[i] == Rational(0), "nonzero below the diagonal at n=" +
                                                       std::to_string(n));
            }
            out.require(row[n] == Rational(factorial_integer(n)),
                        "diagonal is not n! at n=" + std::to_string(n));
        }
    }

    for (int n = 2; n <= 6; ++n) {
        for (int s = 1; s <= n - 1; ++s) {
            for (int t = 1; t <= 4; ++t) {
                auto triple = coefficient_triple_sum(IndexContext(n, s, t));
                out.require(triple.lhs == triple.rhs && triple.lhs == triple.closed,
                            "triple sum mismatch at n=" + std::to_string(n) +
                                " s=" + std::to_string(s) + " t=" + std::to_string(t));
            }
        }
    }
    if (out.ok) out.detail = "288 recurrence + 220 row + 60 triple-sum cases, all exact";
    return out;
}

// --- 2. anchored values ------------------------------------------------------

Outcome criterion2() {
    Outcome out;
    out.require(power_difference(1, 2, Rational(2)) == Rational(3), "difference value at (1,2,2)");

    auto first = coefficient_triple_sum(IndexContext(2, 1, 1));
    out.require(first.lhs == Rational(7) && first.rhs == Rational(7) && first.closed == Rational(7),
                "triple sum at (2,1,1) is not 7");

    auto second = coefficient_triple_sum(IndexContext(3, 1, 1));
    out.require(second.lhs == Rational(25) && second.rhs == Rational(25) &&
                    second.closed == Rational(25),
                "triple sum at (3,1,1) is not 25");

    for (int n = 2; n <= 6; ++n) {
        for (int s = 1; s <= n - 1; ++s) {
            for (int t = 1; t <= 4; ++t) {
                MultiIndex idx(static_cast<std::size_t>(s), 0);
                idx.back() = n - s + t;
                out.require(coeff_gap(IndexContext(n, s, t), idx) == Rational(0),
                            "coefficient gap nonzero at the boundary index");
            }
        }
    }
    if (out.ok) out.detail = "anchored difference, triple sums, and boundary gaps reproduced";
    return out;
}

// --- 3. series-level oracle agreements --------------------------------------

Outcome criterion3() {
    Outcome out;
    const std::vector<DensityJetModel> models = {
        DensityJetModel(Rational(1), Rational(-1)),
        DensityJetModel(Rational(2), Rational(-4)),
        DensityJetModel(make_rational(3, 2), make_rational(-5, 7)),
        DensityJetModel(make_rational(1, 2), make_rational(2, 3)),
    };

    for (const auto& model : models) {
        MaclaurinJet f = model.jet(12);
        for (unsigned m = 1; m <= 6; ++m) {
            MaclaurinJet g = cdf_power_density(m, f);
            for (int d = -static_cast<int>(m); d <= 6; ++d) {
                out.require(g.derivative_at_zero(static_cast<int>(m) + d) ==
                                pattern_g_derivative(m, d, model.f0, model.f1),
                            "closed-form mismatch at m=" + std::to_string(m) +
                                " d=" + std::to_string(d));
            }
        }

        auto ders = derivative_table(f, 12);
        for (int n = 3; n <= 6; ++n) {
            for (int s = 2; s <= n - 1; ++s) {
                MaclaurinJet k = kernel_jet(n, s, f);
                for (int m = s - 1; m <= s + 4; ++m) {
                    out.require(kernel_derivative_closed(n, s, m, ders) == k.derivative_at_zero(m),
                                "kernel closed form mismatch at n=" + std::to_string(n) +
                                    " s=" + std::to_string(s) + " m=" + std::to_string(m));
                }
            }
        }
    }

    MaclaurinJet unit = models[0].jet(12);
    MaclaurinJet witness = unit.with_coefficient(2, unit.coeff(2) + 1);
    for (int n = 2; n <= 5; ++n) {
        for (int s = 1; s <= n - 1; ++s) {
            auto sides = density_equation_sides(n, s, unit, 12);
            out.require(sides.lhs == sides.rhs, "density equation split under the pattern at n=" +
                                                    std::to_string(n) + " s=" + std::to_string(s));
            auto off = density_equation_sides(n, s, witness, 12);
            out.require(off.lhs != off.rhs, "density equation failed to split for the witness at n=" +
                                                std::to_string(n) + " s=" + std::to_string(s));
        }
    }
    if (out.ok) out.detail = "closed forms, kernel sums, and equation sides agree exactly";
    return out;
}

// --- 4. induction solver -----------------------------------------------------

Outcome criterion4() {
    Outcome out;
    const std::pair<int, int> seeds[] = {{1, -1}, {2, -4}, {3, -9}};
    for (const auto& [a, b] : seeds) {
        DensityJetModel model{Rational(a), Rational(b)};
        for (int n = 2; n <= 5; ++n) {
            for (int s = 1; s <= n - 1; ++s) {
                std::vector<InductionStep> steps;
                try {
                    steps = induction_solve(n, s, model.f0, model.f1, 8);
                } catch (const UnderdeterminedError& e) {
                    out.require(false, e.what());
                    continue;
                }
                for (int t = 1; t <= 8; ++t) {
                    const auto& step = steps[static_cast<std::size_t>(t - 1)];
                    out.require(step.derivative == model.derivative(static_cast<unsigned>(t + 1)),
                                "pattern broken at f0=" + std::to_string(a) +
                                    " n=" + std::to_string(n) + " s=" + std::to_string(s) +
                                    " t=" + std::to_string(t));
                    out.require(step.unknown_coefficient != Rational(0),
                                "zero unknown coefficient at n=" + std::to_string(n) +
                                    " s=" + std::to_string(s) + " t=" + std::to_string(t));
                }
            }
        }
    }
    if (out.ok) out.detail = "derivatives through order 9 recovered on the full grid";
    return out;
}

// --- 5. distributional equality, null and alternative ------------------------

Outcome criterion5() {
    Outcome out;
    int null_rejections = 0;
    int alt_rejections = 0;
    for (std::uint64_t r = 0; r < 100; ++r) {
        if (equality_check(3, 1, DistributionSpec::exponential(1.0), 20000, r).p_value <= 0.01) {
            ++null_rejections;
        }
        if (equality_check(3, 1, DistributionSpec::uniform(1.0), 20000, r).p_value <= 0.01) {
            ++alt_rejections;
        }
    }
    out.require(null_rejections <= 5, "null rejections " + std::to_string(null_rejections) + " > 5");
    out.require(alt_rejections >= 95, "alternative rejections " + std::to_string(alt_rejections) +
                                          " < 95");
    out.detail = "null rejections " + std::to_string(null_rejections) + "/100, uniform rejections " +
                 std::to_string(alt_rejections) + "/100";
    return out;
}

// --- 6. test size under the null ---------------------------------------------

Outcome criterion6() {
    Outcome out;
    int rejections = 0;
    const int datasets = 200;
    for (int r = 0; r < datasets; ++r) {
        const auto data = sample(DistributionSpec::exponential(1.0), 200,
                                 derive_stream_seed(kSeed, 100, static_cast<std::uint64_t>(r)));
        const auto report =
            gof_exponentiality(data.values, 3, 2000, StatisticKind::ks, 500,
                               derive_stream_seed(kSeed, 101, static_cast<std::uint64_t>(r)));
        if (report.p_value <= 0.05) ++rejections;
    }
    const double rate = static_cast<double>(rejections) / datasets;
    out.require(rate >= 0.02 && rate <= 0.09,
                "size " + std::to_string(rate) + " outside [0.02, 0.09]");
    out.detail = "rejection rate " + std::to_string(rate) + " over 200 exponential datasets";
    return out;
}

// --- 7. exact scale invariance ------------------------------------------------

Outcome criterion7() {
    Outcome out;
    for (std::uint64_t r = 0; r < 20; ++r) {
        const auto data = sample(DistributionSpec::exponential(2.0), 120,
                                 derive_stream_seed(kSeed, 102, r));
        for (auto kind : {StatisticKind::ks, StatisticKind::cvm}) {
            const auto base = gof_exponentiality(data.values, 3, 400, kind, 99, r);
            for (double c : {1e-3, 1e3}) {
                std::vector<double> scaled;
                scaled.reserve(data.values.size());
                for (double v : data.values) scaled.push_back(c * v);
                const auto report = gof_exponentiality(scaled, 3, 400, kind, 99, r);
                out.require(report.value == base.value && report.p_value == base.p_value &&
                                report.m == base.m && report.n == base.n &&
                                report.resamples == base.resamples &&
                                report.null_replicates == base.null_replicates &&
                                report.seed == base.seed,
                            "report differs under scaling c=" + std::to_string(c) +
                                " dataset=" + std::to_string(r));
            }
        }
    }
    if (out.ok) out.detail = "20 datasets x {1e-3, 1, 1e3} x {ks, cvm}: bit-identical reports";
    return out;
}

// --- 8. power ordering ---------------------------------------------------------

Outcome criterion8() {
    Outcome out;
    const std::vector<DistributionSpec> panel = {
        DistributionSpec::exponential(1.0),
        DistributionSpec::uniform(1.0),
        DistributionSpec::weibull(2.0, 1.0),
    };
    const auto rows = power_study(panel, 500, 3, 2000, StatisticKind::ks, 500, 100, 0.05, kSeed);
    const double null_rate = rows[0].rejection_rate;
    out.require(rows[1].rejection_rate > null_rate, "uniform power does not exceed the null rate");
    out.require(rows[2].rejection_rate > null_rate, "weibull power does not exceed the null rate");
    out.require(rows[1].rejection_rate > 0.8, "uniform power " +
                                                  std::to_string(rows[1].rejection_rate) +
                                                  " not above 0.8");
    out.detail = "rates: exponential " + std::to_string(null_rate) + ", uniform " +
                 std::to_string(rows[1].rejection_rate) + ", weibull " +
                 std::to_string(rows[2].rejection_rate);
    return out;
}

// --- 9. CLI byte-reproducibility ----------------------------------------------

#ifdef EXPCHECK_CLI_PATH
int run_cli_to(const std::string& args, const std::filesystem::path& out) {
    const std::string command =
        std::string(EXPCHECK_CLI_PATH) + " " + args + " --format json --out " + out.string() +
        " >/dev/null 2>&1";
    const int status = std::system(command.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Outcome criterion9() {
    namespace fs = std::filesystem;
    Outcome out;
    const fs::path dir = fs::temp_directory_path() / "expcheck_acceptance";
    fs::create_directories(dir);

    const fs::path csv = dir / "data.csv";
    {
        const auto data = sample(DistributionSpec::exponential(3.0), 80, kSeed);
        std::ofstream f(csv);
        f << "# acceptance data\n";
        for (double v : data.values) f << v << "\n";
    }

    const std::vector<std::pair<std::string, std::string>> invocations = {
        {"ids", "verify-identities --n 3 --s 3 --r-max 4 --t-max 2"},
        {"ana", "verify-analytic --n 3 --order 12 --t-max 3"},
        {"sim", "simulate --family exponential --rate 1 --n 3 --s 1 --N 2000 --seed 11"},
        {"gof", "gof --n 3 --B 400 --M-null 99 --seed 11 --input " + csv.string()},
        {"pow", "power --family uniform --m 60 --B 200 --M-null 49 --trials 50 --seed 11"},
    };
    for (const auto& [tag, args] : invocations) {
        const fs::path first = dir / (tag + "_1.json");
        const fs::path second = dir / (tag + "_2.json");
        out.require(run_cli_to(args, first) == 0, tag + ": first run failed");
        out.require(run_cli_to(args, second) == 0, tag + ": second run failed");
        const std::string a = slurp(first);
        out.require(!a.empty() && a == slurp(second), tag + ": outputs differ between runs");
    }
    if (out.ok) out.detail = "5 json invocations, each byte-identical across two runs";
    return out;
}
#endif

struct Criterion {
    int id;
    std::string label;
    double budget_seconds;  // 0 = no stated budget
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    const std::vector<Criterion> criteria = {
        {1, "identity suite over the exact grids", 5.0, criterion1},
        {2, "anchored values reproduced exactly", 0.0, criterion2},
        {3, "series-level oracle agreement", 30.0, criterion3},
        {4, "induction solver recovers the pattern", 30.0, criterion4},
        {5, "distributional equality: size and separation", 120.0, criterion5},
        {6, "test size within the binomial band", 600.0, criterion6},
        {7, "exact scale invariance of reports", 0.0, criterion7},
        {8, "power ordering against alternatives", 0.0, criterion8},
#ifdef EXPCHECK_CLI_PATH
        {9, "byte-reproducible json CLI output", 0.0, criterion9},
#endif
    };

    bool all_ok = true;
    for (const auto& criterion : criteria) {
        if (!selected.empty() && !selected.count(criterion.id)) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome.ok = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (outcome.ok && criterion.budget_seconds > 0.0 && elapsed > criterion.budget_seconds) {
            outcome.ok = false;
            outcome.detail = "runtime " + std::to_string(elapsed) + "s over budget " +
                             std::to_string(criterion.budget_seconds) + "s";
        }
        std::printf("[%s] criterion %d: %s (%.1fs)%s%s\n", outcome.ok ? "PASS" : "FAIL",
                    criterion.id, criterion.label.c_str(), elapsed,
                    outcome.detail.empty() ? "" : " -- ", outcome.detail.c_str());
        std::fflush(stdout);
        all_ok = all_ok && outcome.ok;
    }
    return all_ok ? 0 : 1;
}
