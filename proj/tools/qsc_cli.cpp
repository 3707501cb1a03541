// qsc: analyze block codes for error detection on the q-ary symmetric
// channel; compute the critical length mu(d,k) and its series
// approximations; reproduce the worked examples.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "qsc/asymptotics.hpp"
#include "qsc/code_file.hpp"
#include "qsc/code_model.hpp"
#include "qsc/mu_threshold.hpp"
#include "qsc/ue_probability.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitVerification = 4;

std::string num(double v) {
    std::ostringstream ss;
    ss << std::setprecision(11) << v;
    return ss.str();
}

void print_series(const qsc::SeriesApprox& s) {
    std::cout << "terms  value\n";
    for (std::size_t t = 0; t < s.partial_sums.size(); ++t)
        std::cout << std::setw(5) << (t + 1) << "  " << num(s.partial_sums[t])
                  << "\n";
    if (s.p_approx)
        std::cout << "p (series) = " << num(*s.p_approx) << "\n";
}

int cmd_mu(unsigned q, unsigned d, double k, bool nonlinear, int terms,
           const std::string& regime) {
    qsc::ThresholdProblem prob(q, d, k, !nonlinear);
    qsc::MuResult r = qsc::minimize_h(prob);
    const char* mu_name = nonlinear ? "mu_N" : "mu";
    std::cout << (nonlinear ? "p_N" : "p_m") << " = " << num(r.p_m) << "\n"
              << mu_name << "(" << d << "," << k << ") = " << num(r.mu) << "\n";
    if (terms > 0) {
        std::string reg = regime;
        if (reg == "auto") reg = (d >= k) ? "dk" : "kd";
        std::cout << "series (" << reg << " regime):\n";
        if (reg == "dk")
            print_series(qsc::thm1_mu_series(qsc::RegimeDK(prob), terms));
        else
            print_series(qsc::thm2_mu_series(qsc::RegimeKD(prob), terms));
    }
    return kExitOk;
}

void print_distribution(const qsc::DistributionA& a) {
    std::cout << "A =";
    for (std::size_t i = 0; i <= a.n; ++i) {
        const auto& c = a.counts[i];
        std::cout << ' ' << c.num;
        if (c.den != 1) std::cout << '/' << c.den;
    }
    std::cout << "\n";
}

void print_classification(const char* label, const qsc::Classification& c) {
    std::cout << label << ": " << qsc::verdict_name(c.verdict)
              << "  (max P_ue = " << num(c.max_pue) << " at p = " << num(c.worst_p)
              << ", good bound = " << num(c.good_bound)
              << ", bad bound = " << num(c.bad_bound) << ")\n";
}

int cmd_analyze(const std::string& path, std::size_t grid,
                const std::string& csv_path) {
    qsc::ParsedCode code = qsc::parse_code_file(path);

    qsc::DistributionA a;
    unsigned q;
    std::size_t n;
    double k_real, code_size;
    bool linear = std::holds_alternative<qsc::GeneratorMatrix>(code);

    if (linear) {
        const auto& gen = std::get<qsc::GeneratorMatrix>(code);
        q = gen.q();
        n = gen.n();
        k_real = double(gen.k());
        code_size = std::pow(double(q), double(gen.k()));
        a = qsc::weight_distribution(gen);
        std::cout << "linear [" << n << "," << gen.k() << "] code over GF(" << q
                  << ")\n";
    } else {
        const auto& cl = std::get<qsc::CodewordList>(code);
        q = cl.q();
        n = cl.n();
        code_size = double(cl.size());
        k_real = std::log(code_size) / std::log(double(q));
        a = qsc::distance_distribution(cl);
        std::cout << "nonlinear (" << n << ", M=" << cl.size() << ") code over GF("
                  << q << "), k = log_q(M) = " << num(k_real) << "\n";
    }

    const std::size_t d = qsc::min_distance(a);
    std::cout << "d = " << d << "\n";
    print_distribution(a);

    print_classification("C", qsc::classify(a, q, k_real, n, grid));
    if (linear) {
        const auto& gen = std::get<qsc::GeneratorMatrix>(code);
        auto dual = qsc::dual_code(gen);
        if (dual.k() == 0) {
            std::cout << "C_perp: degenerate (k_perp = 0, P_ue identically 0)\n";
        } else {
            auto ad = qsc::weight_distribution(dual);
            print_classification(
                "C_perp", qsc::classify(ad, q, double(dual.k()), n, grid));
        }
    }

    qsc::ThresholdProblem prob(q, static_cast<unsigned>(d), k_real, linear);
    qsc::MuResult mu = qsc::minimize_h(prob);
    const char* mu_name = linear ? "mu" : "mu_N";
    std::cout << mu_name << "(" << d << "," << num(k_real) << ") = " << num(mu.mu)
              << "\n"
              << "n = " << n << (double(n) >= mu.mu ? " >= " : " < ") << mu_name
              << "  => "
              << (double(n) >= mu.mu ? "beyond threshold (bad)"
                                     : "below threshold")
              << "\n";

    if (!csv_path.empty()) {
        std::vector<qsc::CurveRow> rows;
        rows.reserve(grid);
        const double pmax = double(q - 1) / q;
        const double gb = qsc::good_bound(q, k_real, n);
        const double bb = qsc::bad_bound(q, k_real, n);
        for (std::size_t i = 1; i <= grid; ++i) {
            const double p = pmax * double(i) / double(grid);
            rows.push_back({p, qsc::pue(a, q, p),
                            qsc::pue_perp(a, q, code_size, n, p), gb, bb});
        }
        std::ofstream out(csv_path);
        if (!out) throw qsc::parse_error("cannot open CSV output: " + csv_path);
        qsc::write_curve_csv(out, rows);
        std::cout << "wrote " << rows.size() << " rows to " << csv_path << "\n";
    }
    return kExitOk;
}

int cmd_dual_check(const std::string& path, int samples, unsigned seed) {
    qsc::ParsedCode code = qsc::parse_code_file(path);
    const auto* gen = std::get_if<qsc::GeneratorMatrix>(&code);
    if (!gen) throw qsc::parse_error("dual-check requires a linear code file");

    const unsigned q = gen->q();
    const std::size_t n = gen->n();
    const double code_size = std::pow(double(q), double(gen->k()));
    auto a = qsc::weight_distribution(*gen);
    auto dual = qsc::dual_code(*gen);

    qsc::DistributionA ad;
    if (dual.k() > 0) ad = qsc::weight_distribution(dual);

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(1e-6, double(q - 1) / q * (1 - 1e-6));
    double max_dev = 0, max_res = 0;
    for (int s = 0; s < samples; ++s) {
        const double p = dist(rng);
        const double lhs = qsc::pue_perp(a, q, code_size, n, p);
        const double rhs = dual.k() > 0 ? qsc::pue(ad, q, p) : 0.0;
        const double dev = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
        max_dev = std::max(max_dev, dev);
        max_res = std::max(max_res,
                           qsc::lemma1_residual(a, q, code_size, n, p));
    }
    std::cout << "max Eq.(3)-vs-dual deviation: " << num(max_dev) << "\n"
              << "max Lemma-1 identity residual: " << num(max_res) << "\n";
    if (max_dev > 1e-10 || max_res > 1e-10) {
        std::cout << "FAIL: tolerance 1e-10 exceeded\n";
        return kExitVerification;
    }
    std::cout << "OK\n";
    return kExitOk;
}

struct ReproRow {
    std::string label;
    double computed, printed, tol;
};

int report_rows(const std::vector<ReproRow>& rows) {
    bool ok = true;
    std::cout << std::left;
    for (const auto& r : rows) {
        const double diff = std::abs(r.computed - r.printed);
        const bool pass = diff <= r.tol;
        ok = ok && pass;
        std::cout << std::setw(28) << r.label << " computed " << std::setw(16)
                  << num(r.computed) << " printed " << std::setw(16)
                  << num(r.printed) << " |diff| " << std::setw(12) << num(diff)
                  << (pass ? " ok" : " FAIL") << "\n";
    }
    return ok ? kExitOk : kExitVerification;
}

int cmd_reproduce(int example) {
    using qsc::RegimeDK;
    using qsc::RegimeKD;
    using qsc::ThresholdProblem;

    if (example == 1) {
        ThresholdProblem prob(2, 1000, 2, true);
        auto r = qsc::minimize_h(prob);
        auto s = qsc::thm1_mu_series(RegimeDK(prob), 5);
        return report_rows({
            {"p_m", r.p_m, 0.0352540, 1e-6},
            {"mu(1000,2)", r.mu, 2075.8565430, 1e-5},
            {"series 1 term", s.partial_sums[0], 2000.0, 1e-5},
            {"series 2 terms", s.partial_sums[1], 2074.4659482, 1e-5},
            {"series 3 terms", s.partial_sums[2], 2075.8522426, 1e-5},
            {"series 4 terms", s.partial_sums[3], 2075.8565439, 1e-5},
        });
    }
    if (example == 2) {
        ThresholdProblem prob(2, 2, 1000, true);
        auto r = qsc::minimize_h(prob);
        auto s = qsc::thm2_mu_series(RegimeKD(prob), 4);
        return report_rows({
            {"p_m", r.p_m, 0.4990185, 1e-6},
            {"mu(2,1000)", r.mu, 1020.8737393, 1e-5},
            {"p (series)", *s.p_approx, 0.4990185, 1e-6},
            {"series 1 term", s.partial_sums[0], 1000.0, 1e-5},
            {"series 2 terms", s.partial_sums[1], 1020.8169587, 1e-5},
            {"series 3 terms", s.partial_sums[2], 1020.8741383, 1e-4},
            {"series 4 terms", s.partial_sums[3], 1020.8737362, 1e-4},
        });
    }
    if (example == 3) {
        auto mu = [](unsigned d, double k, bool linear) {
            return qsc::minimize_h(ThresholdProblem(2, d, k, linear)).mu;
        };
        return report_rows({
            {"mu(1000,2)", mu(1000, 2, true), 2075.86, 0.01},
            {"mu_N(1000,2)", mu(1000, 2, false), 2108.10, 0.01},
            {"mu(2,1000)", mu(2, 1000, true), 1020.87, 0.01},
            {"mu_N(2,1000)", mu(2, 1000, false), 2022.85, 0.01},
        });
    }
    throw CLI::ValidationError("--example must be 1, 2 or 3");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"block-code error-detection analyzer for the q-ary symmetric channel"};
    app.require_subcommand(1);

    // mu
    unsigned q = 2, d = 1;
    double k = 1;
    bool nonlinear = false;
    int terms = 0;
    std::string regime = "auto";
    auto* mu = app.add_subcommand("mu", "compute mu(d,k) and series approximations");
    mu->add_option("--q", q, "field size (prime)")->required();
    mu->add_option("--d", d, "minimum distance")->required();
    mu->add_option("--k", k, "dimension (log_q M for --nonlinear)")->required();
    mu->add_flag("--nonlinear", nonlinear, "use the non-linear bound (kappa = 2k ln q)");
    mu->add_option("--terms", terms, "print partial-sum table with this many terms");
    mu->add_option("--regime", regime, "series regime")
        ->check(CLI::IsMember({"auto", "dk", "kd"}));

    // analyze
    std::string code_path, csv_path;
    std::size_t grid = 2048;
    auto* an = app.add_subcommand("analyze", "analyze a code file");
    an->add_option("--code", code_path, "code file")->required();
    an->add_option("--grid", grid, "grid points for classification/CSV");
    an->add_option("--csv", csv_path, "write P_ue curve CSV here");

    // dual-check
    std::string dc_path;
    int samples = 64;
    unsigned seed = 0;
    auto* dc = app.add_subcommand("dual-check",
                                  "verify Eq.(3) against the explicit dual");
    dc->add_option("--code", dc_path, "linear code file")->required();
    dc->add_option("--samples", samples, "number of p samples");
    dc->add_option("--seed", seed, "RNG seed");

    // reproduce
    int example = 0;
    auto* rp = app.add_subcommand("reproduce", "recompute a worked example");
    rp->add_option("--example", example, "example number (1, 2 or 3)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInput;
    }

    try {
        if (mu->parsed()) return cmd_mu(q, d, k, nonlinear, terms, regime);
        if (an->parsed()) return cmd_analyze(code_path, grid, csv_path);
        if (dc->parsed()) return cmd_dual_check(dc_path, samples, seed);
        if (rp->parsed()) return cmd_reproduce(example);
    } catch (const qsc::parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const qsc::resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitInput;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitInput;
}
