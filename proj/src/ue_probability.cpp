#include "qsc/ue_probability.hpp"

#include <cmath>
#include <stdexcept>

namespace qsc {

ChannelPoint::ChannelPoint(unsigned q_, double p_) : q(q_), p(p_) {
    if (q < 2) throw std::domain_error("ChannelPoint: q < 2");
    if (!(p >= 0.0 && p <= p_max()))
        throw std::domain_error("ChannelPoint: p outside [0, (q-1)/q]");
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Good: return "Good";
        case Verdict::Bad: return "Bad";
        case Verdict::Neither: return "Neither";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

namespace {

void check_p(unsigned q, double p) {
    if (!(p >= 0.0 && p <= double(q - 1) / q))
        throw std::domain_error("p outside [0, (q-1)/q]");
}

}  // namespace

double pue(const DistributionA& a, unsigned q, double p) {
    check_p(q, p);
    if (p == 0.0) return 0.0;
    const std::size_t n = a.n;
    const double ps = p / (q - 1);
    double sum = 0.0;
    if (n <= 64) {
        for (std::size_t i = 1; i <= n; ++i) {
            if (a.counts[i].is_zero()) continue;
            sum += a.counts[i].to_double() * std::pow(ps, double(i)) *
                   std::pow(1.0 - p, double(n - i));
        }
    } else {
        const double lps = std::log(ps);
        const double l1p = std::log1p(-p);
        for (std::size_t i = 1; i <= n; ++i) {
            if (a.counts[i].is_zero()) continue;
            sum += std::exp(std::log(a.counts[i].to_double()) + double(i) * lps +
                            double(n - i) * l1p);
        }
    }
    return sum;
}

double pue_perp(const DistributionA& a, unsigned q, double code_size,
                std::size_t n, double p) {
    check_p(q, p);
    const double Q = double(q) / (q - 1);
    const double x = 1.0 - Q * p;
    double sum = 0.0;
    for (std::size_t i = 0; i <= a.n; ++i) {
        if (a.counts[i].is_zero()) continue;
        sum += a.counts[i].to_double() * std::pow(x, double(i));
    }
    double onep;
    if (n <= 64) {
        onep = std::pow(1.0 - p, double(n));
    } else {
        onep = std::exp(double(n) * std::log1p(-p));
    }
    return sum / code_size - onep;
}

double pi_transform(unsigned q, double p) {
    if (!(p >= 0.0 && p < 1.0))
        throw std::domain_error("pi_transform: p outside [0, 1)");
    return (double(q - 1) - q * p) / (q * (1.0 - p));
}

double lemma1_residual(const DistributionA& a, unsigned q, double code_size,
                       std::size_t n, double p) {
    const double pi = pi_transform(q, p);
    const double lhs = pue(a, q, p);
    const double scale = std::pow(1.0 - p, double(n));
    const double rhs = scale * (code_size * pue_perp(a, q, code_size, n, pi) - 1.0) +
                       code_size * std::pow(double(q), -double(n));
    return std::abs(lhs - rhs);
}

double good_bound(unsigned q, double k, std::size_t n) {
    const double lq = std::log(double(q));
    return std::exp((k - double(n)) * lq) - std::exp(-double(n) * lq);
}

double bad_bound(unsigned q, double k, std::size_t n) {
    return std::exp((k - double(n)) * std::log(double(q)));
}

Classification classify(const DistributionA& a, unsigned q, double k,
                        std::size_t n, std::size_t grid) {
    if (grid < 64) throw std::invalid_argument("classify: grid < 64");
    const double pmax = double(q - 1) / q;

    double best_p = pmax, best_v = pue(a, q, pmax);
    std::size_t best_i = grid;
    for (std::size_t i = 1; i < grid; ++i) {
        const double p = pmax * double(i) / double(grid);
        const double v = pue(a, q, p);
        if (v > best_v) { best_v = v; best_p = p; best_i = i; }
    }

    // Golden-section refinement on the bracket around the grid maximum.
    double lo = pmax * double(best_i > 1 ? best_i - 1 : 1) / double(grid);
    double hi = pmax * double(best_i + 1 < grid ? best_i + 1 : grid) / double(grid);
    if (lo < hi) {
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
        double f1 = pue(a, q, x1), f2 = pue(a, q, x2);
        for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
            if (f1 < f2) {
                lo = x1; x1 = x2; f1 = f2;
                x2 = lo + gr * (hi - lo); f2 = pue(a, q, x2);
            } else {
                hi = x2; x2 = x1; f2 = f1;
                x1 = hi - gr * (hi - lo); f1 = pue(a, q, x1);
            }
        }
        const double pm = (lo + hi) / 2, vm = pue(a, q, pm);
        if (vm > best_v) { best_v = vm; best_p = pm; }
    }

    Classification c;
    c.worst_p = best_p;
    c.max_pue = best_v;
    c.good_bound = good_bound(q, k, n);
    c.bad_bound = bad_bound(q, k, n);
    c.grid_size = grid;

    const double tol = 1e-12 * c.bad_bound;
    if (c.max_pue >= c.bad_bound - tol) {
        c.verdict = Verdict::Bad;
    } else if (c.max_pue <= c.good_bound + tol) {
        c.verdict = Verdict::Good;
    } else if (c.max_pue - c.good_bound > tol && c.bad_bound - c.max_pue > tol) {
        c.verdict = Verdict::Neither;
    } else {
        c.verdict = Verdict::Inconclusive;
    }
    return c;
}

}  // namespace qsc
