#include "qsc/mu_threshold.hpp"

#include <cmath>
#include <stdexcept>

namespace qsc {

ThresholdProblem::ThresholdProblem(unsigned q_, unsigned d_, double k_, bool linear_)
    : q(q_), d(d_), k(k_), linear(linear_) {
    if (q < 2) throw std::domain_error("ThresholdProblem: q < 2");
    if (d < 1) throw std::domain_error("ThresholdProblem: d < 1");
    if (!(k > 0)) throw std::domain_error("ThresholdProblem: k <= 0");
    if (!(kappa() > 0)) throw std::domain_error("ThresholdProblem: kappa <= 0");
}

double ThresholdProblem::kappa() const {
    const double lq = std::log(double(q));
    return linear ? k * lq - std::log(double(q - 1)) : 2.0 * k * lq;
}

namespace {

void check_interior(unsigned q, double p) {
    if (!(p > 0.0 && p < double(q - 1) / q))
        throw std::domain_error("p outside the open interval (0, (q-1)/q)");
}

}  // namespace

double f_eval(unsigned q, double p) {
    check_interior(q, p);
    const double Q = double(q) / (q - 1);
    return std::log1p(-Q * p) / std::log1p(-p);
}

double g_eval(unsigned q, double p) {
    // g diverges only at p -> 0+; it is finite at p = (q-1)/q (value 1/ln q).
    if (!(p > 0.0 && p <= double(q - 1) / q))
        throw std::domain_error("g_eval: p outside (0, (q-1)/q]");
    return -1.0 / std::log1p(-p);
}

double h_eval(const ThresholdProblem& prob, double p) {
    check_interior(prob.q, p);
    const double Q = double(prob.q) / (prob.q - 1);
    // Quotient form (d ln(1-Qp) - kappa) / ln(1-p); equal to d f + kappa g.
    return (prob.d * std::log1p(-Q * p) - prob.kappa()) / std::log1p(-p);
}

double h_prime(const ThresholdProblem& prob, double p) {
    check_interior(prob.q, p);
    const double Q = double(prob.q) / (prob.q - 1);
    const double l1 = std::log1p(-p);
    const double l2 = std::log1p(-Q * p);
    const double fp =
        (-Q * (1.0 - p) * l1 + (1.0 - Q * p) * l2) /
        ((1.0 - p) * (1.0 - Q * p) * l1 * l1);
    const double gp = -1.0 / ((1.0 - p) * l1 * l1);
    return prob.d * fp + prob.kappa() * gp;
}

MuResult minimize_h(const ThresholdProblem& prob) {
    const double pmax = prob.p_max();
    double eps = std::ldexp(pmax, -40);

    // h' is monotone (h convex): bracket the sign change, expanding the
    // endpoints inward if the initial ones fail.
    double lo = eps, hi = pmax - eps;
    int guard = 0;
    while (h_prime(prob, lo) >= 0.0 && guard < 60) { lo *= 0.5; ++guard; }
    guard = 0;
    while (h_prime(prob, hi) <= 0.0 && guard < 60) {
        hi = pmax - (pmax - hi) * 0.5;
        ++guard;
    }
    double flo = h_prime(prob, lo), fhi = h_prime(prob, hi);
    if (!(flo < 0.0 && fhi > 0.0))
        throw std::runtime_error("minimize_h: failed to bracket h' sign change");

    const double tol = 1e-14 * pmax;
    int iters = 0;
    while (hi - lo > tol && iters < 200) {
        // Secant proposal, safeguarded by bisection when it leaves the bracket.
        double mid = lo - flo * (hi - lo) / (fhi - flo);
        const double third = (hi - lo) / 4;
        if (!(mid > lo + third * 0.0) || mid <= lo || mid >= hi)
            mid = 0.5 * (lo + hi);
        // Alternate with bisection to guarantee interval shrinkage.
        if (iters % 2 == 1) mid = 0.5 * (lo + hi);
        const double fm = h_prime(prob, mid);
        if (fm == 0.0) { lo = hi = mid; flo = fhi = 0.0; break; }
        if (fm < 0.0) { lo = mid; flo = fm; }
        else { hi = mid; fhi = fm; }
        ++iters;
    }

    MuResult r;
    r.p_m = 0.5 * (lo + hi);
    r.mu = h_eval(prob, r.p_m);
    r.derivative_residual = std::abs(h_prime(prob, r.p_m));
    r.iterations = iters;
    return r;
}

bool beyond_threshold(const ThresholdProblem& prob, std::size_t n) {
    return double(n) >= minimize_h(prob).mu;
}

}  // namespace qsc
