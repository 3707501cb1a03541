#ifndef QSC_MU_THRESHOLD_HPP
#define QSC_MU_THRESHOLD_HPP

#include <cstddef>

namespace qsc {

// Parameters of the badness threshold h(p) = d f(p) + kappa g(p).
// kappa = k ln q - ln(q-1) for linear codes, 2k ln q for the non-linear
// bound (k = log_q M).
struct ThresholdProblem {
    unsigned q;
    unsigned d;
    double k;
    bool linear = true;

    ThresholdProblem(unsigned q_, unsigned d_, double k_, bool linear_ = true);

    double kappa() const;
    double p_max() const { return double(q - 1) / q; }
};

struct MuResult {
    double p_m = 0;
    double mu = 0;
    double derivative_residual = 0;
    int iterations = 0;
};

// f(p) = ln(1-Qp)/ln(1-p), increasing on (0, (q-1)/q).
double f_eval(unsigned q, double p);
// g(p) = -1/ln(1-p), decreasing; finite at the right endpoint, diverges at 0.
double g_eval(unsigned q, double p);

double h_eval(const ThresholdProblem& prob, double p);

// h'(p) = d f'(p) + kappa g'(p). Note g'(p) = -1/((1-p) ln(1-p)^2); g is
// decreasing, so the derivative is negative.
double h_prime(const ThresholdProblem& prob, double p);

// Root of h' by bracketing + safeguarded bisection/secant; h is convex so
// the root is unique and equals the minimizer.
MuResult minimize_h(const ThresholdProblem& prob);

// n >= mu(d,k)?
bool beyond_threshold(const ThresholdProblem& prob, std::size_t n);

}  // namespace qsc

#endif
