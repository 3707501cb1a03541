#ifndef QSC_ASYMPTOTICS_HPP
#define QSC_ASYMPTOTICS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "qsc/mu_threshold.hpp"

namespace qsc {

// d >> k regime: expansion variable y = sqrt(kappa / (2 d Q (Q-1))).
struct RegimeDK {
    ThresholdProblem prob;

    explicit RegimeDK(ThresholdProblem p) : prob(p) {}
    double Q() const { return double(prob.q) / (prob.q - 1); }
    double y() const;
};

// k >> d regime: lambda = ln q, theta = d/kappa, Lambda = ln(theta lambda/(q-1)).
struct RegimeKD {
    ThresholdProblem prob;

    explicit RegimeKD(ThresholdProblem p) : prob(p) {}
    double lambda() const;
    double theta() const;
    double Lambda() const;
};

struct SeriesApprox {
    std::size_t terms = 0;
    std::vector<double> partial_sums;  // partial_sums[t-1] = t-term value
    std::optional<double> p_approx;
};

struct Thm1Coefficients {
    std::array<double, 4> a;  // a_1..a_4 (minimizer series)
    std::array<double, 4> b;  // b_1..b_4 (mu series)
};

// Published coefficient table, polynomials in Q.
Thm1Coefficients thm1_coefficients(double Q);

// Polynomial evaluators A_1..A_3, B_0..B_3 in x, coefficients depending on
// lambda = ln q.
struct Thm2Polynomials {
    double lambda;

    double A(std::size_t i, double x) const;  // i in 1..3
    double B(std::size_t i, double x) const;  // i in 0..3
};

Thm2Polynomials thm2_polynomials(double lambda);

// t-term partial sums, t = 1..terms: term 1 is the leading dQ alone, each
// further term adds one correction 2dQ(Q-1) b_i y^i. terms <= 5.
SeriesApprox thm1_mu_series(const RegimeDK& r, std::size_t terms);

// t-term partial sums of (kappa/lambda) sum B_i(Lambda) theta^i; term 1 is
// the B_0 term. p_approx from the A-series for 1 - Q p. terms <= 4.
SeriesApprox thm2_mu_series(const RegimeKD& r, std::size_t terms);

}  // namespace qsc

#endif
