#include "qsc/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace qsc {

double RegimeDK::y() const {
    const double Q = this->Q();
    return std::sqrt(prob.kappa() / (2.0 * prob.d * Q * (Q - 1.0)));
}

double RegimeKD::lambda() const { return std::log(double(prob.q)); }
double RegimeKD::theta() const { return double(prob.d) / prob.kappa(); }
double RegimeKD::Lambda() const {
    return std::log(theta() * lambda() / (prob.q - 1));
}

Thm1Coefficients thm1_coefficients(double Q) {
    if (!(Q > 1.0)) throw std::domain_error("thm1_coefficients: Q <= 1");
    Thm1Coefficients c;
    c.a[0] = 2.0;
    c.a[1] = -(8.0 * Q + 2.0) / 3.0;
    c.a[2] = (26.0 * Q * Q + 22.0 * Q - 1.0) / 9.0;
    c.a[3] = -(368.0 * Q * Q * Q + 708.0 * Q * Q - 12.0 * Q + 8.0) / 135.0;
    c.b[0] = 1.0;
    c.b[1] = (2.0 * Q - 1.0) / 3.0;
    c.b[2] = (2.0 * Q * Q - 2.0 * Q - 1.0) / 18.0;
    c.b[3] = -(4.0 * Q * Q * Q - 6.0 * Q * Q - 6.0 * Q + 4.0) / 135.0;
    return c;
}

double Thm2Polynomials::A(std::size_t i, double x) const {
    switch (i) {
        case 1: return 1.0;
        case 2: return x + lambda - 1.0;
        case 3:
            return (2.0 * x * x + (4.0 * lambda - 2.0) * x +
                    2.0 * lambda * lambda - 3.0 * lambda) / 2.0;
    }
    throw std::out_of_range("Thm2Polynomials::A: i outside 1..3");
}

double Thm2Polynomials::B(std::size_t i, double x) const {
    switch (i) {
        case 0: return 1.0;
        case 1: return -(x - 1.0);
        // The published -(2x - lambda + 2)/2 does not reproduce the worked
        // 3- and 4-term values; the sign-corrected form below does, and the
        // numerical residual fit confirms it (see tests).
        case 2: return -(2.0 * x + lambda - 2.0) / 2.0;
        case 3:
            return -(3.0 * x * x + 3.0 * lambda * x + lambda * lambda - 3.0) / 6.0;
    }
    throw std::out_of_range("Thm2Polynomials::B: i outside 0..3");
}

Thm2Polynomials thm2_polynomials(double lambda) {
    if (!(lambda > 0.0)) throw std::domain_error("thm2_polynomials: lambda <= 0");
    return Thm2Polynomials{lambda};
}

SeriesApprox thm1_mu_series(const RegimeDK& r, std::size_t terms) {
    if (terms < 1) throw std::invalid_argument("thm1_mu_series: terms < 1");
    if (terms > 5)
        throw std::invalid_argument("thm1_mu_series: only 4 published coefficients");
    const double Q = r.Q();
    const double y = r.y();
    const double scale = 2.0 * r.prob.d * Q * (Q - 1.0);
    const auto c = thm1_coefficients(Q);

    SeriesApprox s;
    s.terms = terms;
    double sum = r.prob.d * Q;
    s.partial_sums.push_back(sum);
    double yi = 1.0;
    for (std::size_t i = 1; i < terms; ++i) {
        yi *= y;
        sum += scale * c.b[i - 1] * yi;
        s.partial_sums.push_back(sum);
    }
    if (terms > 1) {
        double p = 0.0, yj = 1.0;
        for (std::size_t i = 1; i <= std::min<std::size_t>(terms - 1, 4); ++i) {
            yj *= y;
            p += c.a[i - 1] * yj;
        }
        s.p_approx = p;
    }
    return s;
}

SeriesApprox thm2_mu_series(const RegimeKD& r, std::size_t terms) {
    if (terms < 1) throw std::invalid_argument("thm2_mu_series: terms < 1");
    if (terms > 4)
        throw std::invalid_argument("thm2_mu_series: only B_0..B_3 published");
    const double lambda = r.lambda();
    const double theta = r.theta();
    const double L = r.Lambda();
    const double lead = r.prob.kappa() / lambda;
    const auto poly = thm2_polynomials(lambda);

    SeriesApprox s;
    s.terms = terms;
    double sum = 0.0, ti = 1.0;
    for (std::size_t i = 0; i < terms; ++i) {
        sum += lead * poly.B(i, L) * ti;
        s.partial_sums.push_back(sum);
        ti *= theta;
    }
    if (terms > 1) {
        // 1 - Q p_m = (lambda/(q-1)) sum A_i(Lambda) theta^i
        double acc = 0.0, tj = 1.0;
        for (std::size_t i = 1; i <= std::min<std::size_t>(terms - 1, 3); ++i) {
            tj *= theta;
            acc += poly.A(i, L) * tj;
        }
        const double one_minus_Qp = lambda / (r.prob.q - 1) * acc;
        const double Q = double(r.prob.q) / (r.prob.q - 1);
        s.p_approx = (1.0 - one_minus_Qp) / Q;
    }
    return s;
}

}  // namespace qsc
