#ifndef QSC_UE_PROBABILITY_HPP
#define QSC_UE_PROBABILITY_HPP

#include <cstddef>

#include "qsc/code_model.hpp"

namespace qsc {

// Channel parameter p of the q-ary symmetric channel, 0 <= p <= (q-1)/q.
struct ChannelPoint {
    unsigned q;
    double p;

    ChannelPoint(unsigned q_, double p_);
    double Q() const { return double(q) / (q - 1); }
    double p_max() const { return double(q - 1) / q; }
};

enum class Verdict { Good, Bad, Neither, Inconclusive };

struct Classification {
    Verdict verdict = Verdict::Inconclusive;
    double worst_p = 0;     // argmax of P_ue over the refined search
    double max_pue = 0;
    double good_bound = 0;  // (q^k - 1) / q^n
    double bad_bound = 0;   // q^(k-n)
    std::size_t grid_size = 0;
};

const char* verdict_name(Verdict v);

// P_ue(C,p) = sum_{i>=1} A_i (p/(q-1))^i (1-p)^(n-i), accumulated from the
// smallest weight up; log-space powers for large n.
double pue(const DistributionA& a, unsigned q, double p);

// q^{-k} sum_i A_i (1-Qp)^i - (1-p)^n, with q^{-k} = 1/code_size supplied
// exactly (code_size = q^k for linear codes, M otherwise).
double pue_perp(const DistributionA& a, unsigned q, double code_size,
                std::size_t n, double p);

// The Lemma-1 involution p -> ((q-1) - qp) / (q (1-p)).
double pi_transform(unsigned q, double p);

// |P_ue(C,p) - [(1-p)^n (q^k pue_perp(C,pi) - 1) + q^(k-n)]|, a test oracle
// for the exact identity behind the badness duality.
double lemma1_residual(const DistributionA& a, unsigned q, double code_size,
                       std::size_t n, double p);

double good_bound(unsigned q, double k, std::size_t n);
double bad_bound(unsigned q, double k, std::size_t n);

// Grid search over (0, (q-1)/q] plus golden-section refinement around the
// grid maximum; verdict boundaries use tol = 1e-12 relative.
Classification classify(const DistributionA& a, unsigned q, double k,
                        std::size_t n, std::size_t grid = 2048);

}  // namespace qsc

#endif
