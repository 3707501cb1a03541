#ifndef QSC_CODE_MODEL_HPP
#define QSC_CODE_MODEL_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qsc/galois.hpp"
#include "qsc/rational.hpp"

namespace qsc {

// Thrown when an enumeration would exceed a configured cap.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EnumerationCaps {
    std::uint64_t max_codewords = std::uint64_t(1) << 24;
    std::uint64_t max_pairs = std::uint64_t(1) << 26;
};

// Full-rank k x n generator matrix of a linear [n,k] code over GF(q).
class GeneratorMatrix {
public:
    GeneratorMatrix(FieldMatrix g);

    const FieldMatrix& matrix() const { return g_; }
    const PrimeModulus& field() const { return g_.mod; }
    unsigned q() const { return g_.mod.q(); }
    std::size_t k() const { return g_.rows; }
    std::size_t n() const { return g_.cols; }

private:
    FieldMatrix g_;
};

// Explicit word list of a (possibly non-linear) code: M distinct length-n
// vectors over GF(q). The size exponent k = log_q(M) is kept as the exact
// pair (M, q), never rounded.
class CodewordList {
public:
    CodewordList(PrimeModulus q, std::size_t n, std::vector<std::vector<felem>> words);

    const PrimeModulus& field() const { return q_; }
    unsigned q() const { return q_.q(); }
    std::size_t n() const { return n_; }
    std::size_t size() const { return words_.size(); }  // M
    const std::vector<std::vector<felem>>& words() const { return words_; }

private:
    PrimeModulus q_;
    std::size_t n_;
    std::vector<std::vector<felem>> words_;
};

// Weight distribution (linear) or distance distribution (non-linear):
// exact counts A_0..A_n.
struct DistributionA {
    std::size_t n = 0;
    std::vector<Rational> counts;  // size n+1, A_0 = 1

    void validate_common() const;
};

// A_i = #codewords of weight i, by enumeration of all q^k messages.
DistributionA weight_distribution(const GeneratorMatrix& gen,
                                  const EnumerationCaps& caps = {});

// Generator of the dual code C-perp; (n-k) x n, possibly 0 rows when k = n.
GeneratorMatrix dual_code(const GeneratorMatrix& gen);

// A_i = (1/M) * #{ordered pairs at Hamming distance i}, exact rational.
DistributionA distance_distribution(const CodewordList& code,
                                    const EnumerationCaps& caps = {});

// Smallest i >= 1 with A_i > 0; throws std::domain_error when no such i.
std::size_t min_distance(const DistributionA& a);

// Materialize all q^k codewords (for cross-checks against the distance
// distribution).
CodewordList enumerate_codewords(const GeneratorMatrix& gen,
                                 const EnumerationCaps& caps = {});

}  // namespace qsc

#endif
