#ifndef QSC_GALOIS_HPP
#define QSC_GALOIS_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace qsc {

using felem = std::uint32_t;  // field element value in [0, q)

// Prime modulus q for GF(q), 2 <= q <= 65521. Primality is checked at
// construction; all field arithmetic routes through this type.
class PrimeModulus {
public:
    explicit PrimeModulus(unsigned q);

    unsigned q() const { return q_; }

    felem add(felem a, felem b) const { return (a + b) % q_; }
    felem sub(felem a, felem b) const { return (a + q_ - b) % q_; }
    felem mul(felem a, felem b) const {
        return static_cast<felem>(std::uint64_t(a) * b % q_);
    }
    felem neg(felem a) const { return a == 0 ? 0 : q_ - a; }
    // Multiplicative inverse via a^(q-2); throws std::domain_error for a = 0.
    felem inv(felem a) const;
    felem pow(felem a, unsigned long long e) const;

    friend bool operator==(const PrimeModulus& a, const PrimeModulus& b) {
        return a.q_ == b.q_;
    }

private:
    unsigned q_;
};

// Row-major dense matrix over GF(q).
struct FieldMatrix {
    PrimeModulus mod;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<felem> entries;  // rows * cols, each < q

    FieldMatrix(PrimeModulus m, std::size_t r, std::size_t c)
        : mod(m), rows(r), cols(c), entries(r * c, 0) {}

    felem& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    felem at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

// Reduced row echelon form; returns the reduced matrix and pivot column
// indices. Row space is preserved.
std::pair<FieldMatrix, std::vector<std::size_t>> rref(const FieldMatrix& m);

std::size_t rank(const FieldMatrix& m);

// Basis of {x : m x^T = 0}, one basis vector per row. Row count equals
// cols - rank(m); zero rows when m has full column rank.
FieldMatrix nullspace_basis(const FieldMatrix& m);

}  // namespace qsc

#endif
