#include "qsc/galois.hpp"

#include <stdexcept>
#include <string>

namespace qsc {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (unsigned d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

PrimeModulus::PrimeModulus(unsigned q) : q_(q) {
    if (q < 2 || q > 65521 || !is_prime(q))
        throw std::domain_error("PrimeModulus: q = " + std::to_string(q) +
                                " is not a prime in [2, 65521]");
}

felem PrimeModulus::pow(felem a, unsigned long long e) const {
    std::uint64_t base = a % q_, r = 1;
    while (e) {
        if (e & 1) r = r * base % q_;
        base = base * base % q_;
        e >>= 1;
    }
    return static_cast<felem>(r);
}

felem PrimeModulus::inv(felem a) const {
    if (a % q_ == 0) throw std::domain_error("GF(q): inverse of zero");
    return pow(a, q_ - 2);
}

std::pair<FieldMatrix, std::vector<std::size_t>> rref(const FieldMatrix& m) {
    FieldMatrix r = m;
    const PrimeModulus& F = r.mod;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols && lead < r.rows; ++col) {
        std::size_t sel = lead;
        while (sel < r.rows && r.at(sel, col) == 0) ++sel;
        if (sel == r.rows) continue;
        if (sel != lead)
            for (std::size_t c = 0; c < r.cols; ++c)
                std::swap(r.at(sel, c), r.at(lead, c));
        felem piv_inv = F.inv(r.at(lead, col));
        for (std::size_t c = col; c < r.cols; ++c)
            r.at(lead, c) = F.mul(r.at(lead, c), piv_inv);
        for (std::size_t row = 0; row < r.rows; ++row) {
            if (row == lead) continue;
            felem factor = r.at(row, col);
            if (factor == 0) continue;
            for (std::size_t c = col; c < r.cols; ++c)
                r.at(row, c) = F.sub(r.at(row, c), F.mul(factor, r.at(lead, c)));
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(r), std::move(pivots)};
}

std::size_t rank(const FieldMatrix& m) { return rref(m).second.size(); }

FieldMatrix nullspace_basis(const FieldMatrix& m) {
    auto [r, pivots] = rref(m);
    const PrimeModulus& F = m.mod;
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    FieldMatrix basis(F, free_cols.size(), m.cols);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        std::size_t fc = free_cols[i];
        basis.at(i, fc) = 1;
        // pivot row j fixes coordinate pivots[j] = -r[j][fc]
        for (std::size_t j = 0; j < pivots.size(); ++j)
            basis.at(i, pivots[j]) = F.neg(r.at(j, fc));
    }
    return basis;
}

}  // namespace qsc
