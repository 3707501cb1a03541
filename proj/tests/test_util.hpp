#ifndef QSC_TEST_UTIL_HPP
#define QSC_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "qsc/code_model.hpp"
#include "qsc/galois.hpp"

namespace qsc::testutil {

inline FieldMatrix make_matrix(unsigned q, std::size_t rows, std::size_t cols,
                               const std::vector<felem>& entries) {
    FieldMatrix m(PrimeModulus(q), rows, cols);
    m.entries = entries;
    return m;
}

// Random full-rank k x n generator over GF(q); retries until full rank.
inline GeneratorMatrix random_generator(std::mt19937& rng, unsigned q,
                                        std::size_t k, std::size_t n) {
    PrimeModulus F(q);
    std::uniform_int_distribution<unsigned> sym(0, q - 1);
    for (;;) {
        FieldMatrix g(F, k, n);
        for (auto& e : g.entries) e = sym(rng);
        if (rank(g) == k) return GeneratorMatrix(std::move(g));
    }
}

// The standard [7,4] Hamming code, G = [I | P].
inline GeneratorMatrix hamming74() {
    return GeneratorMatrix(make_matrix(2, 4, 7,
        {1,0,0,0, 1,1,0,
         0,1,0,0, 1,0,1,
         0,0,1,0, 0,1,1,
         0,0,0,1, 1,1,1}));
}

inline GeneratorMatrix repetition31() {
    return GeneratorMatrix(make_matrix(2, 1, 3, {1, 1, 1}));
}

// [10,1] code generated by e_1.
inline GeneratorMatrix e1_length10() {
    std::vector<felem> row(10, 0);
    row[0] = 1;
    return GeneratorMatrix(make_matrix(2, 1, 10, row));
}

}  // namespace qsc::testutil

#endif
