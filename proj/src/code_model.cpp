#include "qsc/code_model.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace qsc {

GeneratorMatrix::GeneratorMatrix(FieldMatrix g) : g_(std::move(g)) {
    if (g_.rows > g_.cols)
        throw std::invalid_argument("GeneratorMatrix: k > n");
    if (rank(g_) != g_.rows)
        throw std::invalid_argument("GeneratorMatrix: rows are not linearly independent");
}

CodewordList::CodewordList(PrimeModulus q, std::size_t n,
                           std::vector<std::vector<felem>> words)
    : q_(q), n_(n), words_(std::move(words)) {
    if (n_ < 1) throw std::invalid_argument("CodewordList: n < 1");
    if (words_.size() < 2) throw std::invalid_argument("CodewordList: M < 2");
    for (const auto& w : words_) {
        if (w.size() != n_)
            throw std::invalid_argument("CodewordList: word length mismatch");
        for (felem s : w)
            if (s >= q_.q())
                throw std::invalid_argument("CodewordList: symbol out of range");
    }
    std::set<std::vector<felem>> uniq(words_.begin(), words_.end());
    if (uniq.size() != words_.size())
        throw std::invalid_argument("CodewordList: duplicate words");
}

void DistributionA::validate_common() const {
    if (counts.size() != n + 1)
        throw std::logic_error("DistributionA: counts size != n+1");
    if (!(counts[0] == Rational(1)))
        throw std::logic_error("DistributionA: A_0 != 1");
    for (const auto& c : counts)
        if (c.num < 0) throw std::logic_error("DistributionA: negative count");
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (r > cap / base + 1) return cap + 1;
        r *= base;
        if (r > cap) return cap + 1;
    }
    return r;
}

}  // namespace

DistributionA weight_distribution(const GeneratorMatrix& gen,
                                  const EnumerationCaps& caps) {
    const PrimeModulus& F = gen.field();
    const std::size_t k = gen.k(), n = gen.n();
    const std::uint64_t total = checked_pow(F.q(), k, caps.max_codewords);
    if (total > caps.max_codewords)
        throw resource_error("weight_distribution: q^k = " + std::to_string(F.q()) +
                             "^" + std::to_string(k) + " exceeds cap " +
                             std::to_string(caps.max_codewords));

    std::vector<std::int64_t> hist(n + 1, 0);
    std::vector<felem> msg(k, 0), word(n, 0);
    // Odometer over message vectors; the codeword is updated incrementally by
    // adding the changed row's delta, keeping the scan O(q^k * n).
    hist[0] = 1;  // msg = 0
    std::uint64_t produced = 1;
    while (produced < total) {
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            felem old = msg[pos];
            felem next = F.add(old, 1);
            msg[pos] = next;
            for (std::size_t c = 0; c < n; ++c)
                word[c] = F.add(word[c], gen.matrix().at(pos, c));
            if (next != 0) break;
            // carried: row contribution already wrapped to 0 times this row
        }
        std::size_t w = 0;
        for (std::size_t c = 0; c < n; ++c)
            if (word[c] != 0) ++w;
        ++hist[w];
        ++produced;
    }

    DistributionA a;
    a.n = n;
    a.counts.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) a.counts.emplace_back(hist[i]);
    a.validate_common();
    return a;
}

CodewordList enumerate_codewords(const GeneratorMatrix& gen,
                                 const EnumerationCaps& caps) {
    const PrimeModulus& F = gen.field();
    const std::size_t k = gen.k(), n = gen.n();
    const std::uint64_t total = checked_pow(F.q(), k, caps.max_codewords);
    if (total > caps.max_codewords)
        throw resource_error("enumerate_codewords: q^k exceeds cap");

    std::vector<std::vector<felem>> words;
    words.reserve(total);
    std::vector<felem> msg(k, 0), word(n, 0);
    words.push_back(word);
    for (std::uint64_t produced = 1; produced < total; ++produced) {
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            felem next = F.add(msg[pos], 1);
            msg[pos] = next;
            for (std::size_t c = 0; c < n; ++c)
                word[c] = F.add(word[c], gen.matrix().at(pos, c));
            if (next != 0) break;
        }
        words.push_back(word);
    }
    return CodewordList(F, n, std::move(words));
}

GeneratorMatrix dual_code(const GeneratorMatrix& gen) {
    return GeneratorMatrix(nullspace_basis(gen.matrix()));
}

DistributionA distance_distribution(const CodewordList& code,
                                    const EnumerationCaps& caps) {
    const std::size_t M = code.size(), n = code.n();
    if (std::uint64_t(M) * M > caps.max_pairs)
        throw resource_error("distance_distribution: M^2 = " +
                             std::to_string(std::uint64_t(M) * M) +
                             " ordered pairs exceeds cap " +
                             std::to_string(caps.max_pairs));

    std::vector<std::int64_t> pairs(n + 1, 0);
    pairs[0] = static_cast<std::int64_t>(M);  // words are distinct
    const auto& w = code.words();
    for (std::size_t i = 0; i < M; ++i)
        for (std::size_t j = i + 1; j < M; ++j) {
            std::size_t dist = 0;
            for (std::size_t c = 0; c < n; ++c)
                if (w[i][c] != w[j][c]) ++dist;
            pairs[dist] += 2;  // ordered pairs
        }

    DistributionA a;
    a.n = n;
    a.counts.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        a.counts.emplace_back(pairs[i], static_cast<std::int64_t>(M));
    a.validate_common();
    return a;
}

std::size_t min_distance(const DistributionA& a) {
    for (std::size_t i = 1; i <= a.n; ++i)
        if (a.counts[i].is_positive()) return i;
    throw std::domain_error("min_distance: no nonzero A_i for i >= 1");
}

}  // namespace qsc
