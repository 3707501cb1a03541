#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "qsc/mu_threshold.hpp"

using namespace qsc;

TEST_CASE("f and g point values") {
    CHECK(f_eval(2, 0.25) ==
          doctest::Approx(std::log(0.5) / std::log(0.75)).epsilon(1e-15));
    CHECK(f_eval(2, 0.25) == doctest::Approx(2.4094208).epsilon(1e-7));
    CHECK(g_eval(2, 0.5) == doctest::Approx(1.4426950).epsilon(1e-7));
    // f -> Q as p -> 0+
    CHECK(std::abs(f_eval(2, 1e-8) - 2.0) <= 1e-6);
    CHECK(std::abs(f_eval(3, 1e-8) - 1.5) <= 1e-6);
}

TEST_CASE("f and g reject endpoints") {
    CHECK_THROWS_AS(f_eval(2, 0.0), std::domain_error);
    CHECK_THROWS_AS(f_eval(2, 0.5), std::domain_error);
    CHECK_THROWS_AS(g_eval(2, 0.0), std::domain_error);
    ThresholdProblem trivial(2, 1, 1);
    CHECK_THROWS_AS(h_eval(trivial, 0.5), std::domain_error);
}

TEST_CASE("kappa for linear and non-linear problems") {
    CHECK(ThresholdProblem(2, 5, 3, true).kappa() ==
          doctest::Approx(3 * std::log(2.0)).epsilon(1e-15));
    CHECK(ThresholdProblem(3, 5, 3, true).kappa() ==
          doctest::Approx(3 * std::log(3.0) - std::log(2.0)).epsilon(1e-15));
    CHECK(ThresholdProblem(3, 5, 3, false).kappa() ==
          doctest::Approx(6 * std::log(3.0)).epsilon(1e-15));
}

TEST_CASE("h at the worked minimizers") {
    ThresholdProblem ex1(2, 1000, 2, true);
    CHECK(h_eval(ex1, 0.0352540) == doctest::Approx(2075.8565).epsilon(1e-6));
    ThresholdProblem ex2(2, 2, 1000, true);
    CHECK(h_eval(ex2, 0.4990185) == doctest::Approx(1020.8737).epsilon(1e-6));
    // h = d f + kappa g equals the quotient form
    for (double p : {0.01, 0.1, 0.3, 0.49}) {
        const double direct = 1000 * f_eval(2, p) + ex1.kappa() * g_eval(2, p);
        CHECK(h_eval(ex1, p) == doctest::Approx(direct).epsilon(1e-13));
    }
}

TEST_CASE("h' sign structure and finite-difference agreement") {
    ThresholdProblem ex1(2, 1000, 2, true);
    CHECK(std::abs(h_prime(ex1, 0.0352540)) <= 1.0);  // printed p has 7 digits
    CHECK(h_prime(ex1, 1e-4) < 0);
    CHECK(h_prime(ex1, 0.49) > 0);

    std::mt19937 rng(13);
    for (int t = 0; t < 200; ++t) {
        unsigned q = std::vector<unsigned>{2, 3, 4 + 1, 17}[rng() % 4];  // primes only
        ThresholdProblem prob(q, 1 + rng() % 100, 1 + double(rng() % 100),
                              (rng() & 1) != 0);
        const double pmax = prob.p_max();
        std::uniform_real_distribution<double> dist(0.02 * pmax, 0.98 * pmax);
        const double p = dist(rng);
        const double step = 1e-6 * p;
        const double fd =
            (h_eval(prob, p + step) - h_eval(prob, p - step)) / (2 * step);
        const double hp = h_prime(prob, p);
        CHECK(std::abs(fd - hp) <= 1e-5 * std::max(1.0, std::abs(hp)));
    }
}

TEST_CASE("minimize_h reproduces the worked examples") {
    auto r1 = minimize_h(ThresholdProblem(2, 1000, 2, true));
    CHECK(std::abs(r1.p_m - 0.0352540) <= 1e-6);
    CHECK(std::abs(r1.mu - 2075.8565430) <= 1e-5);

    auto r2 = minimize_h(ThresholdProblem(2, 2, 1000, true));
    CHECK(std::abs(r2.p_m - 0.4990185) <= 1e-6);
    CHECK(std::abs(r2.mu - 1020.8737393) <= 1e-5);

    auto n1 = minimize_h(ThresholdProblem(2, 1000, 2, false));
    CHECK(std::abs(n1.mu - 2108.10) <= 0.01);
    auto n2 = minimize_h(ThresholdProblem(2, 2, 1000, false));
    CHECK(std::abs(n2.mu - 2022.85) <= 0.01);
}

TEST_CASE("beyond_threshold around the Example values") {
    ThresholdProblem ex1(2, 1000, 2, true);
    CHECK(beyond_threshold(ex1, 2076));
    CHECK_FALSE(beyond_threshold(ex1, 2075));
    ThresholdProblem ex2(2, 2, 1000, true);
    CHECK(beyond_threshold(ex2, 1021));
}

TEST_CASE("midpoint convexity of h") {
    std::mt19937 rng(29);
    std::vector<ThresholdProblem> probs = {
        ThresholdProblem(2, 1000, 2, true), ThresholdProblem(2, 2, 1000, true)};
    for (int i = 0; i < 20; ++i) {
        unsigned q = std::vector<unsigned>{2, 3, 5, 17}[rng() % 4];
        probs.emplace_back(q, 1 + rng() % 10000, 1 + double(rng() % 10000),
                           (rng() & 1) != 0);
    }
    int pairs = 0;
    while (pairs < 1000) {
        const auto& prob = probs[rng() % probs.size()];
        const double pmax = prob.p_max();
        std::uniform_real_distribution<double> dist(1e-4 * pmax, (1 - 1e-4) * pmax);
        double p1 = dist(rng), p2 = dist(rng);
        if (p1 == p2) continue;
        if (p1 > p2) std::swap(p1, p2);
        const double mid = h_eval(prob, (p1 + p2) / 2);
        const double chord = (h_eval(prob, p1) + h_eval(prob, p2)) / 2;
        CHECK(mid <= chord + 1e-9 * std::abs(chord));
        ++pairs;
    }
}

TEST_CASE("f increasing, g decreasing on a fine grid") {
    for (unsigned q : {2u, 3u, 7u}) {
        const double pmax = double(q - 1) / q;
        double prev_f = -1e300, prev_g = 1e300;
        for (int i = 1; i < 1000; ++i) {
            const double p = pmax * i / 1000.0;
            const double fv = f_eval(q, p), gv = g_eval(q, p);
            CHECK(fv > prev_f);
            CHECK(gv < prev_g);
            prev_f = fv;
            prev_g = gv;
        }
    }
}

TEST_CASE("global minimality over a uniform grid") {
    auto r = minimize_h(ThresholdProblem(2, 1000, 2, true));
    ThresholdProblem prob(2, 1000, 2, true);
    for (int i = 1; i < 10000; ++i) {
        const double p = 0.5 * i / 10000.0;
        CHECK(r.mu <= h_eval(prob, p) + 1e-9 * r.mu);
    }
}

TEST_CASE("minimize_h agrees with a brute-force scan") {
    std::mt19937 rng(37);
    for (int t = 0; t < 10; ++t) {
        unsigned q = std::vector<unsigned>{2, 3, 5}[rng() % 3];
        ThresholdProblem prob(q, 1 + rng() % 50, 1 + double(rng() % 50),
                              (rng() & 1) != 0);
        auto r = minimize_h(prob);
        const double pmax = prob.p_max();
        double best_p = 0, best = 1e300;
        const int N = 1000000;
        for (int i = 1; i < N; ++i) {
            const double p = pmax * i / N;
            const double v = h_eval(prob, p);
            if (v < best) { best = v; best_p = p; }
        }
        CHECK(std::abs(r.p_m - best_p) <= 1e-6 * std::max(1.0, pmax));
        CHECK(std::abs(r.mu - best) <= 1e-5 * std::max(1.0, best));
    }
}
