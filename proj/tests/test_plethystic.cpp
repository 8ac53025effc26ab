#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "charvar/partitions.hpp"
#include "charvar/plethystic.hpp"

using namespace charvar;

namespace {

const std::vector<std::string> Q{"q"};

LaurentPoly q(int k = 1) { return LaurentPoly::variable(Q, "q", k); }

TruncSeries<LaurentPoly> zero_series(int n) { return TruncSeries<LaurentPoly>(n, LaurentPoly::zero(Q)); }

LaurentPoly random_poly(std::mt19937& rng, int max_terms = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expo(-3, 3);
    std::uniform_int_distribution<int> num(-5, 5);
    LaurentPoly p = LaurentPoly::zero(Q);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) p = p + LaurentPoly::monomial(Q, {expo(rng)}, num(rng));
    return p;
}

TruncSeries<LaurentPoly> random_v(std::mt19937& rng, int order) {
    auto v = zero_series(order);
    for (int i = 1; i <= order; ++i) v.at(i) = random_poly(rng);
    return v;
}

}  // namespace

TEST_CASE("Exp of T/(1-q) is the infinite product, to order 4") {
    // V = T/(1-q) expanded in Z[[q]] up to q^40 is enough for the T^4 slice
    // of the identity Exp(T/(1-q)) = prod_{n>=0} (1-q^n T)^{-1}.
    const int N = 4, QMAX = 40;
    auto v = zero_series(N);
    for (int k = 0; k <= QMAX; ++k) v.at(1) = v.at(1) + q(k);
    auto lhs = exp_pleth(v);

    // independent oracle: multiply the factors (1-q^n T)^{-1} = sum_k q^{nk} T^k
    auto rhs = TruncSeries<LaurentPoly>::one(N, LaurentPoly::zero(Q));
    for (int n = 0; n <= QMAX; ++n) {
        auto factor = zero_series(N);
        for (int k = 0; k <= N; ++k) factor.at(k) = q(n * k);
        rhs = rhs * factor;
    }
    for (int n = 0; n <= N; ++n) {
        // compare only up to q^QMAX-truncation-safe degree: coefficients of
        // T^n have q-degree <= QMAX - n here, amply inside the safe window.
        LaurentPoly diff = lhs.at(n) - rhs.at(n);
        for (const auto& t : diff.terms()) CHECK(t.e[0] > QMAX - N);
    }
}

TEST_CASE("Exp(0) = 1 and Exp(sum T^n) counts partitions") {
    const int N = 9;
    CHECK(exp_pleth(zero_series(N)) == TruncSeries<LaurentPoly>::one(N, LaurentPoly::zero(Q)));

    auto v = zero_series(N);
    for (int n = 1; n <= N; ++n) v.at(n) = LaurentPoly::one(Q);
    auto f = exp_pleth(v);
    for (int n = 0; n <= N; ++n) {
        auto pn = enumerate_partitions(n).size();
        CHECK(f.at(n) == LaurentPoly::constant(Q, static_cast<long>(pn)));
    }
}

TEST_CASE("Exp(x^m T^n) = (1 - x^m T^n)^{-1}") {
    const int N = 8;
    for (int m : {-2, 1, 3}) {
        for (int n : {1, 2, 3}) {
            auto v = zero_series(N);
            v.at(n) = q(m);
            auto f = exp_pleth(v);
            for (int k = 0; k <= N; ++k) {
                LaurentPoly expected = (k % n == 0) ? q(m * (k / n)) : LaurentPoly::zero(Q);
                CHECK(f.at(k) == expected);
            }
        }
    }
}

TEST_CASE("Log inverts Exp") {
    std::mt19937 rng(314159);
    for (int trial = 0; trial < 30; ++trial) {
        int order = 1 + static_cast<int>(rng() % 8);
        auto v = random_v(rng, order);
        CHECK(log_pleth(exp_pleth(v)) == v);
    }
    SECTION("Exp after Log") {
        std::mt19937 rng2(2718);
        for (int trial = 0; trial < 20; ++trial) {
            int order = 1 + static_cast<int>(rng2() % 6);
            auto f = random_v(rng2, order);
            f.at(0) = LaurentPoly::one(Q);
            CHECK(exp_pleth(log_pleth(f)) == f);
        }
    }
}

TEST_CASE("Exp is additive-to-multiplicative") {
    std::mt19937 rng(5551);
    for (int trial = 0; trial < 20; ++trial) {
        int order = 1 + static_cast<int>(rng() % 6);
        auto v = random_v(rng, order);
        auto w = random_v(rng, order);
        CHECK(exp_pleth(v + w) == exp_pleth(v) * exp_pleth(w));
    }
}

TEST_CASE("Log of the partition-count series is sum T^n") {
    const int N = 8;
    auto f = zero_series(N);
    for (int n = 0; n <= N; ++n)
        f.at(n) = LaurentPoly::constant(Q, static_cast<long>(enumerate_partitions(n).size()));
    auto v = log_pleth(f);
    for (int n = 1; n <= N; ++n) CHECK(v.at(n) == LaurentPoly::one(Q));
}

TEST_CASE("Log(1/(1-T)) = T") {
    // 1/(1-T) = sum T^n; Moebius inversion of U_n = 1 leaves only V_1 = 1.
    const int N = 4;
    auto f = zero_series(N);
    for (int n = 0; n <= N; ++n) f.at(n) = LaurentPoly::one(Q);
    auto v = log_pleth(f);
    CHECK(v.at(1) == LaurentPoly::one(Q));
    for (int n = 2; n <= N; ++n) CHECK(v.at(n).is_zero());
}

TEST_CASE("log_raw") {
    SECTION("U_n of Exp(xT) is x^n") {
        const int N = 3;
        auto v = zero_series(N);
        v.at(1) = q();
        auto u = log_raw(exp_pleth(v));
        for (int n = 1; n <= N; ++n) CHECK(u[static_cast<std::size_t>(n)] == q(n));
    }
    SECTION("log_raw(1) vanishes") {
        auto u = log_raw(TruncSeries<LaurentPoly>::one(5, LaurentPoly::zero(Q)));
        for (int n = 1; n <= 5; ++n) CHECK(u[static_cast<std::size_t>(n)].is_zero());
    }
    SECTION("usage errors on bad constant terms") {
        auto f = zero_series(3);
        CHECK_THROWS_AS(log_raw(f), UsageError);
        auto v = zero_series(3);
        v.at(0) = LaurentPoly::one(Q);
        CHECK_THROWS_AS(exp_pleth(v), UsageError);
    }
}
