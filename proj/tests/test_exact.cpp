#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "charvar/laurent.hpp"
#include "charvar/rational_fn.hpp"

using namespace charvar;

namespace {

const std::vector<std::string> Q{"q"};
const std::vector<std::string> ZW{"z", "w"};

LaurentPoly q() { return LaurentPoly::variable(Q, "q"); }
LaurentPoly z() { return LaurentPoly::variable(ZW, "z"); }
LaurentPoly w() { return LaurentPoly::variable(ZW, "w"); }

LaurentPoly random_poly(std::mt19937& rng, const std::vector<std::string>& vars, int max_terms = 5,
                        bool allow_zero = true) {
    std::uniform_int_distribution<int> nterms(allow_zero ? 0 : 1, max_terms);
    std::uniform_int_distribution<int> expo(-4, 4);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    LaurentPoly p = LaurentPoly::zero(vars);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        Exponents e;
        for (std::size_t j = 0; j < vars.size(); ++j) e.push_back(expo(rng));
        p = p + LaurentPoly::monomial(vars, e, BigRational(num(rng), den(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("ring operations on Laurent polynomials") {
    LaurentPoly one = LaurentPoly::one(Q);

    SECTION("difference of squares") {
        CHECK((one - q()) * (one + q()) == one - q().pow(2));
    }
    SECTION("binomial square in two variables") {
        LaurentPoly lhs = (z() - w()).pow(2);
        LaurentPoly rhs = z().pow(2) - (z() * w()).scale(2) + w().pow(2);
        CHECK(lhs == rhs);
    }
    SECTION("zeroth power is one") {
        CHECK((q() - one).pow(0) == one);
        CHECK(LaurentPoly::monomial(Q, {-3}, BigRational(7, 2)).pow(0) == one);
    }
    SECTION("variable list mismatch is a usage error") {
        CHECK_THROWS_AS(q() + z().substitute_zero("w"), UsageError);
    }
}

TEST_CASE("ring axioms on randomized inputs") {
    std::mt19937 rng(20081201);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly a = random_poly(rng, ZW);
        LaurentPoly b = random_poly(rng, ZW);
        LaurentPoly c = random_poly(rng, ZW);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == LaurentPoly::zero(ZW));
    }
}

TEST_CASE("substitute_monomial") {
    SECTION("z -> s, w -> 1/s sends (z-w)^2 to s^2 - 2 + s^-2") {
        std::vector<std::string> S{"s"};
        LaurentPoly p = (z() - w()).pow(2);
        LaurentPoly in_s = p.substitute(S, {{1, {1}}, {1, {-1}}});
        LaurentPoly expected = LaurentPoly::monomial(S, {2}) - LaurentPoly::constant(S, 2) +
                               LaurentPoly::monomial(S, {-2});
        CHECK(in_s == expected);
    }
    SECTION("w -> 0 in (z-w)^2g") {
        for (int g : {0, 1, 2, 3}) {
            LaurentPoly p = (z() - w()).pow(2 * g).substitute_zero("w");
            CHECK(p == z().pow(2 * g));
        }
    }
    SECTION("q -> 1/q fixes palindromic q + 1/q") {
        LaurentPoly p = q() + LaurentPoly::monomial(Q, {-1});
        CHECK(p.substitute_var("q", Q, {1, {-1}}) == p);
    }
    SECTION("odd exponents cannot be halved") {
        CHECK_THROWS_AS(q().halve_exponents("q", "q"), UsageError);
        CHECK(q().pow(2).halve_exponents("q", "p") == LaurentPoly::variable({"p"}, "p"));
    }
}

TEST_CASE("adams operations") {
    LaurentPoly p = q() + LaurentPoly::monomial(Q, {-1});
    CHECK(p.adams(2) == q().pow(2) + LaurentPoly::monomial(Q, {-2}));
    CHECK(p.adams(1) == p);
    LaurentPoly zw = LaurentPoly::monomial(ZW, {1, -1});
    CHECK(zw.adams(3) == LaurentPoly::monomial(ZW, {3, -3}));

    std::mt19937 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        LaurentPoly a = random_poly(rng, ZW);
        LaurentPoly b = random_poly(rng, ZW);
        CHECK((a * b).adams(2) == a.adams(2) * b.adams(2));
        CHECK(a.adams(2).adams(3) == a.adams(6));
    }
}

TEST_CASE("exact division") {
    LaurentPoly one = LaurentPoly::one(Q);
    SECTION("(1-q^2)/(1-q) = 1+q") {
        auto r = LaurentPoly::exact_divide(one - q().pow(2), one - q());
        REQUIRE(r.has_value());
        CHECK(*r == one + q());
    }
    SECTION("(1-q^2)/(1-q^3) is not divisible") {
        CHECK_FALSE(LaurentPoly::exact_divide(one - q().pow(2), one - q().pow(3)).has_value());
    }
    SECTION("zero divisor is a usage error") {
        CHECK_THROWS_AS(LaurentPoly::exact_divide(q(), LaurentPoly::zero(Q)), UsageError);
    }
    SECTION("round-trip law on randomized operands") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 100; ++trial) {
            LaurentPoly a = random_poly(rng, ZW, 4, false);
            LaurentPoly b = random_poly(rng, ZW, 4, false);
            if (a.is_zero() || b.is_zero()) continue;
            auto r = LaurentPoly::exact_divide(a * b, b);
            REQUIRE(r.has_value());
            CHECK(*r == a);
        }
    }
}

TEST_CASE("canonicalization is idempotent") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        LaurentPoly a = random_poly(rng, ZW);
        std::vector<LaurentPoly::Term> t(a.terms().begin(), a.terms().end());
        CHECK(LaurentPoly::from_terms(a.vars(), std::move(t)) == a);
    }
}

TEST_CASE("rational functions with structured denominators") {
    LaurentPoly one = LaurentPoly::one(ZW);

    SECTION("equality by cross-multiplication") {
        // (z^2-w^2)/(z-w) == z+w
        RationalFn f = RationalFn::fraction(z().pow(2) - w().pow(2), {{z() - w(), 1}});
        CHECK(f == RationalFn(z() + w()));
        CHECK_FALSE(f == RationalFn(z() - w()));
    }
    SECTION("unit factors fold into the numerator") {
        // 1/(1-w^2) == -w^-2 / (1 - w^-2)
        RationalFn a = RationalFn::fraction(one, {{one - w().pow(2), 1}});
        RationalFn b = RationalFn::fraction(-LaurentPoly::monomial(ZW, {0, -2}),
                                            {{one - LaurentPoly::monomial(ZW, {0, -2}), 1}});
        CHECK(a == b);
    }
    SECTION("sum over a common denominator") {
        RationalFn a = RationalFn::fraction(one, {{z() - w(), 1}});
        RationalFn b = RationalFn::fraction(one, {{z() + w(), 1}});
        RationalFn s = a + b;
        CHECK(s == RationalFn::fraction(z().scale(2), {{z() - w(), 1}, {z() + w(), 1}}));
    }
    SECTION("as_polynomial certifies exact quotients") {
        RationalFn f = RationalFn::fraction((one - z().pow(4)) * (one - w().pow(2)),
                                            {{one - z().pow(2), 1}, {one - w(), 1}});
        auto p = f.as_polynomial();
        REQUIRE(p.has_value());
        CHECK(*p == (one + z().pow(2)) * (one + w()));
        RationalFn g = RationalFn::fraction(one - z().pow(3), {{one - z().pow(2), 1}});
        CHECK_FALSE(g.as_polynomial().has_value());
    }
    SECTION("field axioms on randomized fractions") {
        std::mt19937 rng(123);
        for (int trial = 0; trial < 40; ++trial) {
            LaurentPoly na = random_poly(rng, ZW, 3);
            LaurentPoly nb = random_poly(rng, ZW, 3);
            RationalFn a = RationalFn::fraction(na, {{z() - w(), 1}});
            RationalFn b = RationalFn::fraction(nb, {{z().pow(2) - one, 1}});
            RationalFn c = RationalFn(random_poly(rng, ZW, 3));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a - a).is_zero());
        }
    }
}
