#pragma once

#include <string>
#include <vector>

#include "charvar/partitions.hpp"
#include "charvar/rational_fn.hpp"

namespace charvar {

// Hook polynomials. Univariate values live in the internal variable s with
// s^2 = q, which keeps every exponent integral; public q-valued results are
// obtained by halving even s-exponents.

inline const std::vector<std::string>& svar() {
    static const std::vector<std::string> v{"s"};
    return v;
}
inline const std::vector<std::string>& zwvars() {
    static const std::vector<std::string> v{"z", "w"};
    return v;
}
inline const std::vector<std::string>& qvar() {
    static const std::vector<std::string> v{"q"};
    return v;
}

// Hook polynomial prod (q^h - 1).
inline LaurentPoly hook_tilde(const Partition& lam) {
    LaurentPoly r = LaurentPoly::one(qvar());
    LaurentPoly one = LaurentPoly::one(qvar());
    for (const auto& b : lam.boxes()) r = r * (LaurentPoly::variable(qvar(), "q", b.hook()) - one);
    return r;
}

// Normalized hook polynomial s^{-<lambda,lambda>} prod (1 - s^{2h}).
inline LaurentPoly hook_norm(const Partition& lam) {
    LaurentPoly r = LaurentPoly::monomial(svar(), {static_cast<std::int32_t>(-lam.self_pairing())});
    LaurentPoly one = LaurentPoly::one(svar());
    for (const auto& b : lam.boxes()) r = r * (one - LaurentPoly::variable(svar(), "s", 2 * b.hook()));
    return r;
}

// hook_norm raised to an arbitrary integer power as a structured rational
// function; negative powers keep the hook factors in the denominator.
inline RationalFn hook_norm_pow(const Partition& lam, long e) {
    if (e >= 0) return RationalFn(hook_norm(lam).pow(e));
    long k = -e;
    LaurentPoly num =
        LaurentPoly::monomial(svar(), {static_cast<std::int32_t>(lam.self_pairing() * k)});
    std::vector<std::pair<LaurentPoly, long>> den;
    LaurentPoly one = LaurentPoly::one(svar());
    for (const auto& b : lam.boxes())
        den.emplace_back(one - LaurentPoly::variable(svar(), "s", 2 * b.hook()), k);
    return RationalFn::fraction(std::move(num), den);
}

// Two-variable hook function
//   prod over boxes (z^{2a+1} - w^{2l+1})^{2g} / ((z^{2a+2} - w^{2l})(z^{2a} - w^{2l+2}))
inline RationalFn hook_two(const Partition& lam, int g) {
    if (g < 0) throw UsageError("hook_two: g must be >= 0");
    LaurentPoly num = LaurentPoly::one(zwvars());
    std::vector<std::pair<LaurentPoly, long>> den;
    for (const auto& b : lam.boxes()) {
        LaurentPoly top = LaurentPoly::variable(zwvars(), "z", 2 * b.arm + 1) -
                          LaurentPoly::variable(zwvars(), "w", 2 * b.leg + 1);
        num = num * RationalFn::binomial_pow(top, 2 * g);
        den.emplace_back(LaurentPoly::variable(zwvars(), "z", 2 * b.arm + 2) -
                             LaurentPoly::variable(zwvars(), "w", 2 * b.leg),
                         1);
        den.emplace_back(LaurentPoly::variable(zwvars(), "z", 2 * b.arm) -
                             LaurentPoly::variable(zwvars(), "w", 2 * b.leg + 2),
                         1);
    }
    return RationalFn::fraction(std::move(num), den);
}

// Specialization at (0, sqrt(q)): q^{(g-1)<lambda,lambda>} / b_lambda(1/q).
inline RationalFn hook_pure(const Partition& lam, int g) {
    LaurentPoly num = LaurentPoly::monomial(
        qvar(), {static_cast<std::int32_t>((g - 1) * lam.self_pairing())});
    std::vector<std::pair<LaurentPoly, long>> den;
    LaurentPoly one = LaurentPoly::one(qvar());
    for (auto [value, m] : lam.multiplicities()) {
        (void)value;
        for (int j = 1; j <= m; ++j) den.emplace_back(one - LaurentPoly::variable(qvar(), "q", -j), 1);
    }
    return RationalFn::fraction(std::move(num), den);
}

}  // namespace charvar
