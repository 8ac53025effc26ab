#pragma once

#include <map>
#include <string>
#include <vector>

#include "charvar/charpoly.hpp"
#include "charvar/rational_fn.hpp"

namespace charvar {

// The cohomology ring route to H(M_2; q,t): monomial bases of
// Q[alpha,beta,gamma]/I^{g-k}_k, normal-form reduction against the explicit
// relations, and exact-rank Lefschetz checks.
//
// Generators carry cohomological degree (alpha,beta,gamma) = (2,4,6) and
// homogeneous weight (2,2,4); a basis monomial therefore contributes
// q^{2r+2s+4t} t^{2r+4s+6t} to the mixed Hodge polynomial.

inline const std::vector<std::string>& abgvars() {
    static const std::vector<std::string> v{"al", "be", "ga"};
    return v;
}
inline const std::vector<std::string>& abcvars() {
    static const std::vector<std::string> v{"a", "b", "c"};
    return v;
}

struct SgkTriple {
    int r = 0, s = 0, t = 0;
};

// S^{g'}_k: 0 <= t <= g' and (r+3s+3t <= 3g'-3+k or r+2s+2t < 2g'-2+k).
inline bool skg_member(int gp, int k, int r, int s, int t) {
    if (r < 0 || s < 0 || t < 0 || t > gp) return false;
    return (r + 3 * s + 3 * t <= 3 * gp - 3 + k) || (r + 2 * s + 2 * t < 2 * gp - 2 + k);
}

inline std::vector<SgkTriple> skg_enumerate(int gp, int k) {
    if (gp < 0 || k < 0) throw UsageError("skg_enumerate: g', k >= 0 required");
    std::vector<SgkTriple> out;
    const int bound = std::max(3 * gp - 3 + k, 2 * gp - 2 + k);
    for (int r = 0; r <= bound; ++r)
        for (int s = 0; 2 * s <= std::max(bound, 0); ++s)
            for (int t = 0; t <= gp; ++t)
                if (skg_member(gp, k, r, s, t)) out.push_back({r, s, t});
    return out;
}

// Generating sum of S^{g'}_k, as a polynomial in the given three variables
// raised to monomial images per triple coordinate.
inline LaurentPoly skg_generating_sum(int gp, int k) {
    LaurentPoly sum = LaurentPoly::zero(abcvars());
    for (const auto& m : skg_enumerate(gp, k))
        sum = sum + LaurentPoly::monomial(abcvars(), {m.r, m.s, m.t});
    return sum;
}

// Closed form of the generating sum (five structured terms).
inline RationalFn skg_closed_form(int gp, int k) {
    const int g = gp;
    LaurentPoly one = LaurentPoly::one(abcvars());
    auto mono = [&](int ea, int eb, int ec) { return LaurentPoly::monomial(abcvars(), {ea, eb, ec}); };
    auto var = [&](const char* n, int e) { return LaurentPoly::variable(abcvars(), n, e); };

    RationalFn t1 = RationalFn::fraction(one - var("c", g + 1),
                                         {{one - var("a", 1), 1}, {one - var("b", 1), 1}, {one - var("c", 1), 1}});
    RationalFn t2 = RationalFn::fraction(
        mono(k - 2, g, 0) * (one - mono(0, -(g + 1), g + 1)),
        {{one - var("a", 1), 1}, {one - mono(0, -1, 1), 1}, {one - mono(-2, 1, 0), 1}});
    RationalFn t3 = RationalFn::fraction(
        (mono(0, g + (k + 1) / 2 - 1, 0) + mono(1, g + k / 2 - 1, 0)) * (one - mono(0, -(g + 1), g + 1)),
        {{one - var("b", 1), 1}, {one - mono(0, -1, 1), 1}, {one - mono(2, -1, 0), 1}});
    RationalFn t4 = RationalFn::fraction(
        mono(3 * g + k - 2, 0, 0) * (one - mono(-3 * g, 0, g)),
        {{one - var("a", 1), 1}, {one - mono(-3, 0, 1), 1}, {one - mono(-3, 1, 0), 1}});
    RationalFn t5 = RationalFn::fraction(
        mono(k - 2, g, 0) * (one - mono(0, -g, g)),
        {{one - var("a", 1), 1}, {one - mono(0, -1, 1), 1}, {one - mono(-3, 1, 0), 1}});
    return RationalFn::sum({t1, -t2, -t3, -t4, t5});
}

// Generating sum under a = q^2 t^2, b = q^2 t^4, c = q^4 t^6.
inline LaurentPoly skg_weighted_sum(int gp, int k) {
    LaurentPoly sum = LaurentPoly::zero(qtvars());
    for (const auto& m : skg_enumerate(gp, k))
        sum = sum + LaurentPoly::monomial(
                        qtvars(), {static_cast<std::int32_t>(2 * m.r + 2 * m.s + 4 * m.t),
                                   static_cast<std::int32_t>(2 * m.r + 4 * m.s + 6 * m.t)});
    return sum;
}

// Closed form of the weighted sum (four structured terms).
inline RationalFn klemma_closed_form(int gp, int k) {
    const int g = gp;
    LaurentPoly one = LaurentPoly::one(qtvars());
    auto mono = [&](int eq, int et) { return LaurentPoly::monomial(qtvars(), {eq, et}); };

    RationalFn t1 = RationalFn::fraction(
        mono(2 * g - 2, 4 * g - 4 - 2 * k) * (one - mono(4 * g - 4 * k + 4, 2 * g - 2 * k + 2)),
        {{one - mono(4, 2), 1}, {mono(2, 0) - one, 1}, {mono(2, 2) - one, 1}});
    RationalFn t2 = RationalFn::fraction(
        one - mono(4 * g - 4 * k + 4, 6 * g - 6 * k + 6),
        {{one - mono(4, 6), 1}, {mono(2, 2) - one, 1}, {mono(2, 4) - one, 1}});
    RationalFn t3 = RationalFn::fraction(
        mono(2 * g - 2 - k, 4 * g - 4 - 2 * k) * (one - mono(2 * g - 2 * k + 2, 2 * g - 2 * k + 2)),
        {{one - mono(2, 2), 1}, {mono(1, 0) - one, 1}, {mono(1, 2) - one, 1}});
    RationalFn t4 = RationalFn::fraction(
        mono(2 * g - 2 - k, 4 * g - 4 - 2 * k) * (one - mono(2 * g - 2 * k + 2, 2 * g - 2 * k + 2)),
        {{one - mono(2, 2), 1}, {mono(1, 0) + one, 1}, {mono(1, 2) + one, 1}});
    int sign4 = (k % 2 == 0) ? 1 : -1;  // (-q)^{2g-2-k}
    return RationalFn::sum({t1, t2, t3.scale(BigRational(-1, 2)), t4.scale(BigRational(-sign4, 2))});
}

// dim of the primitive part of the k-th exterior power: C(2g,k) - C(2g,k-2).
inline BigInt primitive_dim(int g, int k) { return binomial(2 * g, k) - binomial(2 * g, k - 2); }

// H(M_tilde_2; q,t) assembled from the monomial basis:
//   sum_k dim(Lambda^k_0) (q^2 t^3)^k sum_{S^{g-k}_k} (q^2t^2)^r (q^2t^4)^s (q^4t^6)^t.
inline LaurentPoly mhp_m2_ring_tilde(int g) {
    if (g < 1) throw UsageError("mhp_m2_ring: g >= 1 required");
    LaurentPoly sum = LaurentPoly::zero(qtvars());
    for (int k = 0; k <= g; ++k) {
        LaurentPoly part = skg_weighted_sum(g - k, k);
        part = part.shifted({static_cast<std::int32_t>(2 * k), static_cast<std::int32_t>(3 * k)},
                            BigRational(primitive_dim(g, k)));
        sum = sum + part;
    }
    return sum;
}

inline LaurentPoly mhp_m2_ring(int g) {
    LaurentPoly torus = LaurentPoly::one(qtvars()) + LaurentPoly::monomial(qtvars(), {1, 1});
    return mhp_m2_ring_tilde(g) * torus.pow(2 * g);
}

// The closed-form mixed Hodge polynomial of M_tilde_2 (four structured terms,
// certified polynomial).
inline LaurentPoly mhp2_closed_tilde(int g) {
    if (g < 1) throw UsageError("mhp2_closed: g >= 1 required");
    LaurentPoly one = LaurentPoly::one(qtvars());
    auto mono = [&](int eq, int et) { return LaurentPoly::monomial(qtvars(), {eq, et}); };

    RationalFn t1 = RationalFn::fraction(RationalFn::binomial_pow(mono(2, 3) + one, 2 * g),
                                         {{mono(2, 2) - one, 1}, {mono(2, 4) - one, 1}});
    RationalFn t2 = RationalFn::fraction(
        mono(2 * g - 2, 4 * g - 4) * RationalFn::binomial_pow(mono(2, 1) + one, 2 * g),
        {{mono(2, 0) - one, 1}, {mono(2, 2) - one, 1}});
    RationalFn t3 = RationalFn::fraction(
        mono(2 * g - 2, 4 * g - 4) * RationalFn::binomial_pow(mono(1, 1) + one, 2 * g),
        {{mono(1, 2) - one, 1}, {mono(1, 0) - one, 1}});
    RationalFn t4 = RationalFn::fraction(
        mono(2 * g - 2, 4 * g - 4) * RationalFn::binomial_pow(mono(1, 1) - one, 2 * g),
        {{mono(1, 0) + one, 1}, {mono(1, 2) + one, 1}});
    RationalFn h = RationalFn::sum({t1, t2, t3.scale(BigRational(-1, 2)), t4.scale(BigRational(-1, 2))});
    auto p = h.as_polynomial();
    if (!p) throw ConsistencyError("mhp2_closed: the four-term sum is not a polynomial");
    return *p;
}

inline LaurentPoly mhp2_closed(int g) {
    LaurentPoly torus = LaurentPoly::one(qtvars()) + LaurentPoly::monomial(qtvars(), {1, 1});
    return mhp2_closed_tilde(g) * torus.pow(2 * g);
}

// ---------------------------------------------------------------------------
// The ideal I^g_n and normal forms.

// Admissibility of (r,s,t) for the relation rho^{n,g}_{r,s,t}:
//   t <= g, r+3s+3t > 3g-3+n, r+2s+2t >= 2g-2+n.
inline bool rho_admissible(int n, int g, int r, int s, int t) {
    if (r < 0 || s < 0 || t < 0 || t > g) return false;
    return (r + 3 * s + 3 * t > 3 * g - 3 + n) && (r + 2 * s + 2 * t >= 2 * g - 2 + n);
}

// rho^{n,g}_{r,s,t} = sum_{i=0}^{min(r,s,g-t)} (c-i)! al^{r-i}/(r-i)! be^{s-i}/(s-i)! (2 ga)^{t+i}/i!
// with c = r+3s+2t-2g+2-n.
inline LaurentPoly rho_relation(int n, int g, int r, int s, int t) {
    if (!rho_admissible(n, g, r, s, t))
        throw UsageError("rho_relation: (r,s,t) does not satisfy the admissibility inequalities");
    const long c = r + 3L * s + 2L * t - 2L * g + 2 - n;
    const int imax = std::min({r, s, g - t});
    LaurentPoly sum = LaurentPoly::zero(abgvars());
    for (int i = 0; i <= imax; ++i) {
        BigRational coeff = BigRational(factorial(c - i)) / BigRational(factorial(r - i)) /
                            BigRational(factorial(s - i)) / BigRational(factorial(i));
        coeff *= rational_pow(2, t + i);
        sum = sum + LaurentPoly::monomial(abgvars(), {r - i, s - i, t + i}, coeff);
    }
    return sum;
}

// Monomial basis of Q[al,be,ga]/I^g_n: t <= g and NOT rho-admissible, i.e.
// exactly the S^g_n condition.
inline bool is_basis_monomial(int n, int g, int r, int s, int t) { return skg_member(g, n, r, s, t); }

// Normal form modulo I^g_n with respect to the lexicographic order al > be > ga:
// monomials with ga-exponent > g vanish, rho-leading monomials are reduced.
inline LaurentPoly normal_form(const LaurentPoly& x, int g, int n) {
    if (x.vars() != abgvars()) throw UsageError("normal_form expects a value over (al,be,ga)");
    std::map<Exponents, BigRational, decltype(&lex_less)> pending(&lex_less);
    for (const auto& term : x.terms()) pending.emplace(term.e, term.c);
    std::vector<LaurentPoly::Term> reduced;
    long guard = 0;
    const long guard_limit = 20'000'000;
    while (!pending.empty()) {
        if (++guard > guard_limit) throw ConsistencyError("normal_form: reduction guard exceeded");
        auto lead = std::prev(pending.end());
        Exponents e = lead->first;
        BigRational c = lead->second;
        pending.erase(lead);
        if (c == 0) continue;
        int r = e[0], s = e[1], t = e[2];
        if (r < 0 || s < 0 || t < 0) throw UsageError("normal_form: negative exponent");
        if (t > g) continue;  // divisible by ga^{g+1}, hence in the ideal
        if (rho_admissible(n, g, r, s, t)) {
            LaurentPoly rho = rho_relation(n, g, r, s, t);
            const auto& lead_term = rho.terms().back();  // lex-max = (r,s,t)
            BigRational factor = c / lead_term.c;
            for (const auto& term : rho.terms()) {
                auto [it, inserted] = pending.try_emplace(term.e, 0);
                it->second -= factor * term.c;
                if (it->second == 0) pending.erase(it);
            }
        } else {
            reduced.push_back({e, c});
        }
    }
    return LaurentPoly::from_terms(abgvars(), std::move(reduced));
}

// ---------------------------------------------------------------------------
// Curious Hard Lefschetz: exact ranks of multiplication by alpha^l between
// opposite weight-graded pieces.

struct LefschetzReport {
    int g = 0, l = 0, i = 0;
    long domain_dim = 0, codomain_dim = 0, rank = 0;
    bool isomorphism() const { return domain_dim == codomain_dim && rank == domain_dim; }
};

namespace detail {

inline long matrix_rank(std::vector<std::vector<BigRational>> m) {
    long rank = 0;
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        for (std::size_t rr = row + 1; rr < rows; ++rr) {
            if (m[rr][col] == 0) continue;
            BigRational f = m[rr][col] / m[row][col];
            for (std::size_t cc = col; cc < cols; ++cc) m[rr][cc] -= f * m[row][cc];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace detail

// The map L^l : Gr^W_{6g-6-2l} H^{i-l}(M_tilde_2) -> Gr^W_{6g-6+2l} H^{i+l}(M_tilde_2),
// block by block over the primitive parts Lambda^k_0.
inline LefschetzReport lefschetz_check(int g, int l, int i) {
    if (g < 2) throw UsageError("lefschetz_check: g >= 2 required");
    if (l < 0) throw UsageError("lefschetz_check: l >= 0 required");
    LefschetzReport rep;
    rep.g = g;
    rep.l = l;
    rep.i = i;
    const long p_dom = 3L * g - 3 - l;  // q-exponent of the domain piece
    const long p_cod = 3L * g - 3 + l;
    for (int k = 0; k <= g; ++k) {
        const int gp = g - k;
        // basis monomials in the (degree, weight) blocks
        std::vector<Exponents> dom, cod;
        std::map<Exponents, std::size_t, decltype(&lex_less)> cod_index(&lex_less);
        for (const auto& m : skg_enumerate(gp, k)) {
            long qe = 2L * m.r + 2 * m.s + 4 * m.t + 2 * k;
            long te = 2L * m.r + 4 * m.s + 6 * m.t + 3 * k;
            Exponents e{m.r, m.s, m.t};
            if (qe == p_dom && te == i - l) dom.push_back(e);
            if (qe == p_cod && te == i + l) {
                cod_index.emplace(e, cod.size());
                cod.push_back(e);
            }
        }
        BigInt dk = primitive_dim(g, k);
        long dkl = static_cast<long>(dk);
        rep.domain_dim += dkl * static_cast<long>(dom.size());
        rep.codomain_dim += dkl * static_cast<long>(cod.size());
        if (dom.empty() || cod.empty()) continue;
        std::vector<std::vector<BigRational>> mat(cod.size(), std::vector<BigRational>(dom.size(), 0));
        for (std::size_t j = 0; j < dom.size(); ++j) {
            Exponents shifted = dom[j];
            shifted[0] += l;
            LaurentPoly image = normal_form(LaurentPoly::monomial(abgvars(), shifted), gp, k);
            for (const auto& term : image.terms()) {
                auto it = cod_index.find(term.e);
                if (it == cod_index.end())
                    throw ConsistencyError("lefschetz_check: image leaves the expected graded block");
                mat[it->second][j] = term.c;
            }
        }
        rep.rank += dkl * detail::matrix_rank(std::move(mat));
    }
    return rep;
}

}  // namespace charvar
