#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "charvar/bigrational.hpp"

namespace charvar {

using Exponents = boost::container::small_vector<std::int32_t, 3>;

inline bool lex_less(const Exponents& a, const Exponents& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Sparse Laurent polynomial with exact rational coefficients in a small
// ordered set of named variables. Canonical form: no zero coefficients,
// terms sorted by lexicographically ascending exponent vector. Exponents
// may be negative (every monomial is a unit).
class LaurentPoly {
public:
    struct Term {
        Exponents e;
        BigRational c;
    };

    LaurentPoly() = default;

    explicit LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static LaurentPoly zero(std::vector<std::string> vars) { return LaurentPoly(std::move(vars)); }

    static LaurentPoly constant(std::vector<std::string> vars, BigRational c) {
        LaurentPoly p(std::move(vars));
        if (c != 0) p.terms_.push_back({Exponents(p.vars_.size(), 0), std::move(c)});
        return p;
    }

    static LaurentPoly one(std::vector<std::string> vars) {
        return constant(std::move(vars), 1);
    }

    static LaurentPoly monomial(std::vector<std::string> vars, Exponents e, BigRational c = 1) {
        LaurentPoly p(std::move(vars));
        if (e.size() != p.vars_.size()) throw UsageError("monomial: exponent vector length mismatch");
        if (c != 0) p.terms_.push_back({std::move(e), std::move(c)});
        return p;
    }

    // x_name^k as an element of the given ring.
    static LaurentPoly variable(std::vector<std::string> vars, const std::string& name, std::int32_t k = 1) {
        Exponents e(vars.size(), 0);
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) throw UsageError("unknown variable " + name);
        e[static_cast<std::size_t>(it - vars.begin())] = k;
        return monomial(std::move(vars), std::move(e));
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].c == 1 &&
               std::all_of(terms_[0].e.begin(), terms_[0].e.end(), [](auto x) { return x == 0; });
    }

    LaurentPoly zero_like() const { return LaurentPoly(vars_); }
    LaurentPoly one_like() const { return one(vars_); }

    std::size_t var_index(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw UsageError("unknown variable " + name);
        return static_cast<std::size_t>(it - vars_.begin());
    }

    BigRational coeff(const Exponents& e) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, const Exponents& k) { return lex_less(t.e, k); });
        if (it != terms_.end() && it->e == e) return it->c;
        return 0;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_same_vars(b);
        LaurentPoly r(a.vars_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() && ib != b.terms_.end()) {
            if (lex_less(ia->e, ib->e)) {
                r.terms_.push_back(*ia++);
            } else if (lex_less(ib->e, ia->e)) {
                r.terms_.push_back(*ib++);
            } else {
                BigRational c = ia->c + ib->c;
                if (c != 0) r.terms_.push_back({ia->e, std::move(c)});
                ++ia, ++ib;
            }
        }
        r.terms_.insert(r.terms_.end(), ia, a.terms_.end());
        r.terms_.insert(r.terms_.end(), ib, b.terms_.end());
        return r;
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_same_vars(b);
        if (a.is_zero() || b.is_zero()) return LaurentPoly(a.vars_);
        // Few-term operands (monomials, binomials) are the common case in the
        // factored-denominator pipelines; a chain of shifted merges beats the
        // map accumulator there.
        if (a.terms_.size() <= 4 || b.terms_.size() <= 4) {
            const LaurentPoly& small = a.terms_.size() <= b.terms_.size() ? a : b;
            const LaurentPoly& big = a.terms_.size() <= b.terms_.size() ? b : a;
            LaurentPoly r(a.vars_);
            for (const Term& t : small.terms_) r = r + big.shifted(t.e, t.c);
            return r;
        }
        std::map<Exponents, BigRational, decltype(&lex_less)> acc(&lex_less);
        for (const Term& ta : a.terms_) {
            for (const Term& tb : b.terms_) {
                Exponents e = ta.e;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += tb.e[i];
                auto [it, inserted] = acc.try_emplace(std::move(e), 0);
                it->second += ta.c * tb.c;
            }
        }
        LaurentPoly r(a.vars_);
        r.terms_.reserve(acc.size());
        for (auto& [e, c] : acc)
            if (c != 0) r.terms_.push_back({e, std::move(c)});
        return r;
    }

    // this * c * x^e
    LaurentPoly shifted(const Exponents& e, const BigRational& c) const {
        if (c == 0) return LaurentPoly(vars_);
        LaurentPoly r(vars_);
        r.terms_.reserve(terms_.size());
        for (const Term& t : terms_) {
            Exponents ne = t.e;
            for (std::size_t i = 0; i < ne.size(); ++i) ne[i] += e[i];
            r.terms_.push_back({std::move(ne), t.c * c});
        }
        return r;
    }

    LaurentPoly scale(const BigRational& c) const {
        return shifted(Exponents(vars_.size(), 0), c);
    }

    LaurentPoly pow(long k) const {
        if (k < 0) {
            if (terms_.size() != 1) throw UsageError("negative power of a non-monomial");
            Exponents e = terms_[0].e;
            for (auto& x : e) x = static_cast<std::int32_t>(x * k);
            return monomial(vars_, std::move(e), rational_pow(terms_[0].c, k));
        }
        LaurentPoly r = one(vars_);
        LaurentPoly base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            base = (k >>= 1) > 0 ? base * base : base;
        }
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].e != b.terms_[i].e || a.terms_[i].c != b.terms_[i].c) return false;
        return true;
    }

    // Adams operation: every exponent vector multiplied by k.
    LaurentPoly adams(long k) const {
        if (k < 1) throw UsageError("adams requires k >= 1");
        LaurentPoly r = *this;
        for (auto& t : r.terms_)
            for (auto& x : t.e) x = static_cast<std::int32_t>(x * k);
        return r;
    }

    // Image of one variable under substitution: sign * (monomial in the
    // output variables). An all-zero exponent vector gives a constant image.
    struct MonomialImage {
        int sign = 1;  // +1 or -1
        Exponents exps;
    };

    // Simultaneous substitution var_i -> image_i, producing a value over
    // out_vars. Every input variable must be given an image.
    LaurentPoly substitute(const std::vector<std::string>& out_vars,
                           const std::vector<MonomialImage>& images) const {
        if (images.size() != vars_.size()) throw UsageError("substitute: one image per variable required");
        for (const auto& im : images) {
            if (im.sign != 1 && im.sign != -1) throw UsageError("substitute: image coefficient must be +1 or -1");
            if (im.exps.size() != out_vars.size()) throw UsageError("substitute: image exponent length mismatch");
        }
        std::map<Exponents, BigRational, decltype(&lex_less)> acc(&lex_less);
        for (const Term& t : terms_) {
            Exponents e(out_vars.size(), 0);
            bool negate = false;
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                const auto& im = images[i];
                for (std::size_t j = 0; j < e.size(); ++j)
                    e[j] += static_cast<std::int32_t>(im.exps[j] * t.e[i]);
                if (im.sign < 0 && (t.e[i] % 2 != 0)) negate = !negate;
            }
            auto [it, inserted] = acc.try_emplace(std::move(e), 0);
            it->second += negate ? -t.c : t.c;
        }
        LaurentPoly r(out_vars);
        for (auto& [e, c] : acc)
            if (c != 0) r.terms_.push_back({e, std::move(c)});
        return r;
    }

    // Replace one variable by a signed monomial, keeping the others fixed.
    LaurentPoly substitute_var(const std::string& var, const std::vector<std::string>& out_vars,
                               MonomialImage image) const {
        std::vector<MonomialImage> images;
        for (const auto& v : vars_) {
            if (v == var) {
                images.push_back(image);
            } else {
                MonomialImage id;
                id.exps.assign(out_vars.size(), 0);
                auto it = std::find(out_vars.begin(), out_vars.end(), v);
                if (it == out_vars.end()) throw UsageError("substitute_var: variable " + v + " missing from output");
                id.exps[static_cast<std::size_t>(it - out_vars.begin())] = 1;
                images.push_back(std::move(id));
            }
        }
        return substitute(out_vars, images);
    }

    // var -> 0. Requires no negative exponent of var anywhere.
    LaurentPoly substitute_zero(const std::string& var) const {
        std::size_t i = var_index(var);
        LaurentPoly r(vars_);
        for (const Term& t : terms_) {
            if (t.e[i] < 0) throw UsageError("substitute_zero: negative exponent of " + var);
            if (t.e[i] == 0) r.terms_.push_back(t);
        }
        return r;
    }

    // Divide every exponent of var by two; odd exponents are an error. Used
    // for the internal half-integer convention (s^2 = q) and the z^2 -> z
    // rewrite of the genus-zero identity.
    LaurentPoly halve_exponents(const std::string& var, const std::string& new_name) const {
        std::size_t i = var_index(var);
        LaurentPoly r = *this;
        r.vars_[i] = new_name;
        for (auto& t : r.terms_) {
            if (t.e[i] % 2 != 0) throw UsageError("half-integer residue in variable " + var);
            t.e[i] /= 2;
        }
        return r;
    }

    // Rename without touching exponents.
    LaurentPoly rename_vars(std::vector<std::string> new_vars) const {
        if (new_vars.size() != vars_.size()) throw UsageError("rename_vars: arity mismatch");
        LaurentPoly r = *this;
        r.vars_ = std::move(new_vars);
        return r;
    }

    // Minimum / maximum exponent of var over all terms (nullopt when zero).
    std::optional<std::int32_t> min_exponent(const std::string& var) const {
        return extremal_exponent(var, true);
    }
    std::optional<std::int32_t> max_exponent(const std::string& var) const {
        return extremal_exponent(var, false);
    }

    bool has_negative_exponents() const {
        for (const Term& t : terms_)
            for (auto x : t.e)
                if (x < 0) return true;
        return false;
    }

    bool integer_coefficients() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return is_integer(t.c); });
    }

    BigRational eval(const std::vector<BigRational>& point) const {
        if (point.size() != vars_.size()) throw UsageError("eval: point arity mismatch");
        BigRational sum = 0;
        for (const Term& t : terms_) {
            BigRational m = t.c;
            for (std::size_t i = 0; i < point.size(); ++i) m *= rational_pow(point[i], t.e[i]);
            sum += m;
        }
        return sum;
    }

    // Exact division. Returns nullopt when num is not an exact multiple.
    static std::optional<LaurentPoly> exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
        num.check_same_vars(den);
        if (den.is_zero()) throw UsageError("exact_divide: zero divisor");
        if (num.is_zero()) return LaurentPoly(num.vars_);
        const std::size_t nv = num.vars_.size();
        // Shift both operands into plain polynomials; monomials are units so
        // this only changes the quotient by a known monomial factor.
        Exponents shift_n(nv, 0), shift_d(nv, 0);
        for (std::size_t i = 0; i < nv; ++i) {
            std::int32_t mn = num.terms_[0].e[i], md = den.terms_[0].e[i];
            for (const Term& t : num.terms_) mn = std::min(mn, t.e[i]);
            for (const Term& t : den.terms_) md = std::min(md, t.e[i]);
            shift_n[i] = -mn;
            shift_d[i] = -md;
        }
        std::map<Exponents, BigRational, decltype(&lex_less)> rem(&lex_less);
        for (const Term& t : num.terms_) {
            Exponents e = t.e;
            for (std::size_t i = 0; i < nv; ++i) e[i] += shift_n[i];
            rem.emplace(std::move(e), t.c);
        }
        std::vector<Term> dterms;
        dterms.reserve(den.terms_.size());
        for (const Term& t : den.terms_) {
            Exponents e = t.e;
            for (std::size_t i = 0; i < nv; ++i) e[i] += shift_d[i];
            dterms.push_back({std::move(e), t.c});
        }
        const Term& dlead = dterms.back();  // lex-max of divisor
        std::map<Exponents, BigRational, decltype(&lex_less)> quot(&lex_less);
        while (!rem.empty()) {
            auto lead = std::prev(rem.end());
            Exponents qe = lead->first;
            for (std::size_t i = 0; i < nv; ++i) {
                qe[i] -= dlead.e[i];
                if (qe[i] < 0) return std::nullopt;
            }
            BigRational qc = lead->second / dlead.c;
            quot.emplace(qe, qc);
            for (const Term& dt : dterms) {
                Exponents e = qe;
                for (std::size_t i = 0; i < nv; ++i) e[i] += dt.e[i];
                auto [it, inserted] = rem.try_emplace(std::move(e), 0);
                it->second -= qc * dt.c;
                if (it->second == 0) rem.erase(it);
            }
        }
        LaurentPoly q(num.vars_);
        for (auto& [e, c] : quot) {
            Exponents e2 = e;
            for (std::size_t i = 0; i < nv; ++i) e2[i] += shift_d[i] - shift_n[i];
            if (c != 0) q.terms_.push_back({std::move(e2), c});
        }
        std::sort(q.terms_.begin(), q.terms_.end(),
                  [](const Term& a, const Term& b) { return lex_less(a.e, b.e); });
        return q;
    }

    // Canonical text form: terms in lex-ascending exponent order.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (std::size_t k = 0; k < terms_.size(); ++k) {
            const Term& t = terms_[k];
            BigRational c = t.c;
            bool neg = c < 0;
            if (neg) c = -c;
            if (k == 0) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            std::string mono;
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (t.e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[i];
                if (t.e[i] != 1) mono += "^" + std::to_string(t.e[i]);
            }
            if (mono.empty()) {
                out += rational_str(c);
            } else if (c == 1) {
                out += mono;
            } else {
                out += rational_str(c) + "*" + mono;
            }
        }
        return out;
    }

    // Construction escape hatch for deserializers; enforces canonical form.
    static LaurentPoly from_terms(std::vector<std::string> vars, std::vector<Term> terms) {
        LaurentPoly p(std::move(vars));
        for (auto& t : terms)
            if (t.e.size() != p.vars_.size()) throw UsageError("from_terms: exponent arity mismatch");
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return lex_less(a.e, b.e); });
        for (auto& t : terms) {
            if (t.c == 0) continue;
            if (!p.terms_.empty() && p.terms_.back().e == t.e)
                throw UsageError("from_terms: duplicate exponent vector");
            p.terms_.push_back(std::move(t));
        }
        return p;
    }

private:
    void check_same_vars(const LaurentPoly& other) const {
        if (vars_ != other.vars_) throw UsageError("operands have different variable lists");
    }

    std::optional<std::int32_t> extremal_exponent(const std::string& var, bool want_min) const {
        if (terms_.empty()) return std::nullopt;
        std::size_t i = var_index(var);
        std::int32_t best = terms_[0].e[i];
        for (const Term& t : terms_) best = want_min ? std::min(best, t.e[i]) : std::max(best, t.e[i]);
        return best;
    }

    std::vector<std::string> vars_;
    std::vector<Term> terms_;
};

}  // namespace charvar
