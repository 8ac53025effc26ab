#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "charvar/laurent.hpp"

namespace charvar {

// Quotient of a Laurent polynomial by a multiset of binomial factors. The
// denominator is never expanded except while merging to a common denominator
// or certifying an exact quotient, so no polynomial gcd is ever needed.
//
// Each stored factor is canonical: exactly two terms, component-wise minimum
// exponent zero, leading (lex-max) coefficient one. Units peeled off during
// canonicalization are folded into the numerator, which monomial-invertibility
// of the Laurent ring makes exact.
class RationalFn {
public:
    struct Factor {
        LaurentPoly binomial;
        long mult = 0;
    };

    RationalFn() = default;

    explicit RationalFn(LaurentPoly num) : num_(std::move(num)) {}

    static RationalFn zero(std::vector<std::string> vars) {
        return RationalFn(LaurentPoly::zero(std::move(vars)));
    }
    static RationalFn one(std::vector<std::string> vars) {
        return RationalFn(LaurentPoly::one(std::move(vars)));
    }

    RationalFn zero_like() const { return RationalFn(num_.zero_like()); }
    RationalFn one_like() const { return RationalFn(num_.one_like()); }

    // num / prod f_i^{m_i}. Factors may be arbitrary nonzero binomials (or
    // monomials, which are units); they are canonicalized here.
    static RationalFn fraction(LaurentPoly num, const std::vector<std::pair<LaurentPoly, long>>& factors) {
        RationalFn r(std::move(num));
        for (const auto& [f, m] : factors) r.push_denominator(f, m);
        r.normalize();
        return r;
    }

    const LaurentPoly& numerator() const { return num_; }
    const std::vector<Factor>& denominator_factors() const { return den_; }
    const std::vector<std::string>& vars() const { return num_.vars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool denominator_trivial() const { return den_.empty(); }

    LaurentPoly denominator_expanded() const {
        LaurentPoly d = num_.one_like();
        for (const Factor& f : den_) d = d * binomial_pow(f.binomial, f.mult);
        return d;
    }

    friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
        RationalFn r(a.num_ * b.num_);
        r.den_ = a.den_;
        for (const Factor& f : b.den_) r.add_mult(f.binomial, f.mult);
        r.normalize();
        return r;
    }

    RationalFn operator-() const {
        RationalFn r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
        return sum({a, b});
    }
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

    // k-way merge over the least common denominator (multiset max of the
    // factor multiplicities).
    static RationalFn sum(std::span<const RationalFn> terms) {
        if (terms.empty()) throw UsageError("sum of no terms");
        RationalFn r;
        r.num_ = terms[0].num_.zero_like();
        for (const RationalFn& t : terms)
            for (const Factor& f : t.den_) r.max_mult(f.binomial, f.mult);
        for (const RationalFn& t : terms) {
            LaurentPoly part = t.num_;
            for (const Factor& f : r.den_) {
                long deficit = f.mult - t.mult_of(f.binomial);
                if (deficit > 0) part = part * binomial_pow(f.binomial, deficit);
            }
            r.num_ = r.num_ + part;
        }
        r.normalize();
        return r;
    }
    static RationalFn sum(std::initializer_list<RationalFn> terms) {
        return sum(std::span<const RationalFn>(terms.begin(), terms.size()));
    }

    RationalFn pow(long k) const {
        if (k < 0) throw UsageError("RationalFn::pow: negative powers are built at construction");
        RationalFn r(num_.pow(k));
        r.den_ = den_;
        for (Factor& f : r.den_) f.mult *= k;
        r.normalize();
        return r;
    }

    RationalFn scale(const BigRational& c) const {
        RationalFn r = *this;
        r.num_ = r.num_.scale(c);
        r.normalize();
        return r;
    }

    RationalFn adams(long k) const {
        RationalFn r;
        r.num_ = num_.adams(k);
        r.den_ = den_;
        for (Factor& f : r.den_) f.binomial = f.binomial.adams(k);
        return r;
    }

    // Equality by cross-multiplication after cancelling shared factors.
    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        if (a.vars() != b.vars()) return false;
        LaurentPoly lhs = a.num_, rhs = b.num_;
        // multiply each side by the factors unique to the other side
        for (const Factor& f : b.den_) {
            long extra = f.mult - a.mult_of(f.binomial);
            if (extra > 0) lhs = lhs * binomial_pow(f.binomial, extra);
        }
        for (const Factor& f : a.den_) {
            long extra = f.mult - b.mult_of(f.binomial);
            if (extra > 0) rhs = rhs * binomial_pow(f.binomial, extra);
        }
        return lhs == rhs;
    }

    // Monomial substitution, applied to numerator and factors alike. A factor
    // whose two monomials collide after substitution degenerates to a unit
    // (folded) or to zero (an error).
    RationalFn substitute_var(const std::string& var, const std::vector<std::string>& out_vars,
                              LaurentPoly::MonomialImage image) const {
        RationalFn r(num_.substitute_var(var, out_vars, image));
        for (const Factor& f : den_) r.push_denominator(f.binomial.substitute_var(var, out_vars, image), f.mult);
        r.normalize();
        return r;
    }

    RationalFn substitute(const std::vector<std::string>& out_vars,
                          const std::vector<LaurentPoly::MonomialImage>& images) const {
        RationalFn r(num_.substitute(out_vars, images));
        for (const Factor& f : den_) r.push_denominator(f.binomial.substitute(out_vars, images), f.mult);
        r.normalize();
        return r;
    }

    RationalFn substitute_zero(const std::string& var) const {
        RationalFn r(num_.substitute_zero(var));
        for (const Factor& f : den_) r.push_denominator(f.binomial.substitute_zero(var), f.mult);
        r.normalize();
        return r;
    }

    RationalFn halve_exponents(const std::string& var, const std::string& new_name) const {
        RationalFn r(num_.halve_exponents(var, new_name));
        for (const Factor& f : den_) r.push_denominator(f.binomial.halve_exponents(var, new_name), f.mult);
        r.normalize();
        return r;
    }

    // Certify that the value is a genuine Laurent polynomial by dividing out
    // the factors one at a time; every intermediate quotient is exact when the
    // full quotient is.
    std::optional<LaurentPoly> as_polynomial() const {
        LaurentPoly p = num_;
        for (const Factor& f : den_) {
            for (long i = 0; i < f.mult; ++i) {
                auto q = LaurentPoly::exact_divide(p, f.binomial);
                if (!q) return std::nullopt;
                p = std::move(*q);
            }
        }
        return p;
    }

    std::string str() const {
        std::string s = "(" + num_.str() + ")";
        for (const Factor& f : den_) {
            s += " / (" + f.binomial.str() + ")";
            if (f.mult != 1) s += "^" + std::to_string(f.mult);
        }
        return s;
    }

    // (x^a + c x^b)^m expanded by the binomial theorem.
    static LaurentPoly binomial_pow(const LaurentPoly& f, long m) {
        if (m < 0) throw UsageError("binomial_pow: negative power");
        const auto& ts = f.terms();
        if (ts.size() != 2) return f.pow(m);
        std::vector<LaurentPoly::Term> out;
        out.reserve(static_cast<std::size_t>(m) + 1);
        const Exponents& lo = ts[0].e;
        const Exponents& hi = ts[1].e;
        for (long i = 0; i <= m; ++i) {
            // choose the low term i times
            Exponents e(lo.size());
            for (std::size_t j = 0; j < e.size(); ++j)
                e[j] = static_cast<std::int32_t>(lo[j] * i + hi[j] * (m - i));
            BigRational c = BigRational(binomial(m, i)) * rational_pow(ts[0].c, i) * rational_pow(ts[1].c, m - i);
            out.push_back({std::move(e), std::move(c)});
        }
        return LaurentPoly::from_terms(f.vars(), std::move(out));
    }

private:
    long mult_of(const LaurentPoly& canonical) const {
        for (const Factor& f : den_)
            if (f.binomial == canonical) return f.mult;
        return 0;
    }

    void add_mult(const LaurentPoly& canonical, long m) {
        for (Factor& f : den_) {
            if (f.binomial == canonical) {
                f.mult += m;
                return;
            }
        }
        den_.push_back({canonical, m});
    }

    void max_mult(const LaurentPoly& canonical, long m) {
        for (Factor& f : den_) {
            if (f.binomial == canonical) {
                f.mult = std::max(f.mult, m);
                return;
            }
        }
        den_.push_back({canonical, m});
    }

    // Canonicalize a raw factor and account for it `mult` times. Units fold
    // into the numerator.
    void push_denominator(const LaurentPoly& raw, long mult) {
        if (mult < 0) throw UsageError("denominator multiplicity must be >= 0");
        if (mult == 0) return;
        if (raw.vars() != num_.vars()) throw UsageError("denominator factor over different variables");
        const auto& ts = raw.terms();
        if (ts.empty()) throw UsageError("zero denominator factor");
        if (ts.size() > 2) throw UsageError("denominator factor is not a binomial");
        if (ts.size() == 1) {
            // pure unit: divide the numerator by it
            Exponents e(ts[0].e.size());
            for (std::size_t j = 0; j < e.size(); ++j) e[j] = static_cast<std::int32_t>(-ts[0].e[j] * mult);
            num_ = num_.shifted(e, rational_pow(ts[0].c, -mult));
            return;
        }
        Exponents shift(ts[0].e.size());
        for (std::size_t j = 0; j < shift.size(); ++j) shift[j] = std::min(ts[0].e[j], ts[1].e[j]);
        const BigRational& lead = ts[1].c;  // lex-max term
        std::vector<LaurentPoly::Term> canon_terms;
        for (const auto& t : ts) {
            Exponents e = t.e;
            for (std::size_t j = 0; j < e.size(); ++j) e[j] -= shift[j];
            canon_terms.push_back({std::move(e), t.c / lead});
        }
        LaurentPoly canon = LaurentPoly::from_terms(raw.vars(), std::move(canon_terms));
        // raw = lead * x^shift * canon, so dividing by raw^mult divides the
        // numerator by (lead * x^shift)^mult as well.
        Exponents e(shift.size());
        for (std::size_t j = 0; j < e.size(); ++j) e[j] = static_cast<std::int32_t>(-shift[j] * mult);
        num_ = num_.shifted(e, rational_pow(lead, -mult));
        add_mult(canon, mult);
    }

    void normalize() {
        if (num_.is_zero()) {
            den_.clear();
            return;
        }
        std::erase_if(den_, [](const Factor& f) { return f.mult == 0; });
        std::sort(den_.begin(), den_.end(), [](const Factor& a, const Factor& b) {
            const auto& ta = a.binomial.terms();
            const auto& tb = b.binomial.terms();
            for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
                if (ta[i].e != tb[i].e) return lex_less(ta[i].e, tb[i].e);
                if (ta[i].c != tb[i].c) return ta[i].c < tb[i].c;
            }
            return ta.size() < tb.size();
        });
    }

    LaurentPoly num_;
    std::vector<Factor> den_;
};

}  // namespace charvar
