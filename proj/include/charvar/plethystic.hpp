#pragma once

#include <span>
#include <vector>

#include "charvar/laurent.hpp"
#include "charvar/rational_fn.hpp"

namespace charvar {

// Merge a list of ring elements into one. The rational-function overload goes
// through the k-way common-denominator merge, which is much cheaper than a
// fold of pairwise additions.
inline LaurentPoly ring_sum(std::span<const LaurentPoly> xs) {
    if (xs.empty()) throw UsageError("ring_sum of no terms");
    LaurentPoly r = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) r = r + xs[i];
    return r;
}
inline RationalFn ring_sum(std::span<const RationalFn> xs) { return RationalFn::sum(xs); }

// Power series in T truncated at order N, with coefficients in an exact ring
// supporting Adams operations. Elements of K[[T]]; indices beyond N are never
// consulted.
template <typename Coeff>
class TruncSeries {
public:
    TruncSeries(int order, const Coeff& proto) : order_(order), c_(static_cast<std::size_t>(order) + 1, proto.zero_like()) {
        if (order < 0) throw UsageError("series order must be >= 0");
    }

    static TruncSeries one(int order, const Coeff& proto) {
        TruncSeries s(order, proto);
        s.c_[0] = proto.one_like();
        return s;
    }

    int order() const { return order_; }
    const Coeff& at(int i) const { return c_[static_cast<std::size_t>(i)]; }
    Coeff& at(int i) { return c_[static_cast<std::size_t>(i)]; }

    bool is_zero() const {
        for (const Coeff& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        a.check_order(b);
        TruncSeries r = a;
        for (int i = 0; i <= a.order_; ++i) r.at(i) = r.at(i) + b.at(i);
        return r;
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        a.check_order(b);
        TruncSeries r = a;
        for (int i = 0; i <= a.order_; ++i) r.at(i) = r.at(i) - b.at(i);
        return r;
    }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.check_order(b);
        TruncSeries r(a.order_, a.c_[0]);
        for (int n = 0; n <= a.order_; ++n) {
            std::vector<Coeff> prods;
            for (int i = 0; i <= n; ++i) {
                if (a.at(i).is_zero() || b.at(n - i).is_zero()) continue;
                prods.push_back(a.at(i) * b.at(n - i));
            }
            if (!prods.empty()) r.at(n) = ring_sum(std::span<const Coeff>(prods));
        }
        return r;
    }

    TruncSeries scale(const BigRational& x) const {
        TruncSeries r = *this;
        for (Coeff& c : r.c_) c = c.scale(x);
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        if (a.order_ != b.order_) return false;
        for (int i = 0; i <= a.order_; ++i)
            if (!(a.at(i) == b.at(i))) return false;
        return true;
    }

private:
    void check_order(const TruncSeries& other) const {
        if (order_ != other.order_) throw UsageError("series orders differ");
    }

    int order_;
    std::vector<Coeff> c_;
};

// exp of a series with zero constant term, via the derivative recursion
// F_n = (1/n) sum_{k=1..n} k W_k F_{n-k}.
template <typename Coeff>
TruncSeries<Coeff> exp_series(const TruncSeries<Coeff>& w) {
    if (!w.at(0).is_zero()) throw UsageError("exp_series: constant term must be zero");
    TruncSeries<Coeff> f = TruncSeries<Coeff>::one(w.order(), w.at(0));
    for (int n = 1; n <= w.order(); ++n) {
        std::vector<Coeff> prods;
        for (int k = 1; k <= n; ++k) {
            if (w.at(k).is_zero() || f.at(n - k).is_zero()) continue;
            prods.push_back((w.at(k) * f.at(n - k)).scale(k));
        }
        if (!prods.empty()) f.at(n) = ring_sum(std::span<const Coeff>(prods)).scale(BigRational(1, n));
    }
    return f;
}

// log of a series with constant term one, via log(1+x) = sum (-1)^{k-1} x^k / k
// (no coefficient division, so structured denominators survive intact).
template <typename Coeff>
TruncSeries<Coeff> log_series(const TruncSeries<Coeff>& f) {
    if (!(f.at(0) == f.at(0).one_like())) throw UsageError("log_series: constant term must be one");
    const int n = f.order();
    TruncSeries<Coeff> x = f;
    x.at(0) = f.at(0).zero_like();
    TruncSeries<Coeff> result = x;
    TruncSeries<Coeff> xp = x;
    for (int k = 2; k <= n; ++k) {
        xp = xp * x;
        result = result + xp.scale(BigRational(((k % 2 == 1) ? 1 : -1), k));
    }
    return result;
}

// Exp(V) = exp(sum_{r>=1} (1/r) adams_r(V)(T^r)), the plethystic exponential.
template <typename Coeff>
TruncSeries<Coeff> exp_pleth(const TruncSeries<Coeff>& v) {
    if (!v.at(0).is_zero()) throw UsageError("Exp: constant term must be zero");
    const int n = v.order();
    TruncSeries<Coeff> w(n, v.at(0));
    for (int r = 1; r <= n; ++r) {
        for (int j = 1; j * r <= n; ++j) {
            if (v.at(j).is_zero()) continue;
            w.at(j * r) = w.at(j * r) + v.at(j).adams(r).scale(BigRational(1, r));
        }
    }
    return exp_series(w);
}

// The U_n with log(F) = sum U_n T^n / n; index k of the result is U_k, and
// U_0 is unused.
template <typename Coeff>
std::vector<Coeff> log_raw(const TruncSeries<Coeff>& f) {
    TruncSeries<Coeff> l = log_series(f);
    std::vector<Coeff> u(static_cast<std::size_t>(f.order()) + 1, f.at(0).zero_like());
    for (int k = 1; k <= f.order(); ++k) u[static_cast<std::size_t>(k)] = l.at(k).scale(k);
    return u;
}

// Log(F): V_n = (1/n) sum_{d|n} mu(d) adams_d(U_{n/d}).
template <typename Coeff>
TruncSeries<Coeff> log_pleth(const TruncSeries<Coeff>& f) {
    std::vector<Coeff> u = log_raw(f);
    TruncSeries<Coeff> v(f.order(), f.at(0).zero_like());
    for (int n = 1; n <= f.order(); ++n) {
        std::vector<Coeff> parts;
        for (int d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            int mu = moebius(d);
            if (mu == 0 || u[static_cast<std::size_t>(n / d)].is_zero()) continue;
            parts.push_back(u[static_cast<std::size_t>(n / d)].adams(d).scale(mu));
        }
        if (!parts.empty()) v.at(n) = ring_sum(std::span<const Coeff>(parts)).scale(BigRational(1, n));
    }
    return v;
}

}  // namespace charvar
