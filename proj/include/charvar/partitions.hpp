#pragma once

#include <string>
#include <utility>
#include <vector>

#include "charvar/laurent.hpp"

namespace charvar {

// Integer partition: weakly decreasing positive parts; the empty list is the
// zero partition. Boxes are indexed (row, column), 1-based, rows top-down;
// this is the one place where the lattice-point picture of Ferrers diagrams
// is translated into array indexing.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw UsageError("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw UsageError("partition parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const {
        std::vector<int> cols;
        if (!parts_.empty()) cols.assign(static_cast<std::size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
        return Partition(std::move(cols));
    }

    // n(lambda) = sum (i-1) lambda_i
    long n_lambda() const {
        long s = 0;
        for (std::size_t i = 0; i < parts_.size(); ++i) s += static_cast<long>(i) * parts_[i];
        return s;
    }

    // <lambda,mu> = sum_j lambda'_j mu'_j
    static long pairing(const Partition& a, const Partition& b) {
        auto ac = a.conjugate().parts();
        auto bc = b.conjugate().parts();
        long s = 0;
        for (std::size_t j = 0; j < std::min(ac.size(), bc.size()); ++j)
            s += static_cast<long>(ac[j]) * bc[j];
        return s;
    }

    long self_pairing() const { return pairing(*this, *this); }

    struct Box {
        int row, col;   // 1-based
        int arm, leg;
        int hook() const { return arm + leg + 1; }
    };

    std::vector<Box> boxes() const {
        std::vector<Box> out;
        out.reserve(static_cast<std::size_t>(size()));
        auto conj = conjugate().parts();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            for (int j = 1; j <= parts_[i]; ++j) {
                Box b;
                b.row = static_cast<int>(i) + 1;
                b.col = j;
                b.arm = parts_[i] - j;
                b.leg = conj[static_cast<std::size_t>(j - 1)] - static_cast<int>(i) - 1;
                out.push_back(b);
            }
        }
        return out;
    }

    // (part value, multiplicity), values descending.
    std::vector<std::pair<int, int>> multiplicities() const {
        std::vector<std::pair<int, int>> out;
        for (int p : parts_) {
            if (!out.empty() && out.back().first == p)
                ++out.back().second;
            else
                out.emplace_back(p, 1);
        }
        return out;
    }

    // b_lambda(q) = prod_i (1-q)(1-q^2)...(1-q^{m_i}) over multiplicities m_i.
    LaurentPoly b_poly(const std::string& var = "q") const {
        std::vector<std::string> vars{var};
        LaurentPoly r = LaurentPoly::one(vars);
        LaurentPoly one = LaurentPoly::one(vars);
        for (auto [value, m] : multiplicities()) {
            (void)value;
            for (int j = 1; j <= m; ++j) r = r * (one - LaurentPoly::variable(vars, var, j));
        }
        return r;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
};

namespace detail {
inline void enumerate_rec(int n, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        prefix.push_back(k);
        enumerate_rec(n - k, k, prefix, out);
        prefix.pop_back();
    }
}
}  // namespace detail

// All partitions of n, reverse-lexicographic on part lists: (n) first,
// (1,...,1) last. This order is the repo-wide enumeration contract.
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw UsageError("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> prefix;
    detail::enumerate_rec(n, n == 0 ? 1 : n, prefix, out);
    return out;
}

}  // namespace charvar
