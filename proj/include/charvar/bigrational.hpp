#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace charvar {

// Exact arbitrary-precision integers and rationals. cpp_rational keeps
// values reduced with positive denominator, which is exactly the canonical
// form every coefficient in this library relies on.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Usage errors: bad arguments, mismatched variable lists, out-of-budget
// requests. CLI maps these to exit code 2.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Internal-consistency failures: a quantity the theory guarantees (e.g. a
// certified-polynomial division, an integrality assertion) did not hold.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

inline bool is_integer(const BigRational& x) { return denominator(x) == 1; }

inline BigInt to_integer(const BigRational& x) {
    if (!is_integer(x)) throw ConsistencyError("expected integer, got " + x.str());
    return numerator(x);
}

// "num" or "num/den", matching the JSON coefficient encoding.
inline std::string rational_str(const BigRational& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) s += "/" + denominator(x).str();
    return s;
}

inline BigRational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRational(BigInt(s));
    return BigRational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

inline BigRational rational_pow(const BigRational& x, long e) {
    if (e < 0) {
        if (x == 0) throw UsageError("0 cannot be raised to a negative power");
        return 1 / rational_pow(x, -e);
    }
    BigRational r = 1, base = x;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline BigInt factorial(long n) {
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (long i = 0; i < k; ++i) { r *= (n - i); r /= (i + 1); }
    return r;
}

// Moebius function for the small indices used by Log.
inline int moebius(long n) {
    if (n <= 0) throw UsageError("moebius requires n >= 1");
    int factors = 0;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++factors;
        }
    }
    if (n > 1) ++factors;
    return (factors % 2 == 0) ? 1 : -1;
}

}  // namespace charvar
