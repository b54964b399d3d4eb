#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace f1 {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integer vector; used for lattice points, ray directions and monoid elements.
using IntVector = std::vector<Int>;
using RationalVector = std::vector<Rational>;

// Error hierarchy shared by every module.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input that violates an operation's preconditions.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

/// A size guard (rank cap, element cap, box volume) was exceeded.
class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& what) : Error(what) {}
};

/// The input is valid but lies outside the cases this library decides.
class UnsupportedError : public Error {
public:
    explicit UnsupportedError(const std::string& what) : Error(what) {}
};

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd(const Int& a, const Int& b) {
    Int x = abs(a), y = abs(b);
    while (y != 0) {
        Int r = x % y;
        x = y;
        y = r;
    }
    return x;
}

inline Int lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return abs(a / gcd(a, b) * b);
}

/// Floor division for possibly negative operands.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

/// Non-negative remainder modulo m > 0.
inline Int mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Int pow(const Int& base, unsigned exponent) {
    Int result = 1;
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline Int floor(const Rational& r) {
    return floor_div(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

inline std::int64_t to_i64(const Int& a) {
    if (a > Int(INT64_MAX) || a < Int(INT64_MIN)) throw ResourceError("integer does not fit in 64 bits");
    return static_cast<std::int64_t>(a);
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Returns the prime p with q = p^e (e >= 1), or 0 when q is not a prime power.
inline Int prime_power_base(const Int& q) {
    if (q < 2) return 0;
    Int p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    Int r = q;
    while (r % p == 0) r /= p;
    return r == 1 ? p : Int(0);
}

inline bool is_prime_power(const Int& q) { return prime_power_base(q) != 0; }

/// Prime powers in [2, bound], ascending.
inline std::vector<Int> prime_powers_up_to(const Int& bound) {
    std::vector<Int> out;
    for (Int q = 2; q <= bound; ++q)
        if (is_prime_power(q)) out.push_back(q);
    return out;
}

// ---------------------------------------------------------------------------
// Vector helpers

inline IntVector zero_vector(std::size_t n) { return IntVector(n, Int(0)); }

inline IntVector unit_vector(std::size_t n, std::size_t i) {
    IntVector v(n, Int(0));
    v[i] = 1;
    return v;
}

inline bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

inline Int dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw ValidationError("dot: dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IntVector operator+(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw ValidationError("vector sum: dimension mismatch");
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVector operator-(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw ValidationError("vector difference: dimension mismatch");
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVector operator-(const IntVector& a) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline IntVector operator*(const Int& c, const IntVector& a) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline Int content(const IntVector& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

/// Divides out the gcd of the entries. The zero vector is returned unchanged.
inline IntVector primitive(const IntVector& v) {
    Int g = content(v);
    if (g == 0 || g == 1) return v;
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

/// Clears denominators and reduces to a primitive integer vector (direction only).
inline IntVector primitive(const RationalVector& v) {
    Int l = 1;
    for (const auto& x : v) l = lcm(l, boost::multiprecision::denominator(x));
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = boost::multiprecision::numerator(v[i]) * (l / boost::multiprecision::denominator(v[i]));
    return primitive(r);
}

inline RationalVector to_rational(const IntVector& v) { return RationalVector(v.begin(), v.end()); }

template <class T>
std::string to_string(const std::vector<T>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

}  // namespace f1
