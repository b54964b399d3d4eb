#pragma once

#include <cctype>
#include <sstream>

#include "f1/arith.hpp"

namespace f1 {

/// N(q) = sum a_k q^k with integer coefficients; coeffs()[k] = a_k, no trailing zeros.
class CountingPolynomial {
public:
    CountingPolynomial() = default;
    explicit CountingPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static CountingPolynomial constant(const Int& c) { return CountingPolynomial({c}); }
    static CountingPolynomial q() { return CountingPolynomial({0, 1}); }
    static CountingPolynomial q_minus_one_power(unsigned d) {
        CountingPolynomial p = constant(1);
        for (unsigned i = 0; i < d; ++i) p = p * CountingPolynomial({-1, 1});
        return p;
    }

    /// sum b_k (q-1)^k  ->  sum a_k q^k
    static CountingPolynomial from_q_minus_one_basis(const std::vector<Int>& b) {
        std::vector<Int> a(b.size(), Int(0));
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j <= k; ++j) {
                Int term = b[k] * binomial(unsigned(k), unsigned(j));
                a[j] += ((k - j) % 2 == 0) ? term : Int(-term);
            }
        return CountingPolynomial(a);
    }

    /// Coefficients b_k with N(q) = sum b_k (q-1)^k (expand q = (q-1) + 1).
    std::vector<Int> to_q_minus_one_basis() const {
        std::vector<Int> b(coeffs_.size(), Int(0));
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            for (std::size_t j = 0; j <= k; ++j) b[j] += coeffs_[k] * binomial(unsigned(k), unsigned(j));
        return b;
    }

    const std::vector<Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Int coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Int(0); }
    Int leading() const { return coeffs_.empty() ? Int(0) : coeffs_.back(); }

    Int operator()(const Int& q) const {
        Int s = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) s = s * q + *it;
        return s;
    }

    friend CountingPolynomial operator+(const CountingPolynomial& a, const CountingPolynomial& b) {
        std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return CountingPolynomial(c);
    }
    friend CountingPolynomial operator-(const CountingPolynomial& a, const CountingPolynomial& b) {
        return a + b * constant(-1);
    }
    friend CountingPolynomial operator*(const CountingPolynomial& a, const CountingPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return CountingPolynomial(c);
    }
    bool operator==(const CountingPolynomial&) const = default;

    /// Canonical text with descending powers: "q^4+q^3+2q^2+q+1", "q^3-q", "0".
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            const Int& c = coeffs_[k];
            if (c == 0) continue;
            Int mag = abs(c);
            if (c < 0)
                os << "-";
            else if (!first)
                os << "+";
            if (k == 0 || mag != 1) os << mag;
            if (k >= 1) os << "q";
            if (k >= 2) os << "^" << k;
            first = false;
        }
        return os.str();
    }

    /// Parses sums of terms c, cq, c*q, cq^k, q^k with optional signs and spaces.
    static CountingPolynomial parse(const std::string& text) {
        std::vector<Int> c;
        std::size_t i = 0;
        auto fail = [&](const std::string& why) {
            throw ValidationError("polynomial parse error at column " + std::to_string(i + 1) + ": " + why);
        };
        auto skip = [&] {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        };
        auto number = [&]() -> std::optional<Int> {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) return std::nullopt;
            return Int(text.substr(start, i - start));
        };
        skip();
        if (i == text.size()) fail("empty input");
        bool first = true;
        while (true) {
            skip();
            if (i == text.size()) break;
            int sign = 1;
            if (text[i] == '+' || text[i] == '-') {
                sign = text[i] == '-' ? -1 : 1;
                ++i;
                skip();
            } else if (!first) {
                fail("expected + or -");
            }
            first = false;
            auto coef = number();
            skip();
            if (coef && i < text.size() && text[i] == '*') {
                ++i;
                skip();
                if (i == text.size() || text[i] != 'q') fail("expected q after *");
            }
            std::size_t power = 0;
            if (i < text.size() && text[i] == 'q') {
                ++i;
                power = 1;
                skip();
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    skip();
                    auto e = number();
                    if (!e) fail("expected exponent");
                    power = static_cast<std::size_t>(to_i64(*e));
                    if (power > 64) fail("exponent too large");
                }
            } else if (!coef) {
                fail("expected a term");
            }
            if (c.size() <= power) c.resize(power + 1, Int(0));
            c[power] += Int(sign) * (coef ? *coef : Int(1));
        }
        return CountingPolynomial(c);
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Int> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const CountingPolynomial& p) { return os << p.to_string(); }

}  // namespace f1
