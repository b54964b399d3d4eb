#pragma once

#include <set>

#include "f1/polynomial.hpp"

namespace f1 {

struct CountSample {
    Int q;
    Int count;
};

/// Interpolates the first degree_bound+1 samples over Q and checks the result against the rest.
inline CountingPolynomial fit_counting_polynomial(const std::vector<CountSample>& samples, unsigned degree_bound) {
    std::set<Int> seen;
    for (const auto& s : samples) {
        if (!is_prime_power(s.q)) throw ValidationError("fit: q = " + s.q.str() + " is not a prime power");
        if (!seen.insert(s.q).second) throw ValidationError("fit: q = " + s.q.str() + " sampled twice");
    }
    std::size_t n = degree_bound + 1;
    if (samples.size() < n)
        throw ValidationError("fit: " + std::to_string(samples.size()) + " samples do not determine degree " +
                              std::to_string(degree_bound));

    std::vector<Rational> coeffs(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        // basis polynomial prod_{j != i} (q - q_j) / (q_i - q_j)
        std::vector<Rational> basis{Rational(1)};
        Rational denom = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * Rational(samples[j].q);
            }
            basis = std::move(next);
            denom *= Rational(samples[i].q - samples[j].q);
        }
        for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] += basis[k] * Rational(samples[i].count) / denom;
    }

    std::vector<Int> ints;
    for (std::size_t k = 0; k < n; ++k) {
        if (!is_integer(coeffs[k]))
            throw ValidationError("fit: coefficient of q^" + std::to_string(k) + " is " + coeffs[k].str() +
                                  ", not an integer");
        ints.push_back(boost::multiprecision::numerator(coeffs[k]));
    }
    CountingPolynomial p(ints);
    for (std::size_t i = n; i < samples.size(); ++i)
        if (p(samples[i].q) != samples[i].count)
            throw ValidationError("fit: sample q = " + samples[i].q.str() + " has count " + samples[i].count.str() +
                                  " but the fit " + p.to_string() + " gives " + p(samples[i].q).str());
    return p;
}

/// zeta(s) = prod_k (s - k)^{a_k} for N(q) = sum a_k q^k, stored as its roots.
/// The factor 2*pi of the analytic normalization is dropped.
class ZetaFunction {
public:
    struct Root {
        std::size_t k;
        Int multiplicity;
        bool operator==(const Root&) const = default;
    };

    explicit ZetaFunction(const CountingPolynomial& N) {
        for (std::size_t k = 0; k < N.coeffs().size(); ++k)
            if (N.coeffs()[k] != 0) roots_.push_back({k, N.coeffs()[k]});
    }

    const std::vector<Root>& roots() const { return roots_; }

    /// "(s-0)(s-1)", "(s-1)^-1(s-3)": every root written out, exponents other than 1 shown.
    std::string canonical() const {
        if (roots_.empty()) return "1";
        std::string s;
        for (const auto& r : roots_) {
            s += "(s-" + std::to_string(r.k) + ")";
            if (r.multiplicity != 1) s += "^" + r.multiplicity.str();
        }
        return s;
    }

    /// "s(s-1)", "(s-1)^-1(s-3)"
    std::string pretty() const {
        if (roots_.empty()) return "1";
        std::string s;
        for (const auto& r : roots_) {
            std::string base = r.k == 0 ? "s" : "(s-" + std::to_string(r.k) + ")";
            s += base;
            if (r.multiplicity != 1) s += "^" + r.multiplicity.str();
        }
        return s;
    }

    bool operator==(const ZetaFunction&) const = default;

private:
    std::vector<Root> roots_;
};

inline ZetaFunction zeta(const CountingPolynomial& N) { return ZetaFunction(N); }

}  // namespace f1
