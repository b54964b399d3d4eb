#pragma once

#include <map>

#include "f1/polynomial.hpp"
#include "f1/scheme.hpp"

namespace f1 {

struct CountRecord {
    Int q;
    Int count;
    std::string method;
};

inline void require_prime_power(const Int& q) {
    if (!is_prime_power(q)) throw ValidationError("q = " + q.str() + " is not a prime power");
}

/// #X(F_q) by summing #Hom(units of the stalk, F_q^*) over the points: a ring map Z[A] -> F_q is a
/// monoid map A -> (F_q, *), and its kernel prime picks out the point.
inline CountRecord count_points(const MScheme& X, const Int& q) {
    require_prime_power(q);
    Int n = 0;
    for (std::size_t x = 0; x < X.size(); ++x) n += hom_count_to_cyclic(X.unit_group(x), q - 1);
    return {q, n, "stalk-formula"};
}

inline CountRecord count_points(const AffineMonoid& A, const Int& q) { return count_points(MScheme::affine(A), q); }

/// The symbolic count: sum over torsion types T of P_T(q) * prod_{d in T} gcd(d, q-1).
/// Polynomial exactly when every stalk unit group is torsion-free.
class CountingFunction {
public:
    using Torsion = std::vector<Int>;

    CountingFunction() = default;
    explicit CountingFunction(std::map<Torsion, CountingPolynomial> parts) {
        for (auto& [t, p] : parts)
            if (!p.is_zero()) parts_.emplace(t, std::move(p));
    }

    const std::map<Torsion, CountingPolynomial>& parts() const { return parts_; }

    bool is_polynomial() const { return parts_.empty() || (parts_.size() == 1 && parts_.begin()->first.empty()); }

    /// The polynomial, or nullopt when torsion makes the count depend on q-1 modulo the torsion orders.
    std::optional<CountingPolynomial> polynomial() const {
        if (!is_polynomial()) return std::nullopt;
        return parts_.empty() ? CountingPolynomial() : parts_.begin()->second;
    }

    /// lcm of all torsion orders; the count is polynomial on each class of q-1 modulo this.
    Int modulus() const {
        Int L = 1;
        for (const auto& [t, p] : parts_)
            for (const auto& d : t) L = lcm(L, d);
        return L;
    }

    /// The polynomial valid for q with q-1 = r (mod modulus()).
    CountingPolynomial polynomial_on_class(const Int& r) const {
        CountingPolynomial out;
        for (const auto& [t, p] : parts_) {
            Int g = 1;
            for (const auto& d : t) g *= gcd(d, ((r % d) + d) % d);
            out = out + CountingPolynomial::constant(g) * p;
        }
        return out;
    }

    Int operator()(const Int& q) const { return polynomial_on_class(q - 1)(q); }

    std::string to_string() const {
        if (parts_.empty()) return "0";
        std::string s;
        for (const auto& [t, p] : parts_) {
            if (!s.empty()) s += " + ";
            std::string guard;
            for (const auto& d : t) guard += "gcd(" + d.str() + ",q-1)";
            if (t.empty()) {
                s += p.to_string();
            } else if (p == CountingPolynomial::constant(1)) {
                s += guard;
            } else {
                s += "(" + p.to_string() + ")*" + guard;
            }
        }
        return s;
    }

private:
    std::map<Torsion, CountingPolynomial> parts_;
};

inline CountingFunction counting_polynomial(const MScheme& X) {
    std::map<CountingFunction::Torsion, CountingPolynomial> parts;
    for (std::size_t x = 0; x < X.size(); ++x) {
        auto U = X.unit_group(x);
        auto& slot = parts[U.invariant_factors];
        slot = slot + CountingPolynomial::q_minus_one_power(static_cast<unsigned>(U.free_rank));
    }
    return CountingFunction(std::move(parts));
}

inline CountingFunction counting_polynomial(const AffineMonoid& A) { return counting_polynomial(MScheme::affine(A)); }

}  // namespace f1
