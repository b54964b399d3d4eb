#pragma once

#include <functional>
#include <map>
#include <memory>
#include <random>

#include "f1/monoid.hpp"
#include "f1/table_monoid.hpp"

namespace f1 {

template <class M>
struct ring_traits;

template <>
struct ring_traits<AffineMonoid> {
    using Key = IntVector;
    static Key one(const AffineMonoid& A) { return A.ambient().identity(); }
    static std::optional<Key> multiply(const AffineMonoid& A, const Key& a, const Key& b) { return A.ambient().add(a, b); }
    static Key power(const AffineMonoid& A, const Key& a, unsigned k) { return A.ambient().scale(Int(k), a); }
    static void check(const AffineMonoid& A, const Key& a) {
        IntVector n = A.ambient().normalize(a);
        if (!is_zero(n) && !A.contains(n)) throw ValidationError("semigroup ring: element outside the monoid");
    }
    static std::string name(const AffineMonoid&, const Key& a) { return "t" + to_string(a); }
};

template <>
struct ring_traits<TableMonoid> {
    using Key = std::size_t;
    static Key one(const TableMonoid& M) { return M.identity(); }
    /// The monoid zero is identified with the ring zero.
    static std::optional<Key> multiply(const TableMonoid& M, const Key& a, const Key& b) {
        Key c = M.multiply(a, b);
        if (M.zero() && c == *M.zero()) return std::nullopt;
        return c;
    }
    static Key power(const TableMonoid& M, const Key& a, unsigned k) { return M.power(a, k); }
    static void check(const TableMonoid& M, const Key& a) {
        if (a >= M.size()) throw ValidationError("semigroup ring: element outside the monoid");
    }
    static std::string name(const TableMonoid& M, const Key& a) { return M.names()[a]; }
};

/// An element of Z[A] (or Z[A]/(0_A ~ 0) when A is pointed): finitely many monoid elements
/// with nonzero integer coefficients.
template <class M>
class RingElement {
public:
    using Traits = ring_traits<M>;
    using Key = typename Traits::Key;

    explicit RingElement(std::shared_ptr<const M> owner) : owner_(std::move(owner)) {}

    static RingElement monomial(std::shared_ptr<const M> owner, const Key& a, const Int& c = 1) {
        RingElement r(std::move(owner));
        Traits::check(*r.owner_, a);
        r.add_term(normalize(*r.owner_, a), c);
        return r;
    }

    static RingElement constant(std::shared_ptr<const M> owner, const Int& c) {
        auto one = Traits::one(*owner);
        return monomial(std::move(owner), one, c);
    }

    const M& owner() const { return *owner_; }
    const std::shared_ptr<const M>& owner_ptr() const { return owner_; }
    const std::map<Key, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coefficient(const Key& a) const {
        auto it = terms_.find(a);
        return it == terms_.end() ? Int(0) : it->second;
    }

    friend RingElement operator+(const RingElement& x, const RingElement& y) {
        x.same_owner(y);
        RingElement r = x;
        for (const auto& [k, c] : y.terms_) r.add_term(k, c);
        return r;
    }

    friend RingElement operator-(const RingElement& x) {
        RingElement r = x;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }

    friend RingElement operator-(const RingElement& x, const RingElement& y) { return x + (-y); }

    friend RingElement operator*(const RingElement& x, const RingElement& y) {
        x.same_owner(y);
        RingElement r(x.owner_);
        for (const auto& [a, c] : x.terms_)
            for (const auto& [b, d] : y.terms_)
                if (auto ab = Traits::multiply(*x.owner_, a, b)) r.add_term(*ab, c * d);
        return r;
    }

    RingElement pow(unsigned k) const {
        RingElement r = constant(owner_, 1);
        for (unsigned i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    /// Apply a monoid endomorphism to the support, keeping the coefficients.
    RingElement map_support(const std::function<std::optional<Key>(const Key&)>& f) const {
        RingElement r(owner_);
        for (const auto& [a, c] : terms_)
            if (auto b = f(a)) r.add_term(*b, c);
        return r;
    }

    bool operator==(const RingElement& o) const { return *owner_ == *o.owner_ && terms_ == o.terms_; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [a, c] : terms_) {
            s += (c < 0 ? "-" : (first ? "" : "+"));
            Int m = abs(c);
            if (m != 1) s += m.str() + "*";
            s += Traits::name(*owner_, a);
            first = false;
        }
        return s;
    }

private:
    static Key normalize(const M& A, const Key& a) {
        if constexpr (std::is_same_v<M, AffineMonoid>) {
            return A.ambient().normalize(a);
        } else {
            return a;
        }
    }

    void same_owner(const RingElement& o) const {
        if (owner_ != o.owner_ && !(*owner_ == *o.owner_))
            throw ValidationError("semigroup ring: elements belong to different monoids");
    }

    void add_term(const Key& a, const Int& c) {
        if constexpr (std::is_same_v<M, TableMonoid>) {
            if (owner_->zero() && a == *owner_->zero()) return;
        }
        Int& slot = terms_[a];
        slot += c;
        if (slot == 0) terms_.erase(a);
    }

    std::shared_ptr<const M> owner_;
    std::map<Key, Int> terms_;
};

/// psi_p: a -> a^p on the support.
template <class M>
RingElement<M> psi(const RingElement<M>& x, unsigned p) {
    if (!is_prime(Int(p))) throw ValidationError("psi: " + std::to_string(p) + " is not prime");
    const M& A = x.owner();
    return x.map_support([&](const auto& a) -> std::optional<typename ring_traits<M>::Key> {
        auto b = ring_traits<M>::power(A, a, p);
        if constexpr (std::is_same_v<M, TableMonoid>) {
            if (A.zero() && b == *A.zero()) return std::nullopt;
        }
        return b;
    });
}

/// Whether psi(x) and x^p agree coefficientwise modulo p (the Frobenius-lift square).
/// A replacement for psi_p can be supplied to test other endomorphisms.
template <class M>
bool frobenius_check(const RingElement<M>& x, unsigned p,
                     const std::function<RingElement<M>(const RingElement<M>&)>& lift = nullptr) {
    if (!is_prime(Int(p))) throw ValidationError("frobenius check: " + std::to_string(p) + " is not prime");
    RingElement<M> image = lift ? lift(x) : psi(x, p);
    RingElement<M> diff = image - x.pow(p);
    for (const auto& [a, c] : diff.terms())
        if (c % p != 0) return false;
    return true;
}

/// Pseudo-random element of Z[A]: `terms` monomials, each a sum of up to `max_degree` generators,
/// with coefficients in [-coeff_bound, coeff_bound].
inline RingElement<AffineMonoid> random_element(const std::shared_ptr<const AffineMonoid>& A, std::mt19937_64& rng,
                                                std::size_t terms = 4, unsigned max_degree = 3, long coeff_bound = 9) {
    RingElement<AffineMonoid> x(A);
    std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
    std::uniform_int_distribution<unsigned> degree(0, max_degree);
    const auto& gens = A->generators();
    for (std::size_t t = 0; t < terms; ++t) {
        IntVector m = A->ambient().identity();
        if (!gens.empty()) {
            std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
            for (unsigned d = degree(rng); d > 0; --d) m = A->ambient().add(m, gens[pick(rng)]);
        }
        x = x + RingElement<AffineMonoid>::monomial(A, m, coeff(rng));
    }
    return x;
}

}  // namespace f1
