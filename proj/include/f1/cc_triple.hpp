#pragma once

#include "f1/torification.hpp"
#include "f1/zeta.hpp"

namespace f1 {

/// Field sizes at which the bijection e_X(F_q) is checked.
inline const std::vector<Int>& sample_field_sizes() {
    static const std::vector<Int> qs{2, 3, 4, 5, 7, 8, 9};
    return qs;
}

/// (X~, X, e_X) with X~ a pointed M-scheme. The classical side X is carried by its counting
/// polynomial, and e_X by its per-field point counts.
struct GenTorifiedTriple {
    MScheme tilde;
    CountingPolynomial target;
    std::string evaluation = "identity";

    bool operator==(const GenTorifiedTriple& o) const {
        return tilde.charts() == o.tilde.charts() && target == o.target && evaluation == o.evaluation;
    }
};

/// F: X~ -> (X~, X~_Z, id).
inline GenTorifiedTriple f_functor(const MScheme& X) {
    MScheme tilde = X.pointed() ? X : adjoin_zero(X);
    auto N = counting_polynomial(tilde);
    if (!N.is_polynomial())
        throw UnsupportedError("F functor: stalk unit groups with torsion give a non-polynomial count " + N.to_string());
    return {tilde, *N.polynomial(), "identity"};
}

/// The functor-of-points view: for each sampled field, #X~_Z(F_q) and #X(F_q).
struct CCRecord {
    MScheme tilde;
    std::vector<CountSample> source;
    std::vector<CountSample> target;
    std::string evaluation;
    bool verified = false;
    std::vector<std::string> mismatches;
};

inline CCRecord to_cc(const GenTorifiedTriple& t) {
    CCRecord r{t.tilde, {}, {}, t.evaluation, true, {}};
    for (const auto& q : sample_field_sizes()) {
        Int a = count_points(t.tilde, q).count;
        Int b = t.target(q);
        r.source.push_back({q, a});
        r.target.push_back({q, b});
        if (a != b) {
            r.verified = false;
            r.mismatches.push_back("q=" + q.str() + ": X~_Z has " + a.str() + " points, X has " + b.str());
        }
    }
    return r;
}

/// Rebuilds the triple from the recorded counts; X is recovered by interpolation.
inline GenTorifiedTriple from_cc(const CCRecord& r) {
    if (!r.verified) throw ValidationError("from_cc: record failed verification: " + r.mismatches.front());
    unsigned bound = static_cast<unsigned>(r.target.size()) - 1;
    return {r.tilde, fit_counting_polynomial(r.target, bound), r.evaluation};
}

/// X~ is a disjoint union of pointed tori with free unit groups: one point per component and
/// torsion-free units everywhere.
inline bool is_torified_cc(const GenTorifiedTriple& t) {
    for (const auto& comp : t.tilde.components())
        if (comp.size() != 1) return false;
    for (std::size_t x = 0; x < t.tilde.size(); ++x)
        if (!t.tilde.unit_group(x).is_torsion_free()) return false;
    return true;
}

/// Minimal-rank points of X~; each gives exactly one strong morphism from the point.
inline std::size_t f1_points(const GenTorifiedTriple& t) {
    for (std::size_t x = 0; x < t.tilde.size(); ++x)
        if (!t.tilde.unit_group(x).is_torsion_free())
            throw UnsupportedError("F1-points: stalk unit groups with torsion are not handled");
    return minimal_rank_points(t.tilde).size();
}

/// X~ = disjoint union of the pointed tori of a torification, with target N.
inline GenTorifiedTriple torified_triple(const Torification& T, const CountingPolynomial& N) {
    if (T.ranks.empty()) throw ValidationError("torified triple: no tori");
    std::optional<MScheme> X;
    for (auto r : T.ranks) {
        MScheme torus = MScheme::affine(adjoin_zero(AffineMonoid::free_group(r)));
        X = X ? disjoint_union(*X, torus) : torus;
    }
    return {*X, N, "torification"};
}

}  // namespace f1
