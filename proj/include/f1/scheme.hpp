#pragma once

#include <map>
#include <numeric>

#include "f1/spectrum.hpp"

namespace f1 {

/// Identifies the principal open D(F_a) of chart a with D(F_b) of chart b through the group
/// isomorphism `iso` (a width_b x width_a matrix) carrying A_a[-F_a] onto A_b[-F_b].
struct GluingRecord {
    std::size_t chart_a = 0;
    std::vector<std::size_t> face_a;
    std::size_t chart_b = 0;
    std::vector<std::size_t> face_b;
    IntMatrix iso;
};

/// A point of a chart: the prime whose complement is faces()[face] of that chart.
struct ChartPoint {
    std::size_t chart = 0;
    std::size_t face = 0;
    auto operator<=>(const ChartPoint&) const = default;
};

struct SchemeFlags {
    bool connected = false;
    bool integral = false;
    bool finite_type = false;
    bool exponent_one = false;
    bool operator==(const SchemeFlags&) const = default;
};

/// An M-scheme (or M0-scheme when the charts are pointed) given by finitely many affine charts
/// and gluing records. Points are classes of chart points; the representative is the one with
/// the lowest (chart, face) and points are listed in representative order.
class MScheme {
public:
    MScheme(std::vector<AffineMonoid> charts, std::vector<GluingRecord> gluings = {})
        : charts_(std::move(charts)), gluings_(std::move(gluings)) {
        build();
    }

    static MScheme affine(AffineMonoid A) { return MScheme({std::move(A)}); }

    const std::vector<AffineMonoid>& charts() const { return charts_; }
    const std::vector<GluingRecord>& gluings() const { return gluings_; }
    bool pointed() const { return charts_.front().pointed(); }
    std::size_t size() const { return members_.size(); }

    const ChartPoint& representative(std::size_t x) const { return members_.at(x).front(); }
    const std::vector<ChartPoint>& members(std::size_t x) const { return members_.at(x); }

    std::optional<std::size_t> point_of(std::size_t chart, std::size_t face) const {
        auto it = point_index_.find(ChartPoint{chart, face});
        if (it == point_index_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<std::size_t> member_in_chart(std::size_t x, std::size_t chart) const {
        for (const auto& m : members_.at(x))
            if (m.chart == chart) return m.face;
        return std::nullopt;
    }

    /// x <= y iff y lies in the closure of x; read off in any chart containing y.
    bool leq(std::size_t x, std::size_t y) const {
        const ChartPoint& ry = representative(y);
        auto fx = member_in_chart(x, ry.chart);
        if (!fx) return false;
        const auto& gx = charts_[ry.chart].faces()[*fx].members;
        const auto& gy = charts_[ry.chart].faces()[ry.face].members;
        return std::includes(gx.begin(), gx.end(), gy.begin(), gy.end());
    }

    AffineMonoid stalk(std::size_t x) const {
        const ChartPoint& r = representative(x);
        return invert_face(charts_[r.chart], charts_[r.chart].faces()[r.face].members);
    }

    /// Units of the stalk: the group generated by the face.
    AbelianGroupInv unit_group(std::size_t x) const {
        const ChartPoint& r = representative(x);
        return subgroup_invariants(charts_[r.chart].ambient(), charts_[r.chart].face_generators(charts_[r.chart].faces()[r.face]));
    }

    std::size_t rank(std::size_t x) const { return unit_group(x).free_rank; }

    /// Connected components of the point poset, each a sorted list of points.
    std::vector<std::vector<std::size_t>> components() const {
        std::vector<std::size_t> parent(size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (std::size_t x = 0; x < size(); ++x)
            for (std::size_t y = 0; y < size(); ++y)
                if (leq(x, y)) parent[find(x)] = find(y);
        std::map<std::size_t, std::vector<std::size_t>> groups;
        for (std::size_t x = 0; x < size(); ++x) groups[find(x)].push_back(x);
        std::vector<std::vector<std::size_t>> out;
        for (auto& [root, pts] : groups) out.push_back(pts);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    void build() {
        if (charts_.empty()) throw ValidationError("scheme: at least one chart is required");
        for (const auto& c : charts_)
            if (c.pointed() != charts_.front().pointed())
                throw ValidationError("scheme: charts must all be pointed or all be unpointed");
        std::vector<std::size_t> offset{0};
        for (const auto& c : charts_) offset.push_back(offset.back() + c.faces().size());
        std::vector<std::size_t> parent(offset.back());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
            return parent[v] == v ? v : parent[v] = find(parent[v]);
        };
        for (std::size_t gi = 0; gi < gluings_.size(); ++gi) {
            const GluingRecord& g = gluings_[gi];
            std::string where = "gluing " + std::to_string(gi) + ": ";
            if (g.chart_a >= charts_.size() || g.chart_b >= charts_.size())
                throw ValidationError(where + "chart index out of range");
            const AffineMonoid& A = charts_[g.chart_a];
            const AffineMonoid& B = charts_[g.chart_b];
            if (!A.face_index(g.face_a) || !B.face_index(g.face_b))
                throw ValidationError(where + "glued subsets are not faces of their charts");
            if (g.iso.rows() != B.ambient().width() || g.iso.cols() != A.ambient().width())
                throw ValidationError(where + "iso has the wrong shape");
            auto phi = [&](const IntVector& v) { return B.ambient().normalize(g.iso * v); };
            AffineMonoid La = invert_face(A, g.face_a);
            AffineMonoid Lb = invert_face(B, g.face_b);
            std::vector<IntVector> images;
            for (const auto& v : La.generators()) images.push_back(phi(v));
            MonoidHom{La, Lb, images}.validate();
            if (!Lb.with_generators(images).same_submonoid(Lb) || group_completion(La) != group_completion(Lb))
                throw ValidationError(where + "iso does not map the overlap isomorphically");
            for (std::size_t fa = 0; fa < A.faces().size(); ++fa) {
                const auto& G = A.faces()[fa].members;
                if (!std::includes(G.begin(), G.end(), g.face_a.begin(), g.face_a.end())) continue;
                std::vector<IntVector> img;
                AffineMonoid local = invert_face(A, G);
                for (const auto& v : local.generators()) img.push_back(phi(v));
                AffineMonoid target = B.with_generators(img);
                std::optional<std::size_t> match;
                for (std::size_t fb = 0; fb < B.faces().size() && !match; ++fb) {
                    const auto& H = B.faces()[fb].members;
                    if (std::includes(H.begin(), H.end(), g.face_b.begin(), g.face_b.end()) &&
                        invert_face(B, H).same_submonoid(target))
                        match = fb;
                }
                if (!match) throw ValidationError(where + "a point of the overlap has no partner");
                parent[find(offset[g.chart_a] + fa)] = find(offset[g.chart_b] + *match);
            }
        }
        std::map<std::size_t, std::vector<ChartPoint>> classes;
        for (std::size_t c = 0; c < charts_.size(); ++c)
            for (std::size_t f = 0; f < charts_[c].faces().size(); ++f) classes[find(offset[c] + f)].push_back({c, f});
        for (auto& [root, pts] : classes) {
            std::sort(pts.begin(), pts.end());
            for (std::size_t i = 0; i + 1 < pts.size(); ++i)
                if (pts[i].chart == pts[i + 1].chart)
                    throw ValidationError("scheme: gluing identifies two points of chart " + std::to_string(pts[i].chart));
            members_.push_back(pts);
        }
        std::sort(members_.begin(), members_.end());
        for (std::size_t x = 0; x < members_.size(); ++x)
            for (const auto& m : members_[x]) point_index_[m] = x;
    }

    std::vector<AffineMonoid> charts_;
    std::vector<GluingRecord> gluings_;
    std::vector<std::vector<ChartPoint>> members_;
    std::map<ChartPoint, std::size_t> point_index_;
};

inline SchemeFlags classify(const MScheme& X) {
    SchemeFlags f;
    f.connected = X.components().size() == 1;
    // Charts live inside abelian groups, so every stalk (minus its zero) is cancellative, and
    // stalks are localizations of finitely generated monoids.
    f.integral = true;
    f.finite_type = true;
    f.exponent_one = true;
    for (std::size_t x = 0; x < X.size(); ++x)
        if (!X.unit_group(x).is_torsion_free()) f.exponent_one = false;
    return f;
}

inline std::vector<std::size_t> minimal_rank_points(const MScheme& X) {
    std::size_t low = SIZE_MAX;
    for (std::size_t x = 0; x < X.size(); ++x) low = std::min(low, X.rank(x));
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < X.size(); ++x)
        if (X.rank(x) == low) out.push_back(x);
    return out;
}

inline MScheme disjoint_union(const MScheme& X, const MScheme& Y) {
    auto charts = X.charts();
    charts.insert(charts.end(), Y.charts().begin(), Y.charts().end());
    auto gluings = X.gluings();
    for (auto g : Y.gluings()) {
        g.chart_a += X.charts().size();
        g.chart_b += X.charts().size();
        gluings.push_back(std::move(g));
    }
    return MScheme(std::move(charts), std::move(gluings));
}

/// The same scheme with a zero adjoined in every chart.
inline MScheme adjoin_zero(const MScheme& X) {
    std::vector<AffineMonoid> charts;
    for (const auto& c : X.charts()) charts.push_back(adjoin_zero(c));
    return MScheme(std::move(charts), X.gluings());
}

/// The sub-scheme on the charts listed (gluings among them are kept).
inline MScheme restrict_to_charts(const MScheme& X, const std::vector<std::size_t>& charts) {
    std::vector<AffineMonoid> cs;
    std::map<std::size_t, std::size_t> renumber;
    for (auto c : charts) {
        renumber[c] = cs.size();
        cs.push_back(X.charts().at(c));
    }
    std::vector<GluingRecord> gs;
    for (auto g : X.gluings())
        if (renumber.count(g.chart_a) && renumber.count(g.chart_b)) {
            g.chart_a = renumber[g.chart_a];
            g.chart_b = renumber[g.chart_b];
            gs.push_back(std::move(g));
        }
    return MScheme(std::move(cs), std::move(gs));
}

/// Γ(X, O_X). One chart: the chart monoid. Several charts of one connected component: every
/// chart is carried into chart 0's coordinates along the gluing isos and the global sections are
/// the intersection, which needs saturated charts whose group completion is the full torsion-free
/// ambient lattice and isos that agree around cycles. Disconnected unpointed schemes give the
/// product over components.
inline AffineMonoid global_sections(const MScheme& X) {
    auto comps = X.components();
    if (comps.size() > 1) {
        if (X.pointed()) throw UnsupportedError("global sections: disconnected pointed schemes are not supported");
        std::optional<AffineMonoid> out;
        for (const auto& comp : comps) {
            std::set<std::size_t> cs;
            for (auto x : comp)
                for (const auto& m : X.members(x)) cs.insert(m.chart);
            AffineMonoid part = global_sections(restrict_to_charts(X, {cs.begin(), cs.end()}));
            out = out ? product(*out, part) : part;
        }
        return *out;
    }
    if (X.charts().size() == 1) return X.charts().front();
    const AmbientGroup& G = X.charts().front().ambient();
    if (!G.is_torsion_free()) throw UnsupportedError("global sections: charts with torsion are not supported");
    for (const auto& c : X.charts()) {
        if (!(c.ambient() == G)) throw UnsupportedError("global sections: charts live in different ambient groups");
        for (std::size_t i = 0; i < G.rank; ++i)
            if (!subgroup_contains(G, c.generators(), unit_vector(G.rank, i)))
                throw UnsupportedError("global sections: a chart does not generate its ambient lattice");
    }
    const std::size_t n = X.charts().size();
    std::vector<std::optional<IntMatrix>> to_base(n);
    to_base[0] = IntMatrix::identity(G.rank);
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto& g : X.gluings()) {
            if (to_base[g.chart_a] && !to_base[g.chart_b]) {
                to_base[g.chart_b] = *to_base[g.chart_a] * unimodular_inverse(g.iso);
                grew = true;
            } else if (to_base[g.chart_b] && !to_base[g.chart_a]) {
                to_base[g.chart_a] = *to_base[g.chart_b] * g.iso;
                grew = true;
            }
        }
    }
    for (const auto& g : X.gluings())
        if (!(*to_base[g.chart_a] == *to_base[g.chart_b] * g.iso))
            throw UnsupportedError("global sections: gluing isos disagree around a cycle");
    std::vector<AffineMonoid> moved;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<IntVector> gens;
        for (const auto& v : X.charts()[c].generators()) gens.push_back(*to_base[c] * v);
        moved.emplace_back(G, gens, X.pointed());
    }
    return intersect_saturated(moved);
}

/// Chart-level data of a morphism f: X -> Y of monoidal spaces: the point map and, for each
/// point x, the stalk map O_{Y,f(x)} -> O_{X,x}.
struct SchemeMorphism {
    std::vector<std::size_t> point_map;
    std::vector<MonoidHom> stalk_maps;
};

/// Local: a stalk element maps to a unit exactly when it is a unit. The preimage of the units is
/// a face, so testing the generators suffices.
inline bool is_local_morphism(const MScheme& X, const MScheme& Y, const SchemeMorphism& f) {
    if (f.point_map.size() != X.size() || f.stalk_maps.size() != X.size()) return false;
    for (std::size_t x = 0; x < X.size(); ++x) {
        std::size_t y = f.point_map[x];
        if (y >= Y.size()) return false;
        const MonoidHom& h = f.stalk_maps[x];
        if (!h.source.same_submonoid(Y.stalk(y)) || !h.target.same_submonoid(X.stalk(x))) return false;
        for (std::size_t i = 0; i < h.source.generators().size(); ++i) {
            bool unit_image = h.target.is_unit(h.images[i]);
            if (unit_image != h.source.is_unit(h.source.generators()[i])) return false;
        }
    }
    for (std::size_t x = 0; x < X.size(); ++x)
        for (std::size_t x2 = 0; x2 < X.size(); ++x2)
            if (X.leq(x, x2) && !Y.leq(f.point_map[x], f.point_map[x2])) return false;
    return true;
}

/// Spec B -> Spec A induced by phi: A -> B; a prime q of B goes to phi^{-1}(q).
inline SchemeMorphism spec_morphism(const MonoidHom& phi) {
    phi.validate();
    const AffineMonoid& A = phi.source;
    const AffineMonoid& B = phi.target;
    SchemeMorphism f;
    for (const auto& face : B.faces()) {
        AffineMonoid Bq = invert_face(B, face.members);
        std::vector<std::size_t> pre;
        for (std::size_t i = 0; i < A.generators().size(); ++i)
            if (Bq.is_unit(phi.images[i])) pre.push_back(i);
        auto idx = A.face_index(pre);
        if (!idx) throw Error("spec morphism: preimage of a prime is not prime");
        f.point_map.push_back(*idx);
        AffineMonoid Ap = invert_face(A, pre);
        std::vector<IntVector> images;
        for (const auto& g : Ap.generators()) images.push_back(phi.apply(g));
        f.stalk_maps.push_back(MonoidHom{Ap, Bq, images});
    }
    return f;
}

inline std::ostream& operator<<(std::ostream& os, const SchemeFlags& f) {
    return os << "{connected=" << f.connected << ", integral=" << f.integral << ", finite_type=" << f.finite_type
              << ", exponent_one=" << f.exponent_one << "}";
}

}  // namespace f1
