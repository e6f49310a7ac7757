#pragma once

// The box Pi(m), the polytopes Q^f(m), P^f(m), Q^h(m), lattice-point
// multiplicities and the prism decomposition of Q^f(m) for even m.

#include "dsf/spaces.hpp"

#include <set>

namespace dsf {

/// Upper bounds b_0..b_m of a box 0 <= x <= b.
using BoundsVector = IntVector;

/// (C(m,0), ..., C(m,m))
inline BoundsVector default_bounds(int m) {
    BoundsVector b;
    for (int k = 0; k <= m; ++k) b.push_back(binomial(m, k));
    return b;
}

enum class PolytopeLabel { Qf, Pf, Qh, Pi };

inline std::string_view name_of(PolytopeLabel p) {
    switch (p) {
    case PolytopeLabel::Qf: return "Qf";
    case PolytopeLabel::Pf: return "Pf";
    case PolytopeLabel::Qh: return "Qh";
    case PolytopeLabel::Pi: return "Pi";
    }
    return "?";
}

inline PolytopeLabel parse_polytope(std::string_view s) {
    for (auto p : {PolytopeLabel::Qf, PolytopeLabel::Pf, PolytopeLabel::Qh, PolytopeLabel::Pi})
        if (s == name_of(p)) return p;
    throw InputError("unknown polytope '" + std::string(s) + "' (expected Qf, Pf, Qh or Pi)");
}

struct PolytopeHandle {
    PolytopeLabel label;
    int m;
    BoundsVector bounds;
};

inline PolytopeHandle make_polytope(PolytopeLabel label, int m, std::optional<BoundsVector> bounds = std::nullopt) {
    require_m(m);
    if (label == PolytopeLabel::Pf && m % 2 != 0) throw InputError("Pf is defined only for even m");
    BoundsVector b = bounds ? *bounds : default_bounds(m);
    if (b.size() != static_cast<std::size_t>(m) + 1) throw InputError("bounds must have m+1 components");
    for (const auto& x : b)
        if (x < 0) throw InputError("bounds must be nonnegative");
    return {label, m, std::move(b)};
}

template <class T>
bool in_box(const std::vector<T>& x, const BoundsVector& b) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < 0 || x[i] > T(b[i])) return false;
    return true;
}

/// Pi: the box. Qf: fixed by D(m) and in the box. Pf: Qf with x_0 = 0.
/// Qh: x * S(m)^-1 lies in Qf.
inline bool contains(const PolytopeHandle& p, const RatVector& x) {
    if (x.size() != static_cast<std::size_t>(p.m) + 1) throw InputError("point must have m+1 components");
    switch (p.label) {
    case PolytopeLabel::Pi: return in_box(x, p.bounds);
    case PolytopeLabel::Qf: return in_eigenspace(x, FH::f, p.m) && in_box(x, p.bounds);
    case PolytopeLabel::Pf: return x[0] == 0 && in_eigenspace(x, FH::f, p.m) && in_box(x, p.bounds);
    case PolytopeLabel::Qh: {
        const RatVector y = x * ExactMatrix::convert(s_inverse(static_cast<std::size_t>(p.m)));
        return in_eigenspace(y, FH::f, p.m) && in_box(y, p.bounds);
    }
    }
    throw std::logic_error("unreachable");
}

inline bool contains(const PolytopeHandle& p, const IntVector& x) { return contains(p, to_rat_vector(x)); }

/// Qh membership the other way round: x * (I - U(m)) = 0 on the first `columns`
/// columns, and x * S(m)^-1 in the box.
inline bool contains_Qh_by_relations(const RatVector& x, int m, std::size_t columns) {
    const auto n = static_cast<std::size_t>(m);
    const IntMatrix iu = IntMatrix::identity(n + 1) - backward_identity(n);
    const RatVector r = x * ExactMatrix::convert(iu);
    for (std::size_t j = 0; j < std::min(columns, n + 1); ++j)
        if (r[j] != 0) return false;
    return in_box(x * ExactMatrix::convert(s_inverse(n)), default_bounds(m));
}

/// Number of columns of I - U(m) that suffice: floor((m+1)/2).
inline std::size_t qh_relation_columns(int m) { return static_cast<std::size_t>((m + 1) / 2); }

/// Dimension of the solution space of x_{k-1} = x_{m-k+1}, 1 <= k <= floor((m+1)/2).
inline std::size_t qh_center_dimension(int m) {
    const auto n = static_cast<std::size_t>(m);
    return left_kernel_dimension(IntMatrix::identity(n + 1) - backward_identity(n));
}

/// Number of face systems with long f-vector z: prod_k C(C(m,k), z_k).
inline Integer multiplicity(const IntVector& z, int m) {
    require_m(m);
    if (z.size() != static_cast<std::size_t>(m) + 1) throw InputError("point must have m+1 components");
    if (!in_box(z, default_bounds(m))) throw InputError("point " + to_string(z) + " outside the binomial box");
    Integer prod = 1;
    for (int k = 0; k <= m; ++k) prod *= binomial(static_cast<long long>(binomial(m, k)), static_cast<long long>(z[k]));
    return prod;
}

/// For even m: the lattice points of Q^f(m) are exactly (0, beta) and (1, beta)
/// for (0, beta) in P^f(m), so |Q^f| = 2 |P^f|.
inline VerificationReport prism_check(int m, const std::vector<IntVector>& qf_points,
                                      const std::vector<IntVector>& pf_points) {
    require_m(m);
    if (m % 2 != 0) throw InputError("prism_check requires even m");
    VerificationReport report("prism");
    std::set<IntVector> qf(qf_points.begin(), qf_points.end());
    std::set<IntVector> image;
    for (const auto& beta : pf_points) {
        report.check(beta[0] == 0, m, "pf_first_coordinate_zero", {}, "0", to_string(beta));
        IntVector lifted = beta;
        for (int a0 : {0, 1}) {
            lifted[0] = a0;
            report.check(qf.count(lifted) == 1, m, "lift_in_qf", {a0}, "present", to_string(lifted));
            image.insert(lifted);
        }
    }
    report.check(image == qf, m, "bijection", {}, std::to_string(qf.size()), std::to_string(image.size()));
    report.expect_equal(2 * pf_points.size(), qf_points.size(), m, "count");
    return report;
}

} // namespace dsf
