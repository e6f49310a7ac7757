#pragma once

// Eigenspaces E^h(m), E^f(m), the hyperplanes H(m), F(m), the cone generator
// sequences and their coordinate tables, and the DS f-vector span statements.

#include "dsf/bases.hpp"

namespace dsf {

/// (1, ..., 1)
inline IntVector iota(int m) { return IntVector(static_cast<std::size_t>(m) + 1, Integer(1)); }

/// (C(m+1,0), ..., C(m+1,m))
inline IntVector pi_vector(int m) {
    IntVector v;
    for (int k = 0; k <= m; ++k) v.push_back(binomial(m + 1, k));
    return v;
}

enum class SubspaceLabel { Eh, H, Ef, F };

inline std::string_view name_of(SubspaceLabel s) {
    switch (s) {
    case SubspaceLabel::Eh: return "Eh";
    case SubspaceLabel::H: return "H";
    case SubspaceLabel::Ef: return "Ef";
    case SubspaceLabel::F: return "F";
    }
    return "?";
}

inline SubspaceLabel parse_subspace(std::string_view s) {
    for (auto l : {SubspaceLabel::Eh, SubspaceLabel::H, SubspaceLabel::Ef, SubspaceLabel::F})
        if (s == name_of(l)) return l;
    throw InputError("unknown subspace '" + std::string(s) + "' (expected Eh, H, Ef or F)");
}

struct SubspaceBasis {
    SubspaceLabel label;
    int m;
    std::vector<IntVector> vectors;
};

/// k in [1, m] with k of parity opposite to m: the indices of the 2^[k]-bar
/// vectors spanning H(m) and F(m).
inline std::vector<int> hyperplane_indices(int m) {
    std::vector<int> ks;
    for (int k = m % 2 == 0 ? 1 : 2; k < m; k += 2) ks.push_back(k);
    return ks;
}

/// H and F: the 2^[k]-bar vectors; Eh adds iota(m), Ef adds pi(m).
inline SubspaceBasis subspace_basis(SubspaceLabel label, int m) {
    require_m(m);
    const FH kind = label == SubspaceLabel::Eh || label == SubspaceLabel::H ? FH::h : FH::f;
    SubspaceBasis out{label, m, {}};
    for (int k : hyperplane_indices(m)) out.vectors.push_back(fh_bar(kind, k, m));
    if (label == SubspaceLabel::Eh) out.vectors.push_back(iota(m));
    if (label == SubspaceLabel::Ef) out.vectors.push_back(pi_vector(m));
    return out;
}

inline SubspaceBasis eigenspace_basis(FH which, int m) {
    return subspace_basis(which == FH::h ? SubspaceLabel::Eh : SubspaceLabel::Ef, m);
}

/// Number of cone generators, ceil((m+1)/2).
inline int generator_count(int m) { return m / 2 + 1; }

/// Sequence (even m): phi_up(i) T^i, 0 <= i <= m/2, entries C(i, l-i).
/// Sequence (odd m): phi_up(i+1) T^i + phi_up(i) T^(i+1), 0 <= i <= (m-1)/2,
/// entries C(i+1, l-i) + C(i, l-i-1). Built by matrix products.
inline std::vector<IntVector> cone_generators(int m) {
    require_m(m);
    const auto n = static_cast<std::size_t>(m);
    const IntMatrix t = forward_shift(n);
    const auto& fup = basis(m, BasisKind::Fup).vectors;
    auto shifted = [&](IntVector v, int times) {
        for (int s = 0; s < times; ++s) v = v * t;
        return v;
    };
    std::vector<IntVector> gens;
    for (int i = 0; i < generator_count(m); ++i) {
        if (m % 2 == 0) {
            gens.push_back(shifted(fup[i], i));
        } else {
            IntVector a = shifted(fup[i + 1], i), b = shifted(fup[i], i + 1);
            for (std::size_t l = 0; l <= n; ++l) a[l] += b[l];
            gens.push_back(std::move(a));
        }
    }
    return gens;
}

/// Coordinates of v in the generator sequence. Generator i starts with a 1
/// in position i, so the first ceil((m+1)/2) coordinates determine the
/// solution by forward substitution; nullopt when v is outside their span.
inline std::optional<IntVector> generator_coordinates(const IntVector& v, int m) {
    const auto gens = cone_generators(m);
    if (v.size() != static_cast<std::size_t>(m) + 1) throw InputError("vector length must be m+1");
    const std::size_t g = gens.size();
    IntVector a(g);
    for (std::size_t i = 0; i < g; ++i) {
        Integer rest = v[i];
        for (std::size_t j = 0; j < i; ++j) rest -= a[j] * gens[j][i];
        a[i] = rest;  // gens[i][i] == 1
    }
    IntVector check(v.size());
    for (std::size_t j = 0; j < g; ++j)
        for (std::size_t l = 0; l < v.size(); ++l) check[l] += a[j] * gens[j][l];
    if (check != v) return std::nullopt;
    return a;
}

/// v * U(m) == v (h side) or v * D(m) == v (f side)
template <class T>
bool in_eigenspace(const std::vector<T>& v, FH which, int m) {
    require_m(m);
    if (v.size() != static_cast<std::size_t>(m) + 1) throw InputError("vector length must be m+1");
    const auto n = static_cast<std::size_t>(m);
    const auto img = which == FH::h ? v * backward_identity(n) : v * d_matrix(n);
    for (std::size_t i = 0; i <= n; ++i)
        if (img[i] != v[i]) return false;
    return true;
}

/// C^f(m) = E^f(m) intersected with the nonnegative orthant.
template <class T>
bool in_cone_Cf(const std::vector<T>& v, int m) {
    if (!in_eigenspace(v, FH::f, m)) return false;
    for (const auto& x : v)
        if (x < 0) return false;
    return true;
}

/// Membership in the cone spanned by the generator sequence.
inline bool in_generated_cone(const IntVector& v, int m) {
    const auto a = generator_coordinates(v, m);
    if (!a) return false;
    for (const auto& x : *a)
        if (x < 0) return false;
    return true;
}

enum class CoordSource { w, wS };

inline std::string_view name_of(CoordSource s) { return s == CoordSource::w ? "w" : "wS"; }

/// Closed forms for the coordinates of generator i (w) and of w*S(m) in each
/// of the six bases. Table index 2 covers even m, index 3 odd m.
inline Integer table23_entry(int table, CoordSource src, BasisKind kind, int i, int l, int m) {
    require_m(m);
    if (table != 2 && table != 3) throw InputError("table must be 2 or 3");
    if ((table == 2) != (m % 2 == 0))
        throw InputError("table " + std::to_string(table) + " requires " + (table == 2 ? "even" : "odd") + " m");
    if (i < 0 || i >= generator_count(m)) throw InputError("generator index out of range");
    if (l < 0 || l > m) throw InputError("l must satisfy 0 <= l <= m");
    auto C = [](long long n, long long r) { return binomial(n, r); };
    auto sgn = [](long long e) { return Integer(sign_pow(e)); };
    auto sum = [](int lo, int hi, auto fn) {
        Integer s = 0;
        for (int x = lo; x <= hi; ++x) s += fn(x);
        return s;
    };
    if (table == 2) {
        if (src == CoordSource::w) {
            switch (kind) {
            case BasisKind::S: return C(i, l - i);
            case BasisKind::Hdot: return sum(i, std::min(2 * i, l), [&](int s) { return C(i, s - i) * C(m - s, m - l); });
            case BasisKind::Fup: return sgn(l) * C(i, l - i);
            case BasisKind::Hup:
                return sgn(l) * sum(std::max(i, m - l), 2 * i, [&](int s) { return C(i, s - i) * C(s, m - l); });
            case BasisKind::Fdown: return sgn(l - i) * C(m - 2 * i, l - i);
            case BasisKind::Hdown: return C(i, m - l - i);
            }
        } else {
            switch (kind) {
            case BasisKind::S: return sgn(l - i) * C(m - 2 * i, l - i);
            case BasisKind::Hdot: return C(i, l - i);
            case BasisKind::Fup:
            case BasisKind::Fdown:
                return sgn(l - i) * sum(std::max(i, l), m - i, [&](int s) { return C(s, l) * C(m - 2 * i, s - i); });
            case BasisKind::Hup: return sgn(l) * C(i, l - i);
            case BasisKind::Hdown: return sgn(l - i) * C(m - 2 * i, l - i);
            }
        }
    } else {
        auto a = [&](int s) { return C(i + 1, s - i) + C(i, s - i - 1); };
        auto bd = [&](int s) { return C(m - 2 * i - 1, s - i) - C(m - 2 * i - 1, s - i - 1); };
        auto rev = [&] { return sgn(l - i - 1) * (C(m - 2 * i - 1, m - l - i) - C(m - 2 * i - 1, m - l - i - 1)); };
        if (src == CoordSource::w) {
            switch (kind) {
            case BasisKind::S: return C(i + 1, l - i) + C(i, l - i - 1);
            case BasisKind::Hdot:
                return C(m - i, m - l) + sum(i + 1, std::min(2 * i + 1, l), [&](int s) { return a(s) * C(m - s, m - l); });
            case BasisKind::Fup: return sgn(l - 1) * (C(i, l - i - 1) + C(i + 1, l - i));
            case BasisKind::Hup:
                return sgn(l - 1) * sum(std::max(i, m - l), 2 * i + 1, [&](int s) { return a(s) * C(s, m - l); });
            case BasisKind::Fdown: return rev();
            case BasisKind::Hdown: return C(i + 1, m - l - i) + C(i, m - l - i - 1);
            }
        } else {
            switch (kind) {
            case BasisKind::S: return rev();
            case BasisKind::Hdot: return C(i, l - i - 1) + C(i + 1, l - i);
            case BasisKind::Fup:
            case BasisKind::Fdown:
                return sgn(l - i) * sum(std::max(i, l), m - i, [&](int s) { return bd(s) * C(s, l); });
            case BasisKind::Hup: return sgn(l - 1) * (C(i, l - i - 1) + C(i + 1, l - i));
            case BasisKind::Hdown: return rev();
            }
        }
    }
    throw std::logic_error("unreachable");
}

/// Closed forms of the table for this m's parity against exact coordinates of
/// the constructed generators (and of generator * S(m)).
inline VerificationReport verify_table23(int m) {
    require_m(m);
    const int table = m % 2 == 0 ? 2 : 3;
    VerificationReport report("table" + std::to_string(table));
    const auto gens = cone_generators(m);
    const IntMatrix s = s_matrix(static_cast<std::size_t>(m));
    for (int i = 0; i < generator_count(m); ++i)
        for (CoordSource src : {CoordSource::w, CoordSource::wS}) {
            const IntVector v = src == CoordSource::w ? gens[i] : gens[i] * s;
            for (BasisKind kind : kAllBasisKinds) {
                const RatVector direct = coords(v, basis(m, kind));
                for (int l = 0; l <= m; ++l)
                    report.expect_equal(Rational(table23_entry(table, src, kind, i, l, m)), direct[l], m,
                                        std::string(name_of(src)) + "/" + std::string(name_of(kind)), {i, l});
            }
        }
    return report;
}

/// The components of generator * S(m) against the closed forms
/// (-1)^(j-i) C(m-2i, j-i) (even m) and
/// (-1)^(j-i) (C(m-2i-1, j-i) - C(m-2i-1, j-i-1)) (odd m), plus palindromicity.
inline VerificationReport eq78_check(int m) {
    require_m(m);
    VerificationReport report("eq78");
    const auto gens = cone_generators(m);
    const IntMatrix s = s_matrix(static_cast<std::size_t>(m));
    for (int i = 0; i < generator_count(m); ++i) {
        const IntVector v = gens[i] * s;
        for (int j = 0; j <= m; ++j) {
            const Integer closed = m % 2 == 0
                                       ? sign_pow(j - i) * binomial(m - 2 * i, j - i)
                                       : sign_pow(j - i) * (binomial(m - 2 * i - 1, j - i) -
                                                            binomial(m - 2 * i - 1, j - i - 1));
            report.expect_equal(closed, v[j], m, "closed_form", {i, j});
            report.expect_equal(v[m - j], v[j], m, "palindromic", {i, j});
        }
    }
    return report;
}

/// Pointwise check of the top two components of a DS f-vector of the matching
/// class: (m/2, 1) or (0, 0) for even m, (0, 0) for odd m.
inline bool corollary1_top_ok(const IntVector& f, int m) {
    const Integer& a = f[m - 1];
    const Integer& b = f[m];
    if (a == 0 && b == 0) return true;
    return m % 2 == 0 && a == m / 2 && b == 1;
}

/// Pointwise top-component check on every point, the nested span equalities
/// between 2^[k]-bar f-vectors and generator prefixes, and the span of the
/// points against E^f(m) (even m) or F(m) (odd m). `points` are nonzero DS
/// f-vectors of the matching class.
inline VerificationReport corollary1_verify(int m, const std::vector<IntVector>& points) {
    require_m(m);
    VerificationReport report("corollary1");
    for (std::size_t p = 0; p < points.size(); ++p)
        report.check(corollary1_top_ok(points[p], m), m, "top_components", {static_cast<long long>(p)}, "",
                     to_string(points[p]));
    const auto gens = cone_generators(m);
    const int tmax = m % 2 == 0 ? (m - 2) / 2 : (m - 3) / 2;
    for (int t = 0; t <= tmax; ++t) {
        std::vector<IntVector> bars, prefix;
        for (int i = 0; i <= t; ++i) {
            bars.push_back(fh_bar(FH::f, m % 2 == 0 ? 2 * i + 1 : 2 * (i + 1), m));
            prefix.push_back(gens[i]);
        }
        report.check(same_span(bars, prefix), m, "nested_span", {t});
    }
    const auto target = subspace_basis(m % 2 == 0 ? SubspaceLabel::Ef : SubspaceLabel::F, m).vectors;
    report.check(same_span(points, target), m, "hull_of_points", {}, std::to_string(target.size()),
                 std::to_string(rank(points)));
    return report;
}

} // namespace dsf
