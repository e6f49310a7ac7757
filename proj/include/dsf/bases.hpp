#pragma once

// The six bases of R^{m+1} built from a maximal chain F_0 < F_1 < ... < F_m,
// coordinates with respect to them, and the closed forms for the long f- and
// h-vectors of 2^[k]-bar.

#include "dsf/face_system.hpp"
#include "dsf/report.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace dsf {

enum class BasisKind { S, Hdot, Fup, Hup, Fdown, Hdown };

inline constexpr std::array<BasisKind, 6> kAllBasisKinds = {BasisKind::S,   BasisKind::Hdot,  BasisKind::Fup,
                                                             BasisKind::Hup, BasisKind::Fdown, BasisKind::Hdown};

inline std::string_view name_of(BasisKind k) {
    switch (k) {
    case BasisKind::S: return "S";
    case BasisKind::Hdot: return "Hdot";
    case BasisKind::Fup: return "Fup";
    case BasisKind::Hup: return "Hup";
    case BasisKind::Fdown: return "Fdown";
    case BasisKind::Hdown: return "Hdown";
    }
    return "?";
}

inline BasisKind parse_basis_kind(std::string_view s) {
    for (BasisKind k : kAllBasisKinds)
        if (s == name_of(k)) return k;
    throw InputError("unknown basis '" + std::string(s) + "' (expected S, Hdot, Fup, Hup, Fdown or Hdown)");
}

struct BasisFamily {
    BasisKind kind;
    int m;
    std::vector<IntVector> vectors;  ///< b_0, ..., b_m

    /// Rows are the basis vectors.
    IntMatrix matrix() const { return IntMatrix::from_rows(vectors); }
};

using SixBases = std::array<BasisFamily, 6>;

inline const BasisFamily& get(const SixBases& all, BasisKind k) { return all[static_cast<std::size_t>(k)]; }

/// Builds the six families from an explicit maximal chain given as masks
/// F_0 = 0 < F_1 < ... < F_m.
inline SixBases bases_from_chain(int m, const std::vector<FaceMask>& chain) {
    require_m(m);
    if (chain.size() != static_cast<std::size_t>(m) + 1) throw InputError("chain must have m+1 members");
    for (int k = 0; k <= m; ++k) {
        if (cardinality(chain[k]) != k) throw InputError("chain member F_k must have k elements");
        if (k > 0 && (chain[k - 1] & ~chain[k]) != 0) throw InputError("chain is not nested");
    }
    SixBases out;
    for (BasisKind kind : kAllBasisKinds) out[static_cast<std::size_t>(kind)] = {kind, m, {}};
    const FaceMask top = chain[m];
    for (int k = 0; k <= m; ++k) {
        const FaceSystem single = FaceSystem::from_masks(m, {chain[k]});
        const FaceSystem up = FaceSystem::boolean_interval(m, 0, chain[k]);
        const FaceSystem down = FaceSystem::boolean_interval(m, chain[m - k], top);
        out[0].vectors.push_back(long_f(single));
        out[1].vectors.push_back(long_h(single));
        out[2].vectors.push_back(long_f(up));
        out[3].vectors.push_back(long_h(up));
        out[4].vectors.push_back(long_f(down));
        out[5].vectors.push_back(long_h(down));
    }
    return out;
}

/// Canonical chain F_k = {1, ..., k}.
inline std::vector<FaceMask> canonical_chain(int m) {
    std::vector<FaceMask> chain;
    for (int k = 0; k <= m; ++k) chain.push_back(FaceSystem::prefix_mask(k));
    return chain;
}

namespace detail {
struct BasisCache {
    std::shared_mutex mutex;
    std::map<int, std::shared_ptr<const SixBases>> entries;
};
inline BasisCache& basis_cache() {
    static BasisCache cache;
    return cache;
}
} // namespace detail

/// The six bases for the canonical chain; memoized per m, safe for concurrent readers.
inline std::shared_ptr<const SixBases> six_bases(int m) {
    require_m(m);
    auto& cache = detail::basis_cache();
    {
        std::shared_lock lock(cache.mutex);
        if (auto it = cache.entries.find(m); it != cache.entries.end()) return it->second;
    }
    auto built = std::make_shared<const SixBases>(bases_from_chain(m, canonical_chain(m)));
    std::unique_lock lock(cache.mutex);
    return cache.entries.emplace(m, std::move(built)).first->second;
}

inline const BasisFamily& basis(int m, BasisKind kind) {
    // The cache never evicts, so the reference outlives the shared_ptr.
    return get(*six_bases(m), kind);
}

/// [w]_B: the unique kappa with sum kappa_i b_i = w.
template <class V>
RatVector coords(const std::vector<V>& w, const BasisFamily& b) {
    if (w.size() != b.vectors.size()) throw InputError("coords: vector length does not match m+1");
    auto kappa = solve_left(b.matrix(), w);
    if (!kappa) throw std::logic_error("coords: basis family is singular");
    return *kappa;
}

/// sum kappa_i b_i
inline RatVector reconstruct(const RatVector& kappa, const BasisFamily& b) {
    return kappa * ExactMatrix::convert(b.matrix());
}

enum class FH { f, h };

inline FH parse_fh(std::string_view s) {
    if (s == "f") return FH::f;
    if (s == "h") return FH::h;
    throw InputError("expected 'f' or 'h', got '" + std::string(s) + "'");
}

inline void require_k(int k, int m) {
    if (k < 1 || k > m)
        throw InputError("k must satisfy 1 <= k <= m (got k=" + std::to_string(k) + ", m=" + std::to_string(m) + ")");
}

/// Closed forms for the long f- or h-vector of 2^[k]-bar.
inline IntVector fh_bar(FH kind, int k, int m) {
    require_m(m);
    require_k(k, m);
    IntVector v(static_cast<std::size_t>(m) + 1);
    for (int l = 0; l <= m; ++l) {
        if (kind == FH::f)
            v[l] = binomial(k, l) - (k == l ? 1 : 0);
        else
            v[l] = sign_pow(l) * (binomial(m - k, l) - sign_pow(k) * binomial(m - k, l - k));
    }
    return v;
}

/// The same vector computed from the explicit face system 2^[k]-bar.
inline IntVector fh_bar_direct(FH kind, int k, int m) {
    require_m(m);
    require_k(k, m);
    const FaceSystem bar = FaceSystem::simplex_boundary(k, m);
    return kind == FH::f ? long_f(bar) : long_h(bar);
}

enum class Table1Row { h, h_Hdot, h_Fup, h_Hup, h_Fdown, h_Hdown, f, f_Hdot, f_Fup, f_Hup, f_Fdown, f_Hdown };

inline constexpr std::array<Table1Row, 12> kAllTable1Rows = {
    Table1Row::h, Table1Row::h_Hdot, Table1Row::h_Fup, Table1Row::h_Hup, Table1Row::h_Fdown, Table1Row::h_Hdown,
    Table1Row::f, Table1Row::f_Hdot, Table1Row::f_Fup, Table1Row::f_Hup, Table1Row::f_Fdown, Table1Row::f_Hdown};

inline std::string_view name_of(Table1Row r) {
    constexpr std::array<std::string_view, 12> names = {"h",     "h_Hdot", "h_Fup", "h_Hup", "h_Fdown", "h_Hdown",
                                                        "f",     "f_Hdot", "f_Fup", "f_Hup", "f_Fdown", "f_Hdown"};
    return names[static_cast<std::size_t>(r)];
}

inline Table1Row parse_table1_row(std::string_view s) {
    for (Table1Row r : kAllTable1Rows)
        if (s == name_of(r)) return r;
    throw InputError("unknown table row '" + std::string(s) + "'");
}

/// Which vector (f or h of 2^[k]-bar) the row describes, and in which basis
/// (nullopt: the vector itself).
inline FH table1_source(Table1Row r) { return static_cast<int>(r) < 6 ? FH::h : FH::f; }
inline std::optional<BasisKind> table1_basis(Table1Row r) {
    const int idx = static_cast<int>(r) % 6;
    if (idx == 0) return std::nullopt;
    return kAllBasisKinds[static_cast<std::size_t>(idx)];
}

/// `printed` evaluates every row exactly as stated. `corrected` differs only in the
/// f / Fdown row, whose first term needs the sign (-1)^(m-l).
enum class FormulaVariant { printed, corrected };

inline FormulaVariant parse_variant(std::string_view s) {
    if (s == "printed") return FormulaVariant::printed;
    if (s == "corrected") return FormulaVariant::corrected;
    throw InputError("variant must be 'printed' or 'corrected'");
}

/// Closed-form l-th component for one table row. Sums are evaluated term by
/// term, exactly as stated.
inline Rational table1_entry(Table1Row row, int k, int l, int m, FormulaVariant variant = FormulaVariant::printed) {
    require_m(m);
    require_k(k, m);
    if (l < 0 || l > m) throw InputError("l must satisfy 0 <= l <= m");
    auto C = [](long long n, long long r) { return Rational(binomial(n, r)); };
    auto delta = [](long long a, long long b) { return Rational(a == b ? 1 : 0); };
    auto sgn = [](long long e) { return Rational(sign_pow(e)); };
    switch (row) {
    case Table1Row::h: return sgn(l) * (C(m - k, l) - sgn(k) * C(m - k, l - k));
    case Table1Row::h_Hdot: return C(k, l) - delta(k, l);
    case Table1Row::h_Fup: {
        Rational sum = 0;
        for (int s = l; s <= m; ++s) sum += C(m - k, s - k) * C(s, l);
        return sgn(l) * (pow2(m - k - l) * C(m - k, l) - sgn(k) * sum);
    }
    case Table1Row::h_Hup: return sgn(k - l) * (delta(k, l) - C(k, l));
    case Table1Row::h_Fdown: {
        Rational sum = 0;
        for (int s = 0; s <= m; ++s) sum += (C(m - k, s) - sgn(k) * C(m - k, s - k)) * C(m - s, l);
        return sgn(m - l) * sum;
    }
    case Table1Row::h_Hdown: return sgn(m - l) * (C(m - k, l - k) - sgn(k) * C(m - k, l));
    case Table1Row::f: return C(k, l) - delta(k, l);
    case Table1Row::f_Hdot: {
        Rational sum = 0;
        for (int s = 0; s <= std::min(k, l); ++s) sum += C(k, s) * C(m - s, m - l);
        return sum - C(m - k, m - l);
    }
    case Table1Row::f_Fup: return sgn(k - l) * (delta(k, l) - C(k, l));
    case Table1Row::f_Hup: return sgn(m - l) * C(k, m - l) * (pow2(k + l - m) - 1);
    case Table1Row::f_Fdown: {
        const Rational lead = variant == FormulaVariant::corrected ? sgn(m - l) : Rational(1);
        return lead * C(m - k, m - l) - sgn(m - k - l) * C(m - k, l);
    }
    case Table1Row::f_Hdown: return C(k, m - l) - delta(k, m - l);
    }
    throw std::logic_error("unreachable");
}

/// The exact value the table row describes: the vector of 2^[k]-bar or its
/// coordinates, computed from face systems and linear solves.
inline RatVector table1_direct(Table1Row row, int k, int m) {
    const IntVector v = fh_bar_direct(table1_source(row), k, m);
    const auto b = table1_basis(row);
    if (!b) return to_rat_vector(v);
    return coords(v, basis(m, *b));
}

/// Every row, every 1 <= k <= m, every 0 <= l <= m.
inline VerificationReport verify_table1(int m, FormulaVariant variant = FormulaVariant::printed) {
    require_m(m);
    VerificationReport report("table1");
    for (Table1Row row : kAllTable1Rows)
        for (int k = 1; k <= m; ++k) {
            const RatVector direct = table1_direct(row, k, m);
            for (int l = 0; l <= m; ++l)
                report.expect_equal(table1_entry(row, k, l, m, variant), direct[l], m, std::string(name_of(row)),
                                    {k, l});
        }
    return report;
}

} // namespace dsf
