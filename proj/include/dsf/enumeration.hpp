#pragma once

// Lattice points of {x : x (I - D(m)) = 0, 0 <= x <= b}, the DS f-vector
// classes built on them, Table-4 counts, the generating-function assembly,
// and brute-force oracles.

#include "dsf/polytopes.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <thread>

namespace dsf {

using Point64 = std::vector<std::int64_t>;

/// Largest m the int64 engine accepts; accumulators stay below 2^62 there.
inline constexpr int kEngineMaxM = 30;
inline constexpr std::uint64_t kDefaultMaxLeaves = 10'000'000'000ULL;

/// Leaf cap: DSF_MAX_LEAVES when set to a positive integer, else the default.
inline std::uint64_t leaf_cap_from_env() {
    if (const char* s = std::getenv("DSF_MAX_LEAVES")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(s, &end, 10);
        if (end != s && *end == '\0' && v > 0) return v;
    }
    return kDefaultMaxLeaves;
}

struct EngineOptions {
    bool count_only = false;
    unsigned workers = 1;
    std::optional<std::uint64_t> max_leaves;  ///< nullopt: leaf_cap_from_env()
};

struct EngineResult {
    std::uint64_t count = 0;
    std::vector<Point64> points;  ///< sorted ascending; empty in count-only mode
};

/// Coordinates j with m - j even are free; the others are forced by
/// 2 x_j = sum_{i>j} (-1)^(m-i) C(i,j) x_i.
inline bool is_free_coordinate(int m, int j) { return (m - j) % 2 == 0; }

/// prod over free coordinates of (b_j + 1): the unpruned number of leaves.
inline Integer leaf_estimate(int m, const BoundsVector& b) {
    Integer e = 1;
    for (int j = 0; j <= m; ++j)
        if (is_free_coordinate(m, j)) e *= b[j] + 1;
    return e;
}

namespace detail {

class LatticeEngine {
  public:
    LatticeEngine(int m, const BoundsVector& bounds) : m_(m), bound_(m + 1), coef_(m + 1) {
        for (int j = 0; j <= m; ++j) bound_[j] = static_cast<std::int64_t>(bounds[j]);
        for (int j = 0; j <= m; ++j) {
            const std::int64_t sign = (m - j) % 2 == 0 ? 1 : -1;
            for (int t = 0; t < j; ++t)
                if (!is_free_coordinate(m, t)) coef_[j].push_back({t, sign * binomial_i64(j, t)});
        }
    }

    /// Partial assignment x_m .. x_{level+1} with its accumulators.
    struct State {
        int level;
        Point64 x;
        std::vector<std::int64_t> acc;
    };

    State root() const { return {m_, Point64(m_ + 1, 0), std::vector<std::int64_t>(m_ + 1, 0)}; }

    /// Expands states breadth-first until there are at least `want` of them or
    /// the frontier reaches the bottom. Order equals sequential DFS order.
    std::vector<State> split(std::size_t want) const {
        std::vector<State> frontier{root()};
        while (frontier.size() < want && frontier.front().level >= 0) {
            std::vector<State> next;
            for (State& s : frontier) expand(s, [&](State&& c) { next.push_back(std::move(c)); });
            if (next.empty()) break;  // unreachable: zero extends every prefix of zeros
            frontier = std::move(next);
        }
        return frontier;
    }

    template <class Sink>
    void run(State& s, Sink&& sink) const {
        dfs(s.level, s.x, s.acc, sink);
    }

  private:
    /// Admissible values lo..hi for x_j; empty (lo > hi) on a pruned branch.
    void candidates(int j, const std::vector<std::int64_t>& acc, std::int64_t& lo, std::int64_t& hi) const {
        if (is_free_coordinate(m_, j)) {
            lo = 0;
            hi = bound_[j];
        } else {
            const std::int64_t s = acc[j];
            if ((s & 1) != 0 || s < 0 || s / 2 > bound_[j]) {
                lo = 1;
                hi = 0;
            } else {
                lo = hi = s / 2;
            }
        }
    }

    void assign(int j, std::int64_t v, std::vector<std::int64_t>& acc, int dir) const {
        for (const auto& [t, c] : coef_[j]) acc[t] += dir * c * v;
    }

    template <class Emit>
    void expand(State& s, Emit&& emit) const {
        const int j = s.level;
        std::int64_t lo, hi;
        candidates(j, s.acc, lo, hi);
        for (std::int64_t v = lo; v <= hi; ++v) {
            State c{j - 1, s.x, s.acc};
            c.x[j] = v;
            assign(j, v, c.acc, 1);
            emit(std::move(c));
        }
    }

    template <class Sink>
    void dfs(int j, Point64& x, std::vector<std::int64_t>& acc, Sink& sink) const {
        if (j < 0) {
            sink(x);
            return;
        }
        std::int64_t lo, hi;
        candidates(j, acc, lo, hi);
        for (std::int64_t v = lo; v <= hi; ++v) {
            x[j] = v;
            assign(j, v, acc, 1);
            dfs(j - 1, x, acc, sink);
            assign(j, v, acc, -1);
        }
        x[j] = 0;
    }

    int m_;
    std::vector<std::int64_t> bound_;
    std::vector<std::vector<std::pair<int, std::int64_t>>> coef_;
};

} // namespace detail

/// Every integer x with x * D(m) = x and 0 <= x <= b. Output is sorted and
/// independent of the worker count. Throws ResourceCapError when the unpruned
/// leaf count exceeds the cap.
inline EngineResult enumerate_eigen_lattice(int m, const BoundsVector& bounds, const EngineOptions& opt = {}) {
    require_m(m);
    if (bounds.size() != static_cast<std::size_t>(m) + 1) throw InputError("bounds must have m+1 components");
    for (const auto& b : bounds)
        if (b < 0) throw InputError("bounds must be nonnegative");
    const Integer leaves = leaf_estimate(m, bounds);
    const std::uint64_t cap = opt.max_leaves.value_or(leaf_cap_from_env());
    if (m > kEngineMaxM || leaves > cap)
        throw ResourceCapError("enumeration at m=" + std::to_string(m) + " needs up to " + leaves.str() +
                                   " leaves (cap " + std::to_string(cap) + "; raise DSF_MAX_LEAVES)",
                               leaves);
    for (int j = 0; j <= m; ++j)
        if (bounds[j] > binomial(m, j) * 4)  // keeps accumulators far from overflow
            throw InputError("bounds exceed the binomial box");

    const detail::LatticeEngine engine(m, bounds);
    const unsigned workers = std::max(1u, opt.workers);
    auto tasks = engine.split(workers == 1 ? 1 : static_cast<std::size_t>(workers) * 16);

    std::vector<EngineResult> partial(tasks.size());
    auto work = [&](std::size_t t) {
        EngineResult& r = partial[t];
        engine.run(tasks[t], [&](const Point64& x) {
            ++r.count;
            if (!opt.count_only) r.points.push_back(x);
        });
    };
    if (workers == 1 || tasks.size() <= 1) {
        for (std::size_t t = 0; t < tasks.size(); ++t) work(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < std::min<std::size_t>(workers, tasks.size()); ++w)
            pool.emplace_back([&] {
                for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) work(t);
            });
        for (auto& th : pool) th.join();
    }
    EngineResult out;
    for (auto& r : partial) {
        out.count += r.count;
        out.points.insert(out.points.end(), std::make_move_iterator(r.points.begin()),
                          std::make_move_iterator(r.points.end()));
    }
    std::sort(out.points.begin(), out.points.end());
    return out;
}

enum class ParityClass { matching, opposite, all };

inline std::string_view name_of(ParityClass p) {
    switch (p) {
    case ParityClass::matching: return "matching";
    case ParityClass::opposite: return "opposite";
    case ParityClass::all: return "all";
    }
    return "?";
}

inline ParityClass parse_parity(std::string_view s) {
    for (auto p : {ParityClass::matching, ParityClass::opposite, ParityClass::all})
        if (s == name_of(p)) return p;
    throw InputError("unknown class '" + std::string(s) + "' (expected matching, opposite or all)");
}

struct EnumerationReport {
    int m = 0;
    ParityClass parity = ParityClass::matching;
    BoundsVector bounds;  ///< box used by the engine (m+2 components for the opposite class)
    bool count_only = false;
    std::uint64_t count = 0;
    std::vector<IntVector> points;              ///< sorted ascending
    std::optional<Integer> total_multiplicity;  ///< number of DS-systems behind the points
    double wall_time_seconds = 0;               ///< informational only; never serialized
};

/// Bounds for the opposite class: the engine runs at m+1 with (C(m,0..m), 0).
inline BoundsVector opposite_bounds(int m) {
    BoundsVector b = default_bounds(m);
    b.push_back(0);
    return b;
}

namespace detail {

inline bool is_zero(const Point64& p) {
    return std::all_of(p.begin(), p.end(), [](std::int64_t v) { return v == 0; });
}

/// Nonzero points of one parity class as (m+1)-vectors, sorted.
inline EngineResult parity_class_points(int m, ParityClass parity, const EngineOptions& opt) {
    EngineResult r = parity == ParityClass::matching ? enumerate_eigen_lattice(m, default_bounds(m), opt)
                                                     : enumerate_eigen_lattice(m + 1, opposite_bounds(m), opt);
    r.count -= 1;  // the zero vector is always a solution
    if (!opt.count_only) {
        std::erase_if(r.points, is_zero);
        if (parity == ParityClass::opposite)
            for (auto& p : r.points) p.pop_back();
    }
    return r;
}

} // namespace detail

/// Distinct nonzero long f-vectors of DS-systems with m = size (mod 2)
/// (matching), with m != size (mod 2) (opposite), or all DS f-vectors
/// including zero (all).
inline EnumerationReport ds_fvectors(int m, ParityClass parity, const EngineOptions& opt = {},
                                     bool with_multiplicity = false) {
    require_m(m);
    const auto start = std::chrono::steady_clock::now();
    EnumerationReport rep;
    rep.m = m;
    rep.parity = parity;
    rep.count_only = opt.count_only && !with_multiplicity;
    EngineOptions inner = opt;
    inner.count_only = rep.count_only;
    if (parity == ParityClass::all) {
        const auto a = detail::parity_class_points(m, ParityClass::matching, inner);
        const auto b = detail::parity_class_points(m, ParityClass::opposite, inner);
        rep.bounds = default_bounds(m);
        rep.count = a.count + b.count + 1;
        if (!rep.count_only) {
            std::vector<Point64> all = a.points;
            all.insert(all.end(), b.points.begin(), b.points.end());
            all.emplace_back(m + 1, 0);
            std::sort(all.begin(), all.end());
            all.erase(std::unique(all.begin(), all.end()), all.end());
            rep.count = all.size();
            for (const auto& p : all) rep.points.push_back(to_int_vector(p));
        }
    } else {
        const auto r = detail::parity_class_points(m, parity, inner);
        rep.bounds = parity == ParityClass::matching ? default_bounds(m) : opposite_bounds(m);
        rep.count = r.count;
        for (const auto& p : r.points) rep.points.push_back(to_int_vector(p));
    }
    if (with_multiplicity) {
        Integer total = 0;
        for (const auto& p : rep.points) total += multiplicity(p, m);
        rep.total_multiplicity = total;
    }
    rep.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

struct Table4Row {
    int m = 0;
    std::uint64_t col1 = 0, col2 = 0, col3 = 0;
    bool disjoint = true;  ///< no opposite-class vector lies in Q^f(m)
};

/// The published counts for 2 <= m <= 10.
inline constexpr std::array<std::array<std::uint64_t, 4>, 9> kTable4Expected = {{
    {2, 3, 1, 5},
    {3, 1, 7, 9},
    {4, 19, 5, 25},
    {5, 7, 71, 79},
    {6, 291, 41, 333},
    {7, 103, 2223, 2327},
    {8, 17465, 1107, 18573},
    {9, 4905, 271619, 276525},
    {10, 3959091, 103057, 4062149},
}};

inline std::optional<std::array<std::uint64_t, 3>> table4_expected(int m) {
    for (const auto& r : kTable4Expected)
        if (r[0] == static_cast<std::uint64_t>(m)) return std::array<std::uint64_t, 3>{r[1], r[2], r[3]};
    return std::nullopt;
}

/// col1 = |matching|, col2 = |opposite|, col3 = col1 + col2 + 1. Disjointness
/// is checked by testing every opposite vector against Q^f(m).
inline Table4Row table4_row(int m, const EngineOptions& opt = {}) {
    require_m(m);
    EngineOptions counting = opt;
    counting.count_only = true;
    EngineOptions listing = opt;
    listing.count_only = false;
    const auto matching = detail::parity_class_points(m, ParityClass::matching, counting);
    const auto opposite = detail::parity_class_points(m, ParityClass::opposite, listing);
    Table4Row row{m, matching.count, opposite.count, matching.count + opposite.count + 1, true};
    const auto dm = d_matrix<std::int64_t>(static_cast<std::size_t>(m));
    for (const auto& p : opposite.points) {
        bool fixed = true;
        for (int j = 0; j <= m && fixed; ++j) {
            std::int64_t s = 0;
            for (int i = j; i <= m; ++i) s += p[i] * dm(i, j);
            fixed = s == p[j];
        }
        if (fixed) {
            row.disjoint = false;
            break;
        }
    }
    return row;
}

/// Nonzero DS f-vectors per parity class.
struct ClassSets {
    std::vector<IntVector> matching, opposite;
};

inline constexpr int kOracleBoxMaxM = 7;
inline constexpr int kOraclePowersetMaxM = 4;

/// Scans every integer vector of the binomial box and keeps the nonzero ones
/// whose h = f S(m) satisfies h_l = (-1)^(m-size) h_{m-l}.
inline ClassSets oracle_box(int m) {
    require_m(m);
    const BoundsVector b = default_bounds(m);
    if (m > kOracleBoxMaxM) {
        Integer cost = 1;
        for (const auto& x : b) cost *= x + 1;
        throw ResourceCapError("oracle_box refuses m=" + std::to_string(m) + ": " + cost.str() + " vectors to scan",
                               cost);
    }
    const int n = m + 1;
    std::vector<std::int64_t> bound(n), f(n, 0), h(n, 0);
    for (int i = 0; i < n; ++i) bound[i] = static_cast<std::int64_t>(b[i]);
    const auto s = s_matrix<std::int64_t>(static_cast<std::size_t>(m));
    ClassSets out;
    // Odometer with f_0 fastest; h is kept equal to f * S(m).
    while (true) {
        int k = 0;
        while (k < n && f[k] == bound[k]) {
            for (int j = 0; j < n; ++j) h[j] -= bound[k] * s(k, j);
            f[k] = 0;
            ++k;
        }
        if (k == n) break;
        ++f[k];
        for (int j = 0; j < n; ++j) h[j] += s(k, j);
        int size = m;
        while (f[size] == 0) --size;  // f != 0 here
        const std::int64_t sign = (m - size) % 2 == 0 ? 1 : -1;
        bool ds = true;
        for (int l = 0; l < n && ds; ++l) ds = h[l] == sign * h[m - l];
        if (ds) ((m - size) % 2 == 0 ? out.matching : out.opposite).push_back(IntVector(f.begin(), f.end()));
    }
    std::sort(out.matching.begin(), out.matching.end());
    std::sort(out.opposite.begin(), out.opposite.end());
    return out;
}

struct PowersetOracle {
    ClassSets sets;
    Integer systems_matching = 0;  ///< DS-systems with #Phi > 0, by class
    Integer systems_opposite = 0;
    std::uint64_t scanned = 0;
};

/// Every face system Phi of 2^[m], tested with is_ds.
inline PowersetOracle oracle_powerset(int m) {
    require_m(m);
    if (m > kOraclePowersetMaxM) {
        const Integer cost = Integer(1) << (1 << m);
        throw ResourceCapError("oracle_powerset refuses m=" + std::to_string(m) + ": " + cost.str() + " face systems",
                               cost);
    }
    const std::uint32_t faces = 1u << m;
    std::set<IntVector> matching, opposite;
    PowersetOracle out;
    for (std::uint64_t sys = 1; sys < (std::uint64_t{1} << faces); ++sys) {
        std::vector<FaceMask> masks;
        for (std::uint32_t f = 0; f < faces; ++f)
            if (sys >> f & 1u) masks.push_back(f);
        const FaceSystem phi = FaceSystem::from_masks(m, std::move(masks));
        ++out.scanned;
        if (!is_ds(phi)) continue;
        const bool match = (m - *phi.size()) % 2 == 0;
        (match ? matching : opposite).insert(long_f(phi));
        (match ? out.systems_matching : out.systems_opposite) += 1;
    }
    out.scanned += 1;  // the empty system
    out.sets.matching.assign(matching.begin(), matching.end());
    out.sets.opposite.assign(opposite.begin(), opposite.end());
    return out;
}

inline constexpr int kGenfunMaxM = 8;

/// Assembles the right-hand side of the generating-function identity from
/// independent slices (P^f and a Q^f at m+1 for even m; a Q^f slice and
/// P^f(m+1) for odd m), subtracts one copy of zero, and compares the monomial
/// multiset with the support {0} + matching + opposite.
inline VerificationReport genfun_identity_check(int m, const EngineOptions& opt = {}) {
    require_m(m);
    if (m > kGenfunMaxM) throw ResourceCapError("genfun_identity_check is capped at m=8", Integer(m));
    VerificationReport report("genfun");
    EngineOptions listing = opt;
    listing.count_only = false;
    std::multiset<Point64> rhs;
    auto add_prism = [&](const std::vector<Point64>& base, std::size_t keep) {
        for (Point64 p : base) {
            p.resize(keep);
            for (std::int64_t a0 : {0, 1}) {
                p[0] = a0;
                rhs.insert(p);
            }
        }
    };
    auto add_plain = [&](const std::vector<Point64>& pts, std::size_t len) {
        for (Point64 p : pts) {
            p.resize(len, 0);
            rhs.insert(p);
        }
    };
    const auto len = static_cast<std::size_t>(m) + 1;
    if (m % 2 == 0) {
        BoundsVector pf = default_bounds(m);
        pf[0] = 0;
        add_prism(enumerate_eigen_lattice(m, pf, listing).points, len);
        BoundsVector q = default_bounds(m);
        q[m] = 0;
        q.push_back(0);
        add_plain(enumerate_eigen_lattice(m + 1, q, listing).points, len);
    } else {
        BoundsVector q = default_bounds(m);
        q[m - 1] = 0;
        q[m] = 0;
        add_plain(enumerate_eigen_lattice(m, q, listing).points, len);
        BoundsVector pf = default_bounds(m);
        pf[0] = 0;
        pf[m] = 0;
        pf.push_back(0);
        add_prism(enumerate_eigen_lattice(m + 1, pf, listing).points, len);
    }
    const auto zero = rhs.find(Point64(len, 0));
    report.check(zero != rhs.end(), m, "zero_present");
    if (zero != rhs.end()) rhs.erase(zero);

    const auto lhs = ds_fvectors(m, ParityClass::all, listing);
    std::multiset<Point64> support;
    for (const auto& p : lhs.points) {
        Point64 q;
        for (const auto& x : p) q.push_back(static_cast<std::int64_t>(x));
        support.insert(q);
    }
    report.check(rhs == support, m, "support", {}, std::to_string(support.size()), std::to_string(rhs.size()));
    if (const auto expected = table4_expected(m))
        report.expect_equal((*expected)[2], static_cast<std::uint64_t>(rhs.size()), m, "count_at_one");
    return report;
}

inline constexpr int kTotalCountMaxM = 8;

/// Number of DS-systems (not f-vectors) with #Phi > 0 in one parity class.
inline Integer total_ds_count(int m, ParityClass parity, const EngineOptions& opt = {}) {
    require_m(m);
    if (m > kTotalCountMaxM) throw ResourceCapError("total_ds_count is capped at m=8", Integer(m));
    if (parity == ParityClass::all)
        return total_ds_count(m, ParityClass::matching, opt) + total_ds_count(m, ParityClass::opposite, opt) + 1;
    return *ds_fvectors(m, parity, opt, true).total_multiplicity;
}

} // namespace dsf
