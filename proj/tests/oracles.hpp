#pragma once

// Test-only oracles. Each one computes its answer by a route that shares no
// code with the library path it checks.

#include "dsf/dsf.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using I64 = std::int64_t;
using Row = std::vector<I64>;

/// Pascal triangle up to n, int64.
inline std::vector<Row> pascal(int n) {
    std::vector<Row> c(n + 1, Row(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        c[i][0] = 1;
        for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    return c;
}

/// Cofactor expansion along the first row.
inline I64 laplace_det(const std::vector<Row>& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    I64 det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (a[0][c] == 0) continue;
        std::vector<Row> minor;
        for (std::size_t r = 1; r < n; ++r) {
            Row row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(a[r][k]);
            minor.push_back(row);
        }
        det += (c % 2 == 0 ? 1 : -1) * a[0][c] * laplace_det(minor);
    }
    return det;
}

/// h from f by expanding sum_i f_i (y-1)^(m-i) with repeated multiplication by
/// (y - 1); h_l is the coefficient of y^(m-l).
inline Row h_by_expansion(const Row& f) {
    const int m = static_cast<int>(f.size()) - 1;
    Row total(m + 1, 0);  // ascending powers of y
    for (int i = 0; i <= m; ++i) {
        Row p{1};
        for (int e = 0; e < m - i; ++e) {
            Row q(p.size() + 1, 0);
            for (std::size_t d = 0; d < p.size(); ++d) {
                q[d + 1] += p[d];
                q[d] -= p[d];
            }
            p = q;
        }
        for (std::size_t d = 0; d < p.size(); ++d) total[d] += f[i] * p[d];
    }
    Row h(m + 1);
    for (int l = 0; l <= m; ++l) h[l] = total[m - l];
    return h;
}

inline Row f_of_masks(const std::vector<dsf::FaceMask>& masks, int m) {
    Row f(m + 1, 0);
    for (auto s : masks) ++f[std::popcount(s)];
    return f;
}

inline bool palindromic(const Row& h, int sign) {
    const std::size_t m = h.size() - 1;
    for (std::size_t l = 0; l <= m; ++l)
        if (h[l] != sign * h[m - l]) return false;
    return true;
}

/// Integer points of the binomial box whose expanded h-vector is palindromic:
/// the lattice points of Q^f(m), zero included. No D(m), no engine.
inline std::set<Row> qf_by_palindromes(int m) {
    const auto c = pascal(m);
    std::set<Row> out;
    Row x(m + 1, 0);
    while (true) {
        if (palindromic(h_by_expansion(x), 1)) out.insert(x);
        int j = 0;
        while (j <= m && x[j] == c[m][j]) x[j++] = 0;
        if (j > m) break;
        ++x[j];
    }
    return out;
}

/// Face systems per long f-vector, by scanning every subset of 2^[m] (m <= 3).
inline std::map<Row, I64> systems_per_fvector(int m) {
    const unsigned faces = 1u << m;
    std::map<Row, I64> count;
    for (std::uint64_t sys = 0; sys < (std::uint64_t{1} << faces); ++sys) {
        std::vector<dsf::FaceMask> masks;
        for (unsigned s = 0; s < faces; ++s)
            if (sys >> s & 1) masks.push_back(s);
        ++count[f_of_masks(masks, m)];
    }
    return count;
}

inline dsf::IntVector to_int(const Row& r) { return dsf::IntVector(r.begin(), r.end()); }

inline Row to_row(const dsf::IntVector& v) {
    Row r;
    for (const auto& x : v) r.push_back(static_cast<I64>(x));
    return r;
}

// Generators.

/// Each face of 2^[m] kept independently with probability p.
inline dsf::FaceSystem random_system(std::mt19937_64& rng, int m, double p = 0.5) {
    std::bernoulli_distribution keep(p);
    std::vector<dsf::FaceMask> masks;
    for (dsf::FaceMask s = 0; s < (dsf::FaceMask{1} << m); ++s)
        if (keep(rng)) masks.push_back(s);
    return dsf::FaceSystem::from_masks(m, masks);
}

/// F_k = {sigma(1), ..., sigma(k)} for a random permutation sigma.
inline std::vector<dsf::FaceMask> random_chain(std::mt19937_64& rng, int m) {
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<dsf::FaceMask> chain{0};
    for (int i = 0; i < m; ++i) chain.push_back(chain.back() | dsf::FaceMask{1} << perm[i]);
    return chain;
}

inline dsf::IntVector random_vector(std::mt19937_64& rng, int m, int lo = -50, int hi = 50) {
    std::uniform_int_distribution<int> d(lo, hi);
    dsf::IntVector v;
    for (int i = 0; i <= m; ++i) v.push_back(d(rng));
    return v;
}

} // namespace oracle
