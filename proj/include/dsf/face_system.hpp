#pragma once

// Face systems Phi in 2^[m], their long and classical f/h-vectors, and the
// Dehn-Sommerville type predicates.

#include "dsf/exact_linalg.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dsf {

/// A face as a sorted list of 1-based elements of [m].
using Face = std::vector<int>;
/// A face as a bitmask; bit (e-1) stands for element e.
using FaceMask = std::uint64_t;

inline constexpr int kMaxGroundSet = 62;

inline int cardinality(FaceMask f) { return std::popcount(f); }

inline Face to_face(FaceMask mask) {
    Face f;
    for (int e = 1; mask; ++e, mask >>= 1)
        if (mask & 1u) f.push_back(e);
    return f;
}

/// Canonical order on faces: by cardinality, then lexicographically on the
/// sorted element lists.
inline bool canonical_less(FaceMask a, FaceMask b) {
    const int ca = cardinality(a), cb = cardinality(b);
    if (ca != cb) return ca < cb;
    if (a == b) return false;
    const FaceMask diff = a ^ b;
    const FaceMask lowest = diff & (~diff + 1);
    return (a & lowest) != 0;
}

class FaceSystem {
  public:
    /// Validates and canonicalises. Throws InputError on m outside [0, 62],
    /// elements outside [m], repeated elements inside a face, or repeated faces.
    FaceSystem(int m, const std::vector<Face>& faces) : m_(m) {
        check_ground(m);
        masks_.reserve(faces.size());
        for (const Face& face : faces) {
            FaceMask mask = 0;
            for (int e : face) {
                if (e < 1 || e > m)
                    throw InputError("face element " + std::to_string(e) + " outside [1," + std::to_string(m) + "]");
                const FaceMask bit = FaceMask{1} << (e - 1);
                if (mask & bit) throw InputError("face lists element " + std::to_string(e) + " twice");
                mask |= bit;
            }
            masks_.push_back(mask);
        }
        canonicalise(/*reject_duplicates=*/true);
    }

    /// Builds from bitmasks; duplicates are rejected.
    static FaceSystem from_masks(int m, std::vector<FaceMask> masks) {
        FaceSystem s(m);
        const FaceMask universe = m == 0 ? 0 : (~FaceMask{0} >> (64 - m));
        for (FaceMask f : masks)
            if (f & ~universe) throw InputError("face outside [m]");
        s.masks_ = std::move(masks);
        s.canonicalise(true);
        return s;
    }

    /// The Boolean interval [A, C] = {B : A <= B <= C}.
    static FaceSystem boolean_interval(int m, FaceMask lower, FaceMask upper) {
        if ((lower & ~upper) != 0) throw InputError("boolean_interval: lower face not contained in upper face");
        const FaceMask free = upper & ~lower;
        std::vector<FaceMask> masks;
        // Enumerate all submasks of `free`.
        for (FaceMask sub = free;; sub = (sub - 1) & free) {
            masks.push_back(lower | sub);
            if (sub == 0) break;
        }
        return from_masks(m, std::move(masks));
    }

    /// The whole simplex 2^[k] inside 2^[m].
    static FaceSystem simplex(int k, int m) { return boolean_interval(m, 0, prefix_mask(k)); }

    /// 2^[k]-bar := 2^[k] - {[k]} inside 2^[m].
    static FaceSystem simplex_boundary(int k, int m) {
        if (k < 1 || k > m) throw InputError("simplex_boundary requires 1 <= k <= m");
        auto all = simplex(k, m).masks_;
        std::erase(all, prefix_mask(k));
        return from_masks(m, std::move(all));
    }

    static FaceMask prefix_mask(int k) { return k == 0 ? 0 : (~FaceMask{0} >> (64 - k)); }

    int m() const noexcept { return m_; }
    /// #Phi, the number of faces.
    std::size_t count() const noexcept { return masks_.size(); }
    bool empty() const noexcept { return masks_.empty(); }

    /// size(Phi) = max |F|; undefined (nullopt) for the empty system.
    std::optional<int> size() const {
        if (masks_.empty()) return std::nullopt;
        return cardinality(masks_.back());  // canonical order ends with a largest face
    }

    FaceMask vertex_mask() const {
        FaceMask u = 0;
        for (FaceMask f : masks_) u |= f;
        return u;
    }
    /// |union of all faces|
    int union_size() const { return cardinality(vertex_mask()); }

    const std::vector<FaceMask>& masks() const noexcept { return masks_; }

    std::vector<Face> faces() const {
        std::vector<Face> out;
        out.reserve(masks_.size());
        for (FaceMask f : masks_) out.push_back(to_face(f));
        return out;
    }

    bool contains(FaceMask f) const { return std::binary_search(masks_.begin(), masks_.end(), f, canonical_less); }

    /// The same faces regarded inside 2^[n]; n must cover every element used.
    FaceSystem embedded(int n) const {
        check_ground(n);
        if (n < 64 && (vertex_mask() >> n) != 0) throw InputError("embedded: ground set too small for the faces");
        FaceSystem s(n);
        s.masks_ = masks_;
        return s;
    }

    friend FaceSystem operator|(const FaceSystem& a, const FaceSystem& b) {
        require_same_ground(a, b);
        std::vector<FaceMask> r;
        std::set_union(a.masks_.begin(), a.masks_.end(), b.masks_.begin(), b.masks_.end(), std::back_inserter(r),
                       canonical_less);
        FaceSystem s(a.m_);
        s.masks_ = std::move(r);
        return s;
    }
    friend FaceSystem operator&(const FaceSystem& a, const FaceSystem& b) {
        require_same_ground(a, b);
        std::vector<FaceMask> r;
        std::set_intersection(a.masks_.begin(), a.masks_.end(), b.masks_.begin(), b.masks_.end(),
                              std::back_inserter(r), canonical_less);
        FaceSystem s(a.m_);
        s.masks_ = std::move(r);
        return s;
    }
    friend bool operator==(const FaceSystem& a, const FaceSystem& b) { return a.m_ == b.m_ && a.masks_ == b.masks_; }

  private:
    explicit FaceSystem(int m) : m_(m) { check_ground(m); }

    static void check_ground(int m) {
        if (m < 0 || m > kMaxGroundSet)
            throw InputError("ground set size m=" + std::to_string(m) + " outside [0," +
                             std::to_string(kMaxGroundSet) + "]");
    }
    static void require_same_ground(const FaceSystem& a, const FaceSystem& b) {
        if (a.m_ != b.m_) throw std::invalid_argument("face systems live in different simplices");
    }

    void canonicalise(bool reject_duplicates) {
        std::sort(masks_.begin(), masks_.end(), canonical_less);
        const auto dup = std::adjacent_find(masks_.begin(), masks_.end());
        if (dup != masks_.end()) {
            if (reject_duplicates) throw InputError("duplicate face " + to_string(to_face(*dup)));
            masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
        }
    }

    int m_ = 0;
    std::vector<FaceMask> masks_;
};

/// Long f-vector: f_i = #{F in Phi : |F| = i}, 0 <= i <= m.
inline IntVector long_f(const FaceSystem& phi) {
    IntVector f(static_cast<std::size_t>(phi.m()) + 1);
    for (FaceMask face : phi.masks()) f[cardinality(face)] += 1;
    return f;
}

/// Long h-vector as f(Phi;m) * S(m).
inline IntVector long_h(const FaceSystem& phi) {
    return long_f(phi) * s_matrix(static_cast<std::size_t>(phi.m()));
}

/// Long h-vector read off sum_i h_i y^(m-i) := sum_i f_i (y-1)^(m-i).
inline IntVector long_h_by_polynomial(const FaceSystem& phi) {
    const int m = phi.m();
    const IntVector f = long_f(phi);
    Polynomial total;
    for (int i = 0; i <= m; ++i)
        total = total + Polynomial::constant(f[i]) * Polynomial::linear(-1, 1).pow(static_cast<unsigned>(m - i));
    IntVector h(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) h[i] = total.coefficient(static_cast<std::size_t>(m - i));
    return h;
}

struct ClassicalVectors {
    IntVector f;  ///< (f_0, ..., f_{d-1}), f_i = number of faces of cardinality i+1
    IntVector h;  ///< (h_0, ..., h_d)
};

/// Classical f- and h-vectors of a system of size d >= 1. The h-vector uses
/// f_{-1} = 1 when the empty face belongs to the system and 0 otherwise.
inline ClassicalVectors classical_fh(const FaceSystem& delta) {
    const auto d = delta.size();
    if (!d) throw InputError("classical_fh: empty face system");
    if (*d < 1) throw InputError("classical_fh: size-0 face system");
    const IntVector longf = long_f(delta);
    ClassicalVectors out;
    out.f.assign(longf.begin() + 1, longf.begin() + 1 + *d);
    Polynomial total;
    for (int i = 0; i <= *d; ++i)  // f_{i-1} (y-1)^(d-i)
        total = total + Polynomial::constant(longf[i]) * Polynomial::linear(-1, 1).pow(static_cast<unsigned>(*d - i));
    out.h.resize(static_cast<std::size_t>(*d) + 1);
    for (int i = 0; i <= *d; ++i) out.h[i] = total.coefficient(static_cast<std::size_t>(*d - i));
    return out;
}

/// eta(Phi): |union| or |union|+1, whichever has the parity of size(Phi).
inline int eta(const FaceSystem& phi) {
    const auto sz = phi.size();
    if (!sz) throw InputError("eta: empty face system");
    const int u = phi.union_size();
    return (u - *sz) % 2 == 0 ? u : u + 1;
}

/// h_l == sign * h_{m-l} for all l.
inline bool satisfies_ds_relation(const IntVector& h, int sign) {
    const std::size_t m = h.size() - 1;
    for (std::size_t l = 0; l <= m; ++l)
        if (h[l] != sign * h[m - l]) return false;
    return true;
}

/// Dehn-Sommerville type relations h_l = (-1)^(m-size) h_{m-l}. The empty
/// system is a DS-system (its h-vector is zero).
inline bool is_ds(const FaceSystem& phi) {
    const auto sz = phi.size();
    if (!sz) return true;
    return satisfies_ds_relation(long_h(phi), sign_pow(phi.m() - *sz));
}

inline constexpr int kDefaultDsFamilySamples = 3;

/// Checks h(Phi;n) = h(Phi;n) * U(n) for the first `samples` admissible n
/// (n >= eta, n positive, n = size mod 2).
inline bool is_ds_family(const FaceSystem& phi, int samples = kDefaultDsFamilySamples) {
    const auto sz = phi.size();
    if (!sz) throw InputError("is_ds_family: empty face system");
    int n = std::max(eta(phi), 1);
    if ((n - *sz) % 2 != 0) ++n;
    // Only cardinalities matter, so pad f instead of relabelling into [n].
    const IntVector f = long_f(phi);
    for (int t = 0; t < samples; ++t, n += 2) {
        IntVector fn(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= std::min(n, phi.m()); ++i) fn[i] = f[i];
        const IntVector h = fn * s_matrix(static_cast<std::size_t>(n));
        if (h * backward_identity(static_cast<std::size_t>(n)) != h) return false;
    }
    return true;
}

/// Abstract simplicial complex: downward closed and containing every singleton
/// of its vertex set.
inline bool is_complex(const FaceSystem& phi) {
    const FaceMask v = phi.vertex_mask();
    for (FaceMask rest = v; rest; rest &= rest - 1)
        if (!phi.contains(rest & (~rest + 1))) return false;
    for (FaceMask f : phi.masks())
        for (FaceMask bits = f; bits; bits &= bits - 1)
            if (!phi.contains(f & ~(bits & (~bits + 1)))) return false;
    return true;
}

} // namespace dsf
