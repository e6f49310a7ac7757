#pragma once

// The structured (m+1)x(m+1) matrices U, T, I, S, S^-1, D and their spectral
// facts. All builders are templated on the scalar so that integer-only
// callers avoid rational arithmetic.

#include "dsf/matrix.hpp"
#include "dsf/polynomial.hpp"

#include <map>
#include <mutex>
#include <string>
#include <string_view>

namespace dsf {

enum class MatrixName { U, T, I, S, S_inv, D };

inline std::string_view name_of(MatrixName n) {
    switch (n) {
    case MatrixName::U: return "U";
    case MatrixName::T: return "T";
    case MatrixName::I: return "I";
    case MatrixName::S: return "S";
    case MatrixName::S_inv: return "S_inv";
    case MatrixName::D: return "D";
    }
    return "?";
}

inline MatrixName parse_matrix_name(std::string_view s) {
    for (auto n : {MatrixName::U, MatrixName::T, MatrixName::I, MatrixName::S, MatrixName::S_inv, MatrixName::D})
        if (s == name_of(n)) return n;
    throw InputError("unknown matrix name '" + std::string(s) + "' (expected U, T, I, S, S_inv or D)");
}

inline void require_m(int m) {
    if (m < 2) throw InputError("m must be an integer >= 2 (got " + std::to_string(m) + ")");
}

/// Backward identity: entry (i,j) is [i + j == n].
template <class Scalar = Integer>
Matrix<Scalar> backward_identity(std::size_t n) {
    Matrix<Scalar> u(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i) u(i, n - i) = 1;
    return u;
}

/// Forward shift: entry (i,j) is [j - i == 1].
template <class Scalar = Integer>
Matrix<Scalar> forward_shift(std::size_t n) {
    Matrix<Scalar> t(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i) t(i, i + 1) = 1;
    return t;
}

/// S(m): entry (i,j) is (-1)^(j-i) C(m-i, j-i). Row k is the long h-vector of {F_k}.
template <class Scalar = Integer>
Matrix<Scalar> s_matrix(std::size_t m) {
    Matrix<Scalar> s(m + 1, m + 1);
    for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t j = i; j <= m; ++j)
            s(i, j) = Scalar(sign_pow(static_cast<long long>(j - i)) * binomial(m - i, j - i));
    return s;
}

/// D(m): entry (i,j) is (-1)^(m-i) C(i,j).
template <class Scalar = Integer>
Matrix<Scalar> d_matrix(std::size_t m) {
    Matrix<Scalar> d(m + 1, m + 1);
    for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            d(i, j) = Scalar(sign_pow(static_cast<long long>(m - i)) * binomial(i, j));
    return d;
}

/// S(m)^-1 computed by exact elimination (not from a closed form); memoized per m.
inline IntMatrix s_inverse(std::size_t m) {
    static std::mutex mutex;
    static std::map<std::size_t, IntMatrix> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    auto inv = inverse(s_matrix(m));
    if (!inv) throw std::logic_error("S(m) is unimodular; inversion cannot fail");
    IntMatrix result = to_integer(*inv);
    std::lock_guard lock(mutex);
    return cache.emplace(m, std::move(result)).first->second;
}

/// Integer-valued structured matrix by name.
inline IntMatrix structured_matrix(MatrixName name, int m) {
    require_m(m);
    const auto n = static_cast<std::size_t>(m);
    switch (name) {
    case MatrixName::U: return backward_identity(n);
    case MatrixName::T: return forward_shift(n);
    case MatrixName::I: return IntMatrix::identity(n + 1);
    case MatrixName::S: return s_matrix(n);
    case MatrixName::S_inv: return s_inverse(n);
    case MatrixName::D: return d_matrix(n);
    }
    throw std::logic_error("unreachable");
}

/// The named (m+1)x(m+1) matrix over Q.
inline ExactMatrix build_matrix(MatrixName name, int m) {
    return ExactMatrix::convert(structured_matrix(name, m));
}

/// det(lambda I - U(m)), computed by evaluating the determinant at m+2 integer
/// points with fraction-free elimination and interpolating.
inline Polynomial char_poly_U(int m) {
    require_m(m);
    const auto n = static_cast<std::size_t>(m) + 1;
    const IntMatrix u = backward_identity(static_cast<std::size_t>(m));
    std::vector<Integer> xs, ys;
    for (std::size_t t = 0; t <= n; ++t) {
        const Integer lambda = static_cast<long>(t);
        IntMatrix a = lambda * IntMatrix::identity(n) - u;
        xs.push_back(lambda);
        ys.push_back(determinant(a));
    }
    return interpolate(xs, ys);
}

/// (lambda-1)^a (lambda+1)^b with a = ceil((m+1)/2), b = floor((m+1)/2).
inline Polynomial char_poly_U_product_form(int m) {
    require_m(m);
    const unsigned plus = static_cast<unsigned>((m + 2) / 2), minus = static_cast<unsigned>((m + 1) / 2);
    return Polynomial::linear(-1, 1).pow(plus) * Polynomial::linear(1, 1).pow(minus);
}

/// Coefficients K_s(t,i) of (1 - lambda)^i (1 + lambda)^(t-i).
inline Polynomial krawtchouk_expansion(int t, int i) {
    if (t < 0 || i < 0 || i > t)
        throw InputError("krawtchouk_expansion requires 0 <= i <= t (got t=" + std::to_string(t) +
                         ", i=" + std::to_string(i) + ")");
    return Polynomial::linear(1, -1).pow(static_cast<unsigned>(i)) *
           Polynomial::linear(1, 1).pow(static_cast<unsigned>(t - i));
}

/// The Krawtchouk index paired with U(m): (m+2)/2 for even m, (m+1)/2 for odd m.
inline int krawtchouk_index_for(int m) { return m % 2 == 0 ? (m + 2) / 2 : (m + 1) / 2; }

inline constexpr std::size_t kDefaultMinorScanCap = 7;

/// True iff every square minor lies in {-1, 0, 1}. Full scan; refuses matrices
/// with more than `cap` rows or columns.
template <class S>
bool is_totally_unimodular(const Matrix<S>& input, std::size_t cap = kDefaultMinorScanCap) {
    if (input.rows() > cap || input.cols() > cap) {
        Integer minors = 0;
        for (std::size_t k = 1; k <= std::min(input.rows(), input.cols()); ++k)
            minors += binomial(input.rows(), k) * binomial(input.cols(), k);
        throw ResourceCapError("minor scan too large: " + std::to_string(input.rows()) + "x" +
                                   std::to_string(input.cols()) + " exceeds cap " + std::to_string(cap) +
                                   " (" + minors.str() + " minors)",
                               minors);
    }
    const ExactMatrix a = ExactMatrix::convert(input);
    const std::size_t r = a.rows(), c = a.cols();
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
        // Iterate over all k-subsets of rows and columns as bitmasks.
        for (std::uint32_t rm = 0; rm < (1u << r); ++rm) {
            if (static_cast<std::size_t>(__builtin_popcount(rm)) != k) continue;
            std::vector<std::size_t> rs;
            for (std::size_t i = 0; i < r; ++i)
                if (rm >> i & 1u) rs.push_back(i);
            for (std::uint32_t cm = 0; cm < (1u << c); ++cm) {
                if (static_cast<std::size_t>(__builtin_popcount(cm)) != k) continue;
                std::vector<std::size_t> cs;
                for (std::size_t j = 0; j < c; ++j)
                    if (cm >> j & 1u) cs.push_back(j);
                const Rational d = determinant(a.submatrix(rs, cs));
                if (d != 0 && d != 1 && d != -1) return false;
            }
        }
    }
    return true;
}

} // namespace dsf
