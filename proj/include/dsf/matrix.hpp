#pragma once

// Dense exact matrices. Rows and columns are indexed from zero; vectors are
// row vectors and act on matrices from the left (v * M).

#include "dsf/numeric.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace dsf {

template <class Scalar>
class Matrix {
  public:
    using value_type = Scalar;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Builds a matrix whose rows are the given vectors (all of equal length).
    template <class T>
    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        if (rows.empty()) return Matrix();
        Matrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw std::invalid_argument("from_rows: ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = Scalar(rows[i][j]);
        }
        return m;
    }

    template <class Other>
    static Matrix convert(const Matrix<Other>& other) {
        Matrix m(other.rows(), other.cols());
        for (std::size_t i = 0; i < other.rows(); ++i)
            for (std::size_t j = 0; j < other.cols(); ++j) m(i, j) = Scalar(other(i, j));
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Scalar> row(std::size_t i) const {
        return std::vector<Scalar>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    std::vector<Scalar> column(std::size_t j) const {
        std::vector<Scalar> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    std::vector<std::vector<Scalar>> row_list() const {
        std::vector<std::vector<Scalar>> out;
        for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
        return out;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
        Matrix s(rs.size(), cs.size());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) s(i, j) = (*this)(rs[i], cs[j]);
        return s;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }
    friend Matrix operator*(const Scalar& s, const Matrix& a) {
        Matrix r = a;
        for (auto& x : r.data_) x *= s;
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_symmetric() const { return *this == transpose(); }

    bool is_lower_triangular() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != 0) return false;
        return true;
    }

  private:
    void require_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

using IntMatrix = Matrix<Integer>;
using ExactMatrix = Matrix<Rational>;

/// Row vector times matrix.
template <class V, class S>
auto operator*(const std::vector<V>& v, const Matrix<S>& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("vector-matrix product: shape mismatch");
    using R = std::conditional_t<std::is_same_v<V, Rational> || std::is_same_v<S, Rational>, Rational,
                                 Integer>;
    std::vector<R> out(m.cols());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += R(v[i]) * R(m(i, j));
    }
    return out;
}

/// Narrows a rational matrix whose entries are all integers.
inline IntMatrix to_integer(const ExactMatrix& m) {
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!is_integral(m(i, j))) throw std::domain_error("to_integer: non-integral entry");
            r(i, j) = numerator(m(i, j));
        }
    return r;
}

namespace detail {

// Clears denominators row by row so that elimination can stay in Z.
inline IntMatrix scale_to_integer(const ExactMatrix& m) {
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = boost::multiprecision::lcm(l, denominator(m(i, j)));
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = numerator(m(i, j)) * (l / denominator(m(i, j)));
    }
    return r;
}

inline const IntMatrix& as_integer(const IntMatrix& m) { return m; }
inline IntMatrix as_integer(const ExactMatrix& m) { return scale_to_integer(m); }

struct EliminationResult {
    std::size_t rank = 0;
    Integer last_pivot = 1;
    int sign = 1;
};

// Fraction-free (Bareiss) forward elimination with row pivoting. Columns
// without a pivot are skipped, so this also yields the rank of rectangular
// input. Every division is exact.
inline EliminationResult bareiss(IntMatrix a) {
    const std::size_t n = a.rows(), c = a.cols();
    EliminationResult res;
    for (std::size_t col = 0; col < c && res.rank < n; ++col) {
        const std::size_t r = res.rank;
        std::size_t p = r;
        while (p < n && a(p, col) == 0) ++p;
        if (p == n) continue;
        if (p != r) {
            for (std::size_t j = 0; j < c; ++j) std::swap(a(p, j), a(r, j));
            res.sign = -res.sign;
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = col + 1; j < c; ++j)
                a(i, j) = (a(r, col) * a(i, j) - a(i, col) * a(r, j)) / res.last_pivot;
            a(i, col) = 0;
        }
        res.last_pivot = a(r, col);
        ++res.rank;
    }
    return res;
}

} // namespace detail

/// Exact rank by fraction-free elimination.
template <class S>
std::size_t rank(const Matrix<S>& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return detail::bareiss(detail::as_integer(m)).rank;
}

/// Rank of the family of row vectors.
template <class T>
std::size_t rank(const std::vector<std::vector<T>>& rows) {
    if (rows.empty()) return 0;
    return rank(Matrix<std::conditional_t<std::is_same_v<T, Rational>, Rational, Integer>>::from_rows(rows));
}

/// Exact determinant of a square integer matrix.
inline Integer determinant(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant: matrix not square");
    if (m.rows() == 0) return 1;
    const auto e = detail::bareiss(m);
    return e.rank == m.rows() ? Integer(e.sign * e.last_pivot) : Integer(0);
}

inline Rational determinant(const ExactMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant: matrix not square");
    Integer scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = boost::multiprecision::lcm(l, denominator(m(i, j)));
        scale *= l;
    }
    return Rational(determinant(detail::scale_to_integer(m)), scale);
}

/// Exact inverse by Gauss-Jordan over Q; std::nullopt when singular.
template <class S>
std::optional<ExactMatrix> inverse(const Matrix<S>& input) {
    if (!input.is_square()) throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = input.rows();
    ExactMatrix a = ExactMatrix::convert(input);
    ExactMatrix inv = ExactMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a(p, col) == 0) ++p;
        if (p == n) return std::nullopt;
        if (p != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(col, j));
                std::swap(inv(p, j), inv(col, j));
            }
        const Rational piv = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= piv;
            inv(col, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            const Rational f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

/// Solves kappa * B = w for the row basis B; nullopt when no solution exists.
/// B may be rectangular (fewer rows than columns); the solution is unique
/// whenever the rows of B are independent.
template <class S, class V>
std::optional<RatVector> solve_left(const Matrix<S>& basis, const std::vector<V>& w) {
    const std::size_t k = basis.rows(), n = basis.cols();
    if (w.size() != n) throw std::invalid_argument("solve_left: length mismatch");
    // Work on the transposed system B^T kappa^T = w^T, augmented.
    ExactMatrix a(n, k + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) a(i, j) = Rational(basis(j, i));
        a(i, k) = Rational(w[i]);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < k && r < n; ++col) {
        std::size_t p = r;
        while (p < n && a(p, col) == 0) ++p;
        if (p == n) continue;
        for (std::size_t j = 0; j <= k; ++j) std::swap(a(p, j), a(r, j));
        const Rational piv = a(r, col);
        for (std::size_t j = 0; j <= k; ++j) a(r, j) /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || a(i, col) == 0) continue;
            const Rational f = a(i, col);
            for (std::size_t j = 0; j <= k; ++j) a(i, j) -= f * a(r, j);
        }
        pivot_col.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < n; ++i)
        if (a(i, k) != 0) return std::nullopt;
    RatVector kappa(k);
    for (std::size_t i = 0; i < r; ++i) kappa[pivot_col[i]] = a(i, k);
    return kappa;
}

/// Dimension of {v : v * M = 0} (left kernel, row vectors acting on the right).
template <class S>
std::size_t left_kernel_dimension(const Matrix<S>& m) {
    return m.rows() - rank(m);
}

/// lin(A) == lin(B) as subspaces.
template <class T, class U>
bool same_span(const std::vector<std::vector<T>>& a, const std::vector<std::vector<U>>& b) {
    std::vector<RatVector> ra, rb, all;
    for (const auto& v : a) ra.emplace_back(v.begin(), v.end());
    for (const auto& v : b) rb.emplace_back(v.begin(), v.end());
    all = ra;
    all.insert(all.end(), rb.begin(), rb.end());
    const std::size_t r = rank(all);
    return rank(ra) == r && rank(rb) == r;
}

} // namespace dsf
