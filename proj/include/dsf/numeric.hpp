#pragma once

// Exact scalar types and binomial coefficients shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace dsf {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Raised for malformed user input (bad face, index out of range, m < 2, ...).
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a request exceeds a configured work cap.
class ResourceCapError : public std::runtime_error {
  public:
    ResourceCapError(const std::string& what, Integer estimate)
        : std::runtime_error(what), estimate_(std::move(estimate)) {}
    const Integer& estimate() const noexcept { return estimate_; }

  private:
    Integer estimate_;
};

/// (-1)^e for any integer e.
constexpr int sign_pow(long long e) noexcept { return (e % 2 == 0) ? 1 : -1; }

namespace detail {

inline constexpr int kPascalRows = 160;

// Pascal triangle, built once on first use (magic static => thread-safe).
inline const std::vector<std::vector<Integer>>& pascal_table() {
    static const std::vector<std::vector<Integer>> table = [] {
        std::vector<std::vector<Integer>> t(kPascalRows);
        for (int n = 0; n < kPascalRows; ++n) {
            t[n].resize(n + 1);
            t[n][0] = t[n][n] = 1;
            for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
        }
        return t;
    }();
    return table;
}

} // namespace detail

/// C(n,k) with the combinatorial convention: zero unless 0 <= k <= n.
inline Integer binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (n < detail::kPascalRows) return detail::pascal_table()[n][k];
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// C(n,k) as a machine integer; throws when the value does not fit.
inline std::int64_t binomial_i64(long long n, long long k) {
    Integer v = binomial(n, k);
    if (v > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("binomial coefficient exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

/// 2^e as an exact rational, e may be negative.
inline Rational pow2(long long e) {
    Integer p = 1;
    p <<= static_cast<unsigned>(e < 0 ? -e : e);
    return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

inline std::string to_string(const Integer& v) { return v.str(); }

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

inline bool is_integral(const Rational& v) { return denominator(v) == 1; }

inline IntVector to_int_vector(const std::vector<std::int64_t>& v) {
    return IntVector(v.begin(), v.end());
}

inline RatVector to_rat_vector(const IntVector& v) {
    return RatVector(v.begin(), v.end());
}

/// Standard dot product.
template <class A, class B>
auto dot(const std::vector<A>& a, const std::vector<B>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    using R = std::conditional_t<std::is_same_v<A, Rational> || std::is_same_v<B, Rational>,
                                 Rational, Integer>;
    R s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += R(a[i]) * R(b[i]);
    return s;
}

template <class T>
std::string to_string(const std::vector<T>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        if constexpr (std::is_arithmetic_v<T>)
            s += std::to_string(v[i]);
        else
            s += to_string(v[i]);
    }
    return s + ")";
}

} // namespace dsf
