#pragma once

#include "dsf/numeric.hpp"

#include <string>
#include <vector>

namespace dsf {

/// Univariate polynomial with exact integer coefficients, ascending powers.
/// The zero polynomial has no coefficients; otherwise the top coefficient is
/// nonzero.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Integer> ascending) : c_(std::move(ascending)) { trim(); }

    static Polynomial constant(Integer c) { return Polynomial({std::move(c)}); }
    /// a + b*x
    static Polynomial linear(Integer a, Integer b) { return Polynomial({std::move(a), std::move(b)}); }

    const std::vector<Integer>& coefficients() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    Integer coefficient(std::size_t s) const { return s < c_.size() ? c_[s] : Integer(0); }
    const Integer& leading() const { return c_.back(); }

    template <class T>
    T evaluate(const T& x) const {
        T acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coefficient(i) + b.coefficient(i);
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    Polynomial pow(unsigned e) const {
        Polynomial r = constant(1), base = *this;
        for (; e; e >>= 1, base = base * base)
            if (e & 1) r = r * base;
        return r;
    }

    /// Multiplicity of `root` as a zero (synthetic division by x - root).
    unsigned root_multiplicity(const Integer& root) const {
        if (is_zero()) return 0;
        unsigned mult = 0;
        std::vector<Integer> p = c_;
        while (p.size() > 1) {
            // Horner-style division; remainder ends up in q0.
            std::vector<Integer> q(p.size() - 1);
            Integer carry = 0;
            for (std::size_t i = p.size(); i-- > 1;) {
                carry = p[i] + carry * root;
                q[i - 1] = carry;
            }
            const Integer remainder = p[0] + carry * root;
            if (remainder != 0) break;
            p = std::move(q);
            ++mult;
        }
        return mult;
    }

    /// Human-readable form in the variable `var`, highest power first.
    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const Integer& a = c_[i];
            if (a == 0) continue;
            const Integer mag = abs(a);
            if (s.empty())
                s += a < 0 ? "-" : "";
            else
                s += a < 0 ? " - " : " + ";
            if (mag != 1 || i == 0) s += mag.str();
            if (i >= 1) s += var;
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Integer> c_;
};

/// Newton interpolation through (x_i, y_i) with distinct integer nodes; the
/// result must have integer coefficients.
inline Polynomial interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
    const std::size_t n = xs.size();
    std::vector<Rational> dd(ys.begin(), ys.end());
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - j]);
            if (i == j) break;
        }
    // Expand the Newton form into ascending coefficients.
    std::vector<Rational> coef(n);
    std::vector<Rational> basis{Rational(1)};
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t s = 0; s < basis.size(); ++s) coef[s] += dd[j] * basis[s];
        std::vector<Rational> next(basis.size() + 1);
        for (std::size_t s = 0; s < basis.size(); ++s) {
            next[s + 1] += basis[s];
            next[s] -= basis[s] * Rational(xs[j]);
        }
        basis = std::move(next);
    }
    std::vector<Integer> out;
    for (const auto& c : coef) {
        if (!is_integral(c)) throw std::domain_error("interpolate: non-integral coefficient");
        out.push_back(numerator(c));
    }
    return Polynomial(std::move(out));
}

} // namespace dsf
