#pragma once

// Squared norms and biorthogonality of the 2^[k]-bar vectors, orthogonal
// projectors onto H(m) and F(m), and the rank-1 projector closed forms.

#include "dsf/spaces.hpp"

namespace dsf {

/// ||h(2^[k]-bar;m)||^2 = 2 (C(2(m-k), m-k) - (-1)^k C(2(m-k), m)) and
/// ||f(2^[k]-bar;m)||^2 = C(2k, k) - 1.
inline Integer norm_sq(FH kind, int k, int m) {
    require_m(m);
    require_k(k, m);
    if (kind == FH::f) return binomial(2 * k, k) - 1;
    return 2 * (binomial(2 * (m - k), m - k) - sign_pow(k) * binomial(2 * (m - k), m));
}

inline Integer norm_sq_direct(FH kind, int k, int m) {
    const IntVector v = fh_bar(kind, k, m);
    return dot(v, v);
}

/// h(2^[s]-bar;m) . h(2^[t]-bar;m) == 0 for s, t of opposite parity.
inline bool biorthogonality_check(int s, int t, int m) {
    require_m(m);
    require_k(s, m);
    require_k(t, m);
    if ((s - t) % 2 == 0) throw InputError("biorthogonality requires s and t of opposite parity");
    return dot(fh_bar(FH::h, s, m), fh_bar(FH::h, t, m)) == 0;
}

/// B^T (B B^T)^-1 B for the rows B.
inline ExactMatrix gram_projector(const std::vector<IntVector>& rows) {
    const ExactMatrix b = ExactMatrix::convert(IntMatrix::from_rows(rows));
    const ExactMatrix bt = b.transpose();
    auto g = inverse(b * bt);
    if (!g) throw std::logic_error("gram_projector: spanning family is dependent");
    return bt * *g * b;
}

/// Orthogonal projector onto H(m) (which = H) or F(m) (which = F), relative
/// to the standard basis.
inline ExactMatrix subspace_projector(SubspaceLabel which, int m) {
    if (which != SubspaceLabel::H && which != SubspaceLabel::F)
        throw InputError("projectors are defined for H and F only");
    return gram_projector(subspace_basis(which, m).vectors);
}

/// Printed closed form for the rank-1 projector onto lin(v), v = h or f of
/// 2^[k]-bar. The `corrected` f form keeps the -delta term of the f-vector in
/// both factors; the printed one drops it.
inline Rational rank1_projector_entry(FH kind, int k, int i, int j, int m,
                                      FormulaVariant variant = FormulaVariant::printed) {
    require_m(m);
    require_k(k, m);
    if (i < 0 || i > m || j < 0 || j > m) throw InputError("i, j must lie in [0, m]");
    if (kind == FH::h) {
        auto factor = [&](int x) { return binomial(m - k, x) - sign_pow(k) * binomial(m - k, x - k); };
        const Integer denom = 2 * (binomial(2 * (m - k), m - k) - sign_pow(k) * binomial(2 * (m - k), m));
        return Rational(sign_pow(i + j) * factor(i) * factor(j), denom);
    }
    const Integer denom = binomial(2 * k, k) - 1;
    if (variant == FormulaVariant::printed) return Rational(binomial(k, i) * binomial(k, j), denom);
    return Rational((binomial(k, i) - Integer(i == k ? 1 : 0)) * (binomial(k, j) - Integer(j == k ? 1 : 0)), denom);
}

/// v^T v / ||v||^2 for v = h or f of 2^[k]-bar.
inline ExactMatrix rank1_projector(FH kind, int k, int m) { return gram_projector({fh_bar(kind, k, m)}); }

inline bool is_idempotent(const ExactMatrix& p) { return p * p == p; }

/// U P U: the projector relative to the reversed standard basis (which is Hdown).
inline ExactMatrix reversal_conjugate(const ExactMatrix& p) {
    const ExactMatrix u = ExactMatrix::convert(backward_identity(p.rows() - 1));
    return u * p * u;
}

} // namespace dsf
