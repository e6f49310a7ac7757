#pragma once

// Identity suites. Each suite recomputes a family of closed forms or
// structural statements for one m and records every comparison.

#include "dsf/enumeration.hpp"
#include "dsf/projectors.hpp"

namespace dsf {

enum class Suite { tables, spectra, spaces, appendix, fixedness, prism, genfun, oracle, corollary, integrality, all };

inline constexpr std::array<Suite, 10> kConcreteSuites = {Suite::tables,    Suite::spectra, Suite::spaces,
                                                          Suite::appendix,  Suite::fixedness, Suite::prism,
                                                          Suite::genfun,    Suite::oracle,  Suite::corollary,
                                                          Suite::integrality};

inline std::string_view name_of(Suite s) {
    switch (s) {
    case Suite::tables: return "tables";
    case Suite::spectra: return "spectra";
    case Suite::spaces: return "spaces";
    case Suite::appendix: return "appendix";
    case Suite::fixedness: return "fixedness";
    case Suite::prism: return "prism";
    case Suite::genfun: return "genfun";
    case Suite::oracle: return "oracle";
    case Suite::corollary: return "corollary";
    case Suite::integrality: return "integrality";
    case Suite::all: return "all";
    }
    return "?";
}

inline Suite parse_suite(std::string_view s) {
    for (Suite x : kConcreteSuites)
        if (s == name_of(x)) return x;
    if (s == "all") return Suite::all;
    throw InputError("unknown suite '" + std::string(s) + "'");
}

struct VerifyOptions {
    FormulaVariant variant = FormulaVariant::printed;
    EngineOptions engine;
};

/// Largest m for which the full minor scan of I - U(m) runs.
inline constexpr int kUnimodularScanMaxM = 5;
/// Largest m for which the Gram projectors are rebuilt.
inline constexpr int kProjectorMaxM = 6;
/// Largest m for which the rank-1 closed forms are compared entrywise.
inline constexpr int kRank1MaxM = 8;
/// Largest m for which the generated cone is proved equal to C^f(m).
inline constexpr int kConeEqualityMaxM = 4;

namespace detail {

inline std::vector<IntVector> qf_points(int m, const EngineOptions& opt) {
    EngineOptions o = opt;
    o.count_only = false;
    std::vector<IntVector> out;
    for (const auto& p : enumerate_eigen_lattice(m, default_bounds(m), o).points) out.push_back(to_int_vector(p));
    return out;
}

inline VerificationReport suite_tables(int m, const VerifyOptions& opt) {
    VerificationReport r("tables");
    for (FH kind : {FH::f, FH::h})
        for (int k = 1; k <= m; ++k)
            r.expect_equal(fh_bar(kind, k, m), fh_bar_direct(kind, k, m), m, kind == FH::f ? "f_bar" : "h_bar", {k});
    r.merge(verify_table1(m, opt.variant));
    r.merge(verify_table23(m));
    r.merge(eq78_check(m));
    return r;
}

inline VerificationReport suite_spectra(int m) {
    VerificationReport r("spectra");
    const auto n = static_cast<std::size_t>(m);
    const IntMatrix s = s_matrix(n), si = s_inverse(n), u = backward_identity(n), d = d_matrix(n);
    const IntMatrix id = IntMatrix::identity(n + 1);
    r.check(s * si == id, m, "S_times_S_inv");
    r.check(d == s * u * si, m, "D_similar_to_U");
    const Polynomial cp = char_poly_U(m);
    r.expect_equal(char_poly_U_product_form(m).str("l"), cp.str("l"), m, "char_poly_product_form");
    const Polynomial kr = krawtchouk_expansion(m + 1, krawtchouk_index_for(m));
    r.expect_equal(kr.str("l"), cp.str("l"), m, "char_poly_krawtchouk_form");
    if (kr == cp)
        r.note("m=" + std::to_string(m) + ": Krawtchouk form equals the characteristic polynomial");
    else if (kr == -cp)
        r.note("m=" + std::to_string(m) + ": Krawtchouk form equals minus the characteristic polynomial");
    r.check(kr == cp || kr == -cp, m, "char_poly_krawtchouk_up_to_sign");
    r.expect_equal(static_cast<long long>((m + 2) / 2), static_cast<long long>(cp.root_multiplicity(1)), m,
                   "multiplicity_of_1");
    r.expect_equal(static_cast<long long>((m + 1) / 2), static_cast<long long>(cp.root_multiplicity(-1)), m,
                   "multiplicity_of_-1");
    const std::size_t half = static_cast<std::size_t>((m + 1) / 2);
    r.expect_equal(half, rank(id - u), m, "rank_I_minus_U");
    r.expect_equal(half, rank(id - d), m, "rank_I_minus_D");
    r.expect_equal(n + 1 - half, left_kernel_dimension(id - u), m, "geometric_multiplicity_of_1");
    const IntMatrix idd = id - d;
    r.check(idd.is_lower_triangular(), m, "I_minus_D_lower_triangular");
    for (std::size_t i = 0; i <= n; ++i)
        r.check(idd(i, i) == 0 || idd(i, i) == 2, m, "I_minus_D_diagonal", {static_cast<long long>(i)}, "0 or 2",
                to_string(idd(i, i)));
    if (m <= kUnimodularScanMaxM) r.check(is_totally_unimodular(id - u), m, "I_minus_U_totally_unimodular");
    return r;
}

inline VerificationReport suite_spaces(int m) {
    VerificationReport r("spaces");
    const auto n = static_cast<std::size_t>(m);
    const IntMatrix si = s_inverse(n);
    r.expect_equal(pi_vector(m), iota(m) * si, m, "pi_is_iota_S_inv");
    {
        IntVector lifted = pi_vector(m);
        lifted.push_back(0);
        lifted.push_back(0);
        r.expect_equal(lifted, long_f(FaceSystem::simplex_boundary(m + 1, m + 2)), m, "pi_as_f_vector");
    }
    const std::size_t half_up = static_cast<std::size_t>(m / 2 + 1), half_down = static_cast<std::size_t>(m / 2);
    for (SubspaceLabel label : {SubspaceLabel::Eh, SubspaceLabel::H, SubspaceLabel::Ef, SubspaceLabel::F}) {
        const auto b = subspace_basis(label, m);
        const bool eigen = label == SubspaceLabel::Eh || label == SubspaceLabel::Ef;
        r.expect_equal(eigen ? half_up : half_down, rank(b.vectors), m, "dimension_" + std::string(name_of(label)));
        for (std::size_t v = 0; v < b.vectors.size(); ++v) {
            if (eigen)
                r.check(in_eigenspace(b.vectors[v], label == SubspaceLabel::Eh ? FH::h : FH::f, m), m,
                        "eigenvector_" + std::string(name_of(label)), {static_cast<long long>(v)});
            if (label == SubspaceLabel::H)
                r.expect_equal(Integer(0), dot(b.vectors[v], iota(m)), m, "H_orthogonal_to_iota",
                               {static_cast<long long>(v)});
            if (label == SubspaceLabel::F || label == SubspaceLabel::Ef)
                r.expect_equal(Integer(1), b.vectors[v][0], m, "first_coordinate_one", {static_cast<long long>(v)});
        }
    }
    auto image = [&](SubspaceLabel l) {
        std::vector<IntVector> out;
        for (const auto& v : subspace_basis(l, m).vectors) out.push_back(v * si);
        return out;
    };
    r.check(same_span(image(SubspaceLabel::H), subspace_basis(SubspaceLabel::F, m).vectors), m, "F_is_image_of_H");
    r.check(same_span(image(SubspaceLabel::Eh), subspace_basis(SubspaceLabel::Ef, m).vectors), m,
            "Ef_is_image_of_Eh");
    const auto gens = cone_generators(m);
    r.check(same_span(gens, subspace_basis(SubspaceLabel::Ef, m).vectors), m, "generators_span_Ef");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (const auto& x : gens[i]) r.check(x >= 0, m, "generator_nonnegative", {static_cast<long long>(i)});
        for (std::size_t j = 0; j <= i; ++j)
            r.expect_equal(Integer(i == j ? 1 : 0), gens[i][j], m, "generator_unit_upper_triangular",
                           {static_cast<long long>(i), static_cast<long long>(j)});
        auto rest = gens;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        r.expect_equal(gens.size() - 1, rank(rest), m, "extreme_ray", {static_cast<long long>(i)});
    }
    return r;
}

inline VerificationReport suite_appendix(int m, const VerifyOptions& opt) {
    VerificationReport r("appendix");
    for (FH kind : {FH::f, FH::h})
        for (int k = 1; k <= m; ++k)
            r.expect_equal(norm_sq(kind, k, m), norm_sq_direct(kind, k, m), m,
                           kind == FH::f ? "norm_f" : "norm_h", {k});
    for (int s = 1; s <= m; ++s)
        for (int t = 1; t <= m; ++t)
            if ((s - t) % 2 != 0) r.check(biorthogonality_check(s, t, m), m, "biorthogonality", {s, t});
    if (m <= kProjectorMaxM) {
        const auto n = static_cast<std::size_t>(m);
        for (SubspaceLabel which : {SubspaceLabel::H, SubspaceLabel::F}) {
            const std::string tag(name_of(which));
            const ExactMatrix p = subspace_projector(which, m);
            r.check(is_idempotent(p), m, "idempotent_" + tag);
            r.check(p.is_symmetric(), m, "symmetric_" + tag);
            for (const auto& v : subspace_basis(which, m).vectors)
                r.expect_equal(to_rat_vector(v), v * p, m, "fixes_spanning_vector_" + tag);
            if (which == SubspaceLabel::H) {
                r.expect_equal(RatVector(n + 1), iota(m) * p, m, "H_projector_annihilates_iota");
                r.check(reversal_conjugate(p) == p, m, "H_projector_reversal_invariant");
                const ExactMatrix pe = p + gram_projector({iota(m)});
                for (const auto& v : subspace_basis(SubspaceLabel::Eh, m).vectors)
                    r.expect_equal(to_rat_vector(v), v * pe, m, "direct_sum_identity_on_Eh");
            }
        }
    }
    if (m <= kRank1MaxM)
        for (FH kind : {FH::f, FH::h})
            for (int k = 1; k <= m; ++k) {
                const ExactMatrix p = rank1_projector(kind, k, m);
                for (int i = 0; i <= m; ++i)
                    for (int j = 0; j <= m; ++j)
                        r.expect_equal(rank1_projector_entry(kind, k, i, j, m, opt.variant), p(i, j), m,
                                       kind == FH::f ? "rank1_f" : "rank1_h", {k, i, j});
            }
    return r;
}

inline VerificationReport suite_fixedness(int m, const VerifyOptions& opt) {
    VerificationReport r("fixedness");
    const auto n = static_cast<std::size_t>(m);
    const IntMatrix d = d_matrix(n), s = s_matrix(n), u = backward_identity(n);
    const auto pts = qf_points(m, opt.engine);
    const PolytopeHandle qh = make_polytope(PolytopeLabel::Qh, m);
    const std::size_t cols = qh_relation_columns(m);
    std::size_t qh_count = 0;
    for (std::size_t p = 0; p < pts.size(); ++p) {
        const auto& z = pts[p];
        const auto idx = std::vector<long long>{static_cast<long long>(p)};
        r.expect_equal(z, z * d, m, "zD_equals_z", idx);
        for (int l = 0; l <= m; ++l) {
            Integer sum = 0;
            for (int i = 0; i <= m; ++i) sum += sign_pow(i) * binomial(i, l) * z[i];
            r.expect_equal(z[l], Integer(sign_pow(m) * sum), m, "expanded_form", {static_cast<long long>(p), l});
        }
        const IntVector h = z * s;
        r.expect_equal(h, h * u, m, "hU_equals_h", idx);
        for (int k = 1; k <= (m + 1) / 2; ++k)
            r.expect_equal(h[k - 1], h[m - k + 1], m, "palindromic_relation", {static_cast<long long>(p), k});
        const bool in_qh = contains(qh, h);
        r.check(in_qh, m, "image_in_Qh", idx);
        qh_count += in_qh;
        const RatVector hr = to_rat_vector(h);
        r.check(contains_Qh_by_relations(hr, m, cols) == contains_Qh_by_relations(hr, m, n + 1), m,
                "truncated_relations_agree", idx);
    }
    r.expect_equal(pts.size(), qh_count, m, "lattice_bijection_count");
    r.expect_equal(static_cast<std::size_t>(m / 2 + 1), qh_center_dimension(m), m, "center_dimension");
    return r;
}

inline VerificationReport suite_prism(int m, const VerifyOptions& opt) {
    if (m % 2 != 0) return VerificationReport("prism");
    BoundsVector pf = default_bounds(m);
    pf[0] = 0;
    EngineOptions o = opt.engine;
    o.count_only = false;
    std::vector<IntVector> base;
    for (const auto& p : enumerate_eigen_lattice(m, pf, o).points) base.push_back(to_int_vector(p));
    return prism_check(m, qf_points(m, opt.engine), base);
}

inline VerificationReport suite_genfun(int m, const VerifyOptions& opt) {
    if (m > kGenfunMaxM) {
        VerificationReport r("genfun");
        r.note("m=" + std::to_string(m) + ": generating-function check skipped (cap 8)");
        return r;
    }
    return genfun_identity_check(m, opt.engine);
}

inline VerificationReport suite_oracle(int m, const VerifyOptions& opt) {
    VerificationReport r("oracle");
    EngineOptions o = opt.engine;
    o.count_only = false;
    const auto matching = ds_fvectors(m, ParityClass::matching, o).points;
    const auto opposite = ds_fvectors(m, ParityClass::opposite, o).points;
    r.check(std::none_of(matching.begin(), matching.end(),
                         [&](const IntVector& v) { return std::binary_search(opposite.begin(), opposite.end(), v); }),
            m, "classes_disjoint");
    if (const auto expected = table4_expected(m)) {
        r.expect_equal((*expected)[0], static_cast<std::uint64_t>(matching.size()), m, "table4_col1");
        r.expect_equal((*expected)[1], static_cast<std::uint64_t>(opposite.size()), m, "table4_col2");
    }
    if (m <= kOracleBoxMaxM) {
        const auto box = oracle_box(m);
        r.check(box.matching == matching, m, "engine_vs_box_matching", {}, std::to_string(box.matching.size()),
                std::to_string(matching.size()));
        r.check(box.opposite == opposite, m, "engine_vs_box_opposite", {}, std::to_string(box.opposite.size()),
                std::to_string(opposite.size()));
    } else {
        r.note("m=" + std::to_string(m) + ": box oracle skipped (cap 7)");
    }
    if (m <= kOraclePowersetMaxM) {
        const auto ps = oracle_powerset(m);
        r.check(ps.sets.matching == matching, m, "engine_vs_powerset_matching");
        r.check(ps.sets.opposite == opposite, m, "engine_vs_powerset_opposite");
        r.expect_equal(ps.systems_matching, total_ds_count(m, ParityClass::matching, o), m, "system_count_matching");
        r.expect_equal(ps.systems_opposite, total_ds_count(m, ParityClass::opposite, o), m, "system_count_opposite");
    }
    return r;
}

inline VerificationReport suite_corollary(int m, const VerifyOptions& opt) {
    return corollary1_verify(m, ds_fvectors(m, ParityClass::matching, opt.engine).points);
}

inline VerificationReport suite_integrality(int m, const VerifyOptions& opt) {
    VerificationReport r("integrality");
    const auto pts = qf_points(m, opt.engine);
    std::size_t outside = 0;
    for (std::size_t p = 0; p < pts.size(); ++p) {
        const auto a = generator_coordinates(pts[p], m);
        r.check(a.has_value(), m, "integer_generator_coordinates", {static_cast<long long>(p)}, "integral",
                to_string(pts[p]));
        if (!a) continue;
        const bool nonneg = std::all_of(a->begin(), a->end(), [](const Integer& x) { return x >= 0; });
        if (m <= kConeEqualityMaxM)
            r.check(nonneg, m, "cone_equality", {static_cast<long long>(p)}, "nonnegative", to_string(*a));
        else if (!nonneg)
            ++outside;
    }
    if (m > kConeEqualityMaxM)
        r.note("m=" + std::to_string(m) + ": " + std::to_string(outside) +
               " lattice points of Q^f lie outside the generated cone");
    return r;
}

} // namespace detail

inline VerificationReport run_suite(Suite suite, int m, const VerifyOptions& opt = {}) {
    require_m(m);
    switch (suite) {
    case Suite::tables: return detail::suite_tables(m, opt);
    case Suite::spectra: return detail::suite_spectra(m);
    case Suite::spaces: return detail::suite_spaces(m);
    case Suite::appendix: return detail::suite_appendix(m, opt);
    case Suite::fixedness: return detail::suite_fixedness(m, opt);
    case Suite::prism: return detail::suite_prism(m, opt);
    case Suite::genfun: return detail::suite_genfun(m, opt);
    case Suite::oracle: return detail::suite_oracle(m, opt);
    case Suite::corollary: return detail::suite_corollary(m, opt);
    case Suite::integrality: return detail::suite_integrality(m, opt);
    case Suite::all: {
        VerificationReport r("all");
        for (Suite s : kConcreteSuites) r.merge(run_suite(s, m, opt));
        return r;
    }
    }
    throw std::logic_error("unreachable");
}

} // namespace dsf
