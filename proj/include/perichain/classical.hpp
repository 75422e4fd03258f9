#pragma once

#include <functional>
#include <tuple>

#include "perichain/bivector.hpp"
#include "perichain/params.hpp"
#include "perichain/report.hpp"

namespace perichain {

// ---------------------------------------------------------------------------
// Classical r-matrix families (each one exactly as printed).
// zeta indices are per-link with zeta_0 = 1 throughout.
// ---------------------------------------------------------------------------

namespace classical_detail {

inline Rational zeta_at(const std::vector<Rational>& zeta, int i) {
    if (i == 0) return Rational(1);
    return zeta.at(i - 1);
}

inline void require_sizes(const SlAlgebra& sl, const std::vector<Rational>& psi,
                          const std::vector<Rational>& zeta) {
    if ((int)psi.size() != sl.max_links() || (int)zeta.size() != sl.half() - 1)
        throw BadParameters("expected z link parameters and n-1 enlargement parameters");
}

} // namespace classical_detail

/// r-matrix of the canonical chain: sum_k psi_{k+1} (H_{k+1,N-k} ^ E_{k+1,N-k}
/// + sum_s E_{k+1,s} ^ E_{s,N-k}).
inline Bivector r_B(const SlAlgebra& sl, const std::vector<Rational>& psi) {
    const int N = sl.N;
    if ((int)psi.size() != sl.max_links()) throw BadParameters("r_B needs z link parameters");
    Bivector r;
    for (int k = 0; k < (int)psi.size(); ++k) {
        r.add_wedge(sl.H(k + 1, N - k), sl.E(k + 1, N - k), psi[k]);
        for (int s = k + 2; s <= N - k - 1; ++s)
            r.add_wedge(sl.E(k + 1, s), sl.E(s, N - k), psi[k]);
    }
    return r;
}

/// The commuting elements the Reshetikhin terms pair: the classical limits
/// of sigma_k (k = 0..z-1) followed by E_l^P (l = 1..n-1).
inline std::vector<LieElement> reshetikhin_J_set(const SlAlgebra& sl) {
    std::vector<LieElement> J;
    for (int k = 0; k < sl.max_links(); ++k) J.push_back(sl.E(k + 1, sl.N - k));
    for (int l = 1; l <= sl.half() - 1; ++l) J.push_back(sl.EP(l));
    return J;
}

/// r-matrix of the Reshetikhin-enlarged peripheric chain:
/// sum_k psi_{k+1}(H^P ^ E + sum_s E ^ E) + sum_{mn} beta^{mn} J_m ^ J_n.
inline Bivector r_RB(const SlAlgebra& sl, const std::vector<Rational>& psi,
                     const std::vector<std::vector<Rational>>& beta) {
    const int N = sl.N;
    if ((int)psi.size() != sl.max_links()) throw BadParameters("r_RB needs the full chain");
    auto J = reshetikhin_J_set(sl);
    if (beta.size() != J.size()) throw BadParameters("beta matrix has wrong size");
    Bivector r;
    for (int k = 0; k < (int)psi.size(); ++k) {
        r.add_wedge(sl.cartan_HP(k), sl.E(k + 1, N - k), psi[k]);
        for (int s = k + 2; s <= N - k - 1; ++s)
            r.add_wedge(sl.E(k + 1, s), sl.E(s, N - k), psi[k]);
    }
    for (std::size_t m = 0; m < J.size(); ++m) {
        if (beta[m].size() != J.size()) throw BadParameters("beta matrix has wrong size");
        for (std::size_t n = 0; n < J.size(); ++n) r.add_wedge(J[m], J[n], beta[m][n]);
    }
    return r;
}

/// r-matrix of the Jordanian-enlarged peripheric chain:
/// sum_k psi_{k+1} zeta_k (H^P_{k+1,N-k} ^ E_{k+1,N-k}
///                          + sum_{s=k+2}^{N-k-1} E_{k+1,s} ^ E_{s,N-k})
/// + sum_{i=1}^{n-1} psi_i zeta_i H_i^perp ^ E_{i,N-i}.
inline Bivector r_JB(const SlAlgebra& sl, const std::vector<Rational>& psi,
                     const std::vector<Rational>& zeta) {
    using classical_detail::zeta_at;
    classical_detail::require_sizes(sl, psi, zeta);
    const int N = sl.N;
    Bivector r;
    for (int k = 0; k < (int)psi.size(); ++k) {
        Rational c = psi[k] * zeta_at(zeta, k);
        r.add_wedge(sl.cartan_HP(k), sl.E(k + 1, N - k), c);
        for (int s = k + 2; s <= N - k - 1; ++s)
            r.add_wedge(sl.E(k + 1, s), sl.E(s, N - k), c);
    }
    for (int i = 1; i <= sl.half() - 1; ++i)
        r.add_wedge(sl.cartan_Hperp(i), sl.E(i, N - i), psi[i - 1] * zeta_at(zeta, i));
    return r;
}

/// The same bivector regrouped so that every argument lies in the image of
/// the carrier injection: the E_{k+1,N-k-1} ^ (E_{N-k-1,N-k} -
/// (zeta_{k+1}/zeta_k) H_{k+1}^perp) form.
inline Bivector r_JB_regrouped(const SlAlgebra& sl, const std::vector<Rational>& psi,
                               const std::vector<Rational>& zeta) {
    using classical_detail::zeta_at;
    classical_detail::require_sizes(sl, psi, zeta);
    const int N = sl.N, n = sl.half();
    Bivector r;
    for (int k = 0; k < (int)psi.size(); ++k) {
        Rational c = psi[k] * zeta_at(zeta, k);
        if (k + 1 <= n - 1) {
            if (zeta_at(zeta, k).is_zero()) throw DivisionByZero("zeta ratio undefined");
            Rational ratio = zeta_at(zeta, k + 1) / zeta_at(zeta, k);
            LieElement second = sl.E(N - k - 1, N - k) - ratio * sl.cartan_Hperp(k + 1);
            r.add_wedge(sl.E(k + 1, N - k - 1), second, c);
        }
        r.add_wedge(sl.cartan_HP(k), sl.E(k + 1, N - k), c);
        for (int s = k + 2; s <= N - k - 2; ++s)
            r.add_wedge(sl.E(k + 1, s), sl.E(s, N - k), c);
    }
    return r;
}

/// Printed sl(4) form: psi_1 E_13 ^ (E_34 - vs_1 H_1^perp)
///  + psi_2 vs_1 H^P_23 ^ E_23 + psi_1 (H^P_14 ^ E_14 + E_12 ^ E_24).
inline Bivector r_JB_sl4(const SlAlgebra& sl4, const Rational& psi1, const Rational& psi2,
                         const Rational& vs1) {
    if (sl4.N != 4) throw BadParameters("r_JB_sl4 needs sl(4)");
    Bivector r;
    r.add_wedge(sl4.E(1, 3), sl4.E(3, 4) - vs1 * sl4.cartan_Hperp(1), psi1);
    r.add_wedge(sl4.cartan_HP(1), sl4.E(2, 3), psi2 * vs1);
    r.add_wedge(sl4.cartan_HP(0), sl4.E(1, 4), psi1);
    r.add_wedge(sl4.E(1, 2), sl4.E(2, 4), psi1);
    return r;
}

/// Printed sl(7) form (three bracketed blocks).
inline Bivector r_JB_sl7(const SlAlgebra& sl7, const std::vector<Rational>& psi,
                         const std::vector<Rational>& vs) {
    if (sl7.N != 7 || psi.size() != 3 || vs.size() != 3) throw BadParameters("r_JB_sl7 needs sl(7)");
    Bivector r;
    // psi_1 [ H_1^P ^ E_17 + sum_{k=2}^{5} E_1k ^ E_k7 + E_16 ^ (E_67 - vs_1 H_1^perp) ]
    r.add_wedge(sl7.cartan_HP(0), sl7.E(1, 7), psi[0]);
    for (int k = 2; k <= 5; ++k) r.add_wedge(sl7.E(1, k), sl7.E(k, 7), psi[0]);
    r.add_wedge(sl7.E(1, 6), sl7.E(6, 7) - vs[0] * sl7.cartan_Hperp(1), psi[0]);
    // psi_2 vs_1 [ H_2^P ^ E_26 + sum_{k=3}^{4} E_2k ^ E_k6
    //              + E_25 ^ (E_56 - (vs_2/vs_1) H_2^perp) ]
    Rational c2 = psi[1] * vs[0];
    r.add_wedge(sl7.cartan_HP(1), sl7.E(2, 6), c2);
    for (int k = 3; k <= 4; ++k) r.add_wedge(sl7.E(2, k), sl7.E(k, 6), c2);
    r.add_wedge(sl7.E(2, 5), sl7.E(5, 6) - (vs[1] / vs[0]) * sl7.cartan_Hperp(2), c2);
    // psi_3 vs_2 [ H_3^P ^ E_35 + E_34 ^ (E_45 - (vs_3/vs_2) H_3^perp) ]
    Rational c3 = psi[2] * vs[1];
    r.add_wedge(sl7.cartan_HP(2), sl7.E(3, 5), c3);
    r.add_wedge(sl7.E(3, 4), sl7.E(4, 5) - (vs[2] / vs[1]) * sl7.cartan_Hperp(3), c3);
    return r;
}

/// r_JE = H^P ^ E + A ^ B + xi H^perp ^ A on the 5D algebra M.
inline Bivector r_JE_M(const LieAlgebra& M, const Rational& xi) {
    LieElement HP = M.gen(GenLabel::abstract("HP")), HX = M.gen(GenLabel::abstract("Hperp")),
               A = M.gen(GenLabel::abstract("A")), B = M.gen(GenLabel::abstract("B")),
               E = M.gen(GenLabel::abstract("E"));
    Bivector r;
    r.add_wedge(HP, E, Rational(1));
    r.add_wedge(A, B, Rational(1));
    r.add_wedge(HX, A, xi);
    return r;
}

/// r_RE = H^P ^ E + A ^ B + zeta H^perp ^ E on the 5D algebra M.
inline Bivector r_RE_M(const LieAlgebra& M, const Rational& zeta) {
    LieElement HP = M.gen(GenLabel::abstract("HP")), HX = M.gen(GenLabel::abstract("Hperp")),
               A = M.gen(GenLabel::abstract("A")), B = M.gen(GenLabel::abstract("B")),
               E = M.gen(GenLabel::abstract("E"));
    Bivector r;
    r.add_wedge(HP, E, Rational(1));
    r.add_wedge(A, B, Rational(1));
    r.add_wedge(HX, E, zeta);
    return r;
}

/// Degenerate sl(3) case: psi (H^P ^ E_13 + E_12 ^ (E_23 - vs H^perp)).
inline Bivector r_JE_P_sl3(const SlAlgebra& sl3, const Rational& psi, const Rational& vs) {
    if (sl3.N != 3) throw BadParameters("r_JE_P_sl3 needs sl(3)");
    Bivector r;
    r.add_wedge(sl3.cartan_HP(0), sl3.E(1, 3), psi);
    r.add_wedge(sl3.E(1, 2), sl3.E(2, 3) - vs * sl3.cartan_Hperp(1), psi);
    return r;
}

/// Two-Jordanian r-matrix: psi H_12^perp ^ E_13 + vs H_13^perp ^ E_12.
inline Bivector r_JJ_sl3(const SlAlgebra& sl3, const Rational& psi, const Rational& vs) {
    if (sl3.N != 3) throw BadParameters("r_JJ_sl3 needs sl(3)");
    LieElement Hperp12 = sl3.diagonal({Rational(1, 3), Rational(1, 3), Rational(-2, 3)});
    Bivector r;
    r.add_wedge(Hperp12, sl3.E(1, 3), psi);
    r.add_wedge(sl3.cartan_Hperp(1), sl3.E(1, 2), vs);
    return r;
}

/// Parameters for the named-formula dispatcher: which of psi / zeta / beta a
/// family consumes depends on the family.
struct RFormulaParams {
    std::vector<Rational> psi;
    std::vector<Rational> zeta;
    std::vector<std::vector<Rational>> beta;
};

// (defined after the individual families below)
Bivector r_formula(const std::string& name, int N, const RFormulaParams& params);

// ---------------------------------------------------------------------------
// Classical Yang-Baxter via the Schouten bracket on the abstract algebra.
// ---------------------------------------------------------------------------

/// [[r,r]] = [r_12,r_13] + [r_12,r_23] + [r_13,r_23] computed from structure
/// constants in g (x) g (x) g; pass iff identically zero.
inline VerificationReport check_cybe(const Bivector& r, const LieAlgebra& g,
                                     const std::string& name = "cybe") {
    VerificationReport rep;
    rep.check = name;
    rep.rep = "structure-constants";
    std::map<std::tuple<int, int, int>, Rational> acc;
    auto add = [&](int a, int b, int c, const Rational& v) {
        if (v.is_zero()) return;
        auto key = std::make_tuple(a, b, c);
        auto it = acc.find(key);
        if (it == acc.end())
            acc.emplace(key, v);
        else {
            it->second += v;
            if (it->second.is_zero()) acc.erase(it);
        }
    };
    // iterate over the full antisymmetric coordinate set
    std::vector<std::tuple<int, int, Rational>> terms;
    for (const auto& [ij, c] : r.coords()) {
        terms.push_back({ij.first, ij.second, c});
        terms.push_back({ij.second, ij.first, -c});
    }
    for (const auto& [i, j, cij] : terms)
        for (const auto& [k, l, ckl] : terms) {
            Rational c = cij * ckl;
            for (const auto& [m, v] : g.bracket(i, k).coeffs()) add(m, j, l, c * v);
            for (const auto& [m, v] : g.bracket(j, k).coeffs()) add(i, m, l, c * v);
            for (const auto& [m, v] : g.bracket(j, l).coeffs()) add(i, k, m, c * v);
        }
    rep.residual_support = (long)acc.size();
    rep.pass = acc.empty();
    return rep;
}

/// Carrier of a classical r-matrix: the bracket closure of its minimal
/// wedge-leg span.
inline std::vector<LieElement> carrier(const Bivector& r, const LieAlgebra& g) {
    return subalgebra_closure(g, r.support_space());
}

// ---------------------------------------------------------------------------
// The canonical carrier basis and the injection phi.
// ---------------------------------------------------------------------------

/// The explicit carrier basis of the Jordanian-enlarged chain: the Cartan
/// combinations H^P_{i,N-i+1} and H_j^perp plus the three positive-root
/// blocks (all E_lm above the diagonal except the simple roots beyond z).
inline std::vector<LieElement> lemma2_basis(const SlAlgebra& sl) {
    if (sl.N < 3) throw BadParameters("carrier basis needs N >= 3");
    const int N = sl.N, z = sl.max_links(), n = sl.half();
    std::vector<LieElement> out;
    for (int i = 1; i <= z; ++i) out.push_back(sl.cartan_HP(i - 1));
    for (int j = 1; j <= n - 1; ++j) out.push_back(sl.cartan_Hperp(j));
    for (int l = 1; l <= z - 1; ++l)
        for (int m = l + 1; m <= z; ++m) out.push_back(sl.E(l, m));
    for (int l = 1; l <= z; ++l)
        for (int m = z + 1; m <= N; ++m) out.push_back(sl.E(l, m));
    for (int l = z + 1; l <= N - 2; ++l)
        for (int m = std::max(l + 2, z + 3); m <= N; ++m) out.push_back(sl.E(l, m));
    return out;
}

/// Matching human-readable labels for the basis above.
inline std::vector<std::string> lemma2_labels(const SlAlgebra& sl) {
    const int N = sl.N, z = sl.max_links(), n = sl.half();
    std::vector<std::string> out;
    for (int i = 1; i <= z; ++i)
        out.push_back("HP_{" + std::to_string(i) + "," + std::to_string(N - i + 1) + "}");
    for (int j = 1; j <= n - 1; ++j) out.push_back("Hperp_" + std::to_string(j));
    auto push_E = [&](int l, int m) {
        out.push_back("E_{" + std::to_string(l) + "," + std::to_string(m) + "}");
    };
    for (int l = 1; l <= z - 1; ++l)
        for (int m = l + 1; m <= z; ++m) push_E(l, m);
    for (int l = 1; l <= z; ++l)
        for (int m = z + 1; m <= N; ++m) push_E(l, m);
    for (int l = z + 1; l <= N - 2; ++l)
        for (int m = std::max(l + 2, z + 3); m <= N; ++m) push_E(l, m);
    return out;
}

/// The smooth injection of the carrier into B^+(sl(N)): conjugation by the
/// block-unipotent matrix U^{-1}, U_{m,t} = zeta_{N-t}/zeta_{N-m} on the
/// lower block z+1..N. Fixes H^P and the first root block, sends
/// H_j^perp -> -B_j and the other root blocks to the A_lm / C_lm images.
class PhiMap {
public:
    PhiMap(const SlAlgebra& sl, std::vector<Rational> zeta) : sl_(&sl), zeta_(std::move(zeta)) {
        const int N = sl.N, z = sl.max_links(), n = sl.half();
        if ((int)zeta_.size() != n - 1) throw BadParameters("phi needs n-1 zeta parameters");
        for (const auto& zv : zeta_)
            if (zv.is_zero()) throw DivisionByZero("phi is undefined at zeta_i = 0");
        U_ = SparseMat<Rational>::identity(N);
        for (int m = z + 1; m <= N; ++m)
            for (int t = m + 1; t <= N; ++t)
                U_.set(m - 1, t - 1, zeta_val(N - t) / zeta_val(N - m));
        V_ = U_.inverse();
        canonical_ = lemma2_basis(sl);
        for (const auto& x : canonical_) image_.push_back(apply(x));
    }

    const std::vector<LieElement>& canonical() const { return canonical_; }
    const std::vector<LieElement>& image() const { return image_; }

    LieElement apply(const LieElement& x) const {
        return sl_->element_of_matrix(V_ * sl_->defining_matrix(x) * U_);
    }

    /// B_j with phi(H_j^perp) = -B_j.
    LieElement B(int j) const { return -apply(sl_->cartan_Hperp(j)); }
    /// A_lm = phi(E_lm) for the middle root block.
    LieElement A(int l, int m) const { return apply(sl_->E(l, m)); }
    /// C_lm = phi(E_lm) for the lower root block.
    LieElement C(int l, int m) const { return apply(sl_->E(l, m)); }

private:
    Rational zeta_val(int i) const { return i == 0 ? Rational(1) : zeta_.at(i - 1); }

    const SlAlgebra* sl_;
    std::vector<Rational> zeta_;
    SparseMat<Rational> U_, V_;
    std::vector<LieElement> canonical_;
    std::vector<LieElement> image_;
};

inline PhiMap phi_map(const SlAlgebra& sl, const std::vector<Rational>& zeta) {
    return PhiMap(sl, zeta);
}

/// Printed sl(7) r-matrix in terms of the phi images.
inline Bivector r_JB_sl7_phi(const SlAlgebra& sl7, const std::vector<Rational>& psi,
                             const std::vector<Rational>& vs) {
    if (sl7.N != 7 || psi.size() != 3 || vs.size() != 3) throw BadParameters("needs sl(7)");
    PhiMap phi(sl7, vs);
    auto A = [&](int l, int m) { return phi.A(l, m); };
    auto C = [&](int l, int m) { return phi.C(l, m); };
    Bivector r;
    // psi_1 block
    r.add_wedge(sl7.cartan_HP(0), A(1, 7), psi[0]);
    r.add_wedge(sl7.E(1, 2), A(2, 7), psi[0]);
    r.add_wedge(sl7.E(1, 3), A(3, 7), psi[0]);
    r.add_wedge(A(1, 4) - (vs[1] / vs[2]) * A(1, 5), C(4, 7), psi[0]);
    r.add_wedge(A(1, 5) - (vs[0] / vs[1]) * A(1, 6), C(5, 7) + (vs[1] / vs[2]) * C(4, 7), psi[0]);
    r.add_wedge(A(1, 6) - vs[0].inverse() * A(1, 7), vs[0] * phi.B(1), psi[0]);
    // vs_1 psi_2 block
    Rational c2 = vs[0] * psi[1];
    r.add_wedge(sl7.cartan_HP(1), A(2, 6) - vs[0].inverse() * A(2, 7), c2);
    r.add_wedge(sl7.E(2, 3), A(3, 6) - vs[0].inverse() * A(3, 7), c2);
    r.add_wedge(A(2, 4) - (vs[1] / vs[2]) * A(2, 5), C(4, 6) - vs[0].inverse() * C(4, 7), c2);
    r.add_wedge(A(2, 5) - (vs[0] / vs[1]) * A(2, 6),
                (vs[1] / vs[0]) * phi.B(2) -
                    vs[0].inverse() * (C(5, 7) + (vs[1] / vs[2]) * C(4, 7)),
                c2);
    // vs_2 psi_3 block
    Rational c3 = vs[1] * psi[2];
    r.add_wedge(sl7.cartan_HP(2), A(3, 5) - (vs[0] / vs[1]) * A(3, 6), c3);
    r.add_wedge(A(3, 4) - (vs[1] / vs[2]) * A(3, 5),
                (vs[2] / vs[1]) * phi.B(3) - (vs[0] / vs[1]) * C(4, 6), c3);
    return r;
}

/// Build any of the printed r-matrix families by name. The sl(3) M-algebra
/// families take the extra parameter in zeta[0] (xi for r_JE_sl3, zeta for
/// r_RE_sl3); the scalar sl(3)/sl(4) families read psi / zeta positionally.
inline Bivector r_formula(const std::string& name, int N, const RFormulaParams& p) {
    auto scalar = [](const std::vector<Rational>& v, std::size_t i, const char* what) {
        if (v.size() <= i) throw BadParameters(std::string("missing parameter ") + what);
        return v[i];
    };
    if (name == "r_JE_sl3" || name == "r_RE_sl3") {
        if (N != 3) throw BadParameters(name + " is an sl(3) family");
        static const LieAlgebra M = build_M_sl3();
        Rational c = scalar(p.zeta, 0, "zeta[0]");
        return name == "r_JE_sl3" ? r_JE_M(M, c) : r_RE_M(M, c);
    }
    SlAlgebra sl = build_sl(N);
    if (name == "r_B_canonical") return r_B(sl, p.psi);
    if (name == "r_RB") return r_RB(sl, p.psi, p.beta);
    if (name == "r_JB") return r_JB(sl, p.psi, p.zeta);
    if (name == "r_JB_regrouped") return r_JB_regrouped(sl, p.psi, p.zeta);
    if (name == "r_JB_sl4")
        return r_JB_sl4(sl, scalar(p.psi, 0, "psi[0]"), scalar(p.psi, 1, "psi[1]"),
                        scalar(p.zeta, 0, "zeta[0]"));
    if (name == "r_JB_sl7") return r_JB_sl7(sl, p.psi, p.zeta);
    if (name == "r_JB_sl7_phi") return r_JB_sl7_phi(sl, p.psi, p.zeta);
    if (name == "r_JE_P_sl3")
        return r_JE_P_sl3(sl, scalar(p.psi, 0, "psi[0]"), scalar(p.zeta, 0, "zeta[0]"));
    if (name == "r_JJ_sl3")
        return r_JJ_sl3(sl, scalar(p.psi, 0, "psi[0]"), scalar(p.zeta, 0, "zeta[0]"));
    throw UnknownFormula("no r-matrix family named " + name);
}

// ---------------------------------------------------------------------------
// Scaling factors and omega-forms.
// ---------------------------------------------------------------------------

/// The nilpotent-generator scaling factors alpha_lm of the parameterized
/// enlarged chain (three index blocks, zeta_0 = 1).
inline Rational alpha_scaling(const SlAlgebra& sl, const std::vector<Rational>& psi,
                              const std::vector<Rational>& zeta, int l, int m) {
    using classical_detail::zeta_at;
    classical_detail::require_sizes(sl, psi, zeta);
    const int N = sl.N, z = sl.max_links();
    if (l >= 1 && l <= z - 1 && m >= 2 && m <= z && l < m) return psi.at(l - 1) / psi.at(m - 1);
    if (l >= 1 && l <= z && m >= z + 1 && m <= N) return psi.at(l - 1) * zeta_at(zeta, N - m);
    if (l >= z + 1 && l <= N - 1 && m >= z + 2 && m <= N && l < m)
        return zeta_at(zeta, N - m) / zeta_at(zeta, N - l);
    throw IndexOutOfRange("alpha_{" + std::to_string(l) + "," + std::to_string(m) +
                          "} outside the scaling blocks");
}

namespace classical_detail {

/// omega(x,y) = sum over functionals c_lm * (coefficient of E_lm in [x,y]).
inline Rational coboundary_eval(const SlAlgebra& sl,
                                const std::vector<std::pair<GenLabel, Rational>>& funcs,
                                const LieElement& x, const LieElement& y) {
    LieElement br = sl.alg.bracket(x, y);
    Rational acc(0);
    for (const auto& [lbl, c] : funcs) acc += c * br.coeff(sl.alg.index_of(lbl));
    return acc;
}

} // namespace classical_detail

/// omega^P_JB = - sum_{l=1}^{z} sum_{m=z+1}^{N-l+1} (1/alpha_lm) E*_{l,m}([,])
/// over the canonical carrier basis. Terms whose alpha vanishes (a psi_l = 0
/// limit) are absent, which is exactly what makes the Gram degenerate there.
inline TwoForm omega_JB(const SlAlgebra& sl, const std::vector<Rational>& psi,
                        const std::vector<Rational>& zeta) {
    classical_detail::require_sizes(sl, psi, zeta);
    const int N = sl.N, z = sl.max_links();
    std::vector<std::pair<GenLabel, Rational>> funcs;
    for (int l = 1; l <= z; ++l)
        for (int m = z + 1; m <= N - l + 1; ++m) {
            Rational a = alpha_scaling(sl, psi, zeta, l, m);
            if (a.is_zero()) continue;
            funcs.push_back({GenLabel::E(l, m), -a.inverse()});
        }
    return TwoForm::build(lemma2_basis(sl), [&](const LieElement& x, const LieElement& y) {
        return classical_detail::coboundary_eval(sl, funcs, x, y);
    });
}

/// The adapted Borel basis {H^P_{k+1,N-k}} + {H_i^perp} + {E_lm, l < m}
/// shared by omega_B and omega_RB.
inline std::vector<LieElement> borel_basis_adapted(const SlAlgebra& sl) {
    const int N = sl.N;
    std::vector<LieElement> out;
    for (int k = 0; k < sl.max_links(); ++k) out.push_back(sl.cartan_HP(k));
    for (int i = 1; i <= sl.half() - 1; ++i) out.push_back(sl.cartan_Hperp(i));
    for (int l = 1; l <= N - 1; ++l)
        for (int m = l + 1; m <= N; ++m) out.push_back(sl.E(l, m));
    return out;
}

/// omega_B = sum_k chi_{k+1} E*_{k+1,N-k}([,]) over the adapted Borel basis.
inline TwoForm omega_B(const SlAlgebra& sl, const std::vector<Rational>& chi) {
    if ((int)chi.size() != sl.max_links()) throw BadParameters("omega_B needs z coefficients");
    std::vector<std::pair<GenLabel, Rational>> funcs;
    for (int k = 0; k < (int)chi.size(); ++k)
        funcs.push_back({GenLabel::E(k + 1, sl.N - k), chi[k]});
    return TwoForm::build(borel_basis_adapted(sl), [&](const LieElement& x, const LieElement& y) {
        return classical_detail::coboundary_eval(sl, funcs, x, y);
    });
}

/// omega^P_RB = omega_B + sum phi^{mn} K*_m ^ K*_n with
/// K in {H^P_{k+1,N-k}} + {E_l^P}; the dual functionals are taken with
/// respect to the adapted Borel basis.
inline TwoForm omega_RB(const SlAlgebra& sl, const std::vector<Rational>& chi,
                        const std::vector<std::vector<Rational>>& phi_mat) {
    const int z = sl.max_links(), n = sl.half();
    const std::size_t nk = (std::size_t)z + (std::size_t)(n - 1);
    if (phi_mat.size() != nk) throw BadParameters("phi matrix has wrong size");
    for (const auto& row : phi_mat)
        if (row.size() != nk) throw BadParameters("phi matrix has wrong size");

    auto basis = borel_basis_adapted(sl);
    // positions of the K elements inside the adapted basis
    std::vector<int> kpos;
    for (int k = 0; k < z; ++k) kpos.push_back(k); // H^P block leads the basis
    for (int l = 1; l <= n - 1; ++l) {
        LieElement ep = sl.EP(l);
        int found = -1;
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (basis[b] == ep) {
                found = (int)b;
                break;
            }
        kpos.push_back(found);
    }

    TwoForm base = omega_B(sl, chi);
    // K*_m ^ K*_n evaluated on basis vectors is nonzero only on K positions
    for (std::size_t m = 0; m < nk; ++m)
        for (std::size_t q = 0; q < nk; ++q) {
            if (phi_mat[m][q].is_zero()) continue;
            int bm = kpos[m], bq = kpos[q];
            base.gram[bm][bq] += phi_mat[m][q];
            base.gram[bq][bm] -= phi_mat[m][q];
        }
    return base;
}

/// omega_RE = E*([,]) + xi H* ^ A* on L(1,0) (basis order H, A, B, E).
inline TwoForm omega_RE(const LieAlgebra& L10, const Rational& xi) {
    std::vector<LieElement> basis = {L10.gen(GenLabel::abstract("H")), L10.gen(GenLabel::abstract("A")),
                                     L10.gen(GenLabel::abstract("B")), L10.gen(GenLabel::abstract("E"))};
    int iE = L10.index_of(GenLabel::abstract("E"));
    int iH = L10.index_of(GenLabel::abstract("H"));
    int iA = L10.index_of(GenLabel::abstract("A"));
    return TwoForm::build(basis, [&](const LieElement& x, const LieElement& y) {
        Rational v = L10.bracket(x, y).coeff(iE);
        v += xi * (x.coeff(iH) * y.coeff(iA) - x.coeff(iA) * y.coeff(iH));
        return v;
    });
}

/// omega^P_JE for sl(3): the z = 1 case of omega_JB.
inline TwoForm omega_JE_sl3(const SlAlgebra& sl3, const Rational& psi, const Rational& vs) {
    return omega_JB(sl3, {psi}, {vs});
}

/// Named omega-form dispatcher. psi doubles as the chi coefficients of
/// omega_B / omega_RB; beta doubles as the phi matrix of omega_RB; for
/// omega_RE the deformation parameter travels in zeta[0].
inline TwoForm omega_form(const std::string& name, int N, const RFormulaParams& p) {
    if (name == "omega_RE") {
        static const LieAlgebra L10 = build_L(Rational(1), Rational(0));
        if (p.zeta.empty()) throw BadParameters("omega_RE needs zeta[0]");
        return omega_RE(L10, p.zeta[0]);
    }
    SlAlgebra sl = build_sl(N);
    if (name == "omega_JB") return omega_JB(sl, p.psi, p.zeta);
    if (name == "omega_B") return omega_B(sl, p.psi);
    if (name == "omega_RB") return omega_RB(sl, p.psi, p.beta);
    if (name == "omega_JE_sl3") {
        if (N != 3 || p.psi.empty() || p.zeta.empty())
            throw BadParameters("omega_JE_sl3 needs sl(3) and psi[0], zeta[0]");
        return omega_JE_sl3(sl, p.psi[0], p.zeta[0]);
    }
    throw UnknownFormula("no omega family named " + name);
}

// ---------------------------------------------------------------------------
// Frobenius duality, cocycle test, dual bracket.
// ---------------------------------------------------------------------------

/// Exact coordinates of v in an independent list of elements, via a tracked
/// dense elimination (small systems only).
inline std::vector<Rational> coords_in_list(const std::vector<LieElement>& basis,
                                            const LieElement& v, int ambient_dim) {
    const int K = (int)basis.size();
    // rows: ambient coordinates; columns: basis members, last column = v
    std::vector<std::vector<Rational>> m(ambient_dim, std::vector<Rational>(K + 1, Rational(0)));
    for (int a = 0; a < K; ++a)
        for (const auto& [i, c] : basis[a].coeffs()) m[i][a] = c;
    for (const auto& [i, c] : v.coeffs()) m[i][K] = c;

    std::vector<int> pivot_col_of_row;
    std::vector<int> pivot_row_of_col(K, -1);
    int r = 0;
    for (int c = 0; c < K && r < ambient_dim; ++c) {
        int piv = -1;
        for (int i = r; i < ambient_dim; ++i)
            if (!m[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) throw BasisMismatch("dependent basis list");
        std::swap(m[piv], m[r]);
        Rational inv = m[r][c].inverse();
        for (auto& vv : m[r]) vv *= inv;
        for (int i = 0; i < ambient_dim; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (int cc = 0; cc <= K; ++cc) m[i][cc] -= f * m[r][cc];
        }
        pivot_row_of_col[c] = r;
        ++r;
    }
    // rows beyond the pivots must have zero rhs
    for (int i = r; i < ambient_dim; ++i)
        if (!m[i][K].is_zero()) throw BasisMismatch("element outside the spanned subspace");
    std::vector<Rational> x(K, Rational(0));
    for (int c = 0; c < K; ++c) x[c] = m[pivot_row_of_col[c]][K];
    return x;
}

/// Frobenius pairing between a classical r-matrix and an omega-form: the
/// r coefficients are taken over the phi-image basis and omega's Gram over
/// the canonical basis (positionally identified through phi). Passes iff
/// both matrices are invertible and their product is a scalar multiple of
/// the identity; the scalar is recorded in params["scalar"], not asserted.
inline VerificationReport frobenius_check(const Bivector& r, const TwoForm& omega,
                                          const PhiMap& phi,
                                          const std::string& name = "frobenius") {
    VerificationReport rep;
    rep.check = name;
    rep.rep = "structure-constants";
    if (omega.basis != phi.canonical()) throw BasisMismatch("omega not over the canonical carrier basis");
    const int K = (int)phi.image().size();
    int ambient = 0;
    for (const auto& b : phi.image())
        for (const auto& [i, c] : b.coeffs()) ambient = std::max(ambient, i + 1);
    for (const auto& [ij, c] : r.coords()) ambient = std::max(ambient, ij.second + 1);

    // rho: the unique antisymmetric K x K matrix with P rho P^T = R, where
    // P has the image elements as columns and R is the ambient coordinate
    // matrix of r. Solve on a pivot row set of P, then verify globally
    // (individual wedge legs may lie outside the span; only r itself must).
    std::vector<std::vector<Rational>> P(ambient, std::vector<Rational>(K, Rational(0)));
    for (int a = 0; a < K; ++a)
        for (const auto& [i, c] : phi.image()[a].coeffs()) P[i][a] = c;

    // pivot rows: echelonize a copy, remembering which ambient rows pivot
    std::vector<int> pivot_rows;
    {
        std::vector<std::vector<Rational>> work = P;
        std::vector<bool> used(ambient, false);
        for (int col = 0; col < K; ++col) {
            int piv = -1;
            for (int i = 0; i < ambient; ++i)
                if (!used[i] && !work[i][col].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) throw BasisMismatch("phi image is not linearly independent");
            used[piv] = true;
            pivot_rows.push_back(piv);
            Rational inv = work[piv][col].inverse();
            for (int i = 0; i < ambient; ++i) {
                if (i == piv || work[i][col].is_zero()) continue;
                Rational f = work[i][col] * inv;
                for (int cc = 0; cc < K; ++cc) work[i][cc] -= f * work[piv][cc];
            }
        }
    }
    // PI, its inverse, and R restricted to the pivot rows
    auto dense_inverse = [](std::vector<std::vector<Rational>> a) {
        const int n = (int)a.size();
        std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
        for (int i = 0; i < n; ++i) inv[i][i] = Rational(1);
        for (int c = 0; c < n; ++c) {
            int piv = -1;
            for (int r2 = c; r2 < n; ++r2)
                if (!a[r2][c].is_zero()) {
                    piv = r2;
                    break;
                }
            if (piv < 0) throw Singular("singular pivot block");
            std::swap(a[piv], a[c]);
            std::swap(inv[piv], inv[c]);
            Rational f = a[c][c].inverse();
            for (int cc = 0; cc < n; ++cc) {
                a[c][cc] *= f;
                inv[c][cc] *= f;
            }
            for (int r2 = 0; r2 < n; ++r2) {
                if (r2 == c || a[r2][c].is_zero()) continue;
                Rational g2 = a[r2][c];
                for (int cc = 0; cc < n; ++cc) {
                    a[r2][cc] -= g2 * a[c][cc];
                    inv[r2][cc] -= g2 * inv[c][cc];
                }
            }
        }
        return inv;
    };
    std::vector<std::vector<Rational>> PI(K, std::vector<Rational>(K));
    for (int a = 0; a < K; ++a)
        for (int b = 0; b < K; ++b) PI[a][b] = P[pivot_rows[a]][b];
    auto Q = dense_inverse(PI);
    std::vector<std::vector<Rational>> RII(K, std::vector<Rational>(K, Rational(0)));
    for (int a = 0; a < K; ++a)
        for (int b = 0; b < K; ++b) RII[a][b] = r.coord(pivot_rows[a], pivot_rows[b]);
    // rho = Q RII Q^T
    std::vector<std::vector<Rational>> rho(K, std::vector<Rational>(K, Rational(0)));
    for (int a = 0; a < K; ++a)
        for (int b = 0; b < K; ++b) {
            Rational acc(0);
            for (int s = 0; s < K; ++s) {
                if (Q[a][s].is_zero()) continue;
                for (int t = 0; t < K; ++t) acc += Q[a][s] * RII[s][t] * Q[b][t];
            }
            rho[a][b] = acc;
        }
    // global verification: P rho P^T must reproduce every coordinate of r
    {
        Bivector rebuilt;
        for (int a = 0; a < K; ++a)
            for (int b = a + 1; b < K; ++b)
                rebuilt.add_wedge(phi.image()[a], phi.image()[b], rho[a][b]);
        if (!((rebuilt - r).is_zero()))
            throw BasisMismatch("r-matrix does not lie in the carrier wedge square");
    }

    Rational det_rho = dense_determinant(rho);
    Rational det_g = dense_determinant(omega.gram);
    rep.params["det_r"] = det_rho.str();
    rep.params["det_omega"] = det_g.str();
    long bad = 0;
    if (det_rho.is_zero() || det_g.is_zero()) {
        rep.pass = false;
        rep.residual_support = 1;
        return rep;
    }
    // product rho * gram
    std::vector<std::vector<Rational>> prod(K, std::vector<Rational>(K, Rational(0)));
    for (int i = 0; i < K; ++i)
        for (int k = 0; k < K; ++k) {
            if (rho[i][k].is_zero()) continue;
            for (int j = 0; j < K; ++j) prod[i][j] += rho[i][k] * omega.gram[k][j];
        }
    Rational scalar = prod[0][0];
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j) {
            Rational want = i == j ? scalar : Rational(0);
            if (!(prod[i][j] == want)) ++bad;
        }
    rep.params["scalar"] = scalar.str();
    rep.residual_support = bad;
    rep.pass = bad == 0 && !scalar.is_zero();
    return rep;
}

/// 2-cocycle condition omega([x,y],z) + omega([y,z],x) + omega([z,x],y) = 0
/// on all triples of the form's basis (whose span must be bracket-closed).
inline VerificationReport cocycle_check(const TwoForm& omega, const LieAlgebra& g,
                                        const std::string& name = "cocycle") {
    VerificationReport rep;
    rep.check = name;
    rep.rep = "structure-constants";
    const int K = omega.dim();
    int ambient = g.dim();
    auto omega_eval = [&](const LieElement& x, int j) {
        auto coords = coords_in_list(omega.basis, x, ambient);
        Rational acc(0);
        for (int a = 0; a < K; ++a)
            if (!coords[a].is_zero()) acc += coords[a] * omega.gram[a][j];
        return acc;
    };
    long bad = 0;
    for (int i = 0; i < K; ++i)
        for (int j = i + 1; j < K; ++j)
            for (int k = j + 1; k < K; ++k) {
                Rational s = omega_eval(g.bracket(omega.basis[i], omega.basis[j]), k) +
                             omega_eval(g.bracket(omega.basis[j], omega.basis[k]), i) +
                             omega_eval(g.bracket(omega.basis[k], omega.basis[i]), j);
                if (!s.is_zero()) ++bad;
            }
    rep.residual_support = bad;
    rep.pass = bad == 0;
    return rep;
}

// ---------------------------------------------------------------------------
// Dual bracket and structural invariants.
// ---------------------------------------------------------------------------

/// Basis-independent shape of a finite-dimensional Lie algebra.
struct AlgebraInvariants {
    int dim = 0;
    std::vector<int> derived_dims;       // dims of g', g'', ...
    std::vector<int> lower_central_dims; // dims of [g,g], [g,[g,g]], ...
    int center_dim = 0;

    friend bool operator==(const AlgebraInvariants&, const AlgebraInvariants&) = default;

    std::string str() const {
        std::string s = "dim=" + std::to_string(dim) + " derived=(";
        for (std::size_t i = 0; i < derived_dims.size(); ++i)
            s += (i ? "," : "") + std::to_string(derived_dims[i]);
        s += ") lcs=(";
        for (std::size_t i = 0; i < lower_central_dims.size(); ++i)
            s += (i ? "," : "") + std::to_string(lower_central_dims[i]);
        s += ") center=" + std::to_string(center_dim);
        return s;
    }
};

/// Invariants of the subalgebra of g spanned by `basis` (must be closed).
inline AlgebraInvariants subalgebra_invariants(const LieAlgebra& g,
                                               const std::vector<LieElement>& basis) {
    AlgebraInvariants inv;
    auto span = echelonize(basis);
    inv.dim = (int)span.size();

    auto bracket_space = [&](const std::vector<LieElement>& a, const std::vector<LieElement>& b) {
        std::vector<LieElement> out;
        for (const auto& x : a)
            for (const auto& y : b) out.push_back(g.bracket(x, y));
        return echelonize(out);
    };

    // derived series
    auto cur = span;
    while (true) {
        auto next = bracket_space(cur, cur);
        inv.derived_dims.push_back((int)next.size());
        if (next.size() == cur.size() || next.empty()) break;
        cur = next;
    }
    // lower central series
    cur = span;
    while (true) {
        auto next = bracket_space(span, cur);
        inv.lower_central_dims.push_back((int)next.size());
        if (next.size() == cur.size() || next.empty()) break;
        cur = next;
    }
    // center: nullspace of x -> ([x, b_1], ..., [x, b_K]) within the span
    const int K = (int)span.size();
    std::vector<std::vector<Rational>> m; // rows: constraints, cols: K coords
    for (int b = 0; b < K; ++b) {
        // [sum_a x_a span_a, span_b] = 0
        std::vector<LieElement> images;
        for (int a = 0; a < K; ++a) images.push_back(g.bracket(span[a], span[b]));
        // each ambient coordinate gives one linear constraint
        std::map<int, std::vector<Rational>> rows;
        for (int a = 0; a < K; ++a)
            for (const auto& [i, c] : images[a].coeffs()) {
                auto& row = rows[i];
                if (row.empty()) row.assign(K, Rational(0));
                row[a] = c;
            }
        for (auto& [i, row] : rows) m.push_back(row);
    }
    // rank of m
    int rank = 0;
    {
        std::vector<std::vector<Rational>> mm = m;
        int r = 0;
        for (int c = 0; c < K && r < (int)mm.size(); ++c) {
            int piv = -1;
            for (int i = r; i < (int)mm.size(); ++i)
                if (!mm[i][c].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            std::swap(mm[r], mm[piv]);
            Rational inv0 = mm[r][c].inverse();
            for (auto& v : mm[r]) v *= inv0;
            for (int i = 0; i < (int)mm.size(); ++i) {
                if (i == r || mm[i][c].is_zero()) continue;
                Rational f = mm[i][c];
                for (int cc = 0; cc < K; ++cc) mm[i][cc] -= f * mm[r][cc];
            }
            ++r;
        }
        rank = r;
    }
    inv.center_dim = K - rank;
    return inv;
}

inline AlgebraInvariants algebra_invariants(const LieAlgebra& g) {
    std::vector<LieElement> basis;
    for (int i = 0; i < g.dim(); ++i) basis.push_back(LieElement::unit(i));
    return subalgebra_invariants(g, basis);
}

/// Result of the dual-bracket construction for a triangular r-matrix on g:
/// the image subalgebra of the map xi -> (xi (x) id)(r), its induced bracket
/// table (structure constants over the image basis), and whether the
/// cobracket route and the subalgebra route agreed.
struct DualBracketResult {
    std::vector<LieElement> image_basis;
    std::vector<std::vector<std::vector<Rational>>> table; // [a][b] -> coords
    bool map_intertwines = false;
    AlgebraInvariants invariants;
};

inline DualBracketResult dual_bracket(const Bivector& r, const LieAlgebra& g) {
    const int D = g.dim();
    DualBracketResult out;

    // m(xi^i) = (xi^i (x) id)(r): row i of the coordinate matrix
    std::vector<LieElement> rows(D);
    for (const auto& [ij, c] : r.coords()) {
        rows[ij.first].add_term(ij.second, c);
        rows[ij.second].add_term(ij.first, -c);
    }
    std::vector<LieElement> image;
    for (const auto& v : rows)
        if (!v.is_zero()) image.push_back(v);
    out.image_basis = echelonize(image);
    const int K = (int)out.image_basis.size();

    // cobracket delta(e_a)^{pq} and the dual bracket [xi^p, xi^q]_* (e_a)
    // delta(x) = (ad_x (x) 1 + 1 (x) ad_x) r
    auto delta_coord = [&](int a, int p, int q) {
        Rational acc(0);
        for (const auto& [ij, c] : r.coords()) {
            // term c * (e_i (x) e_j - e_j (x) e_i)
            // (ad_a e_i) (x) e_j etc.
            acc += c * (g.bracket(a, ij.first).coeff(p) * (ij.second == q ? Rational(1) : Rational(0)));
            acc -= c * (g.bracket(a, ij.second).coeff(p) * (ij.first == q ? Rational(1) : Rational(0)));
            acc += c * ((ij.first == p ? Rational(1) : Rational(0)) * g.bracket(a, ij.second).coeff(q));
            acc -= c * ((ij.second == p ? Rational(1) : Rational(0)) * g.bracket(a, ij.first).coeff(q));
        }
        return acc;
    };

    // intertwining check: m([xi^p, xi^q]_*) = [m(xi^p), m(xi^q)] for all p,q
    bool ok = true;
    for (int p = 0; p < D && ok; ++p)
        for (int q = 0; q < D && ok; ++q) {
            LieElement lhs;
            for (int a = 0; a < D; ++a) {
                Rational c = delta_coord(a, p, q);
                if (!c.is_zero()) lhs += c * rows[a];
            }
            LieElement rhs = g.bracket(rows[p], rows[q]);
            if (!(lhs == rhs)) ok = false;
        }
    out.map_intertwines = ok;

    // induced bracket table over the image basis
    out.table.assign(K, std::vector<std::vector<Rational>>(K));
    for (int a = 0; a < K; ++a)
        for (int b = 0; b < K; ++b)
            out.table[a][b] =
                coords_in_list(out.image_basis, g.bracket(out.image_basis[a], out.image_basis[b]), D);

    out.invariants = subalgebra_invariants(g, out.image_basis);
    return out;
}

} // namespace perichain
