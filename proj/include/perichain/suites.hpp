#pragma once

#include <set>

#include "perichain/chain_spec.hpp"
#include "perichain/coproduct_tables.hpp"

namespace perichain {

/// Named verification suites over a chain spec, shared by the CLI and the
/// acceptance machinery. Every report records the exact parameter
/// assignment; there are no tolerances anywhere.

struct SuiteOptions {
    std::string rep = "defining";
    unsigned long long seed = 1;
};

inline const std::set<std::string>& suite_names() {
    static const std::set<std::string> names = {"all",       "drinfeld",  "counit",
                                                "qybe",      "coproducts", "matreshka",
                                                "carrier",   "cybe",      "semiclassical",
                                                "omega",     "cohomology", "examples"};
    return names;
}

namespace suites_detail {

inline std::map<std::string, std::string> spec_params(const ChainSpec& cs) {
    std::map<std::string, std::string> p;
    p["N"] = std::to_string(cs.N);
    for (std::size_t i = 0; i < cs.links.size(); ++i) {
        p["psi_" + std::to_string(cs.links[i].k + 1)] = cs.links[i].psi.str();
        p["kappa_" + std::to_string(cs.links[i].k + 1)] = std::to_string(cs.links[i].kappa);
    }
    for (std::size_t i = 0; i < cs.zeta.size(); ++i)
        p["zeta_" + std::to_string(i + 1)] = cs.zeta[i].str();
    return p;
}

inline Representation representation_for(const SlAlgebra& sl, const std::string& which) {
    if (which == "defining") return defining_rep(sl);
    if (which == "adjoint") return build_adjoint_rep(sl.alg);
    throw BadParameters("unknown representation " + which);
}

inline void finish(std::vector<VerificationReport>& out, VerificationReport r,
                   const ChainSpec& cs, const SuiteOptions& opt) {
    r.seed = opt.seed;
    for (auto& [k, v] : spec_params(cs)) r.params.emplace(k, v);
    out.push_back(std::move(r));
}

} // namespace suites_detail

inline std::vector<VerificationReport> run_suite(const ChainSpec& cs, const std::string& selector,
                                                 const SuiteOptions& opt) {
    using namespace suites_detail;
    if (!suite_names().count(selector)) throw BadParameters("unknown suite " + selector);

    SlAlgebra sl = build_sl(cs.N);
    Representation rep = representation_for(sl, opt.rep);
    std::vector<VerificationReport> out;
    auto want = [&](const char* s) { return selector == "all" || selector == s; };

    TensorExpr<Rational> F = chain_from_spec<Rational>(cs, sl, Rational(1));

    if (want("drinfeld")) finish(out, check_drinfeld(F, rep), cs, opt);
    if (want("counit")) finish(out, check_counit(F, rep), cs, opt);
    if (want("qybe")) finish(out, check_qybe(r_matrix(F, rep), rep), cs, opt);

    if (want("coproducts")) {
        // coassociativity of the twisted coproduct on every basis element
        long bad = 0;
        for (int i = 0; i < sl.alg.dim(); ++i)
            bad += check_coassociativity(F, LieElement::unit(i), rep).residual_support;
        VerificationReport r;
        r.check = "coassociativity";
        r.rep = rep.name();
        r.residual_support = bad;
        r.pass = bad == 0;
        finish(out, std::move(r), cs, opt);
    }

    if (want("matreshka")) {
        // after the first k links every generator of the embedded
        // sl(N-2k) must still be primitive
        long bad = 0;
        for (std::size_t k = 1; k < cs.links.size(); ++k) {
            ChainSpec partial = cs;
            partial.enlargement = ChainSpec::Enlargement::none;
            partial.zeta.clear();
            partial.beta.clear();
            partial.links.assign(cs.links.begin(), cs.links.begin() + k);
            auto Fp = chain_from_spec<Rational>(partial, sl, Rational(1));
            int lo = (int)k + 1, hi = cs.N - (int)k;
            for (int i = lo; i <= hi; ++i)
                for (int j = lo; j <= hi; ++j)
                    if (i != j)
                        bad += check_primitive(Fp, sl.E(i, j), rep).residual_support;
            for (int i = lo; i < hi; ++i)
                bad += check_primitive(Fp, sl.H(i, i + 1), rep).residual_support;
        }
        VerificationReport r;
        r.check = "matreshka";
        r.rep = rep.name();
        r.residual_support = bad;
        r.pass = bad == 0;
        finish(out, std::move(r), cs, opt);
    }

    if (want("carrier")) {
        VerificationReport r;
        r.check = "carrier-dimension";
        r.rep = "structure-constants";
        if (cs.full_chain(sl)) {
            int dim = (int)carrier(classical_r_of_spec(cs, sl), sl.alg).size();
            int expect = (cs.N * cs.N + cs.N - 2 * sl.half()) / 2;
            r.params["dimension"] = std::to_string(dim);
            r.params["expected"] = std::to_string(expect);
            r.residual_support = dim == expect ? 0 : 1;
            r.pass = dim == expect;
        } else {
            int dim = (int)carrier(classical_r_of_spec(cs, sl), sl.alg).size();
            r.params["dimension"] = std::to_string(dim);
            r.residual_support = 0;
            r.pass = true;
        }
        finish(out, std::move(r), cs, opt);
    }

    if (want("cybe")) finish(out, check_cybe(classical_r_of_spec(cs, sl), sl.alg), cs, opt);

    if (want("semiclassical")) {
        VerificationReport r;
        r.check = "semiclassical";
        r.rep = rep.name();
        auto lhs = semiclassical(cs, sl, rep);
        auto rhs = classical_r_of_spec(cs, sl).to_operator(rep);
        r.residual_support = (lhs - rhs).nnz();
        r.pass = r.residual_support == 0;
        finish(out, std::move(r), cs, opt);
    }

    if (want("omega")) {
        VerificationReport r;
        if (cs.enlargement == ChainSpec::Enlargement::jordanian &&
            cs.style == ParamStyle::psi_zeta) {
            std::vector<Rational> psi;
            for (const auto& l : cs.links) psi.push_back(l.psi);
            TwoForm w = omega_JB(sl, psi, cs.zeta);
            bool nondeg = !dense_determinant(w.gram).is_zero();
            bool zeta_ok = true;
            for (const auto& z : cs.zeta)
                if (z.is_zero()) zeta_ok = false;
            if (nondeg && zeta_ok) {
                PhiMap phi = phi_map(sl, cs.zeta);
                r = frobenius_check(classical_r_of_spec(cs, sl), w, phi, "omega-frobenius");
            } else {
                r.check = "omega-frobenius";
                r.rep = "structure-constants";
                r.pass = false;
                r.residual_support = 1;
                r.params["det_omega"] = dense_determinant(w.gram).str();
            }
        } else {
            // parameter-independent form identities for the other cases
            std::vector<Rational> chi;
            for (const auto& l : cs.links) chi.push_back(l.psi);
            while ((int)chi.size() < sl.max_links()) chi.push_back(Rational(1));
            std::size_t m = (std::size_t)sl.max_links() + (std::size_t)(sl.half() - 1);
            std::vector<std::vector<Rational>> zero(m, std::vector<Rational>(m, Rational(0)));
            r.check = "omega-RB-reduces-to-B";
            r.rep = "structure-constants";
            r.pass = omega_RB(sl, chi, zero) == omega_B(sl, chi);
            r.residual_support = r.pass ? 0 : 1;
        }
        finish(out, std::move(r), cs, opt);
    }

    if (want("cohomology")) {
        VerificationReport r;
        r.check = "cohomology-H2";
        r.rep = "structure-constants";
        int h_pet = cohomology_H2_dim(build_L(Rational(1), Rational(0)));
        int h_mid = cohomology_H2_dim(build_L(Rational(1, 2), Rational(1, 2)));
        r.params["dim_H2_L(1,0)"] = std::to_string(h_pet);
        r.params["dim_H2_L(1/2,1/2)"] = std::to_string(h_mid);
        r.pass = h_pet == 1 && h_mid == 0;
        r.residual_support = r.pass ? 0 : 1;
        finish(out, std::move(r), cs, opt);
    }

    std::stable_sort(out.begin(), out.end(),
                     [](const VerificationReport& a, const VerificationReport& b) {
                         return a.check < b.check;
                     });
    return out;
}

// ---------------------------------------------------------------------------
// The three worked example sections.
// ---------------------------------------------------------------------------

namespace suites_detail {

inline VerificationReport named(const std::string& check, bool pass, long support = -1) {
    VerificationReport r;
    r.check = check;
    r.rep = "defining";
    r.pass = pass;
    r.residual_support = support >= 0 ? support : (pass ? 0 : 1);
    return r;
}

/// Is the subspace spanned by `part` an ideal of the subalgebra `whole`?
inline bool is_ideal(const LieAlgebra& g, const std::vector<LieElement>& whole,
                     const std::vector<LieElement>& part) {
    auto span = echelonize(part);
    for (const auto& x : whole)
        for (const auto& y : part)
            if (!in_span(span, g.bracket(x, y))) return false;
    return true;
}

inline bool is_abelian(const LieAlgebra& g, const std::vector<LieElement>& part) {
    for (const auto& x : part)
        for (const auto& y : part)
            if (!g.bracket(x, y).is_zero()) return false;
    return true;
}

} // namespace suites_detail

inline std::vector<VerificationReport> run_example_sl4() {
    using namespace suites_detail;
    using X = TensorExpr<Rational>;
    std::vector<VerificationReport> out;
    SlAlgebra sl4 = build_sl(4);
    Representation rep = defining_rep(sl4);

    // chain form exactly as the worked example prints it
    X chain = peripheric_chain(sl4, {Rational(1), Rational(1)});
    auto sig = [&](int i, int j) { return X::log1p(X::gen(sl4.E(i, j), 2, 2)); };
    X printed = X::prod({X::exp(X::prod({X::gen(sl4.cartan_HP(1), 1, 2), sig(2, 3)})),
                         X::exp(X::prod({X::gen(sl4.E(1, 2), 1, 2), X::gen(sl4.E(2, 4), 2, 2)})),
                         X::exp(X::prod({X::gen(sl4.E(1, 3), 1, 2), X::gen(sl4.E(3, 4), 2, 2)})),
                         X::exp(X::prod({X::gen(sl4.cartan_HP(0), 1, 2), sig(1, 4)}))});
    out.push_back(named("sl4-chain-form", eval(chain, rep) == eval(printed, rep)));

    EnlargedChainParams<Rational> p;
    p.link = {Rational(1), Rational(1)};
    p.kappa = {1, 1};
    p.enlarge = {Rational(1)};
    X enlarged = enlarged_chain_J(sl4, p);

    auto push = [&](VerificationReport r, const std::string& name) {
        r.check = name;
        out.push_back(std::move(r));
    };
    push(check_drinfeld(chain, rep), "sl4-chain-drinfeld");
    push(check_counit(chain, rep), "sl4-chain-counit");
    push(check_drinfeld(enlarged, rep), "sl4-enlarged-drinfeld");
    push(check_counit(enlarged, rep), "sl4-enlarged-counit");
    push(check_qybe(r_matrix(enlarged, rep), rep), "sl4-enlarged-qybe");

    // coproduct tables: as printed, plus the misprint-corrected variant
    push(check_coproduct_table(chain, sl4_chain_coproduct_table(sl4, true), rep),
         "sl4-coproduct-table-printed");
    push(check_coproduct_table(chain, sl4_chain_coproduct_table(sl4, false), rep),
         "sl4-coproduct-table-corrected");
    push(check_coproduct_table(enlarged, sl4_enlarged_coproduct_table(sl4, true), rep),
         "sl4-enlarged-coproduct-table-printed");
    push(check_coproduct_table(enlarged, sl4_enlarged_coproduct_table(sl4, false), rep),
         "sl4-enlarged-coproduct-table-corrected");

    // two additional primitive elements
    push(check_primitive(chain, sl4.E(1, 3), rep), "sl4-primitive-E13");
    push(check_primitive(chain, sl4.cartan_Hperp(1), rep), "sl4-primitive-Hperp");

    // semiclassical limit against the printed r-matrix (generic parameters)
    {
        ChainSpec cs;
        cs.N = 4;
        cs.links = {{0, 1, Rational(1, 2)}, {1, 1, Rational(1, 3)}};
        cs.enlargement = ChainSpec::Enlargement::jordanian;
        cs.zeta = {Rational(2)};
        auto lhs = semiclassical(cs, sl4, rep);
        auto rhs = r_JB_sl4(sl4, Rational(1, 2), Rational(1, 3), Rational(2)).to_operator(rep);
        out.push_back(named("sl4-semiclassical-r", (lhs - rhs).is_zero(), (lhs - rhs).nnz()));
    }

    // carrier: dimension 8, spanned by the phi image of the canonical basis
    Bivector r4 = r_JB_sl4(sl4, Rational(1, 2), Rational(1, 3), Rational(2));
    auto car = carrier(r4, sl4.alg);
    out.push_back(named("sl4-carrier-dim-8", car.size() == 8));
    PhiMap phi = phi_map(sl4, {Rational(2)});
    out.push_back(named("sl4-carrier-phi-span", same_span(phi.image(), car)));

    // phi is a homomorphism on the carrier
    {
        bool ok = true;
        const auto& basis = phi.canonical();
        for (std::size_t a = 0; a < basis.size() && ok; ++a)
            for (std::size_t b = a + 1; b < basis.size() && ok; ++b)
                ok = phi.apply(sl4.alg.bracket(basis[a], basis[b])) ==
                     sl4.alg.bracket(phi.apply(basis[a]), phi.apply(basis[b]));
        out.push_back(named("sl4-phi-homomorphism", ok));
    }

    // omega form and Frobenius pairing
    TwoForm w = omega_JB(sl4, {Rational(1, 2), Rational(1, 3)}, {Rational(2)});
    out.push_back(named("sl4-omega-nondegenerate", !dense_determinant(w.gram).is_zero()));
    push(frobenius_check(r4, w, phi), "sl4-frobenius");

    // motion-algebra decomposition of the canonical carrier g = g_H |> g_P
    {
        std::vector<LieElement> gP = {sl4.E(1, 3), sl4.E(1, 4), sl4.E(2, 3), sl4.E(2, 4)};
        std::vector<LieElement> gH = {sl4.E(1, 2), sl4.cartan_HP(0), sl4.cartan_HP(1),
                                      sl4.cartan_Hperp(1)};
        std::vector<LieElement> whole = gP;
        whole.insert(whole.end(), gH.begin(), gH.end());
        bool ok = is_abelian(sl4.alg, gP) && is_ideal(sl4.alg, whole, gP) &&
                  echelonize(subalgebra_closure(sl4.alg, gH)).size() == 4 &&
                  same_span(whole, lemma2_basis(sl4));
        out.push_back(named("sl4-motion-algebra-decomposition", ok));
    }
    return out;
}

inline std::vector<VerificationReport> run_example_sl7() {
    using namespace suites_detail;
    using X = TensorExpr<Rational>;
    std::vector<VerificationReport> out;
    SlAlgebra sl7 = build_sl(7);
    Representation rep = defining_rep(sl7);

    // printed three-link chain form
    X chain = peripheric_chain(sl7, {Rational(1), Rational(1), Rational(1)});
    auto sig = [&](int i, int j) { return X::log1p(X::gen(sl7.E(i, j), 2, 2)); };
    auto ee = [&](int a, int b, int c, int d) {
        return X::exp(X::prod({X::gen(sl7.E(a, b), 1, 2), X::gen(sl7.E(c, d), 2, 2)}));
    };
    X printed = X::prod({ee(3, 4, 4, 5),
                         X::exp(X::prod({X::gen(sl7.cartan_HP(2), 1, 2), sig(3, 5)})),
                         ee(2, 3, 3, 6), ee(2, 4, 4, 6), ee(2, 5, 5, 6),
                         X::exp(X::prod({X::gen(sl7.cartan_HP(1), 1, 2), sig(2, 6)})),
                         ee(1, 2, 2, 7), ee(1, 3, 3, 7), ee(1, 4, 4, 7), ee(1, 5, 5, 7),
                         ee(1, 6, 6, 7),
                         X::exp(X::prod({X::gen(sl7.cartan_HP(0), 1, 2), sig(1, 7)}))});
    out.push_back(named("sl7-chain-form", eval(chain, rep) == eval(printed, rep)));

    auto push = [&](VerificationReport r, const std::string& name) {
        r.check = name;
        out.push_back(std::move(r));
    };
    push(check_drinfeld(chain, rep), "sl7-chain-drinfeld");
    push(check_counit(chain, rep), "sl7-chain-counit");

    // primitive subalgebras H^perp and E^P after the chain
    {
        long bad = 0;
        for (int i = 1; i <= 3; ++i) {
            bad += check_primitive(chain, sl7.cartan_Hperp(i), rep).residual_support;
            bad += check_primitive(chain, sl7.EP(i), rep).residual_support;
        }
        out.push_back(named("sl7-primitive-Hperp-EP", bad == 0, bad));
    }

    EnlargedChainParams<Rational> p;
    p.link = {Rational(1), Rational(1), Rational(1)};
    p.kappa = {1, 1, 1};
    p.enlarge = {Rational(1), Rational(1), Rational(1)};
    X enlarged = enlarged_chain_J(sl7, p);
    push(check_drinfeld(enlarged, rep), "sl7-enlarged-drinfeld");
    push(check_counit(enlarged, rep), "sl7-enlarged-counit");

    // semiclassical limit against the printed r-matrix
    std::vector<Rational> psi = {Rational(1, 2), Rational(1, 3), Rational(1, 5)};
    std::vector<Rational> vs = {Rational(2), Rational(3), Rational(5)};
    {
        ChainSpec cs;
        cs.N = 7;
        cs.links = {{0, 1, psi[0]}, {1, 1, psi[1]}, {2, 1, psi[2]}};
        cs.enlargement = ChainSpec::Enlargement::jordanian;
        cs.zeta = vs;
        auto lhs = semiclassical(cs, sl7, rep);
        auto rhs = r_JB_sl7(sl7, psi, vs).to_operator(rep);
        out.push_back(named("sl7-semiclassical-r", (lhs - rhs).is_zero(), (lhs - rhs).nnz()));
    }

    // the phi-image rewriting of the r-matrix is the same bivector
    Bivector r7 = r_JB_sl7(sl7, psi, vs);
    out.push_back(named("sl7-r-phi-rewriting", r7 == r_JB_sl7_phi(sl7, psi, vs)));

    // carrier: 24-dimensional, phi image of the canonical basis
    auto car = carrier(r7, sl7.alg);
    out.push_back(named("sl7-carrier-dim-24", car.size() == 24));
    PhiMap phi = phi_map(sl7, vs);
    out.push_back(named("sl7-carrier-phi-span", same_span(phi.image(), car)));
    {
        bool ok = true;
        const auto& basis = phi.canonical();
        for (std::size_t a = 0; a < basis.size() && ok; ++a)
            for (std::size_t b = a + 1; b < basis.size() && ok; ++b)
                ok = phi.apply(sl7.alg.bracket(basis[a], basis[b])) ==
                     sl7.alg.bracket(phi.apply(basis[a]), phi.apply(basis[b]));
        out.push_back(named("sl7-phi-homomorphism", ok));
    }

    // motion-algebra structure: 12D abelian translation ideal and the two
    // commuting 6D summands
    {
        std::vector<LieElement> gP;
        for (int pp = 1; pp <= 3; ++pp)
            for (int t = 4; t <= 7; ++t) gP.push_back(sl7.E(pp, t));
        std::vector<LieElement> gH1 = {sl7.cartan_HP(0), sl7.cartan_HP(1), sl7.cartan_HP(2),
                                       sl7.E(1, 2), sl7.E(1, 3), sl7.E(2, 3)};
        std::vector<LieElement> gH2 = {sl7.cartan_Hperp(1), sl7.cartan_Hperp(2),
                                       sl7.cartan_Hperp(3), sl7.E(4, 6), sl7.E(4, 7),
                                       sl7.E(5, 7)};
        std::vector<LieElement> whole = gP;
        whole.insert(whole.end(), gH1.begin(), gH1.end());
        whole.insert(whole.end(), gH2.begin(), gH2.end());
        // note: the two 6D summands are individually closed and span a 12D
        // subalgebra with g_H' an ideal of it, but they do not commute
        // elementwise ([H_1^perp, E_12] = E_12); the decomposition is a
        // vector-space one, so only closures and dimensions are asserted
        std::vector<LieElement> gH = gH1;
        gH.insert(gH.end(), gH2.begin(), gH2.end());
        bool ok = gP.size() == 12 && is_abelian(sl7.alg, gP) &&
                  is_ideal(sl7.alg, whole, gP) &&
                  subalgebra_closure(sl7.alg, gH1).size() == 6 &&
                  subalgebra_closure(sl7.alg, gH2).size() == 6 &&
                  subalgebra_closure(sl7.alg, gH).size() == 12 &&
                  is_ideal(sl7.alg, gH, gH1) && same_span(whole, lemma2_basis(sl7));
        out.push_back(named("sl7-motion-algebra-decomposition", ok));
    }

    // omega form on the carrier
    TwoForm w = omega_JB(sl7, psi, vs);
    out.push_back(named("sl7-omega-nondegenerate", !dense_determinant(w.gram).is_zero()));
    push(frobenius_check(r7, w, phi), "sl7-frobenius");
    return out;
}

inline std::vector<VerificationReport> run_example_sl3() {
    using namespace suites_detail;
    std::vector<VerificationReport> out;
    SlAlgebra sl3 = build_sl(3);
    Representation rep = defining_rep(sl3);

    Rational psi(1, 2), vs(3);
    auto specials = sl3_specials(sl3, psi, vs);
    auto push = [&](VerificationReport r, const std::string& name) {
        r.check = name;
        out.push_back(std::move(r));
    };
    for (const auto& [name, F] : specials) {
        push(check_drinfeld(F, rep), "sl3-" + name + "-drinfeld");
        push(check_counit(F, rep), "sl3-" + name + "-counit");
        push(check_qybe(r_matrix(F, rep), rep), "sl3-" + name + "-qybe");
    }

    // semiclassical limit of the enlarged PET against the printed one-
    // parameter r-matrix (psi = 1 there; checked at generic psi too)
    {
        ChainSpec cs;
        cs.N = 3;
        cs.links = {{0, 1, psi}};
        cs.enlargement = ChainSpec::Enlargement::jordanian;
        cs.zeta = {vs};
        auto lhs = semiclassical(cs, sl3, rep);
        auto rhs = r_JE_P_sl3(sl3, psi, vs).to_operator(rep);
        out.push_back(named("sl3-semiclassical-r", (lhs - rhs).is_zero(), (lhs - rhs).nnz()));
    }

    // 4D carrier with two Cartan and two root generators
    Bivector rje = r_JE_P_sl3(sl3, psi, vs);
    auto car = carrier(rje, sl3.alg);
    out.push_back(named("sl3-carrier-dim-4", car.size() == 4));
    PhiMap phi = phi_map(sl3, {vs});
    out.push_back(named("sl3-carrier-phi-span", same_span(phi.image(), car)));

    // omega and Frobenius duality
    TwoForm w = omega_JE_sl3(sl3, psi, vs);
    out.push_back(named("sl3-omega-nondegenerate", !dense_determinant(w.gram).is_zero()));
    push(frobenius_check(rje, w, phi), "sl3-frobenius");

    // the two-Jordanian twist quantizes an equivalent structure: its carrier
    // matches the enlarged-PET carrier in all structural invariants
    Bivector rjj = r_JJ_sl3(sl3, psi, vs);
    auto car_jj = carrier(rjj, sl3.alg);
    out.push_back(named("sl3-FJJ-carrier-dim-4", car_jj.size() == 4));
    out.push_back(named("sl3-FJJ-carrier-isomorphism-invariants",
                        subalgebra_invariants(sl3.alg, car_jj) ==
                            subalgebra_invariants(sl3.alg, car)));
    out.push_back(named("sl3-FJJ-cybe", check_cybe(rjj, sl3.alg).pass));

    // dual brackets of the section's two r-matrices on the 5D algebra M
    LieAlgebra M = build_M_sl3();
    {
        auto res = dual_bracket(r_JE_M(M, vs), M);
        out.push_back(named("sl3-dual-bracket-JE", res.image_basis.size() == 4 &&
                                                       res.map_intertwines));
        auto res2 = dual_bracket(r_RE_M(M, vs), M);
        out.push_back(named("sl3-dual-bracket-RE", res2.image_basis.size() == 4 &&
                                                       res2.map_intertwines));
    }
    return out;
}

inline std::vector<VerificationReport> run_example_section(const std::string& which) {
    if (which == "sl3") return run_example_sl3();
    if (which == "sl4") return run_example_sl4();
    if (which == "sl7") return run_example_sl7();
    throw BadParameters("unknown example section " + which);
}

// ---------------------------------------------------------------------------
// Report serialization (stable key order; elapsed deliberately excluded so
// identical inputs and seed give byte-identical files).
// ---------------------------------------------------------------------------

inline nlohmann::ordered_json element_to_json(const LieElement& x, const LieAlgebra& g) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [i, c] : x.coeffs()) {
        nlohmann::ordered_json t;
        t["gen"] = g.label(i).str();
        t["coeff"] = c.str();
        terms.push_back(t);
    }
    return terms;
}

/// Bivector wire format: canonical wedge terms as label triples.
inline nlohmann::ordered_json bivector_to_json(const Bivector& r, const LieAlgebra& g) {
    nlohmann::ordered_json j;
    j["schema"] = "1";
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [ij, c] : r.coords()) {
        nlohmann::ordered_json t;
        t["x"] = g.label(ij.first).str();
        t["y"] = g.label(ij.second).str();
        t["coeff"] = c.str();
        j["terms"].push_back(t);
    }
    return j;
}

/// TwoForm wire format: the basis elements and the exact Gram matrix.
inline nlohmann::ordered_json two_form_to_json(const TwoForm& w, const LieAlgebra& g) {
    nlohmann::ordered_json j;
    j["schema"] = "1";
    j["basis"] = nlohmann::ordered_json::array();
    for (const auto& b : w.basis) j["basis"].push_back(element_to_json(b, g));
    j["gram"] = nlohmann::ordered_json::array();
    for (const auto& row : w.gram) {
        nlohmann::ordered_json rj = nlohmann::ordered_json::array();
        for (const auto& v : row) rj.push_back(v.str());
        j["gram"].push_back(rj);
    }
    return j;
}

inline nlohmann::ordered_json report_to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["pass"] = r.pass;
    j["residual_support"] = r.residual_support;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) j["params"][k] = v;
    j["rep"] = r.rep;
    j["seed"] = r.seed;
    return j;
}

inline nlohmann::ordered_json reports_to_json(const std::string& suite,
                                              const std::vector<VerificationReport>& rs) {
    nlohmann::ordered_json j;
    j["schema"] = "1";
    j["suite"] = suite;
    j["note"] = "identities verified in finite-dimensional representations; exact "
                "arithmetic, zero residual support means the identity holds there";
    j["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : rs) j["reports"].push_back(report_to_json(r));
    return j;
}

} // namespace perichain
