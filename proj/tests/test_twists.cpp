#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "perichain/hopf_checks.hpp"
#include "perichain/params.hpp"

using namespace perichain;

using X = TensorExpr<Rational>;

TEST_CASE("jordanian twist on sl(2)") {
    SlAlgebra sl2 = build_sl(2);
    Representation rep = defining_rep(sl2);

    for (Rational xi : {Rational(1), Rational(1, 2), Rational(-2, 3)}) {
        X F = jordanian(sl2.alg, sl2.H(1, 2), sl2.E(1, 2), xi);
        CHECK(check_drinfeld(F, rep).pass);
        CHECK(check_counit(F, rep).pass);
    }

    // xi = 0 collapses to the identity expression
    X F0 = jordanian(sl2.alg, sl2.H(1, 2), sl2.E(1, 2), Rational(0));
    CHECK(eval(F0, rep).is_identity());

    // [H, E_21] = -E_21, not a Jordanian carrier
    CHECK_THROWS_AS(jordanian(sl2.alg, sl2.H(1, 2), sl2.E(2, 1), Rational(1)),
                    CarrierViolation);
    // [2H, E] = 2E likewise rejected
    CHECK_THROWS_AS(jordanian(sl2.alg, Rational(2) * sl2.H(1, 2), sl2.E(1, 2), Rational(1)),
                    CarrierViolation);
}

TEST_CASE("jordanian twist fails for a non-twist exponent (negative control)") {
    SlAlgebra sl2 = build_sl(2);
    Representation rep = defining_rep(sl2);
    // Exp(E_12 (x) E_21) is not a twist
    X bad = X::exp(X::prod({X::gen(sl2.E(1, 2), 1, 2), X::gen(sl2.E(2, 1), 2, 2)}));
    auto r = check_drinfeld(bad, rep);
    CHECK_FALSE(r.pass);
    CHECK(r.residual_support > 0);
}

TEST_CASE("extended Jordanian twist on L(alpha,beta)") {
    for (auto [a, b] : std::vector<std::pair<Rational, Rational>>{
             {Rational(1, 2), Rational(1, 2)}, {Rational(1), Rational(0)}, {Rational(2, 3), Rational(1, 3)}}) {
        LieAlgebra L = build_L(a, b);
        Representation rep = defining_rep_L(L, a);
        LieElement H = L.gen(GenLabel::abstract("H")), A = L.gen(GenLabel::abstract("A")),
                   B = L.gen(GenLabel::abstract("B")), E = L.gen(GenLabel::abstract("E"));
        for (Rational xi : {Rational(1), Rational(1, 3), Rational(-1, 2)}) {
            X FE = extension(L, A, B, b, E, xi);
            X FJ = jordanian(L, H, E, xi);
            X F = X::prod({FE, FJ});
            CHECK(check_drinfeld(F, rep).pass);
            CHECK(check_counit(F, rep).pass);

            // primed variant
            X FEp = extension_primed(L, A, B, a, E, xi);
            CHECK(check_drinfeld(X::prod({FEp, FJ}), rep).pass);
        }
    }
}

TEST_CASE("PET on L(1,0): extension alone composes with the Jordanian") {
    LieAlgebra L = build_L(Rational(1), Rational(0));
    Representation rep = defining_rep_L(L, Rational(1));
    LieElement H = L.gen(GenLabel::abstract("H")), A = L.gen(GenLabel::abstract("A")),
               B = L.gen(GenLabel::abstract("B")), E = L.gen(GenLabel::abstract("E"));
    for (Rational xi : {Rational(1), Rational(2, 5), Rational(-1, 3)}) {
        // beta = 0: dressing-free extension e^{xi A (x) B}
        X F = X::prod({extension(L, A, B, Rational(0), E, xi), jordanian(L, H, E, xi)});
        CHECK(check_drinfeld(F, rep).pass);
        CHECK(check_counit(F, rep).pass);
    }
}

TEST_CASE("counit negative control: unital shift breaks the counit") {
    SlAlgebra sl2 = build_sl(2);
    Representation rep = defining_rep(sl2);
    X F = jordanian(sl2.alg, sl2.H(1, 2), sl2.E(1, 2), Rational(1));
    X shifted = X::sum({F, X::identity(2)});
    CHECK_FALSE(check_counit(shifted, rep).pass);
}

TEST_CASE("canonical and peripheric links for small N") {
    SlAlgebra sl3 = build_sl(3);
    Representation rep3 = defining_rep(sl3);
    // k=0, N=3: one extension factor, one Jordanian factor
    X link = canonical_link(sl3, 0, Rational(1));
    CHECK(link.kids().size() == 2);
    CHECK(check_drinfeld(link, rep3).pass);

    // peripheric: e^{E_12 (x) E_23} e^{H^P (x) sigma_13}
    X plink = peripheric_link(sl3, 0, Rational(1));
    X explicit_form =
        X::prod({X::exp(X::prod({X::gen(sl3.E(1, 2), 1, 2), X::gen(sl3.E(2, 3), 2, 2)})),
                 X::exp(X::prod({X::gen(sl3.cartan_HP(0), 1, 2),
                                 X::log1p(X::gen(sl3.E(1, 3), 2, 2))}))});
    CHECK(eval(plink, rep3) == eval(explicit_form, rep3));
    CHECK(check_drinfeld(plink, rep3).pass);

    SlAlgebra sl4 = build_sl(4);
    Representation rep4 = defining_rep(sl4);
    CHECK(check_drinfeld(canonical_link(sl4, 0, Rational(1)), rep4).pass);
    // k with empty constituent range: pure Jordanian link
    X pure = canonical_link(sl4, 1, Rational(1));
    CHECK(pure.kind() == X::Kind::exponential);
    CHECK_THROWS_AS(canonical_link(sl4, 2, Rational(1)), IndexOutOfRange);
}

TEST_CASE("factorization of a link through the peripheric form") {
    // F_{B_k}(psi) = e^{H^R (x) sigma(psi)} F^P_{B_k}(psi), exactly
    for (int N : {4, 5}) {
        SlAlgebra sl = build_sl(N);
        Representation rep = defining_rep(sl);
        ParamGen gen(0xfacefeedull + N);
        for (int k = 0; k + 1 < N - k; ++k) {
            for (int point = 0; point < 3; ++point) {
                Rational psi = point == 0 ? Rational(1) : gen.nonzero();
                X lhs = canonical_link(sl, k, psi);
                X hr_factor = reshetikhin_cartan_prefactor(sl, std::vector<Rational>(k + 1, psi));
                // prefactor for just this link: build directly
                LieElement hr = sl.cartan_HR(k);
                X rhs_pref =
                    hr.is_zero()
                        ? X::identity(2)
                        : X::exp(X::prod({X::gen(hr, 1, 2),
                                          X::log1p(X::scale(psi, X::gen(sl.E(k + 1, N - k), 2, 2)))}));
                X rhs = X::prod({rhs_pref, peripheric_link(sl, k, psi)});
                CHECK(eval(lhs, rep) == eval(rhs, rep));
            }
        }
    }
}

TEST_CASE("rearrangement of the full chain (factors collected at the end)") {
    for (int N : {2, 4, 5}) {
        SlAlgebra sl = build_sl(N);
        Representation rep = defining_rep(sl);
        auto points = parameter_points(sl.max_links(), 0, 0x5eed0000ull + N, 2);
        for (const auto& [psi, zeta] : points) {
            X lhs = canonical_chain(sl, psi);
            X rhs = X::prod({reshetikhin_cartan_prefactor(sl, psi), peripheric_chain(sl, psi)});
            CHECK(eval(lhs, rep) == eval(rhs, rep));
        }
    }
}

TEST_CASE("peripheric chains satisfy the twist equations, N = 3..6") {
    for (int N : {3, 4, 5, 6}) {
        SlAlgebra sl = build_sl(N);
        Representation rep = defining_rep(sl);
        auto points = parameter_points(sl.max_links(), 0, 0xabc000ull + N, 2);
        for (const auto& [psi, zeta] : points) {
            X F = peripheric_chain(sl, psi);
            CHECK(check_drinfeld(F, rep).pass);
            CHECK(check_counit(F, rep).pass);
        }
    }
}

TEST_CASE("N=2 chain is a single Jordanian factor") {
    SlAlgebra sl2 = build_sl(2);
    Representation rep = defining_rep(sl2);
    X chain = peripheric_chain(sl2, {Rational(1)});
    X jf = jordanian(sl2.alg, sl2.H(1, 2), sl2.E(1, 2), Rational(1));
    CHECK(eval(chain, rep) == eval(jf, rep));
    CHECK_THROWS_AS(peripheric_chain(sl2, {Rational(1), Rational(1)}), TooManyLinks);
}

TEST_CASE("printed sl(4) chain factors in the printed order") {
    SlAlgebra sl4 = build_sl(4);
    Representation rep = defining_rep(sl4);
    X chain = peripheric_chain(sl4, {Rational(1), Rational(1)});
    auto sig = [&](int i, int j) { return X::log1p(X::gen(sl4.E(i, j), 2, 2)); };
    X printed = X::prod({
        X::exp(X::prod({X::gen(sl4.cartan_HP(1), 1, 2), sig(2, 3)})),
        X::exp(X::prod({X::gen(sl4.E(1, 2), 1, 2), X::gen(sl4.E(2, 4), 2, 2)})),
        X::exp(X::prod({X::gen(sl4.E(1, 3), 1, 2), X::gen(sl4.E(3, 4), 2, 2)})),
        X::exp(X::prod({X::gen(sl4.cartan_HP(0), 1, 2), sig(1, 4)})),
    });
    CHECK(eval(chain, rep) == eval(printed, rep));
}

TEST_CASE("enlarged chains: Jordanian enlargement satisfies the twist equations") {
    SlAlgebra sl4 = build_sl(4);
    Representation rep = defining_rep(sl4);
    auto points = parameter_points(2, 1, 0x77443322ull, 2);
    for (const auto& [psi, zeta] : points) {
        EnlargedChainParams<Rational> p;
        p.link = psi;
        p.kappa = {1, 1};
        p.enlarge = zeta;
        X F = enlarged_chain_J(sl4, p);
        CHECK(check_drinfeld(F, rep).pass);
        CHECK(check_counit(F, rep).pass);
    }
}

TEST_CASE("printed sl(4) enlarged twist equals the JF-prefixed chain") {
    SlAlgebra sl4 = build_sl(4);
    Representation rep = defining_rep(sl4);
    EnlargedChainParams<Rational> p;
    p.link = {Rational(1), Rational(1)};
    p.kappa = {1, 1};
    p.enlarge = {Rational(1)};
    X F = enlarged_chain_J(sl4, p);
    X printed = X::prod({X::exp(X::prod({X::gen(sl4.cartan_Hperp(1), 1, 2),
                                         X::log1p(X::gen(sl4.E(1, 3), 2, 2))})),
                         peripheric_chain(sl4, {Rational(1), Rational(1)})});
    CHECK(eval(F, rep) == eval(printed, rep));
}

TEST_CASE("switching every extension off degenerates to the multi-Jordanian twist") {
    SlAlgebra sl4 = build_sl(4);
    Representation rep = defining_rep(sl4);
    EnlargedChainParams<Rational> p;
    p.style = ParamStyle::nu_rho;
    p.link = {Rational(1, 2), Rational(1, 3)};
    p.kappa = {0, 0};
    p.enlarge = {Rational(2)};
    X F = enlarged_chain_J(sl4, p);
    CHECK(check_drinfeld(F, rep).pass);
    // multi-Jordanian: only H^P (x) sigma factors remain
    auto sig = [&](int i, int j, Rational c) {
        return X::log1p(X::scale(c, X::gen(sl4.E(i, j), 2, 2)));
    };
    X expect = X::prod({
        X::exp(X::prod({X::gen(sl4.cartan_HP(1), 1, 2), sig(2, 3, Rational(1, 3))})),
        X::exp(X::prod({X::gen(sl4.cartan_HP(0), 1, 2), sig(1, 4, Rational(1, 2))})),
    });
    CHECK(eval(F, rep) == eval(expect, rep));

    // ... and the substituted variant produces a genuinely different operator
    p.substitute_dropped = true;
    X Fsub = enlarged_chain_J(sl4, p);
    CHECK_FALSE(eval(Fsub, rep) == eval(expect, rep));
}

TEST_CASE("substituted replacement factor is a twist on the single-link chain") {
    // N = 3, extension off: the dropped factor can be replaced by the
    // Jordanian built on (-H_1^perp, E_{2,3}), and the composite is a twist
    SlAlgebra sl3 = build_sl(3);
    Representation rep = defining_rep(sl3);
    EnlargedChainParams<Rational> p;
    p.style = ParamStyle::nu_rho;
    p.link = {Rational(1, 2)};
    p.kappa = {0};
    p.enlarge = {Rational(2)};
    p.substitute_dropped = true;
    X F = enlarged_chain_J(sl3, p);
    CHECK(check_drinfeld(F, rep).pass);
    CHECK(check_counit(F, rep).pass);
    X plain_drop = [&] {
        auto q = p;
        q.substitute_dropped = false;
        return enlarged_chain_J(sl3, q);
    }();
    CHECK_FALSE(eval(F, rep) == eval(plain_drop, rep));
}

TEST_CASE("reparameterization: psi_zeta and nu_rho builds coincide") {
    for (int N : {4, 5}) {
        SlAlgebra sl = build_sl(N);
        Representation rep = defining_rep(sl);
        const int z = sl.max_links(), njf = sl.half() - 1;
        ParamGen gen(0x12341234ull + N);
        for (int point = 0; point < 3; ++point) {
            std::vector<Rational> nu = gen.nonzero_vec(z), rho = gen.nonzero_vec(njf);
            // psi_l = nu_l prod_{r<l} nu_r / rho_r ; zeta_i = prod_{r<=i} rho_r / nu_r
            std::vector<Rational> psi(z), zeta(njf);
            for (int l = 1; l <= z; ++l) {
                Rational v = nu[l - 1];
                for (int r = 1; r < l && r <= njf; ++r) v *= nu[r - 1] / rho[r - 1];
                psi[l - 1] = v;
            }
            for (int i = 1; i <= njf; ++i) {
                Rational v(1);
                for (int r = 1; r <= i; ++r) v *= rho[r - 1] / nu[r - 1];
                zeta[i - 1] = v;
            }
            EnlargedChainParams<Rational> a, b;
            a.style = ParamStyle::psi_zeta;
            a.link = psi;
            a.kappa = std::vector<int>(z, 1);
            a.enlarge = zeta;
            b.style = ParamStyle::nu_rho;
            b.link = nu;
            b.kappa = std::vector<int>(z, 1);
            b.enlarge = rho;
            CHECK(eval(enlarged_chain_J(sl, a), rep) == eval(enlarged_chain_J(sl, b), rep));
        }
    }
}

TEST_CASE("Reshetikhin enlargement") {
    SlAlgebra sl4 = build_sl(4);
    Representation rep = defining_rep(sl4);
    const int m = sl4.max_links() + sl4.half() - 1;
    ParamGen gen(0x99887766ull);
    for (int point = 0; point < 3; ++point) {
        std::vector<Rational> psi = gen.nonzero_vec(2);
        std::vector<std::vector<Rational>> beta(m, std::vector<Rational>(m, Rational(0)));
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) beta[a][b] = gen.nonzero();
        X F = enlarged_chain_R(sl4, psi, beta);
        CHECK(check_drinfeld(F, rep).pass);
        CHECK(check_counit(F, rep).pass);
    }
    // beta = 0 gives the plain chain
    std::vector<std::vector<Rational>> zero(m, std::vector<Rational>(m, Rational(0)));
    std::vector<Rational> psi1 = {Rational(1), Rational(1)};
    CHECK(eval(enlarged_chain_R(sl4, psi1, zero), rep) ==
          eval(peripheric_chain(sl4, psi1), rep));
}

TEST_CASE("tw-pre special case: e^{psi A (x) sigma} e^{A (x) B} e^{H (x) sigma}") {
    SlAlgebra sl3 = build_sl(3);
    Representation rep = defining_rep(sl3);
    // beta entry pairing E_1^P = E_12 (index z + 0 = 1) with sigma_0 (index 0)
    const int m = sl3.max_links() + sl3.half() - 1; // 2
    std::vector<std::vector<Rational>> beta(m, std::vector<Rational>(m, Rational(0)));
    Rational psi(1, 2);
    beta[1][0] = psi;
    X F = enlarged_chain_R(sl3, {Rational(1)}, beta);
    X expect = X::prod(
        {X::exp(X::scale(psi, X::prod({X::gen(sl3.E(1, 2), 1, 2),
                                       X::log1p(X::gen(sl3.E(1, 3), 2, 2))}))),
         peripheric_chain(sl3, {Rational(1)})});
    CHECK(eval(F, rep) == eval(expect, rep));
    CHECK(check_drinfeld(F, rep).pass);
}

TEST_CASE("sl(3) specials satisfy the twist equations") {
    SlAlgebra sl3 = build_sl(3);
    Representation rep = defining_rep(sl3);
    ParamGen gen(0x31337ull);
    for (int point = 0; point < 3; ++point) {
        Rational psi = point == 0 ? Rational(1) : gen.nonzero();
        Rational vs = point == 0 ? Rational(1) : gen.nonzero();
        auto specials = sl3_specials(sl3, psi, vs);
        for (const auto& [name, F] : specials) {
            CAPTURE(name);
            CHECK(check_drinfeld(F, rep).pass);
            CHECK(check_counit(F, rep).pass);
        }
        // each single factor of F_JJ alone is a twist; the two commute here
        // because the sigma arguments E_12 and E_13 commute
        const X& FJJ = specials.at("F_JJ");
        REQUIRE(FJJ.kids().size() == 2);
        CHECK(check_drinfeld(FJJ.kids()[0], rep).pass);
        CHECK(check_drinfeld(FJJ.kids()[1], rep).pass);
        auto a = eval(FJJ.kids()[0], rep), b = eval(FJJ.kids()[1], rep);
        CHECK(a * b == b * a);
        // F_JE_P with vs = 0 reduces to the PET
        auto reduced = sl3_specials(sl3, psi, Rational(0));
        X pet = peripheric_chain(sl3, {psi});
        CHECK(eval(reduced.at("F_JE_P"), rep) == eval(pet, rep));
    }
}

TEST_CASE("matreshka: embedded sl(N-2k) generators stay primitive (small N)") {
    for (int N : {4, 5}) {
        SlAlgebra sl = build_sl(N);
        Representation rep = defining_rep(sl);
        std::vector<Rational> psi = canonical_psi(sl.max_links());
        for (int k = 1; k < sl.max_links(); ++k) {
            std::vector<Rational> partial(psi.begin(), psi.begin() + k);
            X F = peripheric_chain(sl, partial);
            for (int i = k + 1; i <= N - k; ++i)
                for (int j = k + 1; j <= N - k; ++j) {
                    if (i != j) CHECK(check_primitive(F, sl.E(i, j), rep).pass);
                }
            for (int i = k + 1; i <= N - k - 1; ++i)
                CHECK(check_primitive(F, sl.H(i, i + 1), rep).pass);
        }
    }
}

TEST_CASE("adjoint representation reruns (N <= 4)") {
    SlAlgebra sl2 = build_sl(2);
    Representation ad2 = build_adjoint_rep(sl2.alg);
    X F = jordanian(sl2.alg, sl2.H(1, 2), sl2.E(1, 2), Rational(1));
    CHECK(check_drinfeld(F, ad2).pass);
    CHECK(check_counit(F, ad2).pass);
    CHECK(check_qybe(r_matrix(F, ad2), ad2).pass);

    SlAlgebra sl3 = build_sl(3);
    Representation ad3 = build_adjoint_rep(sl3.alg);
    auto specials = sl3_specials(sl3, Rational(1), Rational(1));
    CHECK(check_drinfeld(specials.at("F_JE_P"), ad3).pass);
    CHECK(check_drinfeld(peripheric_chain(sl3, {Rational(1)}), ad3).pass);

    SlAlgebra sl4 = build_sl(4);
    Representation ad4 = build_adjoint_rep(sl4.alg);
    X chain4 = peripheric_chain(sl4, {Rational(1), Rational(1)});
    CHECK(check_drinfeld(chain4, ad4).pass);
    CHECK(check_counit(chain4, ad4).pass);
    CHECK(check_qybe(r_matrix(chain4, ad4), ad4).pass);
    EnlargedChainParams<Rational> p;
    p.link = {Rational(1), Rational(1)};
    p.kappa = {1, 1};
    p.enlarge = {Rational(1)};
    CHECK(check_drinfeld(enlarged_chain_J(sl4, p), ad4).pass);
}

TEST_CASE("coassociativity and hexagon for verified twists") {
    SlAlgebra sl3 = build_sl(3);
    Representation rep = defining_rep(sl3);
    X F = peripheric_chain(sl3, {Rational(1, 2)});
    for (int i = 0; i < sl3.alg.dim(); ++i)
        CHECK(check_coassociativity(F, LieElement::unit(i), rep).pass);
    CHECK(check_hexagon(F, rep).pass);

    SlAlgebra sl2 = build_sl(2);
    Representation rep2 = defining_rep(sl2);
    X FJ = jordanian(sl2.alg, sl2.H(1, 2), sl2.E(1, 2), Rational(2, 3));
    CHECK(check_hexagon(FJ, rep2).pass);

    // the enlarged sl(4) chain and the Reshetikhin-enlarged chain
    SlAlgebra sl4 = build_sl(4);
    Representation rep4 = defining_rep(sl4);
    EnlargedChainParams<Rational> p;
    p.link = {Rational(1, 2), Rational(1, 3)};
    p.kappa = {1, 1};
    p.enlarge = {Rational(2)};
    CHECK(check_hexagon(enlarged_chain_J(sl4, p), rep4).pass);
    const int m = sl4.max_links() + sl4.half() - 1;
    std::vector<std::vector<Rational>> beta(m, std::vector<Rational>(m, Rational(0)));
    beta[0][2] = Rational(1, 5);
    beta[2][1] = Rational(-1, 2);
    CHECK(check_hexagon(enlarged_chain_R(sl4, {Rational(1), Rational(1)}, beta), rep4).pass);
}

TEST_CASE("qybe for R-matrices of small twists, with negative control") {
    SlAlgebra sl2 = build_sl(2);
    Representation rep = defining_rep(sl2);
    X F = jordanian(sl2.alg, sl2.H(1, 2), sl2.E(1, 2), Rational(1));
    auto R = r_matrix(F, rep);
    CHECK(check_qybe(R, rep).pass);
    // R expression route agrees with the operator route
    CHECK(eval(r_matrix_expr(F), rep) == R.mat);

    // identity R passes trivially
    TensorOp<Rational> id{SparseMat<Rational>::identity(4), 2, 2};
    CHECK(check_qybe(id, rep).pass);

    // ad hoc non-R-matrix fails
    X bad = X::exp(X::sum({X::prod({X::gen(sl2.E(1, 2), 1, 2), X::gen(sl2.E(1, 2), 2, 2)}),
                           X::prod({X::gen(sl2.E(1, 2), 1, 2), X::gen(sl2.H(1, 2), 2, 2)})}));
    auto badop = eval_op(bad, rep);
    CHECK_FALSE(check_qybe(badop, rep).pass);
}

TEST_CASE("F F^{-1} = identity for the full sl(7) chain") {
    SlAlgebra sl7 = build_sl(7);
    Representation rep = defining_rep(sl7);
    X F = peripheric_chain(sl7, canonical_psi(sl7.max_links()));
    auto op = eval_op(F, rep);
    CHECK((op.mat * eval(F.inverse(), rep)).is_identity());
    CHECK((op.mat * invert(op).mat).is_identity());
}

TEST_CASE("all continuous parameters zero collapses every construction") {
    SlAlgebra sl4 = build_sl(4);
    Representation rep = defining_rep(sl4);
    std::vector<Rational> zero2 = {Rational(0), Rational(0)};
    CHECK(eval(peripheric_chain(sl4, zero2), rep).is_identity());
    CHECK(eval(canonical_chain(sl4, zero2), rep).is_identity());
    EnlargedChainParams<Rational> p;
    p.link = zero2;
    p.kappa = {1, 1};
    p.enlarge = {Rational(0)};
    CHECK(eval(enlarged_chain_J(sl4, p), rep).is_identity());
    const int m = sl4.max_links() + sl4.half() - 1;
    std::vector<std::vector<Rational>> zb(m, std::vector<Rational>(m, Rational(0)));
    CHECK(eval(enlarged_chain_R(sl4, zero2, zb), rep).is_identity());
    SlAlgebra sl3 = build_sl(3);
    Representation rep3 = defining_rep(sl3);
    for (const auto& [name, F] : sl3_specials(sl3, Rational(0), Rational(0)))
        CHECK(eval(F, rep3).is_identity());
}
