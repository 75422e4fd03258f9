#pragma once

#include "perichain/hopf_checks.hpp"

namespace perichain {

/// The printed coproduct tables of the peripheric constructions, written as
/// 2-leg expressions over the unparameterized twists (all scalings 1).

namespace tables_detail {

using XR = TensorExpr<Rational>;

inline XR g1(const LieElement& x) { return XR::gen(x, 1, 2); }
inline XR g2(const LieElement& x) { return XR::gen(x, 2, 2); }
inline XR one() { return XR::identity(2); }
inline XR neg(XR e) { return XR::scale(Rational(-1), std::move(e)); }
inline XR exp_sigma(const LieElement& E, int leg, const Rational& c = Rational(1)) {
    return XR::exp(XR::scale(c, XR::log1p(XR::gen(E, leg, 2))));
}

} // namespace tables_detail

/// Co-structure of the peripheric extended twist on L(1,0):
///   D(H) = H (x) e^{-s} + 1 (x) H - A (x) B e^{-s}
///   D(A) = A (x) 1 + 1 (x) A
///   D(B) = B (x) 1 + e^{s} (x) B
///   D(E) = E (x) e^{s} + 1 (x) E.
inline std::vector<CoproductRow<Rational>> pet_coproduct_table(const LieAlgebra& L10) {
    using namespace tables_detail;
    LieElement H = L10.gen(GenLabel::abstract("H")), A = L10.gen(GenLabel::abstract("A")),
               B = L10.gen(GenLabel::abstract("B")), E = L10.gen(GenLabel::abstract("E"));
    std::vector<CoproductRow<Rational>> t;
    t.push_back({"H", H,
                 XR::sum({XR::prod({g1(H), exp_sigma(E, 2, Rational(-1))}), g2(H),
                          neg(XR::prod({g1(A), g2(B), exp_sigma(E, 2, Rational(-1))}))})});
    t.push_back({"A", A, XR::sum({g1(A), g2(A)})});
    t.push_back({"B", B, XR::sum({g1(B), XR::prod({exp_sigma(E, 1), g2(B)})})});
    t.push_back({"E", E, XR::sum({XR::prod({g1(E), exp_sigma(E, 2)}), g2(E)})});
    return t;
}

/// The nine coproducts of the full sl(4) peripheric chain. Two of the
/// printed rows carry misprints (mechanically confirmed: the as-printed
/// expressions differ from F Delta(.) F^{-1} by a nonzero exact residual):
///   E_12: the first dressing reads e^{-s14} but the chain produces e^{-s23}
///         (the peripheric H^P_{1,4} gives E_12 a trivial s14-weight);
///   E_34: the H^P_23 (x) E_24 e^{-s23} term is missing its e^{s14} factor.
/// `as_printed` selects which variant to build.
inline std::vector<CoproductRow<Rational>> sl4_chain_coproduct_table(const SlAlgebra& sl4,
                                                                     bool as_printed = true) {
    using namespace tables_detail;
    auto E = [&](int i, int j) { return sl4.E(i, j); };
    LieElement HP14 = sl4.cartan_HP(0), HP23 = sl4.cartan_HP(1), Hperp = sl4.cartan_Hperp(1);
    auto es = [&](int i, int j, Rational c) { return exp_sigma(sl4.E(i, j), 2, c); };
    auto es1 = [&](int i, int j, Rational c) { return exp_sigma(sl4.E(i, j), 1, c); };

    std::vector<CoproductRow<Rational>> t;
    // D(E_12) = E_12 (x) e^{-s14} [read: e^{-s23}] + 1 (x) E_12
    //           - HP23 (x) E_13 e^{-s23}
    t.push_back({"E_12", E(1, 2),
                 XR::sum({XR::prod({g1(E(1, 2)), as_printed ? es(1, 4, Rational(-1))
                                                            : es(2, 3, Rational(-1))}),
                          g2(E(1, 2)),
                          neg(XR::prod({g1(HP23), g2(E(1, 3)), es(2, 3, Rational(-1))}))})});
    // D(E_13) = E_13 (x) 1 + 1 (x) E_13
    t.push_back({"E_13", E(1, 3), XR::sum({g1(E(1, 3)), g2(E(1, 3))})});
    // D(E_14) = E_14 (x) e^{s14} + 1 (x) E_14
    t.push_back({"E_14", E(1, 4),
                 XR::sum({XR::prod({g1(E(1, 4)), es(1, 4, Rational(1))}), g2(E(1, 4))})});
    // D(E_23) = E_23 (x) e^{s23} + 1 (x) E_23
    t.push_back({"E_23", E(2, 3),
                 XR::sum({XR::prod({g1(E(2, 3)), es(2, 3, Rational(1))}), g2(E(2, 3))})});
    // D(E_24) = E_24 (x) e^{s23} + e^{s14} (x) E_24
    t.push_back({"E_24", E(2, 4),
                 XR::sum({XR::prod({g1(E(2, 4)), es(2, 3, Rational(1))}),
                          XR::prod({es1(1, 4, Rational(1)), g2(E(2, 4))})})});
    // D(E_34) = E_34 (x) 1 + e^{s14} (x) E_34 + [e^{s14}] HP23 (x) E_24 e^{-s23}
    {
        XR last = as_printed
                      ? XR::prod({g1(HP23), g2(E(2, 4)), es(2, 3, Rational(-1))})
                      : XR::prod({es1(1, 4, Rational(1)), g1(HP23), g2(E(2, 4)),
                                  es(2, 3, Rational(-1))});
        t.push_back({"E_34", E(3, 4),
                     XR::sum({g1(E(3, 4)), XR::prod({es1(1, 4, Rational(1)), g2(E(3, 4))}),
                              last})});
    }
    // D(HP_14) = HP14 (x) e^{-s14} + 1 (x) HP14 - E_13 (x) E_34 e^{-s14}
    //            - (E_12 + HP23 E_13) (x) E_24 e^{-s14 - s23}
    t.push_back(
        {"HP_14", HP14,
         XR::sum({XR::prod({g1(HP14), es(1, 4, Rational(-1))}), g2(HP14),
                  neg(XR::prod({g1(E(1, 3)), g2(E(3, 4)), es(1, 4, Rational(-1))})),
                  neg(XR::prod({XR::sum({g1(E(1, 2)), XR::prod({g1(HP23), g1(E(1, 3))})}),
                                g2(E(2, 4)), es(1, 4, Rational(-1)), es(2, 3, Rational(-1))}))})});
    // D(HP_23) = HP23 (x) e^{-s23} + 1 (x) HP23
    t.push_back({"HP_23", HP23,
                 XR::sum({XR::prod({g1(HP23), es(2, 3, Rational(-1))}), g2(HP23)})});
    // D(Hperp) = Hperp (x) 1 + 1 (x) Hperp
    t.push_back({"Hperp_1", Hperp, XR::sum({g1(Hperp), g2(Hperp)})});
    return t;
}

/// The nine coproducts of the Jordanian-enlarged sl(4) chain. Three of the
/// printed rows carry misprints (same mechanism as the chain table, verified
/// exactly):
///   E_12:  e^{s13 - s14} should read e^{s13 - s23};
///   E_34:  the HP23 (x) E_24 e^{-s23} term is missing its e^{s14} factor;
///   HP_14: the term -Hperp (x) (e^{-s13} - 1) has the inner sign flipped,
///          the twist produces -Hperp (x) (1 - e^{-s13}).
inline std::vector<CoproductRow<Rational>> sl4_enlarged_coproduct_table(const SlAlgebra& sl4,
                                                                        bool as_printed = true) {
    using namespace tables_detail;
    auto E = [&](int i, int j) { return sl4.E(i, j); };
    LieElement HP14 = sl4.cartan_HP(0), HP23 = sl4.cartan_HP(1), Hperp = sl4.cartan_Hperp(1);
    auto es = [&](int i, int j, Rational c) { return exp_sigma(sl4.E(i, j), 2, c); };
    auto es1 = [&](int i, int j, Rational c) { return exp_sigma(sl4.E(i, j), 1, c); };
    // e^{s13 - s14} on one leg
    auto exp_sum2 = [&](Rational c13, Rational c14) {
        return XR::exp(XR::sum({XR::scale(c13, XR::log1p(g2(E(1, 3)))),
                                XR::scale(c14, XR::log1p(g2(E(1, 4))))}));
    };

    std::vector<CoproductRow<Rational>> t;
    // D(E_12) = E_12 (x) e^{s13 - s14} [read: e^{s13 - s23}] + 1 (x) E_12
    //           - HP23 (x) E_13 e^{-s23}
    {
        XR dress = as_printed
                       ? exp_sum2(Rational(1), Rational(-1))
                       : XR::exp(XR::sum({XR::log1p(g2(E(1, 3))),
                                          XR::scale(Rational(-1), XR::log1p(g2(E(2, 3))))}));
        t.push_back({"E_12", E(1, 2),
                     XR::sum({XR::prod({g1(E(1, 2)), dress}), g2(E(1, 2)),
                              neg(XR::prod({g1(HP23), g2(E(1, 3)), es(2, 3, Rational(-1))}))})});
    }
    // D(E_13) = E_13 (x) e^{s13} + 1 (x) E_13
    t.push_back({"E_13", E(1, 3),
                 XR::sum({XR::prod({g1(E(1, 3)), es(1, 3, Rational(1))}), g2(E(1, 3))})});
    // D(E_14) = E_14 (x) e^{s14} + 1 (x) E_14
    t.push_back({"E_14", E(1, 4),
                 XR::sum({XR::prod({g1(E(1, 4)), es(1, 4, Rational(1))}), g2(E(1, 4))})});
    // D(E_23) = E_23 (x) e^{s23} + 1 (x) E_23
    t.push_back({"E_23", E(2, 3),
                 XR::sum({XR::prod({g1(E(2, 3)), es(2, 3, Rational(1))}), g2(E(2, 3))})});
    // D(E_24) = E_24 (x) e^{s23 - s13} + e^{s14} (x) E_24
    t.push_back({"E_24", E(2, 4),
                 XR::sum({XR::prod({g1(E(2, 4)),
                                    XR::exp(XR::sum({XR::log1p(g2(E(2, 3))),
                                                     XR::scale(Rational(-1), XR::log1p(g2(E(1, 3))))}))}),
                          XR::prod({es1(1, 4, Rational(1)), g2(E(2, 4))})})});
    // D(E_34) = E_34 (x) e^{-s13} + e^{s14} (x) E_34
    //           + Hperp e^{s14} (x) (e^{s14} - 1) e^{-s13}
    //           + [e^{s14}] HP23 (x) E_24 e^{-s23}
    {
        XR last = as_printed
                      ? XR::prod({g1(HP23), g2(E(2, 4)), es(2, 3, Rational(-1))})
                      : XR::prod({es1(1, 4, Rational(1)), g1(HP23), g2(E(2, 4)),
                                  es(2, 3, Rational(-1))});
        t.push_back(
            {"E_34", E(3, 4),
             XR::sum({XR::prod({g1(E(3, 4)), es(1, 3, Rational(-1))}),
                      XR::prod({es1(1, 4, Rational(1)), g2(E(3, 4))}),
                      XR::prod({g1(Hperp), es1(1, 4, Rational(1)),
                                XR::sum({es(1, 4, Rational(1)), neg(one())}),
                                es(1, 3, Rational(-1))}),
                      last})});
    }
    // D(HP_14) = HP14 (x) e^{-s14} + 1 (x) HP14 - Hperp (x) (e^{-s13} - 1)
    //            - (e^{s13} - 1) (x) E_34 e^{-s14 + s13}
    //            - Hperp (e^{s13} - 1) (x) (1 - e^{-s14})
    //            - (E_12 + HP23 E_13) (x) E_24 e^{-s14 - s23 + s13}
    {
        // second term: -Hperp (x) (e^{-s13} - 1) as printed,
        //              -Hperp (x) (1 - e^{-s13}) as computed
        XR inner = as_printed ? XR::sum({es(1, 3, Rational(-1)), neg(one())})
                              : XR::sum({one(), neg(es(1, 3, Rational(-1)))});
        t.push_back(
            {"HP_14", HP14,
             XR::sum(
                 {XR::prod({g1(HP14), es(1, 4, Rational(-1))}), g2(HP14),
                  neg(XR::prod({g1(Hperp), inner})),
                  neg(XR::prod({XR::sum({es1(1, 3, Rational(1)), neg(one())}), g2(E(3, 4)),
                                exp_sum2(Rational(1), Rational(-1))})),
                  neg(XR::prod({g1(Hperp), XR::sum({es1(1, 3, Rational(1)), neg(one())}),
                                XR::sum({one(), neg(es(1, 4, Rational(-1)))})})),
                  neg(XR::prod({XR::sum({g1(E(1, 2)), XR::prod({g1(HP23), g1(E(1, 3))})}),
                                g2(E(2, 4)),
                                XR::exp(XR::sum({XR::scale(Rational(-1), XR::log1p(g2(E(1, 4)))),
                                                 XR::scale(Rational(-1), XR::log1p(g2(E(2, 3)))),
                                                 XR::log1p(g2(E(1, 3)))}))}))})});
    }
    // D(HP_23) = HP23 (x) e^{-s23} + 1 (x) HP23
    t.push_back({"HP_23", HP23,
                 XR::sum({XR::prod({g1(HP23), es(2, 3, Rational(-1))}), g2(HP23)})});
    // D(Hperp) = Hperp (x) e^{-s13} + 1 (x) Hperp
    t.push_back({"Hperp_1", Hperp,
                 XR::sum({XR::prod({g1(Hperp), es(1, 3, Rational(-1))}), g2(Hperp)})});
    return t;
}

} // namespace perichain
