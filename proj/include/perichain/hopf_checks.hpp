#pragma once

#include <chrono>
#include <utility>

#include "perichain/report.hpp"
#include "perichain/twists.hpp"

namespace perichain {

namespace hopf_detail {

template <class F>
VerificationReport timed(const std::string& name, const Representation& rep, F&& body) {
    VerificationReport r;
    r.check = name;
    r.rep = rep.name();
    auto t0 = std::chrono::steady_clock::now();
    r.residual_support = body();
    r.pass = r.residual_support == 0;
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

} // namespace hopf_detail

/// Twist equation F_12 (Delta (x) id)(F) = F_23 (id (x) Delta)(F), evaluated
/// on three legs. Returns the support of the difference operator.
template <class S>
VerificationReport check_drinfeld(const TensorExpr<S>& F, const Representation& rep,
                                  const std::string& name = "drinfeld") {
    return hopf_detail::timed(name, rep, [&]() -> long {
        auto F12 = eval(F.map_legs(3, {1, 2}), rep);
        auto F23 = eval(F.map_legs(3, {2, 3}), rep);
        auto dF1 = eval(F.coproduct_on_leg(1), rep);
        auto dF2 = eval(F.coproduct_on_leg(2), rep);
        return (F12 * dF1 - F23 * dF2).nnz();
    });
}

/// Counit conditions (eps (x) id)(F) = (id (x) eps)(F) = 1.
template <class S>
VerificationReport check_counit(const TensorExpr<S>& F, const Representation& rep,
                                const std::string& name = "counit") {
    return hopf_detail::timed(name, rep, [&]() -> long {
        long bad = 0;
        for (int leg = 1; leg <= 2; ++leg) {
            auto m = eval(F.counit_on_leg(leg), rep);
            m -= SparseMat<S>::identity(m.n());
            bad += m.nnz();
        }
        return bad;
    });
}

/// R_F = (F)_21 F^{-1} as an expression (the undeformed R is 1 (x) 1).
template <class S>
TensorExpr<S> r_matrix_expr(const TensorExpr<S>& F) {
    return TensorExpr<S>::prod({F.map_legs(2, {2, 1}), F.inverse()});
}

/// R_F = swap(eval(F)) * invert(eval(F)) as an evaluated operator.
template <class S>
TensorOp<S> r_matrix(const TensorExpr<S>& F, const Representation& rep) {
    auto op = eval_op(F, rep);
    return swap_legs(op, 1, 2) * invert(op);
}

/// Quantum Yang-Baxter: R_12 R_13 R_23 = R_23 R_13 R_12 on three legs.
template <class S>
VerificationReport check_qybe(const TensorOp<S>& R, const Representation& rep,
                              const std::string& name = "qybe") {
    return hopf_detail::timed(name, rep, [&]() -> long {
        auto R12 = embed_legs(R, 3, {1, 2});
        auto R13 = embed_legs(R, 3, {1, 3});
        auto R23 = embed_legs(R, 3, {2, 3});
        return (R12 * R13 * R23 - R23 * R13 * R12).mat.nnz();
    });
}

/// Twisted coproduct Delta_F(X) = F (X (x) 1 + 1 (x) X) F^{-1}.
template <class S>
TensorOp<S> twisted_coproduct(const TensorExpr<S>& F, const LieElement& X,
                              const Representation& rep) {
    using E = TensorExpr<S>;
    auto Fop = eval_op(F, rep);
    auto prim = eval(E::sum({E::gen(X, 1, 2), E::gen(X, 2, 2)}), rep);
    return TensorOp<S>{Fop.mat * prim * invert(Fop).mat, 2, rep.dim()};
}

/// Variant reusing precomputed F and F^{-1} operators.
template <class S>
TensorOp<S> twisted_coproduct(const TensorOp<S>& Fop, const TensorOp<S>& Finv,
                              const LieElement& X, const Representation& rep) {
    using E = TensorExpr<S>;
    auto prim = eval(E::sum({E::gen(X, 1, 2), E::gen(X, 2, 2)}), rep);
    return TensorOp<S>{Fop.mat * prim * Finv.mat, 2, rep.dim()};
}

/// Delta_F(X) - X (x) 1 - 1 (x) X = 0.
template <class S>
VerificationReport check_primitive(const TensorExpr<S>& F, const LieElement& X,
                                   const Representation& rep,
                                   const std::string& name = "primitive") {
    return hopf_detail::timed(name, rep, [&]() -> long {
        using E = TensorExpr<S>;
        auto d = twisted_coproduct(F, X, rep);
        auto prim = eval(E::sum({E::gen(X, 1, 2), E::gen(X, 2, 2)}), rep);
        return (d.mat - prim).nnz();
    });
}

/// One row of a printed coproduct table: generator and its stated image.
template <class S>
struct CoproductRow {
    std::string label;
    LieElement x;
    TensorExpr<S> rhs; // 2-leg expression
};

/// Delta_F(X) == rhs for every row, as rep (x) rep operators.
template <class S>
VerificationReport check_coproduct_table(const TensorExpr<S>& F,
                                         const std::vector<CoproductRow<S>>& table,
                                         const Representation& rep,
                                         const std::string& name = "coproduct-table") {
    return hopf_detail::timed(name, rep, [&]() -> long {
        auto Fop = eval_op(F, rep);
        auto Finv = invert(Fop);
        long bad = 0;
        for (const auto& row : table) {
            auto lhs = twisted_coproduct(Fop, Finv, row.x, rep);
            bad += (lhs.mat - eval(row.rhs, rep)).nnz();
        }
        return bad;
    });
}

/// Coassociativity of the twisted coproduct,
/// (Delta_F (x) id) Delta_F(X) = (id (x) Delta_F) Delta_F(X), via the
/// 3-leg operators F_12 (Delta (x) id)(F) ... conjugating the primitive X.
template <class S>
VerificationReport check_coassociativity(const TensorExpr<S>& F, const LieElement& X,
                                         const Representation& rep,
                                         const std::string& name = "coassociativity") {
    return hopf_detail::timed(name, rep, [&]() -> long {
        using E = TensorExpr<S>;
        // (Delta_F (x) id)Delta_F(X) = G1 Delta3(X) G1^{-1} with
        // G1 = F_12 (Delta (x) id)(F); similarly G2 = F_23 (id (x) Delta)(F).
        auto G1 = eval(F.map_legs(3, {1, 2}), rep) * eval(F.coproduct_on_leg(1), rep);
        auto G2 = eval(F.map_legs(3, {2, 3}), rep) * eval(F.coproduct_on_leg(2), rep);
        auto d3 = eval(E::sum({E::gen(X, 1, 3), E::gen(X, 2, 3), E::gen(X, 3, 3)}), rep);
        TensorOp<S> g1{G1, 3, rep.dim()}, g2{G2, 3, rep.dim()};
        auto lhs = G1 * d3 * invert(g1).mat;
        auto rhs = G2 * d3 * invert(g2).mat;
        return (lhs - rhs).nnz();
    });
}

/// Hexagon-type consistency (Delta_F (x) id)(R) = R_13 R_23.
template <class S>
VerificationReport check_hexagon(const TensorExpr<S>& F, const Representation& rep,
                                 const std::string& name = "hexagon") {
    return hopf_detail::timed(name, rep, [&]() -> long {
        auto R = r_matrix_expr(F);
        // (Delta_F (x) id)(R) = F_12 (Delta (x) id)(R) F_12^{-1}
        auto F12 = F.map_legs(3, {1, 2});
        auto lhs = eval(F12, rep) * eval(R.coproduct_on_leg(1), rep) * eval(F12.inverse(), rep);
        auto rhs = eval(R.map_legs(3, {1, 3}), rep) * eval(R.map_legs(3, {2, 3}), rep);
        return (lhs - rhs).nnz();
    });
}

} // namespace perichain
