#pragma once

#include "perichain/classical.hpp"
#include "perichain/hopf_checks.hpp"

namespace perichain {

/// Exact semiclassical extraction: F is a twist over the jet ring with every
/// continuous parameter proportional to the formal xi. Returns the degree-1
/// coefficient of R(xi) = (F)_21 F^{-1} = 1 (x) 1 + xi r + O(xi^2) as a
/// rational operator on rep (x) rep. The degree-0 part must be the identity
/// and the result is antisymmetric under leg swap (r = f_21 - f).
inline SparseMat<Rational> semiclassical_order1(const TensorExpr<Jet2>& F,
                                                const Representation& rep) {
    auto op = eval_op(F, rep);
    auto R = swap_legs(op, 1, 2) * invert(op);
    const int n = R.mat.n();
    SparseMat<Rational> order0(n), order1(n);
    for (int i = 0; i < n; ++i)
        for (const auto& [j, v] : R.mat.row(i)) {
            if (!v.coeff(0).is_zero()) order0.set(i, j, v.coeff(0));
            if (!v.coeff(1).is_zero()) order1.set(i, j, v.coeff(1));
        }
    if (!order0.is_identity())
        throw ConstraintViolation("semiclassical expansion has a non-unit constant term");
    TensorOp<Rational> r1{order1, 2, rep.dim()};
    if (!((swap_legs(r1, 1, 2).mat + order1).is_zero()))
        throw ConstraintViolation("first-order coefficient is not antisymmetric");
    return order1;
}

/// Does the first-order coefficient of this jet-parameterized family equal
/// the given classical r-matrix, as rep (x) rep operators?
inline VerificationReport check_semiclassical(const TensorExpr<Jet2>& F, const Bivector& r,
                                              const Representation& rep,
                                              const std::string& name = "semiclassical") {
    VerificationReport out;
    out.check = name;
    out.rep = rep.name();
    auto lhs = semiclassical_order1(F, rep);
    auto rhs = r.to_operator(rep);
    out.residual_support = (lhs - rhs).nnz();
    out.pass = out.residual_support == 0;
    return out;
}

} // namespace perichain
