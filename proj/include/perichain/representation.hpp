#pragma once

#include <string>
#include <utility>
#include <vector>

#include "perichain/sl.hpp"

namespace perichain {

/// Exact matrix representation of a LieAlgebra: one square rational matrix
/// per basis label, with rho([x,y]) = rho(x)rho(y) - rho(y)rho(x) checked on
/// all basis pairs at construction. All Hopf-level identities in the library
/// are verified inside such representations.
class Representation {
public:
    Representation() = default;

    Representation(const LieAlgebra& alg, std::string name, int dim,
                   std::vector<SparseMat<Rational>> images)
        : alg_(&alg), name_(std::move(name)), dim_(dim), images_(std::move(images)) {
        if ((int)images_.size() != alg.dim())
            throw BadParameters("representation needs one image per basis element");
        verify_homomorphism();
    }

    const LieAlgebra& algebra() const { return *alg_; }
    const std::string& name() const { return name_; }
    int dim() const { return dim_; }

    const SparseMat<Rational>& image(int basis_idx) const { return images_.at(basis_idx); }

    SparseMat<Rational> image_of(const LieElement& x) const {
        SparseMat<Rational> m(dim_);
        for (const auto& [i, c] : x.coeffs()) m += images_[i].scaled(c);
        return m;
    }

private:
    void verify_homomorphism() const {
        const int n = alg_->dim();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                SparseMat<Rational> lhs = image_of(alg_->bracket(i, j));
                SparseMat<Rational> rhs = images_[i] * images_[j] - images_[j] * images_[i];
                if (!(lhs == rhs))
                    throw ConstraintViolation("representation " + name_ + " of " + alg_->name() +
                                              " violates the bracket on (" +
                                              alg_->label(i).str() + "," + alg_->label(j).str() +
                                              ")");
            }
    }

    const LieAlgebra* alg_ = nullptr;
    std::string name_;
    int dim_ = 0;
    std::vector<SparseMat<Rational>> images_;
};

/// The defining N-dimensional representation of sl(N): E_{i,j} goes to the
/// matrix unit, Cartan labels to their diagonal matrices.
inline Representation defining_rep(const SlAlgebra& sl) {
    std::vector<SparseMat<Rational>> images;
    images.reserve(sl.alg.dim());
    for (int i = 0; i < sl.alg.dim(); ++i)
        images.push_back(sl.defining_matrix(LieElement::unit(i)));
    return Representation(sl.alg, "defining", sl.N, std::move(images));
}

/// Faithful 3x3 representation of L(alpha,beta): A,B,E are the matrix units
/// e12,e23,e13 and H the traceless diagonal with gaps (alpha, beta).
inline Representation defining_rep_L(const LieAlgebra& L, const Rational& alpha) {
    // H = diag(h, h - alpha, h - 1), traceless
    Rational h = (alpha + Rational(1)) * Rational(1, 3);
    SparseMat<Rational> mH(3), mA(3), mB(3), mE(3);
    mH.set(0, 0, h);
    mH.set(1, 1, h - alpha);
    mH.set(2, 2, h - Rational(1));
    mA.set(0, 1, Rational(1));
    mB.set(1, 2, Rational(1));
    mE.set(0, 2, Rational(1));
    return Representation(L, "defining", 3, {mH, mA, mB, mE});
}

/// Faithful 3x3 representation of the 5D algebra M (its sl(3) realization):
/// H^P and H^perp are the standard traceless diagonals, A,B,E matrix units.
inline Representation defining_rep_M(const LieAlgebra& M) {
    SparseMat<Rational> mHP(3), mHX(3), mA(3), mB(3), mE(3);
    mHP.set(0, 0, Rational(2, 3));
    mHP.set(1, 1, Rational(-1, 3));
    mHP.set(2, 2, Rational(-1, 3));
    mHX.set(0, 0, Rational(1, 3));
    mHX.set(1, 1, Rational(-2, 3));
    mHX.set(2, 2, Rational(1, 3));
    mA.set(0, 1, Rational(1));
    mB.set(1, 2, Rational(1));
    mE.set(0, 2, Rational(1));
    return Representation(M, "defining", 3, {mHP, mHX, mA, mB, mE});
}

/// Adjoint representation rho(x) = ad(x), from the structure constants.
/// Requires a faithful adjoint (centerless algebra); verified by checking
/// the images are linearly independent.
inline Representation build_adjoint_rep(const LieAlgebra& g) {
    const int n = g.dim();
    std::vector<SparseMat<Rational>> images;
    images.reserve(n);
    for (int i = 0; i < n; ++i) {
        SparseMat<Rational> m(n);
        for (int j = 0; j < n; ++j)
            for (const auto& [k, c] : g.bracket(i, j).coeffs()) m.add_to(k, j, c);
        images.push_back(std::move(m));
    }
    // faithfulness: ad(x) = 0 only for x = 0
    std::vector<LieElement> flat;
    for (int i = 0; i < n; ++i) {
        LieElement v;
        for (int r = 0; r < n; ++r)
            for (const auto& [c, val] : images[i].row(r)) v.add_term(r * n + c, val);
        flat.push_back(v);
    }
    if ((int)echelonize(flat).size() != n)
        throw ConstraintViolation("adjoint representation of " + g.name() + " is not faithful");
    return Representation(g, "adjoint", n, std::move(images));
}

} // namespace perichain
