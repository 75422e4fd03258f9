#pragma once

#include <vector>

#include "perichain/representation.hpp"

namespace perichain {

/// Formal antisymmetric tensor sum c_k x_k ^ y_k over a Lie algebra,
/// the language of classical r-matrices. Stored in canonical form: expanded
/// antisymmetric coordinates over ordered basis pairs (i < j), no zeros.
class Bivector {
public:
    Bivector() = default;

    void add_wedge(const LieElement& x, const LieElement& y, const Rational& c) {
        if (c.is_zero()) return;
        for (const auto& [i, a] : x.coeffs())
            for (const auto& [j, b] : y.coeffs()) {
                if (i == j) continue;
                Rational v = c * a * b;
                if (i < j)
                    add_coord(i, j, v);
                else
                    add_coord(j, i, -v);
            }
    }

    bool is_zero() const { return coord_.empty(); }

    /// Canonical terms (i < j, coefficient) sorted by pair.
    const std::map<std::pair<int, int>, Rational>& coords() const { return coord_; }

    Rational coord(int i, int j) const {
        if (i == j) return Rational(0);
        auto it = coord_.find(i < j ? std::make_pair(i, j) : std::make_pair(j, i));
        if (it == coord_.end()) return Rational(0);
        return i < j ? it->second : -it->second;
    }

    friend bool operator==(const Bivector& a, const Bivector& b) { return a.coord_ == b.coord_; }

    Bivector& operator+=(const Bivector& o) {
        for (const auto& [ij, c] : o.coord_) add_coord(ij.first, ij.second, c);
        return *this;
    }
    friend Bivector operator-(const Bivector& a, const Bivector& b) {
        Bivector r = a;
        for (const auto& [ij, c] : b.coord_) r.add_coord(ij.first, ij.second, -c);
        return r;
    }

    /// Column space of the coefficient matrix: the minimal subspace V with
    /// r in V ^ V (the wedge-leg span in the minimal decomposition).
    std::vector<LieElement> support_space() const {
        std::map<int, LieElement> cols;
        for (const auto& [ij, c] : coord_) {
            cols[ij.second].add_term(ij.first, c);
            cols[ij.first].add_term(ij.second, -c);
        }
        std::vector<LieElement> vs;
        for (auto& [j, v] : cols) vs.push_back(std::move(v));
        return echelonize(vs);
    }

    /// Operator of the bivector in rep (x) rep. The orientation is the one
    /// under which the R-matrix of a twist expands as R = 1 + xi r + O(xi^2):
    /// a wedge x ^ y contributes rho(y) (x) rho(x) - rho(x) (x) rho(y).
    SparseMat<Rational> to_operator(const Representation& rep) const {
        const int d = rep.dim();
        SparseMat<Rational> out(d * d);
        for (const auto& [ij, c] : coord_) {
            const SparseMat<Rational>& A = rep.image(ij.first);
            const SparseMat<Rational>& B = rep.image(ij.second);
            accumulate_tensor(out, B, A, c, d);
            accumulate_tensor(out, A, B, -c, d);
        }
        return out;
    }

private:
    void add_coord(int i, int j, const Rational& v) {
        auto key = std::make_pair(i, j);
        auto it = coord_.find(key);
        if (it == coord_.end()) {
            if (!v.is_zero()) coord_.emplace(key, v);
            return;
        }
        it->second += v;
        if (it->second.is_zero()) coord_.erase(it);
    }

    static void accumulate_tensor(SparseMat<Rational>& out, const SparseMat<Rational>& L,
                                  const SparseMat<Rational>& R, const Rational& c, int d) {
        for (int r1 = 0; r1 < d; ++r1)
            for (const auto& [c1, v1] : L.row(r1))
                for (int r2 = 0; r2 < d; ++r2)
                    for (const auto& [c2, v2] : R.row(r2))
                        out.add_to(r1 * d + r2, c1 * d + c2, c * v1 * v2);
    }

    std::map<std::pair<int, int>, Rational> coord_;
};

/// The antisymmetric two-form on a carrier basis: Gram matrix of
/// omega(x, y) over an ordered list of elements.
struct TwoForm {
    std::vector<LieElement> basis;
    std::vector<std::vector<Rational>> gram;

    int dim() const { return (int)basis.size(); }

    static TwoForm build(std::vector<LieElement> basis_,
                         const std::function<Rational(const LieElement&, const LieElement&)>& w) {
        TwoForm f;
        f.basis = std::move(basis_);
        const int n = f.dim();
        f.gram.assign(n, std::vector<Rational>(n, Rational(0)));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                f.gram[i][j] = w(f.basis[i], f.basis[j]);
                f.gram[j][i] = -f.gram[i][j];
            }
        return f;
    }

    friend bool operator==(const TwoForm& a, const TwoForm& b) {
        return a.basis == b.basis && a.gram == b.gram;
    }
};

/// Exact determinant by fraction-free elimination (dense, small matrices).
inline Rational dense_determinant(std::vector<std::vector<Rational>> m) {
    const int n = (int)m.size();
    Rational det(1);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!m[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return Rational(0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Rational inv = m[c][c].inverse();
        for (int r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            Rational f = m[r][c] * inv;
            for (int cc = c; cc < n; ++cc) m[r][cc] -= f * m[c][cc];
        }
    }
    return det;
}

} // namespace perichain
