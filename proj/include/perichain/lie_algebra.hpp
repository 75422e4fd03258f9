#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "perichain/labels.hpp"
#include "perichain/rational.hpp"

namespace perichain {

/// Sparse vector over the basis of some LieAlgebra (coefficients indexed by
/// basis position, no explicit zeros).
class LieElement {
public:
    LieElement() = default;

    static LieElement unit(int idx) {
        LieElement e;
        e.c_[idx] = Rational(1);
        return e;
    }

    const std::map<int, Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    Rational coeff(int idx) const {
        auto it = c_.find(idx);
        return it == c_.end() ? Rational(0) : it->second;
    }

    void add_term(int idx, const Rational& v) {
        auto it = c_.find(idx);
        if (it == c_.end()) {
            if (!v.is_zero()) c_.emplace(idx, v);
            return;
        }
        it->second += v;
        if (it->second.is_zero()) c_.erase(it);
    }

    LieElement operator-() const {
        LieElement e;
        for (const auto& [i, v] : c_) e.c_.emplace(i, -v);
        return e;
    }
    LieElement& operator+=(const LieElement& o) {
        for (const auto& [i, v] : o.c_) add_term(i, v);
        return *this;
    }
    LieElement& operator-=(const LieElement& o) {
        for (const auto& [i, v] : o.c_) add_term(i, -v);
        return *this;
    }
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(const Rational& c, const LieElement& e) {
        LieElement r;
        if (c.is_zero()) return r;
        for (const auto& [i, v] : e.c_) r.c_.emplace(i, c * v);
        return r;
    }
    friend bool operator==(const LieElement& a, const LieElement& b) { return a.c_ == b.c_; }

    /// Index of the first basis direction with a nonzero coefficient, or -1.
    int leading_index() const { return c_.empty() ? -1 : c_.begin()->first; }

private:
    std::map<int, Rational> c_;
};

/// Finite-dimensional Lie algebra given by an ordered basis of labels and the
/// full bracket table. Antisymmetry and the Jacobi identity are verified
/// exactly on construction.
class LieAlgebra {
public:
    LieAlgebra() = default;

    LieAlgebra(std::string name, std::vector<GenLabel> basis,
               std::function<LieElement(int, int)> bracket_fn)
        : name_(std::move(name)), basis_(std::move(basis)) {
        const int n = static_cast<int>(basis_.size());
        for (int i = 0; i < n; ++i) index_.emplace(basis_[i], i);
        table_.assign(n, std::vector<LieElement>(n));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                table_[i][j] = bracket_fn(i, j);
                table_[j][i] = -table_[i][j];
            }
        verify_jacobi();
    }

    const std::string& name() const { return name_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<GenLabel>& basis() const { return basis_; }
    const GenLabel& label(int i) const { return basis_.at(i); }

    int index_of(const GenLabel& l) const {
        auto it = index_.find(l);
        if (it == index_.end()) throw IndexOutOfRange("no basis label " + l.str() + " in " + name_);
        return it->second;
    }
    bool has_label(const GenLabel& l) const { return index_.count(l) != 0; }
    LieElement gen(const GenLabel& l) const { return LieElement::unit(index_of(l)); }

    const LieElement& bracket(int i, int j) const { return table_[i][j]; }

    LieElement bracket(const LieElement& x, const LieElement& y) const {
        LieElement r;
        for (const auto& [i, a] : x.coeffs())
            for (const auto& [j, b] : y.coeffs()) {
                if (i == j) continue;
                r += (a * b) * table_[i][j];
            }
        return r;
    }

private:
    void verify_jacobi() const {
        const int n = dim();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    LieElement s = bracket(table_[i][j], LieElement::unit(k));
                    s += bracket(table_[j][k], LieElement::unit(i));
                    s += bracket(table_[k][i], LieElement::unit(j));
                    if (!s.is_zero())
                        throw ConstraintViolation("Jacobi identity fails in " + name_ + " on (" +
                                                  basis_[i].str() + "," + basis_[j].str() + "," +
                                                  basis_[k].str() + ")");
                }
    }

    std::string name_;
    std::vector<GenLabel> basis_;
    std::map<GenLabel, int> index_;
    std::vector<std::vector<LieElement>> table_;
};

// ---------------------------------------------------------------------------
// Echelon machinery (shared by closure, carrier and cohomology code).
// Pivot rule: first nonzero coordinate in basis order, normalized to 1.
// ---------------------------------------------------------------------------

inline void echelon_insert(std::vector<LieElement>& rows, LieElement v) {
    for (const auto& r : rows) {
        int p = r.leading_index();
        Rational c = v.coeff(p);
        if (!c.is_zero()) v -= c * r;
    }
    if (v.is_zero()) return;
    v = v.coeff(v.leading_index()).inverse() * v;
    // keep rows sorted by pivot, then back-substitute
    auto pos = rows.begin();
    while (pos != rows.end() && pos->leading_index() < v.leading_index()) ++pos;
    pos = rows.insert(pos, v);
    for (auto& r : rows) {
        if (&r == &*pos) continue;
        Rational c = r.coeff(pos->leading_index());
        if (!c.is_zero()) r -= c * *pos;
    }
}

inline std::vector<LieElement> echelonize(const std::vector<LieElement>& vs) {
    std::vector<LieElement> rows;
    for (const auto& v : vs) echelon_insert(rows, v);
    return rows;
}

inline bool in_span(const std::vector<LieElement>& echelon, LieElement v) {
    for (const auto& r : echelon) {
        Rational c = v.coeff(r.leading_index());
        if (!c.is_zero()) v -= c * r;
    }
    return v.is_zero();
}

inline bool same_span(const std::vector<LieElement>& a, const std::vector<LieElement>& b) {
    auto ea = echelonize(a), eb = echelonize(b);
    return ea == eb;
}

/// Coordinates of v in the span of `echelon` (which must be echelonized);
/// throws BasisMismatch when v lies outside the span.
inline std::vector<Rational> coords_in_span(const std::vector<LieElement>& echelon,
                                            LieElement v) {
    std::vector<Rational> coords(echelon.size(), Rational(0));
    for (std::size_t i = 0; i < echelon.size(); ++i) {
        Rational c = v.coeff(echelon[i].leading_index());
        if (!c.is_zero()) {
            coords[i] = c;
            v -= c * echelon[i];
        }
    }
    if (!v.is_zero()) throw BasisMismatch("element outside the spanned subspace");
    return coords;
}

/// Smallest bracket-closed subspace containing the seeds, as an echelonized
/// basis. Deterministic given the seed order; the result is order-independent
/// as a subspace.
inline std::vector<LieElement> subalgebra_closure(const LieAlgebra& g,
                                                  const std::vector<LieElement>& seeds) {
    std::vector<LieElement> rows = echelonize(seeds);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<LieElement> cur = rows;
        for (std::size_t a = 0; a < cur.size(); ++a)
            for (std::size_t b = a + 1; b < cur.size(); ++b) {
                LieElement br = g.bracket(cur[a], cur[b]);
                if (!in_span(rows, br)) {
                    echelon_insert(rows, br);
                    grew = true;
                }
            }
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Chevalley-Eilenberg H^2 with trivial coefficients.
// ---------------------------------------------------------------------------

namespace detail {

inline int rank_of(std::vector<std::map<int, Rational>> rows) {
    int rank = 0;
    std::map<int, std::map<int, Rational>> pivots; // pivot column -> row
    for (auto& row : rows) {
        for (auto& [col, prow] : pivots) {
            auto it = row.find(col);
            if (it == row.end()) continue;
            Rational f = it->second;
            for (const auto& [j, v] : prow) {
                auto jt = row.find(j);
                if (jt == row.end()) {
                    Rational nv = -(f * v);
                    if (!nv.is_zero()) row.emplace(j, nv);
                } else {
                    jt->second -= f * v;
                    if (jt->second.is_zero()) row.erase(jt);
                }
            }
        }
        if (row.empty()) continue;
        Rational inv = row.begin()->second.inverse();
        for (auto& [j, v] : row) v *= inv;
        pivots.emplace(row.begin()->first, row);
        ++rank;
    }
    return rank;
}

} // namespace detail

/// dim H^2(g) with trivial coefficients: exact ranks of the differentials
/// Lambda^1 g* -> Lambda^2 g* -> Lambda^3 g*.
inline int cohomology_H2_dim(const LieAlgebra& g) {
    const int n = g.dim();
    // pair/triple index maps
    std::map<std::pair<int, int>, int> pair_idx;
    int np = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pair_idx[{i, j}] = np++;

    // d1: g* -> Lambda^2 g*,  (d xi)(x,y) = -xi([x,y]).
    // Row per dual generator, columns indexed by pairs.
    std::vector<std::map<int, Rational>> d1(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (const auto& [k, c] : g.bracket(i, j).coeffs())
                if (!c.is_zero()) d1[k][pair_idx[{i, j}]] -= c;
    int rank_d1 = detail::rank_of(d1);

    // d2: Lambda^2 g* -> Lambda^3 g*,
    // (d w)(x,y,z) = -w([x,y],z) + w([x,z],y) - w([y,z],x).
    int nt = 0;
    std::map<std::tuple<int, int, int>, int> triple_idx;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) triple_idx[{i, j, k}] = nt++;

    auto w_eval = [&](int wi, int wj, int a, int b) -> Rational {
        // value of the basis 2-form e_wi^* ^ e_wj^* on (e_a, e_b)
        if (wi == a && wj == b) return Rational(1);
        if (wi == b && wj == a) return Rational(-1);
        return Rational(0);
    };

    std::vector<std::map<int, Rational>> d2(np);
    for (int wi = 0; wi < n; ++wi)
        for (int wj = wi + 1; wj < n; ++wj) {
            auto& row = d2[pair_idx[{wi, wj}]];
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    for (int c = b + 1; c < n; ++c) {
                        Rational val(0);
                        for (const auto& [k, coef] : g.bracket(a, b).coeffs())
                            val -= coef * w_eval(wi, wj, k, c);
                        for (const auto& [k, coef] : g.bracket(a, c).coeffs())
                            val += coef * w_eval(wi, wj, k, b);
                        for (const auto& [k, coef] : g.bracket(b, c).coeffs())
                            val -= coef * w_eval(wi, wj, k, a);
                        if (!val.is_zero()) row[triple_idx[{a, b, c}]] = val;
                    }
        }
    int rank_d2 = detail::rank_of(d2);

    return np - rank_d2 - rank_d1;
}

} // namespace perichain
