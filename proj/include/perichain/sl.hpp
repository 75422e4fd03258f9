#pragma once

#include <vector>

#include "perichain/lie_algebra.hpp"
#include "perichain/sparse_matrix.hpp"

namespace perichain {

/// sl(N) in the standard gl(N) basis {E_{i,j}, i != j} plus the simple-root
/// Cartan elements H_{i,i+1} = (E_{i,i} - E_{i+1,i+1})/2. Carries the
/// integer N alongside the abstract algebra so the peripheric Cartan
/// combinations H^P, H^R, H^perp can be resolved.
struct SlAlgebra {
    LieAlgebra alg;
    int N = 0;

    /// n with N = 2n (even) or N = 2n-1 (odd).
    int half() const { return (N + 1) / 2; }
    /// Maximal number of links z = N - n of a full peripheric chain.
    int max_links() const { return N - half(); }

    LieElement E(int i, int j) const { return alg.gen(GenLabel::E(i, j)); }

    /// H_{i,k} = (E_{i,i} - E_{k,k})/2 expressed in the Cartan basis.
    LieElement H(int i, int k) const {
        std::vector<Rational> d(N, Rational(0));
        d[i - 1] = Rational(1, 2);
        d[k - 1] += Rational(-1, 2);
        return diagonal(d);
    }

    /// Traceless projection of a diagonal matrix, in H_{i,i+1} coordinates.
    LieElement diagonal(std::vector<Rational> d) const {
        Rational trace(0);
        for (const auto& v : d) trace += v;
        Rational shift = trace * Rational(1, N);
        for (auto& v : d) v -= shift;
        LieElement e;
        Rational partial(0);
        for (int i = 1; i < N; ++i) {
            partial += d[i - 1];
            Rational c = Rational(2) * partial;
            if (!c.is_zero()) e.add_term(alg.index_of(GenLabel::H(i, i + 1)), c);
        }
        return e;
    }

    /// H^P_{k+1,N-k} = (1/N)(N E_{k+1,k+1} - sum_s E_{s,s}); commutes with
    /// every second constituent generator E_{s,N-k} of its link.
    LieElement cartan_HP(int k) const {
        require_link(k);
        std::vector<Rational> d(N, Rational(-1, N));
        d[k] += Rational(1);
        return diagonal(d);
    }

    /// H^R_{k+1,N-k} = H_{k+1,N-k} - H^P_{k+1,N-k}.
    LieElement cartan_HR(int k) const {
        require_link(k);
        return H(k + 1, N - k) - cartan_HP(k);
    }

    /// Basis of the Cartan hyperplane orthogonal to the initial roots:
    /// H_i^perp = ((N-2i)/N) sum_l E_{l,l} - sum_{m=i+1}^{N-i} E_{m,m},
    /// normalized so that [H_i^perp, E_{j,N-j}] = delta_{ij} E_{j,N-j}.
    LieElement cartan_Hperp(int i) const {
        if (i < 1 || i > half() - 1)
            throw IndexOutOfRange("Hperp index " + std::to_string(i) + " out of range for sl(" +
                                  std::to_string(N) + ")");
        std::vector<Rational> d(N, Rational(N - 2 * i, N));
        for (int m = i + 1; m <= N - i; ++m) d[m - 1] -= Rational(1);
        return diagonal(d);
    }

    /// E_j^P = E_{j,N-j}, the additional primitive generators of the chain.
    LieElement EP(int j) const { return E(j, N - j); }

    LieElement resolve(const GenLabel& l) const {
        switch (l.kind) {
            case GenLabel::Kind::E: return E(l.i, l.j);
            case GenLabel::Kind::H: return H(l.i, l.j);
            case GenLabel::Kind::HP: return cartan_HP(l.i);
            case GenLabel::Kind::HR: return cartan_HR(l.i);
            case GenLabel::Kind::Hperp: return cartan_Hperp(l.i);
            case GenLabel::Kind::Abstract: break;
        }
        throw IndexOutOfRange("cannot resolve label " + l.str() + " in sl(" + std::to_string(N) + ")");
    }

    /// N x N defining matrix of an element (basis coords -> matrix).
    SparseMat<Rational> defining_matrix(const LieElement& x) const {
        SparseMat<Rational> m(N);
        for (const auto& [idx, c] : x.coeffs()) {
            const GenLabel& l = alg.label(idx);
            if (l.kind == GenLabel::Kind::E) {
                m.add_to(l.i - 1, l.j - 1, c);
            } else { // H_{i,i+1}
                m.add_to(l.i - 1, l.i - 1, c * Rational(1, 2));
                m.add_to(l.i, l.i, c * Rational(-1, 2));
            }
        }
        return m;
    }

    /// Inverse of defining_matrix for traceless matrices.
    LieElement element_of_matrix(const SparseMat<Rational>& m) const {
        LieElement e;
        std::vector<Rational> d(N, Rational(0));
        for (int i = 0; i < N; ++i)
            for (const auto& [j, v] : m.row(i)) {
                if (i == j)
                    d[i] = v;
                else
                    e.add_term(alg.index_of(GenLabel::E(i + 1, j + 1)), v);
            }
        return e + diagonal(d);
    }

private:
    void require_link(int k) const {
        if (k < 0 || k + 1 >= N - k)
            throw IndexOutOfRange("link index " + std::to_string(k) + " out of range for sl(" +
                                  std::to_string(N) + ")");
    }
};

/// Build sl(N), N >= 2, with brackets computed from the defining matrices
/// and diagonal results re-expressed in the Cartan basis.
inline SlAlgebra build_sl(int N) {
    if (N < 2) throw IndexOutOfRange("sl(N) needs N >= 2");
    std::vector<GenLabel> basis;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            if (i != j) basis.push_back(GenLabel::E(i, j));
    for (int i = 1; i < N; ++i) basis.push_back(GenLabel::H(i, i + 1));

    // matrices of the basis labels
    std::vector<SparseMat<Rational>> mats;
    mats.reserve(basis.size());
    for (const auto& l : basis) {
        SparseMat<Rational> m(N);
        if (l.kind == GenLabel::Kind::E) {
            m.set(l.i - 1, l.j - 1, Rational(1));
        } else {
            m.set(l.i - 1, l.i - 1, Rational(1, 2));
            m.set(l.i, l.i, Rational(-1, 2));
        }
        mats.push_back(std::move(m));
    }

    SlAlgebra sl;
    sl.N = N;
    // Two-phase construction: the bracket function needs coordinate
    // re-expression, which needs the index map; build a shell first.
    std::map<GenLabel, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], (int)i);

    auto to_element = [&](const SparseMat<Rational>& m) {
        LieElement e;
        std::vector<Rational> d(N, Rational(0));
        for (int r = 0; r < N; ++r)
            for (const auto& [c, v] : m.row(r)) {
                if (r == c)
                    d[r] = v;
                else
                    e.add_term(index.at(GenLabel::E(r + 1, c + 1)), v);
            }
        // traceless diagonal -> Cartan coordinates via partial sums
        Rational partial(0);
        for (int i = 1; i < N; ++i) {
            partial += d[i - 1];
            Rational c = Rational(2) * partial;
            if (!c.is_zero()) e.add_term(index.at(GenLabel::H(i, i + 1)), c);
        }
        return e;
    };

    sl.alg = LieAlgebra("sl(" + std::to_string(N) + ")", basis, [&](int i, int j) {
        return to_element(mats[i] * mats[j] - mats[j] * mats[i]);
    });
    return sl;
}

/// L(alpha, beta): the 4D extended-twist carrier with [H,E]=E, [H,A]=alpha A,
/// [H,B]=beta B, [A,B]=E, [E,A]=[E,B]=0; requires alpha + beta = 1.
inline LieAlgebra build_L(const Rational& alpha, const Rational& beta) {
    if (!(alpha + beta == Rational(1)))
        throw ConstraintViolation("L(alpha,beta) requires alpha + beta = 1, got " + alpha.str() +
                                  " + " + beta.str());
    std::vector<GenLabel> basis = {GenLabel::abstract("H"), GenLabel::abstract("A"),
                                   GenLabel::abstract("B"), GenLabel::abstract("E")};
    enum { H = 0, A = 1, B = 2, E = 3 };
    return LieAlgebra("L(" + alpha.str() + "," + beta.str() + ")", basis, [&](int i, int j) {
        LieElement r;
        if (i == H && j == A) r.add_term(A, alpha);
        if (i == H && j == B) r.add_term(B, beta);
        if (i == H && j == E) r.add_term(E, Rational(1));
        if (i == A && j == B) r.add_term(E, Rational(1));
        return r;
    });
}

/// The 5D algebra M = H^perp |> L(1,0): the PET carrier extended by the
/// orthogonal Cartan direction acting by [H^perp,A]=A, [H^perp,B]=-B.
inline LieAlgebra build_M_sl3() {
    std::vector<GenLabel> basis = {GenLabel::abstract("HP"), GenLabel::abstract("Hperp"),
                                   GenLabel::abstract("A"), GenLabel::abstract("B"),
                                   GenLabel::abstract("E")};
    enum { HP = 0, HX = 1, A = 2, B = 3, E = 4 };
    return LieAlgebra("M(sl3)", basis, [&](int i, int j) {
        LieElement r;
        if (i == HP && j == A) r.add_term(A, Rational(1));
        if (i == HP && j == E) r.add_term(E, Rational(1));
        if (i == HX && j == A) r.add_term(A, Rational(1));
        if (i == HX && j == B) r.add_term(B, Rational(-1));
        if (i == A && j == B) r.add_term(E, Rational(1));
        return r;
    });
}

inline LieAlgebra build_abelian(int dim) {
    std::vector<GenLabel> basis;
    for (int i = 0; i < dim; ++i) basis.push_back(GenLabel::abstract("x" + std::to_string(i)));
    return LieAlgebra("abelian(" + std::to_string(dim) + ")", basis,
                      [](int, int) { return LieElement(); });
}

/// Build a small algebra from an explicit table of nonzero brackets
/// [basis[i], basis[j]] = sum_k table[{i,j}][k] * basis[k] for i < j.
inline LieAlgebra build_from_table(
    const std::string& name, const std::vector<std::string>& names,
    const std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>>& table) {
    std::vector<GenLabel> basis;
    for (const auto& n : names) basis.push_back(GenLabel::abstract(n));
    return LieAlgebra(name, basis, [&](int i, int j) {
        LieElement r;
        auto it = table.find({i, j});
        if (it != table.end())
            for (const auto& [k, c] : it->second) r.add_term(k, c);
        return r;
    });
}

} // namespace perichain
