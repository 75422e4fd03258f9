#pragma once

#include <memory>
#include <vector>

#include "perichain/representation.hpp"

namespace perichain {

/// Tensor-leg expression over Lie-algebra elements: the language every twist
/// is written in. Legs are numbered from 1; a Gen node places an algebra
/// element on one leg (implicitly tensored with identity on the others),
/// Prod is the ordered product, Exp/Log1p are the finite series available on
/// nilpotent arguments. Values are immutable and share subtrees freely.
template <class S>
class TensorExpr {
public:
    enum class Kind { generator, constant, sum, product, scale, exponential, log1p };

    TensorExpr() = default;

    static TensorExpr gen(LieElement x, int leg, int legs) {
        check_leg(leg, legs);
        Node n;
        n.kind = Kind::generator;
        n.element = std::move(x);
        n.leg = leg;
        n.legs = legs;
        return wrap(std::move(n));
    }

    static TensorExpr constant(S c, int legs) {
        Node n;
        n.kind = Kind::constant;
        n.coeff = std::move(c);
        n.legs = legs;
        return wrap(std::move(n));
    }

    static TensorExpr identity(int legs) { return constant(S(1), legs); }

    static TensorExpr sum(std::vector<TensorExpr> kids) {
        return nary(Kind::sum, std::move(kids));
    }
    static TensorExpr prod(std::vector<TensorExpr> kids) {
        return nary(Kind::product, std::move(kids));
    }
    static TensorExpr scale(S c, TensorExpr e) {
        Node n;
        n.kind = Kind::scale;
        n.coeff = std::move(c);
        n.legs = e.legs();
        n.kids.push_back(std::move(e));
        return wrap(std::move(n));
    }
    static TensorExpr exp(TensorExpr e) {
        Node n;
        n.kind = Kind::exponential;
        n.legs = e.legs();
        n.kids.push_back(std::move(e));
        return wrap(std::move(n));
    }
    static TensorExpr log1p(TensorExpr e) {
        Node n;
        n.kind = Kind::log1p;
        n.legs = e.legs();
        n.kids.push_back(std::move(e));
        return wrap(std::move(n));
    }

    Kind kind() const { return p_->kind; }
    int legs() const { return p_->legs; }
    const LieElement& element() const { return p_->element; }
    int leg() const { return p_->leg; }
    const S& coeff() const { return p_->coeff; }
    const std::vector<TensorExpr>& kids() const { return p_->kids; }

    bool valid() const { return p_ != nullptr; }

    /// Re-index the legs: position t of the leg_map sends leg t+1 to
    /// leg_map[t] within an expression on new_legs legs. Used for the
    /// embeddings F_12, F_23, F_13 and for (F)_21.
    TensorExpr map_legs(int new_legs, const std::vector<int>& leg_map) const {
        const Node& n = *p_;
        if ((int)leg_map.size() != n.legs) throw BadParameters("leg map size mismatch");
        Node out;
        out.kind = n.kind;
        out.element = n.element;
        out.coeff = n.coeff;
        out.legs = new_legs;
        if (n.kind == Kind::generator) {
            out.leg = leg_map[n.leg - 1];
            check_leg(out.leg, new_legs);
        }
        for (const auto& k : n.kids) out.kids.push_back(k.map_legs(new_legs, leg_map));
        return wrap(std::move(out));
    }

    /// Undeformed coproduct on leg j: legs become legs+1, every Gen(x, j)
    /// turns into Gen(x, j) + Gen(x, j+1) (primitive generators), legs after
    /// j shift up by one. Passes through Sum/Prod/Exp/Log1p structurally
    /// because Delta is an algebra homomorphism.
    TensorExpr coproduct_on_leg(int j) const {
        const Node& n = *p_;
        if (j < 1 || j > n.legs) throw IndexOutOfRange("coproduct leg out of range");
        Node out;
        out.kind = n.kind;
        out.coeff = n.coeff;
        out.legs = n.legs + 1;
        if (n.kind == Kind::generator) {
            if (n.leg < j) {
                out.element = n.element;
                out.leg = n.leg;
                return wrap(std::move(out));
            }
            if (n.leg > j) {
                out.element = n.element;
                out.leg = n.leg + 1;
                return wrap(std::move(out));
            }
            return sum({gen(n.element, j, n.legs + 1), gen(n.element, j + 1, n.legs + 1)});
        }
        for (const auto& k : n.kids) out.kids.push_back(k.coproduct_on_leg(j));
        return wrap(std::move(out));
    }

    /// Counit on leg j: generators on that leg map to 0, the leg disappears.
    TensorExpr counit_on_leg(int j) const {
        const Node& n = *p_;
        if (j < 1 || j > n.legs) throw IndexOutOfRange("counit leg out of range");
        Node out;
        out.kind = n.kind;
        out.coeff = n.coeff;
        out.legs = n.legs - 1;
        if (n.kind == Kind::generator) {
            if (n.leg == j) return constant(S(0), n.legs - 1);
            out.element = n.element;
            out.leg = n.leg < j ? n.leg : n.leg - 1;
            return wrap(std::move(out));
        }
        for (const auto& k : n.kids) out.kids.push_back(k.counit_on_leg(j));
        return wrap(std::move(out));
    }

    /// Structural inverse: reverses products, negates exponents. Defined for
    /// the shapes twists actually have (anything built from products of
    /// exponentials and invertible scalars).
    TensorExpr inverse() const {
        const Node& n = *p_;
        switch (n.kind) {
            case Kind::constant:
                return constant(ScalarTraits<S>::inverse(n.coeff), n.legs);
            case Kind::exponential:
                return exp(scale(S(-1), n.kids[0]));
            case Kind::product: {
                std::vector<TensorExpr> kids(n.kids.rbegin(), n.kids.rend());
                for (auto& k : kids) k = k.inverse();
                return prod(std::move(kids));
            }
            case Kind::scale:
                return scale(ScalarTraits<S>::inverse(n.coeff), n.kids[0].inverse());
            default:
                throw NotInvertible("no structural inverse for this expression shape");
        }
    }

private:
    struct Node {
        Kind kind = Kind::constant;
        LieElement element;
        int leg = 0;
        S coeff = S(0);
        std::vector<TensorExpr> kids;
        int legs = 0;
    };

    static void check_leg(int leg, int legs) {
        if (leg < 1 || leg > legs) throw IndexOutOfRange("tensor leg out of range");
    }

    static TensorExpr nary(Kind kind, std::vector<TensorExpr> kids) {
        if (kids.empty()) throw BadParameters("empty n-ary expression");
        Node n;
        n.kind = kind;
        n.legs = kids[0].legs();
        for (const auto& k : kids)
            if (k.legs() != n.legs) throw BadParameters("mixed leg counts in expression");
        n.kids = std::move(kids);
        return wrap(std::move(n));
    }

    static TensorExpr wrap(Node n) {
        TensorExpr e;
        e.p_ = std::make_shared<const Node>(std::move(n));
        return e;
    }

    std::shared_ptr<const Node> p_;
};

/// Matrix of a k-leg expression in rep^{otimes k}: the structural evaluation.
template <class S>
SparseMat<S> eval(const TensorExpr<S>& e, const Representation& rep) {
    using Traits = ScalarTraits<S>;
    const int d = rep.dim();
    long side = 1;
    for (int t = 0; t < e.legs(); ++t) side *= d;
    const int n = static_cast<int>(side);

    switch (e.kind()) {
        case TensorExpr<S>::Kind::generator: {
            // I (x) ... rho(x) ... (x) I with rho(x) on the given leg
            SparseMat<Rational> img = rep.image_of(e.element());
            long inner = 1; // product of dims of legs after this one
            for (int t = e.leg(); t < e.legs(); ++t) inner *= d;
            long outer = side / (inner * d);
            SparseMat<S> m(n);
            for (int r = 0; r < d; ++r)
                for (const auto& [c, v] : img.row(r)) {
                    S lifted = Traits::from_rational(v);
                    for (long o = 0; o < outer; ++o)
                        for (long in = 0; in < inner; ++in) {
                            long row = (o * d + r) * inner + in;
                            long col = (o * d + c) * inner + in;
                            m.add_to((int)row, (int)col, lifted);
                        }
                }
            return m;
        }
        case TensorExpr<S>::Kind::constant:
            return SparseMat<S>::identity(n).scaled(e.coeff());
        case TensorExpr<S>::Kind::sum: {
            SparseMat<S> m(n);
            for (const auto& k : e.kids()) m += eval(k, rep);
            return m;
        }
        case TensorExpr<S>::Kind::product: {
            SparseMat<S> m = eval(e.kids()[0], rep);
            for (std::size_t i = 1; i < e.kids().size(); ++i) m = m * eval(e.kids()[i], rep);
            return m;
        }
        case TensorExpr<S>::Kind::scale:
            return eval(e.kids()[0], rep).scaled(e.coeff());
        case TensorExpr<S>::Kind::exponential:
            return eval(e.kids()[0], rep).exp_nilpotent();
        case TensorExpr<S>::Kind::log1p:
            return eval(e.kids()[0], rep).log1p_nilpotent();
    }
    throw Error("unreachable expression kind");
}

/// Evaluated tensor operator: a dim^legs square matrix plus its leg layout.
template <class S>
struct TensorOp {
    SparseMat<S> mat;
    int legs = 0;
    int dim = 0;

    long side() const { return mat.n(); }
};

template <class S>
TensorOp<S> eval_op(const TensorExpr<S>& e, const Representation& rep) {
    return TensorOp<S>{eval(e, rep), e.legs(), rep.dim()};
}

namespace detail {
inline std::vector<int> digits_of(long index, int dim, int legs) {
    std::vector<int> d(legs);
    for (int t = legs - 1; t >= 0; --t) {
        d[t] = static_cast<int>(index % dim);
        index /= dim;
    }
    return d;
}
inline long index_of(const std::vector<int>& digits, int dim) {
    long idx = 0;
    for (int v : digits) idx = idx * dim + v;
    return idx;
}
} // namespace detail

/// Conjugation by the permutation matrix exchanging tensor legs i and j.
template <class S>
TensorOp<S> swap_legs(const TensorOp<S>& op, int i, int j) {
    if (i < 1 || j < 1 || i > op.legs || j > op.legs)
        throw IndexOutOfRange("swap_legs: leg out of range");
    std::vector<int> perm(op.mat.n());
    for (long idx = 0; idx < op.mat.n(); ++idx) {
        auto d = detail::digits_of(idx, op.dim, op.legs);
        std::swap(d[i - 1], d[j - 1]);
        perm[idx] = (int)detail::index_of(d, op.dim);
    }
    return TensorOp<S>{op.mat.permuted(perm), op.legs, op.dim};
}

/// Embed a k-leg operator into `total` legs, its legs landing at the given
/// 1-based positions (strictly increasing) and identity elsewhere.
template <class S>
TensorOp<S> embed_legs(const TensorOp<S>& op, int total, const std::vector<int>& positions) {
    if ((int)positions.size() != op.legs) throw BadParameters("embed_legs: wrong position count");
    long side = 1;
    for (int t = 0; t < total; ++t) side *= op.dim;
    SparseMat<S> m((int)side);

    const int extra = total - op.legs;
    std::vector<bool> taken(total + 1, false);
    for (int p : positions) {
        if (p < 1 || p > total || taken[p]) throw BadParameters("embed_legs: bad positions");
        taken[p] = true;
    }
    std::vector<int> id_pos;
    for (int p = 1; p <= total; ++p)
        if (!taken[p]) id_pos.push_back(p);

    long id_count = 1;
    for (int t = 0; t < extra; ++t) id_count *= op.dim;

    for (int r = 0; r < op.mat.n(); ++r) {
        auto rd = detail::digits_of(r, op.dim, op.legs);
        for (const auto& [c, v] : op.mat.row(r)) {
            auto cd = detail::digits_of(c, op.dim, op.legs);
            for (long a = 0; a < id_count; ++a) {
                auto ad = detail::digits_of(a, op.dim, extra);
                std::vector<int> rr(total), cc(total);
                for (int t = 0; t < op.legs; ++t) {
                    rr[positions[t] - 1] = rd[t];
                    cc[positions[t] - 1] = cd[t];
                }
                for (int t = 0; t < extra; ++t) {
                    rr[id_pos[t] - 1] = ad[t];
                    cc[id_pos[t] - 1] = ad[t];
                }
                m.add_to((int)detail::index_of(rr, op.dim), (int)detail::index_of(cc, op.dim), v);
            }
        }
    }
    return TensorOp<S>{std::move(m), total, op.dim};
}

/// Exact inverse of an evaluated operator (Gauss-Jordan with unit pivots).
template <class S>
TensorOp<S> invert(const TensorOp<S>& op) {
    return TensorOp<S>{op.mat.inverse(), op.legs, op.dim};
}

template <class S>
TensorOp<S> operator*(const TensorOp<S>& a, const TensorOp<S>& b) {
    if (a.legs != b.legs || a.dim != b.dim) throw BadParameters("operator leg/dim mismatch");
    return TensorOp<S>{a.mat * b.mat, a.legs, a.dim};
}

template <class S>
TensorOp<S> operator-(const TensorOp<S>& a, const TensorOp<S>& b) {
    if (a.legs != b.legs || a.dim != b.dim) throw BadParameters("operator leg/dim mismatch");
    return TensorOp<S>{a.mat - b.mat, a.legs, a.dim};
}

} // namespace perichain
