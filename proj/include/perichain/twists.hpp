#pragma once

#include <map>
#include <string>
#include <vector>

#include "perichain/report.hpp"
#include "perichain/tensor_expr.hpp"

namespace perichain {

/// Constructors for the twisting elements: basic Jordanian / extension /
/// Reshetikhin factors, canonical and peripheric links, full peripheric
/// chains, and their Jordanian / Reshetikhin enlargements. Everything is
/// returned as a 2-leg TensorExpr; the scalar ring S carries the continuous
/// parameters (plain rationals, or jets for semiclassical expansion).

namespace twist_detail {

template <class S>
TensorExpr<S> on_leg(const LieElement& x, int leg) {
    return TensorExpr<S>::gen(x, leg, 2);
}

/// sigma(c) = log(1 + c E) placed on a leg.
template <class S>
TensorExpr<S> sigma_on_leg(const LieElement& E, const S& c, int leg) {
    return TensorExpr<S>::log1p(TensorExpr<S>::scale(c, on_leg<S>(E, leg)));
}

inline void require_bracket(const LieAlgebra& g, const LieElement& x, const LieElement& y,
                            const LieElement& expect, const std::string& what) {
    if (!(g.bracket(x, y) == expect))
        throw CarrierViolation("carrier relation " + what + " fails in " + g.name());
}

} // namespace twist_detail

/// Jordanian factor e^{H (x) sigma(xi)}, sigma(xi) = log(1 + xi E);
/// requires [H,E] = E.
template <class S>
TensorExpr<S> jordanian(const LieAlgebra& g, const LieElement& H, const LieElement& E,
                        const S& xi) {
    using X = TensorExpr<S>;
    twist_detail::require_bracket(g, H, E, E, "[H,E]=E");
    return X::exp(X::prod({twist_detail::on_leg<S>(H, 1), twist_detail::sigma_on_leg<S>(E, xi, 2)}));
}

/// Extension factor e^{xi A (x) B e^{-beta sigma(xi)}} on a (twisted)
/// Heisenberg subalgebra [A,B] = E, [E,A] = [E,B] = 0.
template <class S>
TensorExpr<S> extension(const LieAlgebra& g, const LieElement& A, const LieElement& B,
                        const Rational& beta, const LieElement& E, const S& xi) {
    using X = TensorExpr<S>;
    twist_detail::require_bracket(g, A, B, E, "[A,B]=E");
    twist_detail::require_bracket(g, E, A, LieElement(), "[E,A]=0");
    twist_detail::require_bracket(g, E, B, LieElement(), "[E,B]=0");
    X arg = X::prod({twist_detail::on_leg<S>(A, 1), twist_detail::on_leg<S>(B, 2)});
    if (!beta.is_zero()) {
        X dressing = X::exp(X::scale(ScalarTraits<S>::from_rational(-beta),
                                     twist_detail::sigma_on_leg<S>(E, xi, 2)));
        arg = X::prod({twist_detail::on_leg<S>(A, 1), twist_detail::on_leg<S>(B, 2), dressing});
    }
    return X::exp(X::scale(xi, arg));
}

/// Primed extension e^{-xi B (x) A e^{-alpha sigma(xi)}}.
template <class S>
TensorExpr<S> extension_primed(const LieAlgebra& g, const LieElement& A, const LieElement& B,
                               const Rational& alpha, const LieElement& E, const S& xi) {
    using X = TensorExpr<S>;
    twist_detail::require_bracket(g, A, B, E, "[A,B]=E");
    X arg = X::prod({twist_detail::on_leg<S>(B, 1), twist_detail::on_leg<S>(A, 2)});
    if (!alpha.is_zero()) {
        X dressing = X::exp(X::scale(ScalarTraits<S>::from_rational(-alpha),
                                     twist_detail::sigma_on_leg<S>(E, xi, 2)));
        arg = X::prod({twist_detail::on_leg<S>(B, 1), twist_detail::on_leg<S>(A, 2), dressing});
    }
    return X::exp(X::scale(-xi, arg));
}

/// Canonical link F_{B_k}(psi) of the chain of extended twists:
/// (prod_{s=k+2}^{N-k-1} e^{psi E_{k+1,s} (x) E_{s,N-k} e^{-sigma/2}})
///   e^{H_{k+1,N-k} (x) sigma(psi)}.
template <class S>
TensorExpr<S> canonical_link(const SlAlgebra& sl, int k, const S& psi) {
    using X = TensorExpr<S>;
    const int N = sl.N;
    if (k < 0 || k + 1 >= N - k) throw IndexOutOfRange("link index out of range");
    LieElement Elong = sl.E(k + 1, N - k);
    std::vector<X> factors;
    for (int s = k + 2; s <= N - k - 1; ++s) {
        X dress = X::exp(X::scale(ScalarTraits<S>::from_rational(Rational(-1, 2)),
                                  twist_detail::sigma_on_leg<S>(Elong, psi, 2)));
        X arg = X::prod({twist_detail::on_leg<S>(sl.E(k + 1, s), 1),
                         twist_detail::on_leg<S>(sl.E(s, N - k), 2), dress});
        factors.push_back(X::exp(X::scale(psi, arg)));
    }
    factors.push_back(X::exp(X::prod(
        {twist_detail::on_leg<S>(sl.H(k + 1, N - k), 1), twist_detail::sigma_on_leg<S>(Elong, psi, 2)})));
    return factors.size() == 1 ? factors[0] : X::prod(std::move(factors));
}

/// Peripheric link F^P_{B_k}(psi): undressed extension factors and the
/// Jordanian factor built on H^P_{k+1,N-k}.
template <class S>
TensorExpr<S> peripheric_link(const SlAlgebra& sl, int k, const S& psi) {
    using X = TensorExpr<S>;
    const int N = sl.N;
    if (k < 0 || k + 1 >= N - k) throw IndexOutOfRange("link index out of range");
    LieElement Elong = sl.E(k + 1, N - k);
    std::vector<X> factors;
    for (int s = k + 2; s <= N - k - 1; ++s) {
        X arg = X::prod({twist_detail::on_leg<S>(sl.E(k + 1, s), 1),
                         twist_detail::on_leg<S>(sl.E(s, N - k), 2)});
        factors.push_back(X::exp(X::scale(psi, arg)));
    }
    factors.push_back(X::exp(X::prod(
        {twist_detail::on_leg<S>(sl.cartan_HP(k), 1), twist_detail::sigma_on_leg<S>(Elong, psi, 2)})));
    return factors.size() == 1 ? factors[0] : X::prod(std::move(factors));
}

namespace twist_detail {

/// Later links act by left multiplication: F_{p} F_{p-1} ... F_0.
template <class S>
TensorExpr<S> chain_product(std::vector<TensorExpr<S>> links) {
    std::vector<TensorExpr<S>> ordered(links.rbegin(), links.rend());
    return ordered.size() == 1 ? ordered[0] : TensorExpr<S>::prod(std::move(ordered));
}

} // namespace twist_detail

/// Full or partial peripheric chain F^P_{B_{p<0}} with link parameters psi.
template <class S>
TensorExpr<S> peripheric_chain(const SlAlgebra& sl, const std::vector<S>& psi) {
    if ((int)psi.size() > sl.max_links())
        throw TooManyLinks("peripheric chain for sl(" + std::to_string(sl.N) + ") admits at most " +
                           std::to_string(sl.max_links()) + " links");
    if (psi.empty()) throw BadParameters("chain needs at least one link");
    std::vector<TensorExpr<S>> links;
    for (int k = 0; k < (int)psi.size(); ++k) links.push_back(peripheric_link(sl, k, psi[k]));
    return twist_detail::chain_product(std::move(links));
}

template <class S>
TensorExpr<S> peripheric_chain(const SlAlgebra& sl, std::initializer_list<S> psi) {
    return peripheric_chain(sl, std::vector<S>(psi));
}

/// Canonical chain of extended Jordanian twists, same ordering convention.
template <class S>
TensorExpr<S> canonical_chain(const SlAlgebra& sl, const std::vector<S>& psi) {
    if ((int)psi.size() > sl.max_links()) throw TooManyLinks("too many links");
    if (psi.empty()) throw BadParameters("chain needs at least one link");
    std::vector<TensorExpr<S>> links;
    for (int k = 0; k < (int)psi.size(); ++k) links.push_back(canonical_link(sl, k, psi[k]));
    return twist_detail::chain_product(std::move(links));
}

/// The Reshetikhin-Cartan prefactor of the factorized chain:
/// Phi^R_{J_{p<0}} = prod_k e^{H^R_{k+1,N-k} (x) sigma_{k+1,N-k}(psi_{k+1})}.
template <class S>
TensorExpr<S> reshetikhin_cartan_prefactor(const SlAlgebra& sl, const std::vector<S>& psi) {
    using X = TensorExpr<S>;
    std::vector<X> factors;
    for (int k = 0; k < (int)psi.size(); ++k) {
        LieElement hr = sl.cartan_HR(k);
        if (hr.is_zero()) {
            factors.push_back(X::identity(2));
            continue;
        }
        factors.push_back(X::exp(X::prod({twist_detail::on_leg<S>(hr, 1),
                                          twist_detail::sigma_on_leg<S>(sl.E(k + 1, sl.N - k), psi[k], 2)})));
    }
    return twist_detail::chain_product(std::move(factors));
}

/// The chain rearrangement identity: the canonical chain equals the product
/// of the collected Reshetikhin-Cartan factors and the peripheric chain,
/// F_{B_{p<0}} = Phi^R_{J_p} ... Phi^R_{J_0} F^P_{B_{p<0}}, as evaluated
/// operators.
inline VerificationReport rearrangement_check(const SlAlgebra& sl, const std::vector<Rational>& psi,
                                              const Representation& rep) {
    VerificationReport r;
    r.check = "rearrangement";
    r.rep = rep.name();
    auto lhs = eval(canonical_chain(sl, psi), rep);
    auto rhs = eval(TensorExpr<Rational>::prod(
                        {reshetikhin_cartan_prefactor(sl, psi), peripheric_chain(sl, psi)}),
                    rep);
    r.residual_support = (lhs - rhs).nnz();
    r.pass = r.residual_support == 0;
    for (std::size_t i = 0; i < psi.size(); ++i)
        r.params["psi_" + std::to_string(i + 1)] = psi[i].str();
    return r;
}

/// Parameters of the Jordanian-enlarged chain. Two equivalent styles exist;
/// they are related by psi_l = nu_l prod_{r<l} nu_r/rho_r and
/// zeta_i = prod_{r<=i} rho_r/nu_r, and build identical operators.
enum class ParamStyle { psi_zeta, nu_rho };

template <class S>
struct EnlargedChainParams {
    ParamStyle style = ParamStyle::psi_zeta;
    std::vector<S> link;        // psi_1..psi_z   (or nu_1..nu_z)
    std::vector<int> kappa;     // extension switches, one per link, 0 or 1
    std::vector<S> enlarge;     // zeta_1..zeta_{n-1} (or rho_1..rho_{n-1})
    /// When an extension is switched off, the paired additional Jordanian
    /// factor is dropped by default; with this flag it is replaced by
    /// e^{H_l^perp (x) sigma_{N-l,N-l+1}(rho_l)} instead.
    bool substitute_dropped = false;
};

/// Jordanian-enlarged full peripheric chain
///   (prod_i e^{H_i^perp (x) sigma_i}) F^P_{B_{(N-n-1)<0}}
/// with the composite argument scalings of the parameterized form.
template <class S>
TensorExpr<S> enlarged_chain_J(const SlAlgebra& sl, const EnlargedChainParams<S>& p) {
    using X = TensorExpr<S>;
    const int N = sl.N;
    const int z = sl.max_links();
    const int njf = sl.half() - 1;
    if ((int)p.link.size() != z || (int)p.kappa.size() != z || (int)p.enlarge.size() != njf)
        throw BadParameters("enlarged chain expects z link parameters, z switches and n-1 "
                            "enlargement parameters");
    for (int kv : p.kappa)
        if (kv != 0 && kv != 1) throw BadParameters("kappa switches must be 0 or 1");

    // composite per-link argument scale and per-JF argument scale
    // psi_zeta: link k uses psi_{k+1} zeta_k, JF i uses psi_i kappa_i zeta_i
    // nu_rho:   link k uses nu_{k+1},        JF i uses kappa_i rho_i
    auto zeta_at = [&](int i) -> S { return i == 0 ? S(1) : p.enlarge[i - 1]; };

    std::vector<X> jfs;
    for (int i = 1; i <= njf; ++i) {
        S arg = p.style == ParamStyle::psi_zeta
                    ? p.link[i - 1] * S(p.kappa[i - 1]) * p.enlarge[i - 1]
                    : S(p.kappa[i - 1]) * p.enlarge[i - 1];
        if (p.kappa[i - 1] == 0 && p.substitute_dropped) {
            // replacement Jordanian pair for the dropped factor: the carrier
            // relation [h, E_{N-i,N-i+1}] = E_{N-i,N-i+1} needs h = -H_i^perp
            S rho = p.style == ParamStyle::psi_zeta ? p.link[i - 1] * p.enlarge[i - 1]
                                                    : p.enlarge[i - 1];
            jfs.push_back(X::exp(X::prod({twist_detail::on_leg<S>(-sl.cartan_Hperp(i), 1),
                                          twist_detail::sigma_on_leg<S>(sl.E(N - i, N - i + 1), rho, 2)})));
            continue;
        }
        jfs.push_back(X::exp(X::prod({twist_detail::on_leg<S>(sl.cartan_Hperp(i), 1),
                                      twist_detail::sigma_on_leg<S>(sl.EP(i), arg, 2)})));
    }

    std::vector<X> links;
    for (int k = 0; k < z; ++k) {
        S link_scale = p.style == ParamStyle::psi_zeta ? p.link[k] * zeta_at(k) : p.link[k];
        S ext_scale = link_scale * S(p.kappa[k]);
        LieElement Elong = sl.E(k + 1, N - k);
        std::vector<X> factors;
        for (int s = k + 2; s <= N - k - 1; ++s) {
            X arg = X::prod({twist_detail::on_leg<S>(sl.E(k + 1, s), 1),
                             twist_detail::on_leg<S>(sl.E(s, N - k), 2)});
            factors.push_back(X::exp(X::scale(ext_scale, arg)));
        }
        factors.push_back(X::exp(X::prod({twist_detail::on_leg<S>(sl.cartan_HP(k), 1),
                                          twist_detail::sigma_on_leg<S>(Elong, link_scale, 2)})));
        links.push_back(factors.size() == 1 ? factors[0] : X::prod(std::move(factors)));
    }

    std::vector<X> all = jfs;
    all.push_back(twist_detail::chain_product(std::move(links)));
    return all.size() == 1 ? all[0] : X::prod(std::move(all));
}

/// The commuting primitive set the Reshetikhin enlargement is built on:
/// sigma_k (k = 0..z-1) followed by E_l^P (l = 1..n-1). Each entry is given
/// as a ready 1-leg expression factory.
template <class S>
std::vector<TensorExpr<S>> reshetikhin_primitive_set(const SlAlgebra& sl, const std::vector<S>& psi,
                                                     int leg) {
    std::vector<TensorExpr<S>> out;
    for (int k = 0; k < sl.max_links(); ++k)
        out.push_back(twist_detail::sigma_on_leg<S>(sl.E(k + 1, sl.N - k), psi[k], leg));
    for (int l = 1; l <= sl.half() - 1; ++l)
        out.push_back(twist_detail::on_leg<S>(sl.EP(l), leg));
    return out;
}

/// Reshetikhin-enlarged chain F^P_RB = e^{beta^{mn} I_m (x) I_n} F^P_B.
/// beta is a square matrix over the primitive set (size z + n - 1).
template <class S>
TensorExpr<S> enlarged_chain_R(const SlAlgebra& sl, const std::vector<S>& psi,
                               const std::vector<std::vector<S>>& beta) {
    using X = TensorExpr<S>;
    const std::size_t m = (std::size_t)sl.max_links() + (std::size_t)(sl.half() - 1);
    if ((int)psi.size() != sl.max_links())
        throw BadParameters("Reshetikhin enlargement needs the full chain");
    if (beta.size() != m) throw BadParameters("beta matrix has wrong size");
    for (const auto& row : beta)
        if (row.size() != m) throw BadParameters("beta matrix has wrong size");

    X chain = peripheric_chain(sl, psi);
    auto left = reshetikhin_primitive_set<S>(sl, psi, 1);
    auto right = reshetikhin_primitive_set<S>(sl, psi, 2);
    std::vector<X> terms;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            if (beta[a][b] == S(0)) continue;
            terms.push_back(X::scale(beta[a][b], X::prod({left[a], right[b]})));
        }
    if (terms.empty()) return chain;
    return X::prod({X::exp(X::sum(std::move(terms))), chain});
}

/// The three sl(3) special twists: the Jordanian-enlarged PET, the
/// Reshetikhin-enlarged PET, and the two-Jordanian twist on the degenerate
/// 4D carrier.
template <class S>
std::map<std::string, TensorExpr<S>> sl3_specials(const SlAlgebra& sl3, const S& psi, const S& vs) {
    using X = TensorExpr<S>;
    if (sl3.N != 3) throw BadParameters("sl3_specials needs sl(3)");
    LieElement HP = sl3.cartan_HP(0);
    LieElement Hperp13 = sl3.cartan_Hperp(1);                       // kills E_13
    LieElement Hperp12 = sl3.diagonal({Rational(1, 3), Rational(1, 3), Rational(-2, 3)}); // kills E_12
    LieElement A = sl3.E(1, 2), B = sl3.E(2, 3), E = sl3.E(1, 3);

    std::map<std::string, TensorExpr<S>> out;

    // F^P_JE = e^{Hperp (x) sigma_12(vs)} e^{psi A (x) B} e^{H^P (x) sigma_13(psi)}
    X pet = X::prod({X::exp(X::scale(psi, X::prod({twist_detail::on_leg<S>(A, 1),
                                                   twist_detail::on_leg<S>(B, 2)}))),
                     X::exp(X::prod({twist_detail::on_leg<S>(HP, 1),
                                     twist_detail::sigma_on_leg<S>(E, psi, 2)}))});
    out.emplace("F_JE_P", X::prod({X::exp(X::prod({twist_detail::on_leg<S>(Hperp13, 1),
                                                   twist_detail::sigma_on_leg<S>(A, vs, 2)})),
                                   pet}));

    // F_RE = e^{vs Hperp (x) sigma_13(psi)} e^{psi A (x) B} e^{H^P (x) sigma_13(psi)}
    out.emplace("F_RE", X::prod({X::exp(X::scale(vs, X::prod({twist_detail::on_leg<S>(Hperp13, 1),
                                                              twist_detail::sigma_on_leg<S>(E, psi, 2)}))),
                                 pet}));

    // F_JJ = e^{Hperp_13 (x) sigma_12(vs)} e^{Hperp_12 (x) sigma_13(psi)}
    out.emplace("F_JJ", X::prod({X::exp(X::prod({twist_detail::on_leg<S>(Hperp13, 1),
                                                 twist_detail::sigma_on_leg<S>(A, vs, 2)})),
                                 X::exp(X::prod({twist_detail::on_leg<S>(Hperp12, 1),
                                                 twist_detail::sigma_on_leg<S>(E, psi, 2)}))}));
    return out;
}

} // namespace perichain
