#pragma once

#include <string>

#include "perichain/jet.hpp"
#include "perichain/rational.hpp"

namespace perichain {

/// Glue between the coefficient rings (Rational, Jet<D>) and the generic
/// matrix/expression code: lifting rationals, unit tests, inversion.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static Rational from_rational(const Rational& r) { return r; }
    static bool is_unit(const Rational& s) { return !s.is_zero(); }
    static Rational inverse(const Rational& s) { return s.inverse(); }
    static std::string str(const Rational& s) { return s.str(); }
    // Exponential series over the plain rationals terminate only for
    // nilpotent arguments: no extra slack beyond the matrix size.
    static unsigned series_cap(unsigned side) { return side + 2; }
};

template <unsigned D>
struct ScalarTraits<Jet<D>> {
    static Jet<D> from_rational(const Rational& r) { return Jet<D>(r); }
    static bool is_unit(const Jet<D>& s) { return !s.coeff(0).is_zero(); }
    static Jet<D> inverse(const Jet<D>& s) { return s.inverse(); }
    static std::string str(const Jet<D>& s) { return s.str(); }
    // Arguments only need to be nilpotent modulo xi: a power picks up at
    // least one xi per run of length >= the mod-xi nilpotency index, so the
    // series still terminates, just later.
    static unsigned series_cap(unsigned side) { return (D + 1) * (side + 2); }
};

} // namespace perichain
