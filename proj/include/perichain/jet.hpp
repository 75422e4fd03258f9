#pragma once

#include <array>
#include <string>

#include "perichain/rational.hpp"

namespace perichain {

/// Truncated polynomial in one formal deformation parameter, with exact
/// rational coefficients. Products drop every term of degree > D, so a
/// Jet is the quotient ring Q[xi]/(xi^{D+1}); a jet whose only nonzero
/// coefficient sits in degree 0 behaves exactly like that rational.
template <unsigned D>
class Jet {
    static_assert(D >= 1, "truncation order must be at least 1");

public:
    Jet() { coeff_.fill(Rational(0)); }
    Jet(int c) : Jet(Rational(c)) {}
    Jet(long long c) : Jet(Rational(c)) {}
    Jet(const Rational& c) {
        coeff_.fill(Rational(0));
        coeff_[0] = c;
    }

    /// The formal parameter xi itself.
    static Jet variable() {
        Jet j;
        j.coeff_[1] = Rational(1);
        return j;
    }

    static constexpr unsigned order() { return D; }

    const Rational& coeff(unsigned k) const { return coeff_.at(k); }
    Rational& coeff(unsigned k) { return coeff_.at(k); }

    bool is_zero() const {
        for (const auto& c : coeff_)
            if (!c.is_zero()) return false;
        return true;
    }
    bool is_one() const {
        if (!coeff_[0].is_one()) return false;
        for (unsigned k = 1; k <= D; ++k)
            if (!coeff_[k].is_zero()) return false;
        return true;
    }

    Jet operator-() const {
        Jet r;
        for (unsigned k = 0; k <= D; ++k) r.coeff_[k] = -coeff_[k];
        return r;
    }

    Jet& operator+=(const Jet& o) {
        for (unsigned k = 0; k <= D; ++k) coeff_[k] += o.coeff_[k];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        for (unsigned k = 0; k <= D; ++k) coeff_[k] -= o.coeff_[k];
        return *this;
    }
    Jet& operator*=(const Jet& o) { return *this = *this * o; }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(const Jet& a, const Jet& b) {
        Jet r;
        for (unsigned i = 0; i <= D; ++i) {
            if (a.coeff_[i].is_zero()) continue;
            for (unsigned j = 0; i + j <= D; ++j) {
                if (b.coeff_[j].is_zero()) continue;
                r.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
            }
        }
        return r;
    }

    friend bool operator==(const Jet& a, const Jet& b) { return a.coeff_ == b.coeff_; }

    /// Multiplicative inverse; requires an invertible constant term.
    Jet inverse() const {
        if (coeff_[0].is_zero())
            throw NotInvertible("jet with zero constant term has no inverse");
        Jet r;
        Rational inv0 = coeff_[0].inverse();
        r.coeff_[0] = inv0;
        for (unsigned k = 1; k <= D; ++k) {
            Rational acc(0);
            for (unsigned i = 1; i <= k; ++i) acc += coeff_[i] * r.coeff_[k - i];
            r.coeff_[k] = -inv0 * acc;
        }
        return r;
    }

    /// Serialized as an array of rational strings, degree 0 first.
    std::string str() const {
        std::string s = "[";
        for (unsigned k = 0; k <= D; ++k) {
            if (k) s += ", ";
            s += coeff_[k].str();
        }
        return s + "]";
    }

private:
    std::array<Rational, D + 1> coeff_;
};

/// Inverse of a jet with a_0 != 0; (a * jet_invert(a)) == 1 up to degree D.
template <unsigned D>
Jet<D> jet_invert(const Jet<D>& a) {
    return a.inverse();
}

using Jet2 = Jet<2>;

} // namespace perichain
