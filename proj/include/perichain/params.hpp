#pragma once

#include <vector>

#include "perichain/rational.hpp"

namespace perichain {

/// Deterministic source of small nonzero rationals. Verification suites use
/// the canonical assignment psi = (1, 1/2, 1/3, ...), zeta = (1, 2, 3, ...)
/// plus pseudorandom assignments drawn from this generator with a recorded
/// seed, so every run replays bit-identically.
class ParamGen {
public:
    explicit ParamGen(unsigned long long seed) : s_(seed ? seed : 0x2545f4914f6cdd1dull) {}

    Rational nonzero() {
        long long num = (long long)(next() % 9) - 4;
        if (num == 0) num = 5 - (long long)(next() % 2) * 2; // 5 or 3
        long long den = 1 + (long long)(next() % 4);
        return Rational(num, den);
    }

    std::vector<Rational> nonzero_vec(int count) {
        std::vector<Rational> v;
        v.reserve(count);
        for (int i = 0; i < count; ++i) v.push_back(nonzero());
        return v;
    }

private:
    unsigned long long next() {
        s_ ^= s_ << 13;
        s_ ^= s_ >> 7;
        s_ ^= s_ << 17;
        return s_;
    }
    unsigned long long s_;
};

inline std::vector<Rational> canonical_psi(int count) {
    std::vector<Rational> v;
    for (int i = 1; i <= count; ++i) v.push_back(Rational(1, i));
    return v;
}

inline std::vector<Rational> canonical_zeta(int count) {
    std::vector<Rational> v;
    for (int i = 1; i <= count; ++i) v.push_back(Rational(i));
    return v;
}

/// The default battery: the canonical assignment plus `extra` pseudorandom
/// ones, as rows of (psi..., zeta...) values.
inline std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>>
parameter_points(int n_psi, int n_zeta, unsigned long long seed, int extra = 2) {
    std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> pts;
    pts.push_back({canonical_psi(n_psi), canonical_zeta(n_zeta)});
    ParamGen gen(seed);
    for (int i = 0; i < extra; ++i)
        pts.push_back({gen.nonzero_vec(n_psi), gen.nonzero_vec(n_zeta)});
    return pts;
}

} // namespace perichain
