#pragma once

#include "qtorus/types.hpp"

#include <string>

namespace qtorus {

/// Reference-state recipe.  Parseable from the CLI grammar
///   pos:q0 | mom:k0 | super:q0,q1,phi | mixed | gauss:q0,p0,s | raw:@file
/// (raw file: one "re,im" amplitude per line).
struct StateSpec {
    enum class Kind { position, momentum, superposition, mixed, gaussian, raw };

    Kind kind = Kind::mixed;
    int q0 = 0, q1 = 0, k0 = 0, p0 = 0;
    double phi = 0.0;
    double s = 1.0;
    CVec amplitudes;  // raw only

    static StateSpec position(int q0);
    static StateSpec momentum(int k0);
    static StateSpec superposition(int q0, int q1, double phi);
    static StateSpec mixed();
    static StateSpec gaussian(int q0, int p0, double s);
    static StateSpec raw(CVec amplitudes);

    static StateSpec parse(const std::string& text);
    std::string describe() const;
};

/// Build the density matrix for a spec.  Pure states are |psi><psi|;
/// mixed is I/N.  Indices are reduced mod N.
DensityMatrix make_state(Dimension n, const StateSpec& spec);

/// Periodic Gaussian wavepacket centred at (q0, p0):
///   psi(n) ~ sum_{m=-3..3} exp(-(n - q0 + mN)^2 / (4 s^2)) exp(i 2 pi p0 (n + mN) / N)
/// normalised.  s is the position-spread standard deviation of |psi|^2.
DensityMatrix gaussian_wavepacket(Dimension n, int q0, int p0, double s);

}  // namespace qtorus
