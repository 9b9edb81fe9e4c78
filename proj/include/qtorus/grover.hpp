#pragma once

#include "qtorus/types.hpp"
#include "qtorus/wigner.hpp"

#include <vector>

namespace qtorus {

struct GroverConfig {
    Dimension n;        // must be a power of two
    int marked = 0;     // position-basis target
    int momentum = 0;   // initial state |k> in the momentum basis

    GroverConfig(Dimension n_, int marked_, int momentum_ = 0);
};

/// One Grover iteration U_G = U_k U_o with U_o = I - 2|w><w| (position) and
/// U_k = I - 2|k><k| (momentum).
CMat grover_step(const GroverConfig& cfg);

struct GroverStepResult {
    DensityMatrix rho;
    WignerGrid grid;
    double success;  // <w| rho |w>
};

/// Iterate from |k>, capturing state, Wigner grid and success probability at
/// every step (steps+1 entries, t = 0 included).  Trajectory mode keeps full
/// density matrices, so N is capped at 64 here.
std::vector<GroverStepResult> run_grover(const GroverConfig& cfg, int steps);

/// Closed-form success probability sin^2((2t+1) theta), sin theta = 1/sqrt(N).
double grover_closed_form(Dimension n, int steps);

/// round(pi sqrt(N) / 4); floor differs for some N, callers may report both.
int grover_default_steps(Dimension n);

}  // namespace qtorus
