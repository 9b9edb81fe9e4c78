#include "qtorus/grover.hpp"

#include "qtorus/core_ops.hpp"

#include <cmath>

namespace qtorus {

GroverConfig::GroverConfig(Dimension n_, int marked_, int momentum_)
    : n(n_), marked(marked_), momentum(momentum_) {
    int d = n.n();
    if ((d & (d - 1)) != 0) throw error("search dimension must be a power of two");
    if (marked < 0 || marked >= d) throw error("marked position out of range");
    if (momentum < 0 || momentum >= d) throw error("initial momentum out of range");
}

CMat grover_step(const GroverConfig& cfg) {
    const int d = cfg.n.n();
    CMat oracle = CMat::Identity(d, d);
    oracle(cfg.marked, cfg.marked) = -1.0;
    CVec k = fourier(cfg.n).col(cfg.momentum);
    CMat inversion = CMat::Identity(d, d) - 2.0 * (k * k.adjoint());
    return inversion * oracle;
}

std::vector<GroverStepResult> run_grover(const GroverConfig& cfg, int steps) {
    if (steps < 0) throw error("step count must be >= 0");
    if (cfg.n.n() > 64) throw error("trajectory capture capped at dimension 64");
    CMat u = grover_step(cfg);
    CVec psi = fourier(cfg.n).col(cfg.momentum);

    std::vector<GroverStepResult> out;
    out.reserve(steps + 1);
    for (int t = 0; t <= steps; t++) {
        DensityMatrix rho(cfg.n, psi * psi.adjoint());
        WignerGrid grid = wigner_of(rho);
        double success = std::norm(psi(cfg.marked));
        out.push_back({std::move(rho), std::move(grid), success});
        if (t < steps) psi = u * psi;
    }
    return out;
}

double grover_closed_form(Dimension n, int steps) {
    double theta = std::asin(1.0 / std::sqrt(double(n.n())));
    double s = std::sin((2.0 * steps + 1.0) * theta);
    return s * s;
}

int grover_default_steps(Dimension n) {
    return static_cast<int>(std::lround(pi * std::sqrt(double(n.n())) / 4.0));
}

}  // namespace qtorus
