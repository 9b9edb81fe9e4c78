#include "qtorus/tomography.hpp"

#include "qtorus/core_ops.hpp"
#include "qtorus/parallel.hpp"
#include "qtorus/rng.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace qtorus {

ScatteringResult scattering_circuit(const DensityMatrix& rho, const CMat& u) {
    require_unitary(u);
    const int d = rho.dim();
    if (u.rows() != d || u.cols() != d) throw error("probe unitary has the wrong dimension");
    const int dd = 2 * d;

    CMat chi = CMat::Zero(dd, dd);
    chi.topLeftCorner(d, d) = rho.matrix();

    CMat had = CMat::Zero(dd, dd);
    const double r = 1.0 / std::sqrt(2.0);
    had.topLeftCorner(d, d) = r * CMat::Identity(d, d);
    had.topRightCorner(d, d) = r * CMat::Identity(d, d);
    had.bottomLeftCorner(d, d) = r * CMat::Identity(d, d);
    had.bottomRightCorner(d, d) = -r * CMat::Identity(d, d);

    CMat ctrl = CMat::Identity(dd, dd);
    ctrl.bottomRightCorner(d, d) = u;

    CMat circuit = had * ctrl * had;
    chi = circuit * chi * circuit.adjoint();

    ScatteringResult out;
    cxd sz = 0, sy = 0, sx = 0;
    for (int k = 0; k < d; k++) {
        sz += chi(k, k) - chi(d + k, d + k);
        sy += cxd(0, 1) * (chi(k, d + k) - chi(d + k, k));
        sx += chi(k, d + k) + chi(d + k, k);
    }
    out.sigma_z = sz.real();
    out.sigma_y = sy.real();
    out.sigma_x = sx.real();
    out.derived_value = cxd(out.sigma_z, -out.sigma_y);

    cxd direct = (u * rho.matrix()).trace();
    if (std::abs(out.derived_value - direct) >= 1e-10)
        throw error("internal: ancilla polarization disagrees with Tr(U rho)");
    return out;
}

PointEstimate measure_wigner_point(const DensityMatrix& rho, PhasePoint alpha, long long shots,
                                   std::uint64_t seed) {
    if (shots < 0) throw error("shot count must be >= 0");
    const int g = rho.n().grid();
    CMat probe = static_cast<double>(g) * phase_point_op(rho.n(), alpha);
    ScatteringResult r = scattering_circuit(rho, probe);
    if (shots == 0) return {r.sigma_z / g, 0.0};

    double p_plus = std::clamp((1.0 + r.sigma_z) / 2.0, 0.0, 1.0);
    SplitMix64 rng(seed);
    long long plus = 0;
    for (long long i = 0; i < shots; i++)
        if (rng.uniform() < p_plus) plus++;
    double mean = static_cast<double>(2 * plus - shots) / static_cast<double>(shots);
    double sem = shots < 2
                     ? 0.0
                     : std::sqrt(std::max(0.0, 1.0 - mean * mean) / static_cast<double>(shots - 1));
    return {mean / g, sem / g};
}

WignerGrid wigner_tomography(const DensityMatrix& rho, long long shots_per_point,
                             std::uint64_t seed) {
    const Dimension n = rho.n();
    const int d = n.n();
    WignerGrid w(n);
    parallel_for(0, d * d, [&](int idx) {
        PhasePoint a{idx / d, idx % d};
        PointEstimate pe =
            measure_wigner_point(rho, a, shots_per_point, seed ^ static_cast<std::uint64_t>(idx));
        w.at(a.q, a.p) = pe.estimate;
    });
    w.extend_from_subgrid();
    return w;
}

Gate Gate::hadamard(int t) {
    Gate g;
    g.kind = Kind::hadamard;
    g.target = t;
    return g;
}

Gate Gate::phase(int t, double angle) {
    Gate g;
    g.kind = Kind::phase;
    g.target = t;
    g.angle = angle;
    return g;
}

Gate Gate::controlled_phase(int c, int t, double angle) {
    Gate g;
    g.kind = Kind::controlled_phase;
    g.control = c;
    g.target = t;
    g.angle = angle;
    return g;
}

Gate Gate::cnot(int c, int t) {
    Gate g;
    g.kind = Kind::cnot;
    g.control = c;
    g.target = t;
    return g;
}

Gate Gate::fourier_block(std::vector<int> targets) {
    Gate g;
    g.kind = Kind::fourier_block;
    g.targets = std::move(targets);
    return g;
}

Gate Gate::inverse_fourier_block(std::vector<int> targets) {
    Gate g;
    g.kind = Kind::inverse_fourier_block;
    g.targets = std::move(targets);
    return g;
}

namespace {

void check_qubit(int idx, int qubits, const char* what) {
    if (idx < 0 || idx >= qubits)
        throw error(std::string(what) + " qubit index out of range: " + std::to_string(idx));
}

CMat gate_matrix(int qubits, const Gate& gate) {
    const int dim = 1 << qubits;
    switch (gate.kind) {
        case Gate::Kind::hadamard: {
            check_qubit(gate.target, qubits, "target");
            const int bit = 1 << gate.target;
            const double r = 1.0 / std::sqrt(2.0);
            CMat m = CMat::Zero(dim, dim);
            for (int c = 0; c < dim; c++) {
                int cb = (c & bit) ? 1 : 0;
                m(c & ~bit, c) = r;
                m(c | bit, c) = cb ? -r : r;
            }
            return m;
        }
        case Gate::Kind::phase: {
            check_qubit(gate.target, qubits, "target");
            const int bit = 1 << gate.target;
            CVec diag(dim);
            for (int c = 0; c < dim; c++)
                diag(c) = (c & bit) ? std::polar(1.0, gate.angle) : 1.0;
            return diag.asDiagonal();
        }
        case Gate::Kind::controlled_phase: {
            check_qubit(gate.target, qubits, "target");
            check_qubit(gate.control, qubits, "control");
            if (gate.control == gate.target) throw error("control and target must differ");
            const int mask = (1 << gate.target) | (1 << gate.control);
            CVec diag(dim);
            for (int c = 0; c < dim; c++)
                diag(c) = (c & mask) == mask ? std::polar(1.0, gate.angle) : 1.0;
            return diag.asDiagonal();
        }
        case Gate::Kind::cnot: {
            check_qubit(gate.target, qubits, "target");
            check_qubit(gate.control, qubits, "control");
            if (gate.control == gate.target) throw error("control and target must differ");
            CMat m = CMat::Zero(dim, dim);
            for (int c = 0; c < dim; c++) {
                int r = (c & (1 << gate.control)) ? c ^ (1 << gate.target) : c;
                m(r, c) = 1.0;
            }
            return m;
        }
        case Gate::Kind::fourier_block:
        case Gate::Kind::inverse_fourier_block: {
            const int blk_qubits = static_cast<int>(gate.targets.size());
            if (blk_qubits < 1 || blk_qubits > qubits)
                throw error("Fourier block has a bad qubit count");
            for (int j = 0; j < blk_qubits; j++)
                if (gate.targets[j] != j)
                    throw error("Fourier blocks must target qubits 0..L-1 in order");
            const int blk = 1 << blk_qubits;
            CMat f(blk, blk);
            for (int r = 0; r < blk; r++)
                for (int c = 0; c < blk; c++)
                    f(r, c) = std::polar(1.0 / std::sqrt(double(blk)),
                                         2 * pi * mod(r * c, blk) / blk);
            if (gate.kind == Gate::Kind::inverse_fourier_block) f.adjointInPlace();
            CMat m = CMat::Zero(dim, dim);
            for (int h = 0; h < dim / blk; h++) m.block(h * blk, h * blk, blk, blk) = f;
            return m;
        }
    }
    throw error("unknown gate kind");
}

}  // namespace

CMat compose_gates(int qubits, const GateList& gates) {
    if (qubits < 1 || qubits > 12)
        throw error("gate composition supports 1..12 qubits, got " + std::to_string(qubits));
    const int dim = 1 << qubits;
    CMat m = CMat::Identity(dim, dim);
    for (const Gate& g : gates) m = gate_matrix(qubits, g) * m;
    return m;
}

namespace {

/// Textbook transform network for the positive-sign Fourier block on qubits
/// 0..L-1: column phases via H + controlled phases, then bit reversal.
GateList qft_gates(int l) {
    GateList gates;
    for (int j = l - 1; j >= 0; j--) {
        gates.push_back(Gate::hadamard(j));
        for (int m = j - 1; m >= 0; m--)
            gates.push_back(Gate::controlled_phase(m, j, pi / double(1 << (j - m))));
    }
    for (int i = 0; i < l / 2; i++) {
        int a = i, b = l - 1 - i;
        gates.push_back(Gate::cnot(a, b));
        gates.push_back(Gate::cnot(b, a));
        gates.push_back(Gate::cnot(a, b));
    }
    return gates;
}

GateList inverted(const GateList& gates) {
    GateList out;
    out.reserve(gates.size());
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        Gate g = *it;
        g.angle = -g.angle;  // H and CNOT are self-inverse; angle flip covers the rest
        out.push_back(g);
    }
    return out;
}

}  // namespace

GateList decompose_controlled_A(Dimension n, PhasePoint alpha, bool expand_fourier) {
    const int d = n.n();
    if ((d & (d - 1)) != 0) throw error("gate decomposition needs a power-of-two dimension");
    int l = 0;
    while ((1 << l) < d) l++;
    const int anc = l;
    alpha = alpha.reduced(n.grid());

    std::vector<int> sys(l);
    for (int j = 0; j < l; j++) sys[j] = j;

    GateList gates;
    // controlled V^{-p}
    for (int j = 0; j < l; j++)
        gates.push_back(Gate::controlled_phase(anc, j, -2 * pi * alpha.p * (1 << j) / double(d)));
    // controlled bitwise complement: X^all = U^{-1} R on the system
    for (int j = 0; j < l; j++) gates.push_back(Gate::cnot(anc, j));
    // U^{q+1} = F+ V^{q+1} F; the uncontrolled blocks cancel on the idle branch
    if (expand_fourier) {
        GateList f = qft_gates(l);
        gates.insert(gates.end(), f.begin(), f.end());
    } else {
        gates.push_back(Gate::fourier_block(sys));
    }
    for (int j = 0; j < l; j++)
        gates.push_back(
            Gate::controlled_phase(anc, j, 2 * pi * (alpha.q + 1) * (1 << j) / double(d)));
    if (expand_fourier) {
        GateList f = inverted(qft_gates(l));
        gates.insert(gates.end(), f.begin(), f.end());
    } else {
        gates.push_back(Gate::inverse_fourier_block(sys));
    }
    gates.push_back(Gate::phase(anc, pi * mod_ll(1LL * alpha.p * alpha.q, 2 * d) / d));
    return gates;
}

}  // namespace qtorus
