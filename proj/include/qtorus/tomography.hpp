#pragma once

#include "qtorus/types.hpp"
#include "qtorus/wigner.hpp"

#include <cstdint>
#include <vector>

namespace qtorus {

struct ScatteringResult {
    double sigma_z = 0;  //  Re Tr(U rho)
    double sigma_y = 0;  // -Im Tr(U rho)
    double sigma_x = 0;  // exposed for completeness
    cxd derived_value;   // sigma_z - i sigma_y = Tr(U rho)
};

/// Interferometry on ancilla |0> + system rho: Hadamard, controlled-U,
/// Hadamard, then ancilla polarization readout.  Simulated exactly on the
/// 2N-dimensional joint space.
ScatteringResult scattering_circuit(const DensityMatrix& rho, const CMat& u);

struct PointEstimate {
    double estimate = 0;
    double stderror = 0;
};

/// Run the scattering circuit with U = 2N A(alpha).  shots = 0 returns the
/// exact W(alpha) = sigma_z / 2N; otherwise draws +-1 ancilla outcomes with
/// P(+1) = (1 + sigma_z)/2 from the seeded generator and returns the sample
/// mean / 2N with its standard error.
PointEstimate measure_wigner_point(const DensityMatrix& rho, PhasePoint alpha, long long shots,
                                   std::uint64_t seed);

/// measure_wigner_point over all of G_N (per-point seed = seed XOR (q*N+p),
/// points run in parallel), extended to the full grid by the sign rule.
WignerGrid wigner_tomography(const DensityMatrix& rho, long long shots_per_point,
                             std::uint64_t seed);

/// Elementary gate on a register of qubits (bit 0 = least significant).
struct Gate {
    enum class Kind { hadamard, phase, controlled_phase, cnot, fourier_block, inverse_fourier_block };

    Kind kind;
    int target = -1;
    int control = -1;
    double angle = 0;          // phase / controlled_phase
    std::vector<int> targets;  // fourier blocks: must be qubits 0..L-1 of the system

    static Gate hadamard(int t);
    static Gate phase(int t, double angle);
    static Gate controlled_phase(int c, int t, double angle);
    static Gate cnot(int c, int t);
    static Gate fourier_block(std::vector<int> targets);
    static Gate inverse_fourier_block(std::vector<int> targets);
};

using GateList = std::vector<Gate>;

/// Multiply out a gate list (circuit order: front of the list acts first)
/// on `qubits` qubits into a dense 2^qubits unitary.
CMat compose_gates(int qubits, const GateList& gates);

/// Gate network for controlled-(2N A(alpha)) on 1 ancilla (the top qubit)
/// + log2(N) system qubits:
///   2N A = e^{i pi p q / N} U^q R V^{-p},   R = U X^(all),  U^m = F+ V^m F,
/// so the whole operator needs only controlled phases, CNOTs from the
/// ancilla, and two uncontrolled Fourier blocks.  With expand_fourier the
/// blocks are lowered to the standard Hadamard / controlled-phase / swap
/// network.
GateList decompose_controlled_A(Dimension n, PhasePoint alpha, bool expand_fourier = false);

}  // namespace qtorus
