#pragma once

#include "qtorus/types.hpp"

namespace qtorus {

/// Periodic Kronecker delta: 1 iff z = 0 (mod modulus).
int periodic_delta(long long z, int modulus);

/// Cyclic position shift: U^m |n> = |n+m mod N>.
CMat shift_u(Dimension n, int m);

/// Momentum shift, diagonal in position: <n|V^m|n> = exp(i 2 pi m n / N).
CMat shift_v(Dimension n, int m);

/// Discrete Fourier transform, entries exp(i 2 pi n n' / N) / sqrt(N).
/// Maps the position basis to the momentum basis.
CMat fourier(Dimension n);

/// Parity operator R |n> = |-n mod N>.  Equals fourier squared.
CMat reflection(Dimension n);

/// Phase-space translation T(q,p) = U^q V^p exp(i pi q p / N).
/// Arguments are reduced mod 2N before the phase is computed, which makes
/// the adjoint identity T(q,p)^+ = T(2N-q, 2N-p) exact.
CMat translation(Dimension n, int q, int p);

/// Phase-space point operator
///   A(q,p) = (1/2N) U^q R V^{-p} exp(i pi p q / N).
/// Hermitian; 2N*A is unitary; Tr A = 1/N iff q and p are both even.
CMat phase_point_op(Dimension n, PhasePoint a);

/// Verify the mirror redundancy A(q+sq N, p+sp N) = A(q,p) (-1)^(...)
/// for all subgrid points and sign choices.
bool phase_point_relations_check(Dimension n, double tol = 1e-12);

/// Tr(A(alpha) * B) in O(N): A has one nonzero per column, so the trace
/// collapses to a single phased anti-diagonal sum over B.
cxd phase_point_trace(Dimension n, PhasePoint a, const CMat& b);

/// Throw unless ||U^+ U - I||_max < tol.
void require_unitary(const CMat& u, double tol = 1e-10);

}  // namespace qtorus
