#pragma once

#include "qtorus/types.hpp"
#include "qtorus/wigner.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace qtorus {

using Mat2i = std::array<std::array<int, 2>, 2>;

/// One-step Wigner propagator Z_{alpha,beta} = N Tr(A(alpha) U A(beta) U+),
/// a real (4N^2)x(4N^2) matrix over the full grid.  Grid index is q*2N + p.
class ZMatrix {
public:
    ZMatrix(Dimension n, RMat entries) : n_(n), entries_(std::move(entries)) {}

    Dimension n() const { return n_; }
    const RMat& entries() const { return entries_; }

    int index(PhasePoint a) const {
        a = a.reduced(n_.grid());
        return a.q * n_.grid() + a.p;
    }
    double at(PhasePoint a, PhasePoint b) const { return entries_(index(a), index(b)); }

    /// W(t+1) = Z W(t).
    WignerGrid apply(const WignerGrid& w) const;

private:
    Dimension n_;
    RMat entries_;
};

/// Build Z column-wise: one conjugation U A(beta) U+ per beta, then O(N)
/// structured traces against every A(alpha).  Columns run in parallel.
/// Dense full-Z workflows are capped at N <= 16.
ZMatrix z_matrix(Dimension n, const CMat& u);

/// rho -> U rho U+.
DensityMatrix evolve_state(const DensityMatrix& rho, const CMat& u);

/// Pure grid actions with a classical meaning.
struct ClassicalMap {
    enum class Kind { translation, reflection, rotation90, linear, strip_permutation };

    Kind kind = Kind::translation;
    PhasePoint sigma;           // translation / reflection
    Mat2i m{{{1, 0}, {0, 1}}};  // linear
    std::vector<int> f;         // strip_permutation

    static ClassicalMap translation(PhasePoint sigma);
    static ClassicalMap reflection(PhasePoint sigma);
    static ClassicalMap rotation90();
    static ClassicalMap linear(Mat2i m);
    static ClassicalMap strip_permutation(std::vector<int> f);
};

/// Apply a classical map to a grid:
///   translation(s): W'(a) = W(a - 2s)
///   reflection(s):  W'(a) = W(2s - a)
///   rotation90:     W'(q,p) = W(p, -q)   (one Fourier step)
///   linear(M):      W'(a) = W(M^-1 a), det M = 1 (mod 2N) required
///   strip_permutation(f): cyclic shifts translate rigidly; other f move the
///   direct/mirror strip content of even columns and throw
///   undefined_interference when the grid carries anything else.
/// If the input satisfies the mirror redundancy, the output is checked to.
WignerGrid apply_classical_map(const WignerGrid& w, const ClassicalMap& map);

struct CatParams {
    int a = 0;
    int b = 0;
    bool chaotic() const { return a + b > 2; }
};

/// Kicked-map quantization U = V_b T V_a with quadratic position kicks and a
/// quadratic momentum factor (Fourier sandwich).  Global phase fixed so the
/// (0,0) element is real positive.  Matrix elements are proportional to
/// exp(i 2 pi (a n^2 + b n'^2 - 2 n n') / 2N).
CMat cat_unitary(Dimension n, CatParams params);

/// The grid automorphism matching cat_unitary by conjugation:
///   U A(alpha) U+ = A(M alpha) with M = [[a, 1], [ab-1, b]].
Mat2i cat_matrix(CatParams params);

/// Permutation gate U_f |n> = |f(n)>; with g, U_{f,g}|n> = e^{i2pi g(n)/N}|f(n)>.
CMat boolean_gate(Dimension n, const std::vector<int>& f);
CMat boolean_gate(Dimension n, const std::vector<int>& f, const std::vector<int>& g);

/// Max over `trials` random pure states of
///   || wigner_of(U rho U+) - classical_map(wigner_of(rho)) ||_max,
/// where non-transportable grid content (interference with no classical
/// image) counts as deviation rather than an error.
double classicality_check(Dimension n, const CMat& u, const ClassicalMap& map, int trials,
                          std::uint64_t seed = 1);

/// Identity on the most significant qubit, Fourier on the rest:
/// block-diag(F_{N/2}, F_{N/2}).  Requires N/2 >= 1 (any even N).
CMat half_fourier(Dimension n);

}  // namespace qtorus
