#pragma once

#include "qtorus/types.hpp"

#include <vector>

namespace qtorus {

/// W(alpha) = Tr(rho A(alpha)) over the full grid; computed on the G_N
/// subgrid and extended by the mirror sign rule.  Throws if any trace has
/// imaginary part >= 1e-12 (a corrupted rho).
WignerGrid wigner_of(const DensityMatrix& rho);

/// Inverse map rho = 4N sum_{alpha in G_N} W(alpha) A(alpha), evaluated
/// entrywise in O(N^3).  Only Hermiticity is enforced on the result: grids
/// estimated from finite statistics reconstruct to slightly unphysical
/// spectra, and callers decide how much to care.
DensityMatrix state_from_wigner(const WignerGrid& w);

/// N * sum_{alpha in G_2N} W1(alpha) W2(alpha) = Tr(rho1 rho2).
double inner_product(const WignerGrid& a, const WignerGrid& b);

/// A torus line: all (q,p) with n1*p - n2*q = n3 (mod 2N).
struct LineSpec {
    int n1 = 0, n2 = 0, n3 = 0;

    LineSpec() = default;
    LineSpec(int n1_, int n2_, int n3_) : n1(n1_), n2(n2_), n3(n3_) {}

    /// Column q = q0 (all p).
    static LineSpec vertical(int q0) { return {0, -1, q0}; }
    /// Row p = p0 (all q).
    static LineSpec horizontal(int p0) { return {1, 0, p0}; }
};

/// All grid points on the line, q-major order.  Empty is possible.
std::vector<PhasePoint> line_points(Dimension n, const LineSpec& line);

struct LineProjector {
    CMat op;        // sum of A over the line's points
    int dimension;  // rank = round(Tr), cross-checked against the point count
};

/// Sum A over a line.  The result is always a projector; `dimension` is its
/// rank, and it must equal (#even-even points on the line) / N — both checks
/// are enforced here.
LineProjector line_projector(Dimension n, const LineSpec& line);

/// Sum of grid values over a line's points.
double line_sum(const WignerGrid& w, const LineSpec& line);

enum class MarginalFamily { position, momentum };

/// Probability vector of length N: entry j sums the line q=2j (position)
/// or p=2j (momentum).
RVec marginal(const WignerGrid& w, MarginalFamily family);

/// Three-point kernel Gamma(a,b,c) = Tr(A(a) A(b) A(c)), evaluated in O(1)
/// per triple through the translation-composition identity.  Dimension is
/// capped at 8: purity checks sum N^4 triples per grid point.
class TriangleKernel {
public:
    explicit TriangleKernel(Dimension n);

    cxd gamma(PhasePoint a, PhasePoint b, PhasePoint c) const;

    Dimension n() const { return n_; }

private:
    Dimension n_;
    std::vector<cxd> tw_;  // tw_[x] = exp(i pi x / N), x in [0, 2N)

    cxd tw(long long x) const { return tw_[mod_ll(x, 2 * n_.n())]; }
};

/// Max over alpha of |W(alpha) - 16 N^2 sum_{beta,gamma in G_N} Gamma W W|.
/// Zero (to rounding) exactly for pure states.
double purity_residual(const WignerGrid& w);

}  // namespace qtorus
