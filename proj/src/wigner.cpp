#include "qtorus/wigner.hpp"

#include "qtorus/core_ops.hpp"
#include "qtorus/parallel.hpp"

#include <cmath>

namespace qtorus {

WignerGrid wigner_of(const DensityMatrix& rho) {
    const Dimension n = rho.n();
    const int d = n.n();
    WignerGrid w(n);
    std::vector<double> imag_worst(d * d, 0.0);
    auto& values = w.values();

    parallel_for(0, d * d, [&](int idx) {
        int q = idx / d, p = idx % d;
        cxd t = phase_point_trace(n, {q, p}, rho.matrix());
        values(q, p) = t.real();
        imag_worst[idx] = std::abs(t.imag());
    });

    for (double im : imag_worst)
        if (im >= 1e-12)
            throw error("Wigner value has imaginary part " + std::to_string(im) +
                        "; density matrix is corrupted");
    w.extend_from_subgrid();
    return w;
}

DensityMatrix state_from_wigner(const WignerGrid& w) {
    const Dimension n = w.n();
    const int d = n.n();
    // rho = 4N sum_{G_N} W A inverted entrywise: each (m,k) only sees the
    // column q0 = m+k of the subgrid.
    CMat rho(d, d);
    for (int m = 0; m < d; m++)
        for (int k = 0; k < d; k++) {
            int q0 = mod(m + k, d);
            cxd acc = 0;
            for (int p = 0; p < d; p++) {
                long long e = mod_ll(1LL * p * q0 - 2LL * p * k, 2 * d);
                acc += w.at(q0, p) * std::polar(1.0, pi * e / d);
            }
            rho(m, k) = 2.0 * acc;
        }
    double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (herm >= 1e-10)
        throw error("reconstructed state violates Hermiticity by " + std::to_string(herm));
    return DensityMatrix(n, std::move(rho), Checks::basic);
}

double inner_product(const WignerGrid& a, const WignerGrid& b) {
    if (a.n() != b.n()) throw error("inner_product: grid dimensions differ");
    return a.n().n() * a.values().cwiseProduct(b.values()).sum();
}

std::vector<PhasePoint> line_points(Dimension n, const LineSpec& line) {
    const int g = n.grid();
    int n1 = mod(line.n1, g), n2 = mod(line.n2, g), n3 = mod(line.n3, g);
    if (n1 == 0 && n2 == 0) throw error("line spec needs (n1, n2) != (0, 0)");
    std::vector<PhasePoint> pts;
    for (int q = 0; q < g; q++)
        for (int p = 0; p < g; p++)
            if (mod(n1 * p - n2 * q - n3, g) == 0) pts.push_back({q, p});
    return pts;
}

LineProjector line_projector(Dimension n, const LineSpec& line) {
    const int d = n.n();
    auto pts = line_points(n, line);
    CMat proj = CMat::Zero(d, d);
    int even_points = 0;
    for (const auto& a : pts) {
        proj += phase_point_op(n, a);
        if (a.even()) even_points++;
    }

    if ((proj - proj.adjoint()).cwiseAbs().maxCoeff() >= 1e-10)
        throw error("line sum is not Hermitian");
    if ((proj * proj - proj).cwiseAbs().maxCoeff() >= 1e-10)
        throw error("line sum is not idempotent");

    double tr = proj.trace().real();
    int dim = static_cast<int>(std::lround(tr));
    if (std::abs(tr - dim) >= 1e-9) throw error("line projector trace is not near an integer");
    if (dim * d != even_points)
        throw error("line projector rank disagrees with its even-point count");
    return {std::move(proj), dim};
}

double line_sum(const WignerGrid& w, const LineSpec& line) {
    double acc = 0;
    for (const auto& a : line_points(w.n(), line)) acc += w.at(a.q, a.p);
    return acc;
}

RVec marginal(const WignerGrid& w, MarginalFamily family) {
    const int d = w.n().n();
    RVec out(d);
    for (int j = 0; j < d; j++) {
        double acc = 0;
        for (int k = 0; k < w.grid(); k++)
            acc += family == MarginalFamily::position ? w.at(2 * j, k) : w.at(k, 2 * j);
        out(j) = acc;
    }
    return out;
}

TriangleKernel::TriangleKernel(Dimension n) : n_(n) {
    if (n.n() > 8)
        throw error("three-point kernel capped at dimension 8 (the purity sum is O(N^6))");
    const int g = n.grid();
    tw_.resize(g);
    for (int x = 0; x < g; x++) tw_[x] = std::polar(1.0, pi * x / n.n());
}

cxd TriangleKernel::gamma(PhasePoint a, PhasePoint b, PhasePoint c) const {
    const int d = n_.n();
    const int g = n_.grid();
    a = a.reduced(g);
    b = b.reduced(g);
    c = c.reduced(g);
    // A(b) A(c) = T(b - c) e^{i pi (qb pc - qc pb)/N} / 4N^2 collapses the
    // triple trace to Tr(A(a) T(s,t)), which has two surviving terms.
    const int s = mod(b.q - c.q, g), t = mod(b.p - c.p, g);
    if ((a.q + s) % 2 != 0) return 0.0;
    const int k0 = mod((a.q + s) / 2, d);
    const int k1 = mod(k0 + d / 2, d);
    const long long e0 = 1LL * b.q * c.p - 1LL * c.q * b.p + 1LL * a.p * a.q + 1LL * s * t;
    auto term = [&](int k) { return tw(e0 + 2LL * (1LL * t * a.q - 1LL * (t + a.p) * k)); };
    return (term(k0) + term(k1)) / (8.0 * d * d * d);
}

double purity_residual(const WignerGrid& w) {
    const Dimension n = w.n();
    const int d = n.n();
    const int g = n.grid();
    TriangleKernel kernel(n);

    std::vector<double> residual(g * g, 0.0);
    parallel_for(0, g * g, [&](int idx) {
        PhasePoint a{idx / g, idx % g};
        cxd acc = 0;
        for (int bq = 0; bq < d; bq++)
            for (int bp = 0; bp < d; bp++) {
                double wb = w.at(bq, bp);
                if (wb == 0.0) continue;
                for (int cq = 0; cq < d; cq++)
                    for (int cp = 0; cp < d; cp++) {
                        double wc = w.at(cq, cp);
                        if (wc == 0.0) continue;
                        acc += kernel.gamma(a, {bq, bp}, {cq, cp}) * (wb * wc);
                    }
            }
        acc *= 16.0 * d * d;
        residual[idx] = std::abs(acc - cxd(w.at(a.q, a.p), 0.0));
    });
    double worst = 0;
    for (double r : residual) worst = std::max(worst, r);
    return worst;
}

}  // namespace qtorus
