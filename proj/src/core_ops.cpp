#include "qtorus/core_ops.hpp"

#include <cmath>

namespace qtorus {

int periodic_delta(long long z, int modulus) {
    if (modulus < 1) throw error("periodic_delta: modulus must be >= 1");
    return mod_ll(z, modulus) == 0 ? 1 : 0;
}

CMat shift_u(Dimension n, int m) {
    const int d = n.n();
    CMat u = CMat::Zero(d, d);
    for (int k = 0; k < d; k++) u(mod(k + m, d), k) = 1.0;
    return u;
}

CMat shift_v(Dimension n, int m) {
    const int d = n.n();
    CMat v = CMat::Zero(d, d);
    for (int k = 0; k < d; k++) v(k, k) = std::polar(1.0, 2.0 * pi * mod_ll(1LL * m * k, d) / d);
    return v;
}

CMat fourier(Dimension n) {
    const int d = n.n();
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    CMat f(d, d);
    for (int r = 0; r < d; r++)
        for (int c = 0; c < d; c++)
            f(r, c) = std::polar(norm, 2.0 * pi * mod_ll(1LL * r * c, d) / d);
    return f;
}

CMat reflection(Dimension n) {
    const int d = n.n();
    CMat r = CMat::Zero(d, d);
    for (int k = 0; k < d; k++) r(mod(-k, d), k) = 1.0;
    return r;
}

CMat translation(Dimension n, int q, int p) {
    const int g = n.grid();
    q = mod(q, g);
    p = mod(p, g);
    cxd phase = std::polar(1.0, pi * mod_ll(1LL * q * p, g) / n.n());
    return phase * (shift_u(n, q) * shift_v(n, p));
}

CMat phase_point_op(Dimension n, PhasePoint a) {
    const int d = n.n();
    a = a.reduced(n.grid());
    // (1/2N) U^q R V^{-p} e^{i pi p q / N}: one nonzero per column,
    // entry (q - k mod N, k) = e^{i pi p q / N} e^{-i 2 pi p k / N} / 2N.
    // Phase exponents are integers in units of pi/N; reduce mod 2N first so
    // the trig argument stays small and the operator identities stay exact.
    CMat m = CMat::Zero(d, d);
    const double pref = 1.0 / (2.0 * d);
    for (int k = 0; k < d; k++) {
        long long e = mod_ll(1LL * a.p * a.q - 2LL * a.p * k, 2 * d);
        m(mod(a.q - k, d), k) = std::polar(pref, pi * e / d);
    }
    return m;
}

bool phase_point_relations_check(Dimension n, double tol) {
    const int d = n.n();
    for (int q = 0; q < d; q++)
        for (int p = 0; p < d; p++) {
            CMat base = phase_point_op(n, {q, p});
            for (int sq = 0; sq <= 1; sq++)
                for (int sp = 0; sp <= 1; sp++) {
                    CMat mirror = phase_point_op(n, {q + sq * d, p + sp * d});
                    double sign = WignerGrid::relation_sign(q, p, sq, sp, d);
                    if ((mirror - sign * base).cwiseAbs().maxCoeff() >= tol) return false;
                }
        }
    return true;
}

cxd phase_point_trace(Dimension n, PhasePoint a, const CMat& b) {
    const int d = n.n();
    a = a.reduced(n.grid());
    cxd acc = 0;
    for (int k = 0; k < d; k++) {
        long long e = mod_ll(1LL * a.p * a.q - 2LL * a.p * k, 2 * d);
        acc += std::polar(1.0, pi * e / d) * b(k, mod(a.q - k, d));
    }
    return acc / (2.0 * d);
}

void require_unitary(const CMat& u, double tol) {
    if (u.rows() != u.cols()) throw error("operator is not square");
    double dev = (u.adjoint() * u - CMat::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
    if (dev >= tol)
        throw error("operator is not unitary (deviation " + std::to_string(dev) + ")");
}

}  // namespace qtorus
