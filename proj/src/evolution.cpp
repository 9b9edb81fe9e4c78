#include "qtorus/evolution.hpp"

#include "qtorus/core_ops.hpp"
#include "qtorus/parallel.hpp"
#include "qtorus/rng.hpp"

#include <cmath>
#include <utility>

namespace qtorus {

WignerGrid ZMatrix::apply(const WignerGrid& w) const {
    if (w.n() != n_) throw error("propagator and grid dimensions differ");
    const int g = n_.grid();
    RVec x(g * g);
    for (int q = 0; q < g; q++)
        for (int p = 0; p < g; p++) x(q * g + p) = w.at(q, p);
    RVec y = entries_ * x;
    WignerGrid out(n_);
    for (int q = 0; q < g; q++)
        for (int p = 0; p < g; p++) out.at(q, p) = y(q * g + p);
    return out;
}

ZMatrix z_matrix(Dimension n, const CMat& u) {
    if (n.n() > 16)
        throw error("dense propagators are capped at dimension 16 (16 N^4 entries)");
    require_unitary(u);
    if (u.rows() != n.n() || u.cols() != n.n()) throw error("unitary has the wrong dimension");

    const int d = n.n();
    const int g = 2 * d;
    RMat entries(g * g, g * g);
    std::vector<double> imag_worst(g * g, 0.0);

    parallel_for(0, g * g, [&](int col) {
        PhasePoint beta{col / g, col % g};
        CMat conj = u * phase_point_op(n, beta) * u.adjoint();
        double worst = 0;
        for (int row = 0; row < g * g; row++) {
            cxd t = static_cast<double>(d) * phase_point_trace(n, {row / g, row % g}, conj);
            entries(row, col) = t.real();
            worst = std::max(worst, std::abs(t.imag()));
        }
        imag_worst[col] = worst;
    });
    for (double im : imag_worst)
        if (im >= 1e-12) throw error("propagator entry has imaginary part " + std::to_string(im));
    return {n, std::move(entries)};
}

DensityMatrix evolve_state(const DensityMatrix& rho, const CMat& u) {
    require_unitary(u);
    if (u.rows() != rho.dim() || u.cols() != rho.dim())
        throw error("unitary has the wrong dimension");
    return {rho.n(), u * rho.matrix() * u.adjoint()};
}

ClassicalMap ClassicalMap::translation(PhasePoint sigma) {
    ClassicalMap m;
    m.kind = Kind::translation;
    m.sigma = sigma;
    return m;
}

ClassicalMap ClassicalMap::reflection(PhasePoint sigma) {
    ClassicalMap m;
    m.kind = Kind::reflection;
    m.sigma = sigma;
    return m;
}

ClassicalMap ClassicalMap::rotation90() {
    ClassicalMap m;
    m.kind = Kind::rotation90;
    return m;
}

ClassicalMap ClassicalMap::linear(Mat2i mat) {
    ClassicalMap m;
    m.kind = Kind::linear;
    m.m = mat;
    return m;
}

ClassicalMap ClassicalMap::strip_permutation(std::vector<int> f) {
    ClassicalMap m;
    m.kind = Kind::strip_permutation;
    m.f = std::move(f);
    return m;
}

namespace {

void check_permutation(const std::vector<int>& f, int d) {
    if (static_cast<int>(f.size()) != d)
        throw error("permutation table must have length " + std::to_string(d));
    std::vector<char> seen(d, 0);
    for (int v : f) {
        if (v < 0 || v >= d) throw error("permutation value out of range: " + std::to_string(v));
        if (seen[v]) throw error("permutation table repeats value " + std::to_string(v));
        seen[v] = 1;
    }
}

WignerGrid apply_strip(const WignerGrid& w, const std::vector<int>& f, bool lenient) {
    const Dimension n = w.n();
    const int d = n.n();
    const int g = n.grid();
    check_permutation(f, d);

    bool cyclic = true;
    for (int k = 0; k < d; k++)
        if (f[k] != mod(k + f[0], d)) {
            cyclic = false;
            break;
        }
    if (cyclic) {
        // U_f is a pure position shift, which transports every grid point.
        WignerGrid out(n);
        for (int q = 0; q < g; q++)
            for (int p = 0; p < g; p++) out.at(q, p) = w.at(q - 2 * f[0], p);
        return out;
    }

    const double tol = 1e-10;
    if (!lenient)
        for (int q = 1; q < g; q += 2)
            for (int p = 0; p < g; p++)
                if (std::abs(w.at(q, p)) > tol)
                    throw undefined_interference(
                        "odd-column weight has no image under a non-shift permutation");

    // Even columns of a transportable grid are flat + alternating in p: the
    // flat part is the direct strip of m, the alternating part the mirror
    // strip of m + N/2.  Everything else is interference.
    std::vector<double> flat(d), alt(d);
    for (int m = 0; m < d; m++) {
        double s0 = 0, s1 = 0;
        for (int p = 0; p < g; p++) {
            s0 += w.at(2 * m, p);
            s1 += (p % 2 == 0 ? 1.0 : -1.0) * w.at(2 * m, p);
        }
        flat[m] = s0 / g;
        alt[m] = s1 / g;
    }
    if (!lenient) {
        for (int m = 0; m < d; m++)
            for (int p = 0; p < g; p++)
                if (std::abs(w.at(2 * m, p) - flat[m] - (p % 2 == 0 ? alt[m] : -alt[m])) > tol)
                    throw undefined_interference(
                        "even-column interference pattern has no image under a permutation");
        for (int m = 0; m < d; m++)
            if (std::abs(alt[m] - flat[mod(m + d / 2, d)]) > tol)
                throw undefined_interference(
                    "mirror strips are inconsistent with any permutation transport");
    }

    std::vector<double> newflat(d, 0.0);
    for (int m = 0; m < d; m++) newflat[f[m]] = flat[m];
    WignerGrid out(n);
    for (int k = 0; k < d; k++) {
        double direct = newflat[k];
        double mirror = newflat[mod(k + d / 2, d)];
        for (int p = 0; p < g; p++)
            out.at(2 * k, p) = direct + (p % 2 == 0 ? mirror : -mirror);
    }
    return out;
}

WignerGrid apply_classical_map_impl(const WignerGrid& w, const ClassicalMap& map, bool lenient) {
    const Dimension n = w.n();
    const int g = n.grid();
    bool had_relations = w.satisfies_relations(1e-10);

    WignerGrid out(n);
    switch (map.kind) {
        case ClassicalMap::Kind::translation:
            for (int q = 0; q < g; q++)
                for (int p = 0; p < g; p++)
                    out.at(q, p) = w.at(q - 2 * map.sigma.q, p - 2 * map.sigma.p);
            break;
        case ClassicalMap::Kind::reflection:
            for (int q = 0; q < g; q++)
                for (int p = 0; p < g; p++)
                    out.at(q, p) = w.at(2 * map.sigma.q - q, 2 * map.sigma.p - p);
            break;
        case ClassicalMap::Kind::rotation90:
            for (int q = 0; q < g; q++)
                for (int p = 0; p < g; p++) out.at(q, p) = w.at(p, -q);
            break;
        case ClassicalMap::Kind::linear: {
            long long a = map.m[0][0], b = map.m[0][1], c = map.m[1][0], dd = map.m[1][1];
            if (mod_ll(a * dd - b * c, g) != 1)
                throw error("linear grid map needs determinant 1 (mod 2N)");
            // W'(alpha) = W(M^-1 alpha), M^-1 = [[d, -b], [-c, a]] mod 2N.
            for (int q = 0; q < g; q++)
                for (int p = 0; p < g; p++) {
                    int q0 = static_cast<int>(mod_ll(dd * q - b * p, g));
                    int p0 = static_cast<int>(mod_ll(-c * q + a * p, g));
                    out.at(q, p) = w.at(q0, p0);
                }
            break;
        }
        case ClassicalMap::Kind::strip_permutation:
            out = apply_strip(w, map.f, lenient);
            break;
    }

    if (had_relations && out.relations_error() >= 1e-9)
        throw error("internal: classical map broke the grid redundancy");
    return out;
}

}  // namespace

WignerGrid apply_classical_map(const WignerGrid& w, const ClassicalMap& map) {
    return apply_classical_map_impl(w, map, false);
}

CMat cat_unitary(Dimension n, CatParams params) {
    const int d = n.n();
    const int g = n.grid();
    auto kick = [&](int j) {
        CVec diag(d);
        for (int k = 0; k < d; k++) {
            long long e = mod_ll(-1LL * k * k * (1 - j), g);
            diag(k) = std::polar(1.0, pi * e / d);
        }
        return diag;
    };
    CVec momentum(d);
    for (int k = 0; k < d; k++)
        momentum(k) = std::polar(1.0, pi * mod_ll(-1LL * k * k, g) / d);

    CMat f = fourier(n);
    CMat u = kick(params.b).asDiagonal() * (f.adjoint() * momentum.asDiagonal() * f) *
             CMat(kick(params.a).asDiagonal());
    cxd z = u(0, 0);
    if (std::abs(z) > 1e-14) u *= std::conj(z) / std::abs(z);
    return u;
}

Mat2i cat_matrix(CatParams params) {
    return {{{params.a, 1}, {params.a * params.b - 1, params.b}}};
}

CMat boolean_gate(Dimension n, const std::vector<int>& f) {
    return boolean_gate(n, f, std::vector<int>(n.n(), 0));
}

CMat boolean_gate(Dimension n, const std::vector<int>& f, const std::vector<int>& g) {
    const int d = n.n();
    check_permutation(f, d);
    if (static_cast<int>(g.size()) != d)
        throw error("phase table must have length " + std::to_string(d));
    CMat u = CMat::Zero(d, d);
    for (int k = 0; k < d; k++)
        u(f[k], k) = std::polar(1.0, 2 * pi * mod(g[k], d) / d);
    return u;
}

double classicality_check(Dimension n, const CMat& u, const ClassicalMap& map, int trials,
                          std::uint64_t seed) {
    require_unitary(u);
    if (u.rows() != n.n() || u.cols() != n.n()) throw error("unitary has the wrong dimension");
    const int d = n.n();
    SplitMix64 rng(seed);
    double worst = 0;
    for (int t = 0; t < trials; t++) {
        CVec psi(d);
        for (int k = 0; k < d; k++) {
            double u1 = 1.0 - rng.uniform();
            double u2 = rng.uniform();
            double r = std::sqrt(-2.0 * std::log(u1));
            psi(k) = cxd(r * std::cos(2 * pi * u2), r * std::sin(2 * pi * u2));
        }
        psi.normalize();
        DensityMatrix rho(n, psi * psi.adjoint());
        WignerGrid quantum = wigner_of(evolve_state(rho, u));
        WignerGrid classical = apply_classical_map_impl(wigner_of(rho), map, true);
        worst = std::max(worst, (quantum.values() - classical.values()).cwiseAbs().maxCoeff());
    }
    return worst;
}

CMat half_fourier(Dimension n) {
    const int h = n.n() / 2;
    CMat block(h, h);
    for (int r = 0; r < h; r++)
        for (int c = 0; c < h; c++)
            block(r, c) = std::polar(1.0 / std::sqrt(double(h)), 2 * pi * mod(r * c, h) / h);
    CMat u = CMat::Zero(n.n(), n.n());
    u.topLeftCorner(h, h) = block;
    u.bottomRightCorner(h, h) = block;
    return u;
}

}  // namespace qtorus
