#include "qtorus/selfcheck.hpp"

#include "qtorus/core_ops.hpp"
#include "qtorus/evolution.hpp"
#include "qtorus/rng.hpp"
#include "qtorus/states.hpp"
#include "qtorus/tomography.hpp"
#include "qtorus/wigner.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <string>

namespace qtorus {

namespace {

double max_abs(const CMat& m) { return m.cwiseAbs().maxCoeff(); }

DensityMatrix random_mixture(Dimension n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    auto random_pure = [&]() {
        CVec psi(n.n());
        for (int k = 0; k < n.n(); k++) {
            double u1 = 1.0 - rng.uniform(), u2 = rng.uniform();
            double r = std::sqrt(-2.0 * std::log(u1));
            psi(k) = cxd(r * std::cos(2 * pi * u2), r * std::sin(2 * pi * u2));
        }
        psi.normalize();
        return CMat(psi * psi.adjoint());
    };
    return {n, 0.7 * random_pure() + 0.3 * random_pure()};
}

}  // namespace

bool run_self_check(Dimension n, std::ostream& out) {
    const int d = n.n();
    const int g = n.grid();
    bool all_ok = true;

    auto group = [&](const char* name, const std::function<std::string()>& fn) {
        std::string fail;
        try {
            fail = fn();
        } catch (const std::exception& e) {
            fail = e.what();
        }
        if (fail.empty()) {
            out << "ok " << name << "\n";
        } else {
            out << "FAIL " << name << ": " << fail << "\n";
            all_ok = false;
        }
    };

    group("shift-algebra", [&]() -> std::string {
        CMat u = shift_u(n, 1), v = shift_v(n, 1), f = fourier(n);
        if (max_abs(v * u - std::polar(1.0, 2 * pi / d) * (u * v)) >= 1e-12)
            return "V U != exp(i 2 pi / N) U V";
        if (max_abs(f * f - reflection(n)) >= 1e-12) return "F^2 != R";
        if (max_abs(f.adjoint() * v * f - u) >= 1e-12) return "F+ V F != U";
        return "";
    });

    group("translations", [&]() -> std::string {
        PhasePoint a{1, 2}, b{3, 1};
        CMat lhs = translation(n, a.q, a.p) * translation(n, b.q, b.p);
        cxd phase = std::polar(1.0, pi * (a.p * b.q - a.q * b.p) / d);
        CMat rhs = phase * translation(n, a.q + b.q, a.p + b.p);
        if (max_abs(lhs - rhs) >= 1e-12) return "composition phase is off";
        CMat t = translation(n, 2, 3);
        if (max_abs(t.adjoint() - translation(n, g - 2, g - 3)) >= 1e-12)
            return "adjoint identity is off";
        return "";
    });

    group("point-operators", [&]() -> std::string {
        for (PhasePoint a : {PhasePoint{0, 0}, {1, 0}, {2, 3}, {d, d + 1}}) {
            CMat op = phase_point_op(n, a);
            if (max_abs(op - op.adjoint()) >= 1e-12) return "A is not Hermitian";
            CMat scaled = double(g) * op;
            if (max_abs(scaled.adjoint() * scaled - CMat::Identity(d, d)) >= 1e-12)
                return "2N A is not unitary";
            double want = a.even() ? 1.0 / d : 0.0;
            if (std::abs(op.trace().real() - want) >= 1e-12) return "trace pattern is off";
        }
        if (max_abs(phase_point_op(n, {0, 0}) - reflection(n) / double(g)) >= 1e-12)
            return "A(0,0) != R / 2N";
        if (!phase_point_relations_check(n)) return "mirror redundancy violated";
        return "";
    });

    group("states", [&]() -> std::string {
        DensityMatrix pos = make_state(n, StateSpec::position(1));
        WignerGrid w = wigner_of(pos);
        if (std::abs(w.sum() - 1.0) >= 1e-12) return "position grid does not sum to 1";
        RVec m = marginal(w, MarginalFamily::position);
        if (std::abs(m(1) - 1.0) >= 1e-12 || std::abs(m.sum() - 1.0) >= 1e-12)
            return "position marginal is not e_1";
        DensityMatrix mom = make_state(n, StateSpec::momentum(1));
        RVec mk = marginal(wigner_of(mom), MarginalFamily::momentum);
        if (std::abs(mk(1) - 1.0) >= 1e-12) return "momentum marginal is not e_1";
        make_state(n, StateSpec::superposition(0, d / 2, 0.3));
        make_state(n, StateSpec::gaussian(d / 2, 1, std::sqrt(double(d)) / 4));
        return "";
    });

    group("wigner-round-trip", [&]() -> std::string {
        DensityMatrix rho = random_mixture(n, 42);
        WignerGrid w = wigner_of(rho);
        if (!w.satisfies_relations()) return "grid violates mirror redundancy";
        if (std::abs(w.sum() - 1.0) >= 1e-10) return "grid does not sum to 1";
        DensityMatrix back = state_from_wigner(w);
        if (max_abs(back.matrix() - rho.matrix()) >= 1e-10) return "round trip drifts";
        DensityMatrix rho2 = random_mixture(n, 43);
        double ip = inner_product(w, wigner_of(rho2));
        double tr = (rho.matrix() * rho2.matrix()).trace().real();
        if (std::abs(ip - tr) >= 1e-10) return "overlap formula is off";
        return "";
    });

    group("lines", [&]() -> std::string {
        DensityMatrix rho = random_mixture(n, 44);
        WignerGrid w = wigner_of(rho);
        CMat mom = fourier(n).adjoint() * rho.matrix() * fourier(n);
        for (int j = 0; j < d; j++) {
            double v = line_sum(w, LineSpec::vertical(2 * j));
            if (std::abs(v - rho.matrix()(j, j).real()) >= 1e-10)
                return "vertical line sum misses the position probability";
            double h = line_sum(w, LineSpec::horizontal(2 * j));
            if (std::abs(h - mom(j, j).real()) >= 1e-10)
                return "horizontal line sum misses the momentum probability";
        }
        line_projector(n, {1, 1, 0});
        line_projector(n, {1, 2, 1});
        return "";
    });

    group("classical-maps", [&]() -> std::string {
        DensityMatrix rho = random_mixture(n, 45);
        WignerGrid w = wigner_of(rho);
        PhasePoint s{1, 2};
        WignerGrid t = wigner_of(evolve_state(rho, translation(n, s.q, s.p)));
        if ((t.values() - apply_classical_map(w, ClassicalMap::translation(s)).values())
                .cwiseAbs()
                .maxCoeff() >= 1e-10)
            return "translation transport is off";
        WignerGrid r =
            wigner_of(evolve_state(rho, double(g) * phase_point_op(n, s)));
        if ((r.values() - apply_classical_map(w, ClassicalMap::reflection(s)).values())
                .cwiseAbs()
                .maxCoeff() >= 1e-10)
            return "reflection transport is off";
        WignerGrid ft = wigner_of(evolve_state(rho, fourier(n)));
        if ((ft.values() - apply_classical_map(w, ClassicalMap::rotation90()).values())
                .cwiseAbs()
                .maxCoeff() >= 1e-10)
            return "Fourier transport is off";
        CatParams cat{2, 1};
        WignerGrid c = wigner_of(evolve_state(rho, cat_unitary(n, cat)));
        if ((c.values() - apply_classical_map(w, ClassicalMap::linear(cat_matrix(cat))).values())
                .cwiseAbs()
                .maxCoeff() >= 1e-10)
            return "cat transport is off";
        return "";
    });

    if (d <= 8) {
        group("purity", [&]() -> std::string {
            DensityMatrix pure(n, make_state(n, StateSpec::position(0)).matrix());
            if (purity_residual(wigner_of(pure)) >= 1e-9) return "pure state flagged impure";
            return "";
        });
        group("propagator", [&]() -> std::string {
            CMat u = cat_unitary(n, {2, 1});
            DensityMatrix rho = random_mixture(n, 46);
            WignerGrid direct = wigner_of(evolve_state(rho, u));
            WignerGrid propagated = z_matrix(n, u).apply(wigner_of(rho));
            if ((direct.values() - propagated.values()).cwiseAbs().maxCoeff() >= 1e-9)
                return "Z application disagrees with conjugation";
            return "";
        });
    }

    group("tomography", [&]() -> std::string {
        DensityMatrix rho = random_mixture(n, 47);
        WignerGrid exact = wigner_of(rho);
        WignerGrid sampled = wigner_tomography(rho, 0, 99);
        if ((exact.values() - sampled.values()).cwiseAbs().maxCoeff() >= 1e-12)
            return "shotless tomography is not exact";
        return "";
    });

    if (d <= 16 && (d & (d - 1)) == 0) {
        group("gate-network", [&]() -> std::string {
            int l = 0;
            while ((1 << l) < d) l++;
            PhasePoint a{3, 2};
            CMat net = compose_gates(l + 1, decompose_controlled_A(n, a));
            CMat want = CMat::Identity(2 * d, 2 * d);
            want.bottomRightCorner(d, d) = double(g) * phase_point_op(n, a);
            if (max_abs(net - want) >= 1e-8) return "network misses controlled-2NA";
            return "";
        });
    }

    out << (all_ok ? "PASS" : "FAIL") << "\n";
    return all_ok;
}

}  // namespace qtorus
