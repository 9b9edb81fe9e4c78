#include <doctest.h>

#include "qtorus/core_ops.hpp"
#include "qtorus/rng.hpp"
#include "qtorus/states.hpp"
#include "qtorus/wigner.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

using namespace qtorus;

namespace {

DensityMatrix random_state(Dimension n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    CVec psi(n.n());
    for (int k = 0; k < n.n(); k++) {
        double u1 = 1.0 - rng.uniform(), u2 = rng.uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        psi(k) = cxd(r * std::cos(2 * pi * u2), r * std::sin(2 * pi * u2));
    }
    psi.normalize();
    return {n, psi * psi.adjoint()};
}

}  // namespace

TEST_CASE("every line spec yields a projector whose rank counts its even points") {
    Dimension n(4);
    const int g = n.grid();
    int checked = 0;
    for (int n1 = 0; n1 < g; n1++)
        for (int n2 = 0; n2 < g; n2++) {
            if (n1 == 0 && n2 == 0) continue;
            for (int n3 : {0, 1, 3, 4, 6}) {
                LineProjector proj = line_projector(n, {n1, n2, n3});
                // independent rank estimate from the spectrum
                Eigen::SelfAdjointEigenSolver<CMat> es(proj.op);
                int rank = 0;
                for (int i = 0; i < es.eigenvalues().size(); i++) {
                    double lam = es.eigenvalues()(i);
                    CHECK(std::min(std::abs(lam), std::abs(lam - 1.0)) < 1e-10);
                    if (lam > 0.5) rank++;
                }
                CHECK(rank == proj.dimension);
                checked++;
            }
        }
    CHECK(checked == 63 * 5);
}

TEST_CASE("lines with no points give the zero projector") {
    Dimension n(4);
    LineSpec empty{2, 0, 1};  // 2p = 1 has no solution mod 8
    CHECK(line_points(n, empty).empty());
    LineProjector proj = line_projector(n, empty);
    CHECK(proj.dimension == 0);
    CHECK(proj.op.cwiseAbs().maxCoeff() < 1e-15);
    WignerGrid w = wigner_of(random_state(n, 3));
    CHECK(line_sum(w, empty) == 0.0);
}

TEST_CASE("degenerate line specs are rejected") {
    CHECK_THROWS_AS(line_points(Dimension(4), {0, 0, 3}), error);
    CHECK_THROWS_AS(line_points(Dimension(4), {8, 8, 1}), error);  // reduces to (0,0)
}

TEST_CASE("line points come out q-major and satisfy the congruence") {
    Dimension n(6);
    LineSpec line{3, 5, 7};
    auto pts = line_points(n, line);
    CHECK(!pts.empty());
    for (size_t i = 0; i + 1 < pts.size(); i++) {
        CHECK((pts[i].q < pts[i + 1].q ||
               (pts[i].q == pts[i + 1].q && pts[i].p < pts[i + 1].p)));
    }
    for (const auto& a : pts) CHECK(mod(line.n1 * a.p - line.n2 * a.q - line.n3, 12) == 0);
}

TEST_CASE("vertical line sums are position probabilities") {
    for (int d : {4, 6}) {
        Dimension n(d);
        DensityMatrix rho = random_state(n, 40 + d);
        WignerGrid w = wigner_of(rho);
        for (int j = 0; j < d; j++) {
            double want = rho.matrix()(j, j).real();
            CHECK(line_sum(w, LineSpec::vertical(2 * j)) == doctest::Approx(want).epsilon(1e-10));
            CHECK(marginal(w, MarginalFamily::position)(j) ==
                  doctest::Approx(want).epsilon(1e-10));
        }
        // odd columns are interference, not probability: they sum to zero
        for (int q = 1; q < 2 * d; q += 2)
            CHECK(std::abs(line_sum(w, LineSpec::vertical(q))) < 1e-11);
    }
}

TEST_CASE("horizontal line sums are momentum probabilities") {
    Dimension n(4);
    DensityMatrix rho = random_state(n, 55);
    WignerGrid w = wigner_of(rho);
    CMat f = fourier(n);
    CMat in_momentum = f.adjoint() * rho.matrix() * f;
    for (int j = 0; j < 4; j++) {
        double want = in_momentum(j, j).real();
        CHECK(line_sum(w, LineSpec::horizontal(2 * j)) == doctest::Approx(want).epsilon(1e-10));
        CHECK(marginal(w, MarginalFamily::momentum)(j) == doctest::Approx(want).epsilon(1e-10));
    }
}

TEST_CASE("line projector expectation equals the line sum") {
    // dense path Tr(rho sum A) against the grid path sum W
    Dimension n(4);
    DensityMatrix rho = random_state(n, 60);
    WignerGrid w = wigner_of(rho);
    for (const LineSpec& line : {LineSpec{1, 1, 0}, LineSpec::vertical(2), LineSpec{1, 2, 1}}) {
        LineProjector proj = line_projector(n, line);
        double expect = (rho.matrix() * proj.op).trace().real();
        double sum = line_sum(w, line);
        CHECK(expect == doctest::Approx(sum).epsilon(1e-9));
    }
}

TEST_CASE("a parallel line family partitions the total probability") {
    Dimension n(4);
    WignerGrid w = wigner_of(random_state(n, 61));
    double total = 0;
    for (int n3 = 0; n3 < n.grid(); n3++) total += line_sum(w, {1, 1, n3});
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("diagonal line of a superposition sees the interference") {
    // the two-peak state's fringes contribute to diagonal sums, so two
    // parallel diagonals differ even though all position probabilities match
    Dimension n(4);
    WignerGrid w = wigner_of(make_state(n, StateSpec::superposition(0, 2, 0.0)));
    double d0 = line_sum(w, {1, 1, 0});
    double d1 = line_sum(w, {1, 1, 2});
    CHECK(std::abs(d0 - d1) > 0.2);
}
