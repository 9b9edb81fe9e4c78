#include <doctest.h>

#include "qtorus/core_ops.hpp"
#include "qtorus/grover.hpp"
#include "qtorus/states.hpp"

#include <cmath>

using namespace qtorus;

TEST_CASE("search configuration is validated") {
    CHECK_THROWS_AS(GroverConfig(Dimension(6), 0), error);   // not a power of two
    CHECK_THROWS_AS(GroverConfig(Dimension(8), 8), error);   // marked out of range
    CHECK_THROWS_AS(GroverConfig(Dimension(8), 0, -1), error);
    CHECK_NOTHROW(GroverConfig(Dimension(8), 7, 3));
}

TEST_CASE("one iteration is the product of two reflections") {
    Dimension n(8);
    GroverConfig cfg(n, 3, 0);
    CMat u = grover_step(cfg);
    require_unitary(u, 1e-12);
    // oracle part: flipping twice is the identity
    CMat oracle = CMat::Identity(8, 8);
    oracle(3, 3) = -1;
    CVec k = fourier(n).col(0);
    CMat inversion = CMat::Identity(8, 8) - 2.0 * (k * k.adjoint());
    CHECK((u - inversion * oracle).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((inversion * inversion - CMat::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("success probability follows the closed form") {
    Dimension n(32);
    GroverConfig cfg(n, 11, 0);
    auto traj = run_grover(cfg, 12);
    REQUIRE(traj.size() == 13);
    for (int t = 0; t <= 12; t++)
        CHECK(traj[t].success == doctest::Approx(grover_closed_form(n, t)).epsilon(1e-12));
    // the documented sweet spot: t = 4 (angle 9 theta) is nearly certain,
    // overshooting to t = 5 (angle 11 theta) already costs measurable mass
    CHECK(grover_closed_form(n, 4) == doctest::Approx(0.9991823155).epsilon(1e-9));
    CHECK(grover_closed_form(n, 5) == doctest::Approx(0.8596366612).epsilon(1e-9));
    CHECK(traj[4].success > traj[5].success);
}

TEST_CASE("success probability is readable off the grid marginal") {
    Dimension n(16);
    GroverConfig cfg(n, 5, 0);
    auto traj = run_grover(cfg, 3);
    for (const auto& step : traj) {
        RVec m = marginal(step.grid, MarginalFamily::position);
        CHECK(m(5) == doctest::Approx(step.success).epsilon(1e-10));
        CHECK(std::abs(step.grid.sum() - 1.0) < 1e-11);
        CHECK(step.rho.purity() == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("the initial state is the chosen momentum eigenstate") {
    Dimension n(16);
    GroverConfig cfg(n, 2, 3);
    auto traj = run_grover(cfg, 0);
    REQUIRE(traj.size() == 1);
    RVec mk = marginal(traj[0].grid, MarginalFamily::momentum);
    CHECK(mk(3) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(traj[0].success == doctest::Approx(1.0 / 16).epsilon(1e-12));
}

TEST_CASE("default step counts round the quarter-turn estimate") {
    CHECK(grover_default_steps(Dimension(16)) == 3);
    CHECK(grover_default_steps(Dimension(32)) == 4);
    CHECK(grover_default_steps(Dimension(64)) == 6);
}

TEST_CASE("trajectory capture is guarded") {
    CHECK_THROWS_AS(run_grover(GroverConfig(Dimension(128), 0), 1), error);
    CHECK_THROWS_AS(run_grover(GroverConfig(Dimension(8), 0), -1), error);
}
