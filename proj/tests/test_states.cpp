#include <doctest.h>

#include "qtorus/states.hpp"
#include "qtorus/wigner.hpp"

#include <cmath>
#include <fstream>

using namespace qtorus;

TEST_CASE("position state is a basis projector with the right marginal") {
    Dimension n(4);
    DensityMatrix rho = make_state(n, StateSpec::position(1));
    CHECK(std::abs(rho.matrix()(1, 1) - cxd(1, 0)) < 1e-15);
    CHECK(std::abs(rho.matrix().trace() - cxd(1, 0)) < 1e-15);

    WignerGrid w = wigner_of(rho);
    CHECK(std::abs(w.sum() - 1.0) < 1e-13);
    RVec m = marginal(w, MarginalFamily::position);
    for (int j = 0; j < 4; j++) CHECK(std::abs(m(j) - (j == 1 ? 1.0 : 0.0)) < 1e-13);

    // the direct strip is flat, the mirror strip alternates in sign
    for (int p = 0; p < w.grid(); p++) {
        CHECK(w.at(2, p) == doctest::Approx(0.125).epsilon(1e-12));
        CHECK(w.at(6, p) == doctest::Approx(p % 2 == 0 ? 0.125 : -0.125).epsilon(1e-12));
    }
    CHECK(make_state(n, StateSpec::position(5)).matrix()(1, 1).real() ==
          doctest::Approx(1.0));  // indices reduce mod N
}

TEST_CASE("momentum state is flat in position and sharp in momentum") {
    Dimension n(4);
    DensityMatrix rho = make_state(n, StateSpec::momentum(2));
    for (int j = 0; j < 4; j++)
        CHECK(std::abs(rho.matrix()(j, j) - cxd(0.25, 0)) < 1e-14);
    RVec mk = marginal(wigner_of(rho), MarginalFamily::momentum);
    for (int j = 0; j < 4; j++) CHECK(std::abs(mk(j) - (j == 2 ? 1.0 : 0.0)) < 1e-13);
}

TEST_CASE("two-peak superposition carries its interference in the middle column") {
    Dimension n(4);
    WignerGrid w = wigner_of(make_state(n, StateSpec::superposition(0, 1, 0.0)));
    // peaks live at columns 0 and 2; the cross term sits at q = 1 and
    // oscillates as cos(pi p / 4) / 8
    for (int p = 0; p < 8; p++) {
        CHECK(w.at(1, p) == doctest::Approx(std::cos(pi * p / 4) / 8).epsilon(1e-12));
        CHECK(std::abs(w.at(3, p)) < 1e-13);
    }
    // a relative phase rotates the fringe pattern
    WignerGrid wp = wigner_of(make_state(n, StateSpec::superposition(0, 1, pi / 2)));
    for (int p = 0; p < 8; p++)
        CHECK(wp.at(1, p) == doctest::Approx(-std::sin(pi * p / 4) / 8).epsilon(1e-12));
}

TEST_CASE("interference doubles when the classical halves are removed") {
    Dimension n(4);
    WignerGrid w = wigner_of(make_state(n, StateSpec::superposition(0, 1, 0.0)));
    WignerGrid w0 = wigner_of(make_state(n, StateSpec::position(0)));
    WignerGrid w1 = wigner_of(make_state(n, StateSpec::position(1)));
    for (int p = 0; p < 8; p++) {
        double delta = 2 * w.at(1, p) - w0.at(1, p) - w1.at(1, p);
        CHECK(delta == doctest::Approx(std::cos(pi * p / 4) / 4).epsilon(1e-12));
    }
}

TEST_CASE("superposition rejects coincident peaks") {
    CHECK_THROWS_AS(make_state(Dimension(4), StateSpec::superposition(1, 5, 0.0)), error);
}

TEST_CASE("maximally mixed state is uniform on the doubly even points") {
    Dimension n(4);
    WignerGrid w = wigner_of(make_state(n, StateSpec::mixed()));
    for (int q = 0; q < 8; q++)
        for (int p = 0; p < 8; p++) {
            double want = (q % 2 == 0 && p % 2 == 0) ? 1.0 / 16 : 0.0;
            CHECK(std::abs(w.at(q, p) - want) < 1e-14);
        }
}

TEST_CASE("gaussian wavepacket is a normalised pure state centred as asked") {
    Dimension n(16);
    DensityMatrix rho = gaussian_wavepacket(n, 8, 3, 2.0);
    CHECK(rho.purity() == doctest::Approx(1.0).epsilon(1e-12));
    WignerGrid w = wigner_of(rho);
    CHECK(std::abs(w.sum() - 1.0) < 1e-12);

    RVec mq = marginal(w, MarginalFamily::position);
    RVec mp = marginal(w, MarginalFamily::momentum);
    int argq = 0, argp = 0;
    for (int j = 0; j < 16; j++) {
        if (mq(j) > mq(argq)) argq = j;
        if (mp(j) > mp(argp)) argp = j;
    }
    CHECK(argq == 8);
    CHECK(argp == 3);
    CHECK_THROWS_AS(gaussian_wavepacket(n, 0, 0, 0.0), error);
}

TEST_CASE("raw amplitudes are normalised and validated") {
    Dimension n(2);
    CVec amp(2);
    amp << cxd(3, 0), cxd(0, 4);
    DensityMatrix rho = make_state(n, StateSpec::raw(amp));
    CHECK(rho.matrix()(0, 0).real() == doctest::Approx(9.0 / 25));
    CHECK(rho.matrix()(1, 1).real() == doctest::Approx(16.0 / 25));

    CVec wrong(3);
    wrong.setOnes();
    CHECK_THROWS_AS(make_state(n, StateSpec::raw(wrong)), error);
    CHECK_THROWS_AS(make_state(n, StateSpec::raw(CVec::Zero(2))), error);
}

TEST_CASE("state grammar parses every documented form") {
    CHECK(StateSpec::parse("pos:3").kind == StateSpec::Kind::position);
    CHECK(StateSpec::parse("pos:3").q0 == 3);
    CHECK(StateSpec::parse("mom:2").k0 == 2);
    auto sup = StateSpec::parse("super:0,3,1.5");
    CHECK(sup.q0 == 0);
    CHECK(sup.q1 == 3);
    CHECK(sup.phi == doctest::Approx(1.5));
    CHECK(StateSpec::parse("mixed").kind == StateSpec::Kind::mixed);
    auto g = StateSpec::parse("gauss:4,1,1.25");
    CHECK(g.q0 == 4);
    CHECK(g.p0 == 1);
    CHECK(g.s == doctest::Approx(1.25));

    const char* path = "raw_state_test.txt";
    {
        std::ofstream f(path);
        f << "0.6,0\n0,0.8\n";
    }
    auto raw = StateSpec::parse(std::string("raw:@") + path);
    CHECK(raw.amplitudes.size() == 2);
    CHECK(std::abs(raw.amplitudes(1) - cxd(0, 0.8)) < 1e-15);
    std::remove(path);

    for (const char* bad : {"", "pos", "pos:", "pos:x", "super:1,2", "gauss:1,2",
                            "banana:3", "mixed:1", "raw:@/no/such/file"})
        CHECK_THROWS_AS(StateSpec::parse(bad), error);
}

TEST_CASE("specs describe themselves") {
    CHECK(!StateSpec::parse("pos:1").describe().empty());
    CHECK(!StateSpec::mixed().describe().empty());
}
