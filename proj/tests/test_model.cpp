#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tcphonon/model.hpp"

using namespace tcphonon;
using doctest::Approx;

TEST_SUITE("model") {

TEST_CASE("params_from_physical")
{
    ModelParams m = params_from_physical({1.0, 0.5, 1.0});
    CHECK(m.s == 1.0);
    CHECK(m.M == Approx(0.5).epsilon(1e-15));
    CHECK(m.beta == Approx(0.8660254037844386).epsilon(1e-15));
    CHECK(m.gamma1 == Approx(0.375).epsilon(1e-15));
    CHECK(m.gamma2 == 0.0);
    CHECK(m.gamma3 == 0.0);
    CHECK(m.xi == 0.0);

    m = params_from_physical({5.0, 0.6, 10.0});
    CHECK(m.M == Approx(3.0).epsilon(1e-15));
    CHECK(m.beta == Approx(4.0).epsilon(1e-15));
    CHECK(m.gamma1 == Approx(0.08).epsilon(1e-15));

    m = params_from_physical({1.0, 1.0, 1.0});
    CHECK(m.M == 1.0);
    CHECK(m.beta == 0.0);
    CHECK(m.gamma1 == 0.0);
}

TEST_CASE("params_from_physical rejects invalid input")
{
    CHECK_THROWS_AS(params_from_physical({1.0, 0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(params_from_physical({1.0, 1.01, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(params_from_physical({0.0, 0.5, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(params_from_physical({1.0, 0.5, -1.0}), std::invalid_argument);
    CHECK_THROWS_AS(params_from_physical({NAN, 0.5, 1.0}), std::invalid_argument);
}

TEST_CASE("physical_from_params")
{
    ModelParams m;
    m.M = 3.0;
    m.beta = 4.0;
    PhysicalParams p = physical_from_params(m);
    CHECK(p.Lambda == Approx(5.0).epsilon(1e-15));
    CHECK(p.cs == Approx(0.6).epsilon(1e-15));

    m.M = 1.0;
    m.beta = 0.0;
    p = physical_from_params(m);
    CHECK(p.Lambda == 1.0);
    CHECK(p.cs == 1.0);

    m.beta = 1.0;
    p = physical_from_params(m);
    CHECK(p.Lambda == Approx(1.4142136).epsilon(1e-7));
    CHECK(p.cs == Approx(0.7071068).epsilon(1e-7));

    m.M = -1.0;
    CHECK_THROWS_AS(physical_from_params(m), std::invalid_argument);
    m.M = 1.0;
    m.s = 1.5;
    CHECK_THROWS_AS(physical_from_params(m), std::invalid_argument);
}

TEST_CASE("round trip")
{
    for (double cs : {0.01, 0.3, 0.5, 0.77, 0.999, 1.0}) {
        for (double L : {0.1, 1.0, 7.0}) {
            const PhysicalParams p{L, cs, 2.0};
            const PhysicalParams back = physical_from_params(params_from_physical(p));
            CHECK(back.Lambda == Approx(L).epsilon(1e-14));
            CHECK(back.cs == Approx(cs).epsilon(1e-14));
            CHECK(back.Omega == p.Omega);
        }
    }
}

TEST_CASE("sound speed never exceeds s")
{
    for (double s : {0.1, 0.5, 1.0}) {
        for (double beta : {0.0, 0.3, 5.0}) {
            ModelParams m;
            m.s = s;
            m.beta = beta;
            m.M = 0.7;
            const double cs = physical_from_params(m).cs;
            CHECK(cs > 0.0);
            CHECK(cs <= s);
        }
    }
}

TEST_CASE("background orbit")
{
    auto phi = background_orbit({0.0, {1.0, 0.0}}, 7.0);
    CHECK(phi[0] == 1.0);
    CHECK(phi[1] == 0.0);

    phi = background_orbit({1.0, {1.0, 0.0}}, std::numbers::pi / 2);
    CHECK(phi[0] == Approx(0.0).epsilon(1e-15));
    CHECK(std::abs(phi[0]) < 1e-15);
    CHECK(phi[1] == Approx(1.0).epsilon(1e-15));

    phi = background_orbit({2.0, {0.6, 0.8}}, std::numbers::pi);
    CHECK(phi[0] == Approx(0.6).epsilon(1e-14));
    CHECK(phi[1] == Approx(0.8).epsilon(1e-14));

    for (double t : {-1e4, -3.3, 0.1, 99.0, 1e4}) {
        phi = background_orbit({1.0, {0.6, 0.8}}, t);
        CHECK(std::abs(std::hypot(phi[0], phi[1]) - 1.0) < 1e-14);
    }
}

}
