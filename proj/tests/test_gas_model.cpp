#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "grp/gas_model.hpp"
#include "grp/riemann_exact.hpp"
#include "oracles.hpp"

using namespace grp;

TEST_CASE("gas model rejects gamma <= 1") {
  CHECK_THROWS_AS(GasModel(1.0), ValidationError);
  CHECK_THROWS_AS(GasModel(0.9), ValidationError);
  const GasModel gas(1.4);
  CHECK(gas.mu2() == doctest::Approx((1.4 - 1.0) / (1.4 + 1.0)).epsilon(1e-15));
}

TEST_CASE("sound speed") {
  const GasModel gas(1.4);
  CHECK(sound_speed({1.0, 0.0, 1.0}, gas) == doctest::Approx(std::sqrt(1.4)).epsilon(1e-12));
  CHECK(sound_speed({1.4, 0.0, 1.0}, gas) == doctest::Approx(1.0).epsilon(1e-14));
  // left state of the extreme-ratio benchmark: p/rho = 1
  CHECK(sound_speed({1e4, 0.0, 1e4}, gas) == doctest::Approx(std::sqrt(1.4)).epsilon(1e-12));
  // c^2 rho = gamma p identically
  oracle::Rng rng(11);
  for (int k = 0; k < 1000; ++k) {
    const PrimitiveState s = rng.state();
    const double c = sound_speed(s, gas);
    CHECK(c * c * s.rho == doctest::Approx(1.4 * s.p).epsilon(1e-13));
  }
}

TEST_CASE("primitive/conserved conversions") {
  const GasModel gas(1.4);
  const ConservedState c = primitive_to_conserved({1.0, 0.0, 1.0}, gas);
  CHECK(c.rho == doctest::Approx(1.0));
  CHECK(c.mom == doctest::Approx(0.0));
  CHECK(c.ene == doctest::Approx(2.5).epsilon(1e-14));

  const ConservedState c2 = primitive_to_conserved({0.125, 0.0, 0.1}, gas);
  CHECK(c2.ene == doctest::Approx(0.25).epsilon(1e-14));

  SUBCASE("round trip over random states") {
    oracle::Rng rng(7);
    for (int k = 0; k < 1000000; ++k) {
      const PrimitiveState s = rng.state();
      const PrimitiveState back = conserved_to_primitive(primitive_to_conserved(s, gas), gas);
      CHECK(std::abs(back.rho - s.rho) <= 1e-13 * s.rho);
      CHECK(std::abs(back.u - s.u) <= 1e-13 * (std::abs(s.u) + 1.0));
      CHECK(std::abs(back.p - s.p) <= 1e-13 * s.p);
    }
  }

  SUBCASE("non-physical recovery reported") {
    CHECK_THROWS_AS(conserved_to_primitive({1.0, 2.0, 1.0}, gas), NonPhysicalState);
    CHECK_THROWS_AS(conserved_to_primitive({-1.0, 0.0, 1.0}, gas), NonPhysicalState);
  }
}

TEST_CASE("entropy indicator") {
  const GasModel gas(1.4);
  CHECK(entropy_indicator({1.0, 0.0, 1.0}, gas) == doctest::Approx(1.0));
  CHECK(entropy_indicator({2.0, 0.0, std::pow(2.0, 1.4)}, gas) ==
        doctest::Approx(1.0).epsilon(1e-13));

  SUBCASE("invariant under the isentropic map") {
    oracle::Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
      const PrimitiveState s = rng.state();
      const double k = rng.log_uniform(0.1, 10.0);
      const PrimitiveState mapped{k * s.rho, s.u, std::pow(k, 1.4) * s.p};
      CHECK(entropy_indicator(mapped, gas) ==
            doctest::Approx(entropy_indicator(s, gas)).epsilon(1e-12));
    }
  }

  SUBCASE("increases across admissible shocks") {
    oracle::Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      const PrimitiveState pre = rng.state();
      const double p_post = pre.p * rng.log_uniform(1.001, 100.0);
      const double rho_post = hugoniot_density(p_post, pre, gas);
      CHECK(entropy_indicator({rho_post, 0.0, p_post}, gas) > entropy_indicator(pre, gas));
    }
  }
}

TEST_CASE("initial entropy gradient") {
  const GasModel gas(1.4);
  const PrimitiveState s{1.0, 0.0, 1.0};

  CHECK(initial_entropy_gradient(s, {0.0, 0.3, 1.0}, gas) ==
        doctest::Approx(2.5).epsilon(1e-14));

  SUBCASE("vanishes on isentropic slope pairs") {
    oracle::Rng rng(13);
    for (int trial = 0; trial < 500; ++trial) {
      const PrimitiveState w = rng.state();
      const double c2 = 1.4 * w.p / w.rho;
      const double drho = rng.uniform(-2.0, 2.0);
      const SlopeState d{drho, rng.uniform(-2.0, 2.0), c2 * drho};
      CHECK(std::abs(initial_entropy_gradient(w, d, gas)) <= 1e-12 * (std::abs(d.dp) + 1.0));
    }
  }

  SUBCASE("matches the finite-difference Gibbs form on reconstructed data") {
    oracle::Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
      const PrimitiveState w = rng.state(0.5, 2.0, 1.0);
      const SlopeState d = rng.slope(0.2);
      auto e_of = [&](double x) {
        return (w.p + d.dp * x) / (0.4 * (w.rho + d.drho * x));
      };
      auto rho_of = [&](double x) { return w.rho + d.drho * x; };
      // Ts' = e' - (p/rho^2) rho', finite differences refine with h
      double prev = 1e300;
      for (double h : {1e-4, 1e-5, 1e-6}) {
        const double fd = oracle::central_diff(e_of, 0.0, h) -
                          w.p / (w.rho * w.rho) * oracle::central_diff(rho_of, 0.0, h);
        const double err = std::abs(fd - initial_entropy_gradient(w, d, gas));
        CHECK(err <= std::abs(prev) + 1e-7);
        prev = err;
      }
      const double fd = oracle::central_diff(e_of, 0.0, 1e-6) -
                        w.p / (w.rho * w.rho) * oracle::central_diff(rho_of, 0.0, 1e-6);
      CHECK(initial_entropy_gradient(w, d, gas) ==
            doctest::Approx(fd).epsilon(1e-7));
    }
  }
}

TEST_CASE("psi gradient") {
  const GasModel gas(1.4);
  const PrimitiveState s{1.0, 0.0, 1.0};
  CHECK(psi_gradient(s, {}, gas) == 0.0);
  CHECK(psi_gradient(s, {0.0, 1.0, 0.0}, gas) == doctest::Approx(1.0).epsilon(1e-14));

  SUBCASE("matches finite differences of u + 2c/(gamma-1)") {
    oracle::Rng rng(19);
    for (int trial = 0; trial < 200; ++trial) {
      const PrimitiveState w = rng.state(0.5, 2.0, 1.0);
      const SlopeState d = rng.slope(0.2);
      auto psi_of = [&](double x) {
        const double rho = w.rho + d.drho * x;
        const double p = w.p + d.dp * x;
        const double u = w.u + d.du * x;
        return u + 2.0 / 0.4 * std::sqrt(1.4 * p / rho);
      };
      const double fd = oracle::central_diff(psi_of, 0.0, 1e-6);
      CHECK(psi_gradient(w, d, gas) == doctest::Approx(fd).epsilon(1e-7));
    }
  }
}

TEST_CASE("euler flux and mirror maps") {
  const GasModel gas(1.4);
  const FluxVector f = euler_flux({1.0, 1.0, 1.0}, gas);
  CHECK(f[0] == doctest::Approx(1.0));
  CHECK(f[1] == doctest::Approx(2.0));
  // u (rho E + p) with rho E = 2.5 + 0.5
  CHECK(f[2] == doctest::Approx(4.0).epsilon(1e-14));

  const PrimitiveState s{2.0, 3.0, 4.0};
  CHECK(mirror(mirror(s)).u == s.u);
  const SlopeState d{1.0, 2.0, 3.0};
  const SlopeState m = mirror(d);
  CHECK(m.drho == -1.0);
  CHECK(m.du == 2.0);
  CHECK(m.dp == -3.0);
}
