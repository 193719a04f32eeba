#include <doctest.h>

#include <cmath>
#include <random>

#include "squidnoise/first_stage.hpp"
#include "squidnoise/presets.hpp"

using namespace squidnoise;

namespace {
FirstStageSquid c1() { return preset_first_stage("c1"); }

std::mt19937_64 rng(0xf1257a6eULL);

FirstStageSquid random_squid() {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return FirstStageSquid(1e-6 * std::pow(10.0, u(rng)),      // 1..10 uA
                         1.0 + 20.0 * u(rng),                // 1..21 Ohm
                         50e-12 * std::pow(10.0, u(rng)),    // 50..500 pH
                         0.05 + 0.5 * u(rng));               // 50..550 mK
}

InputCoupling random_coupling() {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return InputCoupling(1e-9 * std::pow(10.0, 3.0 * u(rng)), 0.01 + 0.99 * u(rng));
}
}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(FirstStageSquid(0.0, 6.0, 200e-12, 0.15), std::invalid_argument);
  CHECK_THROWS_AS(FirstStageSquid(6.3e-6, -6.0, 200e-12, 0.15), std::invalid_argument);
  CHECK_THROWS_AS(FirstStageSquid(6.3e-6, 6.0, 200e-12, 0.15, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(InputCoupling(0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(InputCoupling(100e-9, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(InputCoupling(100e-9, 1.5), std::invalid_argument);
}

TEST_CASE("figures of merit for the c1 device") {
  const auto fom = tc_figures_of_merit(c1());
  CHECK(fom.beta_L == doctest::Approx(0.60933328914).epsilon(1e-9));
  CHECK(fom.gamma == doctest::Approx(9.98845278e-4).epsilon(1e-6));
  CHECK_FALSE(fom.beta_C.has_value());  // capacitance unpublished
  CHECK(fom.advisories.empty());
}

TEST_CASE("beta_L is one when Lsq*I0 equals the flux quantum") {
  const double lsq = 200e-12;
  const FirstStageSquid s(constants::flux_quantum / lsq, 6.0, lsq, 0.15);
  CHECK(tc_figures_of_merit(s).beta_L == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("beta_C present iff a junction capacitance is given") {
  const FirstStageSquid s(6.3e-6, 6.0, 200e-12, 0.15, 0.4e-12);
  const auto fom = tc_figures_of_merit(s);
  REQUIRE(fom.beta_C.has_value());
  CHECK(*fom.beta_C == doctest::Approx(constants::pi * 6.3e-6 * 36.0 * 0.4e-12 /
                                       constants::flux_quantum)
                           .epsilon(1e-12));
}

TEST_CASE("advisory flags outside the optimized regime") {
  // hot shunts: gamma over 0.025
  const FirstStageSquid hot(6.3e-6, 6.0, 200e-12, 4.2);
  const auto fom_hot = tc_figures_of_merit(hot);
  CHECK(fom_hot.gamma > 0.025);
  REQUIRE(fom_hot.advisories.size() >= 1);

  // tiny loop: beta_L far below 1/2
  const FirstStageSquid small_loop(1e-6, 6.0, 50e-12, 0.15);
  CHECK_FALSE(tc_figures_of_merit(small_loop).advisories.empty());
}

TEST_CASE("transfer functions of the c1 device") {
  const auto tf = transfer_functions(c1());
  CHECK(tf.dV_dPhi == doctest::Approx(3.0e10).epsilon(1e-12));
  CHECK(tf.R_dyn == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(tf.dI_dPhi == doctest::Approx(-5.0e9).epsilon(1e-12));
}

TEST_CASE("doubling Rj doubles dV_dPhi and leaves dI_dPhi unchanged") {
  const auto base = transfer_functions(c1());
  FirstStageSquid doubled(6.3e-6, 12.0, 200e-12, 0.15);
  const auto tf = transfer_functions(doubled);
  CHECK(tf.dV_dPhi == doctest::Approx(2.0 * base.dV_dPhi).epsilon(1e-14));
  CHECK(tf.dI_dPhi == doctest::Approx(base.dI_dPhi).epsilon(1e-15));
}

TEST_CASE("triple product identity holds for any device") {
  for (int i = 0; i < 50; ++i) {
    const auto tf = transfer_functions(random_squid());
    CHECK(tf.dI_dPhi * (1.0 / tf.dV_dPhi) * tf.R_dyn == doctest::Approx(-1.0).epsilon(1e-12));
  }
}

TEST_CASE("bare output noise of the c1 device") {
  const auto n = bare_output_noise(c1());
  CHECK(n.S_VVout == doctest::Approx(1.98813456e-22).epsilon(1e-9));
  CHECK(n.S_IIcirc == doctest::Approx(3.79678475e-24).epsilon(1e-8));
  CHECK(n.S_IVcirc == doctest::Approx(2.4851682e-23).epsilon(1e-8));
}

TEST_CASE("bare noise scales with shunt temperature") {
  const auto base = bare_output_noise(c1());
  const FirstStageSquid cold(6.3e-6, 6.0, 200e-12, 0.075);
  const auto n = bare_output_noise(cold);
  CHECK(n.S_VVout == doctest::Approx(0.5 * base.S_VVout).epsilon(1e-14));
  CHECK(n.S_IIcirc == doctest::Approx(0.5 * base.S_IIcirc).epsilon(1e-14));
  CHECK(n.S_IVcirc == doctest::Approx(0.5 * base.S_IVcirc).epsilon(1e-14));
}

TEST_CASE("bare cross-correlation coefficient is 12/sqrt(176) for any device") {
  for (int i = 0; i < 20; ++i) {
    const auto n = bare_output_noise(random_squid());
    CHECK(n.S_IVcirc / std::sqrt(n.S_VVout * n.S_IIcirc) ==
          doctest::Approx(12.0 / std::sqrt(176.0)).epsilon(1e-12));
  }
}

TEST_CASE("input-referred noise of the c1 device at kappa^2 Lin = 1 nH") {
  // kappa = 0.1 into 100 nH
  const InputCoupling coupling(100e-9, 0.1);
  const auto omega = AngularFrequency::from_hz(30e6);
  const auto n = input_referred_noise(c1(), coupling, omega);
  CHECK(n.S_II.value == doctest::Approx(1.1045192e-24).epsilon(1e-9));
  CHECK(n.S_VV.value == doctest::Approx(2.69803897e-26).epsilon(1e-8));
  CHECK(n.imS_IV.value == doctest::Approx(1.56147723e-25).epsilon(1e-8));
}

TEST_CASE("frequency dependence of the input-referred spectra") {
  const InputCoupling coupling(100e-9, 0.1);
  const auto n1 = input_referred_noise(c1(), coupling, AngularFrequency::from_hz(20e6));
  const auto n2 = input_referred_noise(c1(), coupling, AngularFrequency::from_hz(40e6));
  CHECK(n2.S_II.value == doctest::Approx(n1.S_II.value).epsilon(1e-14));
  CHECK(n2.S_VV.value == doctest::Approx(4.0 * n1.S_VV.value).epsilon(1e-12));
  CHECK(n2.imS_IV.value == doctest::Approx(2.0 * n1.imS_IV.value).epsilon(1e-12));
}

TEST_CASE("coupling dependence cancels in the right combinations") {
  const auto omega = AngularFrequency::from_hz(25e6);
  for (int i = 0; i < 30; ++i) {
    const auto squid = random_squid();
    const auto ca = random_coupling();
    const auto cb = random_coupling();
    const auto na = input_referred_noise(squid, ca, omega);
    const auto nb = input_referred_noise(squid, cb, omega);
    const double k2a = ca.kappa * ca.kappa * ca.Lin;
    const double k2b = cb.kappa * cb.kappa * cb.Lin;
    CHECK(na.S_II.value * k2a == doctest::Approx(nb.S_II.value * k2b).epsilon(1e-12));
    CHECK(na.S_VV.value / k2a == doctest::Approx(nb.S_VV.value / k2b).epsilon(1e-12));
    CHECK(na.imS_IV.value == doctest::Approx(nb.imS_IV.value).epsilon(1e-12));
  }
}

TEST_CASE("correlation fraction is exactly 144/176") {
  const auto omega = AngularFrequency::from_hz(80e6);
  for (int i = 0; i < 30; ++i) {
    const auto n = input_referred_noise(random_squid(), random_coupling(), omega);
    const double fraction =
        n.imS_IV.value * n.imS_IV.value / (n.S_VV.value * n.S_II.value);
    CHECK(fraction == doctest::Approx(144.0 / 176.0).epsilon(1e-12));
  }
}

TEST_CASE("input-referred and bare noise are consistent through the coupling") {
  for (int i = 0; i < 30; ++i) {
    const auto squid = random_squid();
    const auto coupling = random_coupling();
    const auto omega = AngularFrequency::from_hz(5e6 + 295e6 * (i / 30.0));
    const auto referred = input_referred_noise(squid, coupling, omega);
    const auto bare = bare_output_noise(squid);
    const auto tf = transfer_functions(squid);
    const double m = mutual_inductance(squid, coupling);
    CHECK(referred.S_II.value ==
          doctest::Approx(bare.S_VVout / (tf.dV_dPhi * tf.dV_dPhi * m * m)).epsilon(1e-12));
    const double w = omega.rad_per_s();
    CHECK(referred.S_VV.value == doctest::Approx(w * w * m * m * bare.S_IIcirc).epsilon(1e-12));
  }
}

TEST_CASE("uncoupled energy sensitivity of the c1 device") {
  CHECK(epsilon_uc_first_stage(c1()) / constants::hbar ==
        doctest::Approx(5.2368135683).epsilon(1e-9));
  // doubling the shunt resistance halves it
  const FirstStageSquid fast(6.3e-6, 12.0, 200e-12, 0.15);
  CHECK(epsilon_uc_first_stage(fast) ==
        doctest::Approx(0.5 * epsilon_uc_first_stage(c1())).epsilon(1e-14));
}

TEST_CASE("epsilon_uc equals M^2 S_II / (2 Lsq) for any coupling") {
  const auto omega = AngularFrequency::from_hz(42e6);
  for (int i = 0; i < 30; ++i) {
    const auto squid = random_squid();
    const auto coupling = random_coupling();
    const auto n = input_referred_noise(squid, coupling, omega);
    const double m = mutual_inductance(squid, coupling);
    CHECK(epsilon_uc_first_stage(squid) ==
          doctest::Approx(m * m * n.S_II.value / (2.0 * squid.Lsq)).epsilon(1e-12));
  }
}
