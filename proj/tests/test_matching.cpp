#include <doctest.h>

#include <cmath>
#include <random>

#include "squidnoise/matching.hpp"
#include "squidnoise/presets.hpp"

using namespace squidnoise;
using constants::hbar;
using constants::k_boltzmann;

namespace {

const double k_sqrt11 = std::sqrt(11.0);
const double k_sqrt2 = std::sqrt(2.0);

FirstStageSquid c1() { return preset_first_stage("c1"); }
InputCoupling ref_coupling() { return default_coupling(); }
double k2lin(const InputCoupling& c) { return c.kappa * c.kappa * c.Lin; }

NoiseBudget tc_budget(double f_hz) {
  return first_stage_budget(c1(), ref_coupling(), AngularFrequency::from_hz(f_hz));
}

// kB Tj Lsq omega / Rj for the c1 device
double energy_scale(double f_hz) {
  const auto s = c1();
  return k_boltzmann * s.Tj * s.Lsq * 2.0 * constants::pi * f_hz / s.Rj;
}

// a chain whose follow-on contribution is negligible
ChainConfig quiet_chain() {
  ChainConfig chain = default_chain();
  chain.second_stage.proto.Phi_n_squid = 1e-30;
  chain.preamp_bands = {{0.0, 300e6, OpAmpPreamp{0.0, 0.0, 0.0, 0.0, 300e6}}};
  return chain;
}

}  // namespace

TEST_CASE("noise temperature against a real source") {
  const auto b = tc_budget(30e6);
  // at the optimal resistance the two terms balance
  const double r_opt = optimal_real_source(b);
  CHECK(noise_temperature_real_source(b, r_opt) ==
        doctest::Approx(std::sqrt(b.S_VV.value * b.S_II_sys.value) / (2.0 * k_boltzmann))
            .epsilon(1e-12));
  // imprecision dominates for large resistances
  CHECK(noise_temperature_real_source(b, 100.0 * r_opt) >
        10.0 * noise_temperature_real_source(b, r_opt));
  CHECK(noise_temperature_real_source(b, r_opt / 100.0) >
        10.0 * noise_temperature_real_source(b, r_opt));
  CHECK_THROWS_AS(noise_temperature_real_source(b, 0.0), std::domain_error);
  CHECK_THROWS_AS(noise_temperature_real_source(b, -1.0), std::domain_error);
}

TEST_CASE("first-stage minimum over real sources carries the 2 sqrt(11) coefficient") {
  for (double f : {5e6, 30e6, 300e6}) {
    const auto b = tc_budget(f);
    const double t_at_opt = noise_temperature_real_source(b, optimal_real_source(b));
    CHECK(k_boltzmann * t_at_opt / energy_scale(f) ==
          doctest::Approx(2.0 * k_sqrt11).epsilon(1e-12));
    CHECK(t_min_on_resonance(b) == doctest::Approx(t_at_opt).epsilon(1e-12));
  }
}

TEST_CASE("optimal real source of the bare first stage") {
  const double f = 30e6;
  const auto coupling = ref_coupling();
  const auto b = first_stage_budget(c1(), coupling, AngularFrequency::from_hz(f));
  const double expected =
      k_sqrt11 / 4.0 * k2lin(coupling) * 2.0 * constants::pi * f;
  CHECK(optimal_real_source(b) == doctest::Approx(expected).epsilon(1e-12));

  // quadrupled backaction doubles the optimal resistance
  NoiseBudget loud = b;
  loud.S_VV = Psd(4.0 * b.S_VV.value, PsdKind::voltage);
  CHECK(optimal_real_source(loud) == doctest::Approx(2.0 * optimal_real_source(b)).epsilon(1e-12));

  // follow-on imprecision pulls the noise resistance down
  NoiseBudget with_follow_on = b;
  with_follow_on.S_II_sys = Psd(1.7 * b.S_II_sys.value, PsdKind::current);
  CHECK(optimal_real_source(with_follow_on) < optimal_real_source(b));
}

TEST_CASE("complex-source minimum carries the 2 sqrt(2) coefficient") {
  for (double f : {5e6, 30e6, 300e6}) {
    const auto b = tc_budget(f);
    CHECK(k_boltzmann * t_min_complex(b) / energy_scale(f) ==
          doctest::Approx(2.0 * k_sqrt2).epsilon(1e-12));
    // the complex match buys sqrt(2/11) over the real match
    CHECK(t_min_complex(b) / t_min_on_resonance(b) ==
          doctest::Approx(std::sqrt(2.0 / 11.0)).epsilon(1e-12));
  }
}

TEST_CASE("complex minimum without correlations collapses to the real-source one") {
  NoiseBudget b = tc_budget(30e6);
  b.imS_IV = Psd(0.0, PsdKind::cross_iv);
  CHECK(t_min_complex(b) == doctest::Approx(t_min_on_resonance(b)).epsilon(1e-14));
  const auto z = optimal_complex_source(b);
  CHECK(z.im == 0.0);
  CHECK(z.re == doctest::Approx(optimal_real_source(b)).epsilon(1e-14));
}

TEST_CASE("a real output correlation adds half itself to the minimum") {
  NoiseBudget b = tc_budget(30e6);
  const double t0 = t_min_complex(b);
  const double re_siv = 0.3 * std::sqrt(b.S_VV.value * b.S_II_sys.value);
  b.reS_IV = Psd(re_siv, PsdKind::cross_iv);
  CHECK(t_min_complex(b) == doctest::Approx(t0 + 0.5 * re_siv / k_boltzmann).epsilon(1e-12));
}

TEST_CASE("the complex match never loses to the real match") {
  std::mt19937_64 rng(0x7e57);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto omega = AngularFrequency::from_hz(30e6);
  for (int i = 0; i < 100; ++i) {
    const double s_ii = 1e-26 * std::pow(10.0, 4.0 * u(rng));
    const double s_vv = 1e-28 * std::pow(10.0, 4.0 * u(rng));
    const double rho = -0.99 + 1.98 * u(rng);
    const NoiseBudget b{omega, Psd(s_ii, PsdKind::current), Psd(s_vv, PsdKind::voltage),
                        Psd(rho * std::sqrt(s_ii * s_vv), PsdKind::cross_iv),
                        Psd(0.0, PsdKind::cross_iv)};
    CHECK(t_min_complex(b) <= t_min_on_resonance(b));
  }
}

TEST_CASE("inconsistent budgets are rejected") {
  NoiseBudget b = tc_budget(30e6);
  b.imS_IV = Psd(1.1 * std::sqrt(b.S_VV.value * b.S_II_sys.value), PsdKind::cross_iv);
  CHECK_THROWS_AS(t_min_complex(b), std::domain_error);
  CHECK_THROWS_AS(optimal_complex_source(b), std::domain_error);
}

TEST_CASE("optimal complex source of the bare first stage") {
  const double f = 30e6;
  const auto coupling = ref_coupling();
  const auto b = first_stage_budget(c1(), coupling, AngularFrequency::from_hz(f));
  const auto z = optimal_complex_source(b);
  const double w_k2lin = 2.0 * constants::pi * f * k2lin(coupling);
  CHECK(z.re / w_k2lin == doctest::Approx(k_sqrt2 / 4.0).epsilon(1e-12));
  CHECK(z.im / w_k2lin == doctest::Approx(12.0 / 16.0).epsilon(1e-12));
  // evaluating the general form at the optimum reproduces the closed-form
  // minimum
  CHECK(noise_temperature(b, z) == doctest::Approx(t_min_complex(b)).epsilon(1e-9));
}

TEST_CASE("eta of the bare first stage is 3.70 at every frequency") {
  const double expected = 4.0 * k_sqrt2 * k_boltzmann * 0.15 * 200e-12 / (hbar * 6.0);
  CHECK(expected == doctest::Approx(3.7029863859).epsilon(1e-9));
  for (double f : {5e6, 30e6, 100e6, 300e6})
    CHECK(eta(tc_budget(f)) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("on-resonance SQL ratio of the c1 device") {
  CHECK(on_res_sql_ratio(c1()) == doctest::Approx(8.6842728515).epsilon(1e-9));
  // halving the shunt temperature halves it
  const FirstStageSquid cold(6.3e-6, 6.0, 200e-12, 0.075);
  CHECK(on_res_sql_ratio(cold) == doctest::Approx(0.5 * on_res_sql_ratio(c1())).epsilon(1e-12));
  // fixed gap to eta
  CHECK(on_res_sql_ratio(c1()) / eta(tc_budget(30e6)) ==
        doctest::Approx(std::sqrt(11.0 / 2.0)).epsilon(1e-12));
}

TEST_CASE("epsilon_uc of a quiet chain reduces to the first-stage value") {
  const auto chain = quiet_chain();
  for (double f : {5e6, 30e6, 300e6}) {
    CHECK(epsilon_uc_system(chain, AngularFrequency::from_hz(f)) / hbar ==
          doctest::Approx(5.2368135683).epsilon(1e-9));
  }
}

TEST_CASE("epsilon_uc grows with the rolloff when the second stage dominates") {
  ChainConfig chain = default_chain();
  // make the follow-on overwhelm the first stage
  chain.preamp_bands = {{0.0, 300e6, OpAmpPreamp{100e-9, 0.0, 0.0, 0.0, 300e6}}};
  const double tau = coupling_time_constant(chain.second_stage,
                                            transfer_functions(chain.first_stage).R_dyn);
  const auto w1 = AngularFrequency::from_hz(40e6);
  const auto w2 = AngularFrequency::from_hz(250e6);
  const double ratio = epsilon_uc_system(chain, w2) / epsilon_uc_system(chain, w1);
  const double rolloff_ratio = (1.0 + std::pow(w2.rad_per_s() * tau, 2)) /
                               (1.0 + std::pow(w1.rad_per_s() * tau, 2));
  CHECK(ratio == doctest::Approx(rolloff_ratio).epsilon(1e-3));
}

TEST_CASE("on-resonance match of the bare first stage") {
  const double quality = 1e6;
  const auto b = tc_budget(30e6);
  const auto match = match_on_resonance(b, k2lin(ref_coupling()), quality);
  CHECK(match.kappa_g * match.kappa_g ==
        doctest::Approx(4.0 / k_sqrt11 / quality).epsilon(1e-12));
  CHECK(k_boltzmann * match.T_min / energy_scale(30e6) ==
        doctest::Approx(2.0 * k_sqrt11).epsilon(1e-12));
}

TEST_CASE("follow-on noise strengthens the match and raises its temperature") {
  const auto chain = default_chain();
  const auto quiet = quiet_chain();
  const auto res = resonator_from_target(30e6, 1e6, 1e-6, 0.01);
  const auto loud_match = match_on_resonance(chain, res);
  const auto quiet_match = match_on_resonance(quiet, res);
  CHECK(loud_match.kappa_g > quiet_match.kappa_g);
  CHECK(loud_match.T_min > quiet_match.T_min);
}

TEST_CASE("the matched coupling is a strict noise-temperature minimum") {
  const auto chain = default_chain();
  const auto res = resonator_from_target(30e6, 1e6, 1e-6, 0.01);
  const auto rp = resonance(res);
  const auto omega0 = AngularFrequency::from_rad_per_s(rp.omega0);
  const auto match = match_on_resonance(chain, res);

  const auto t_at = [&](double kappa_g) {
    // rebuild the chain at the coupling that realizes this kappa_g
    const double new_k2lin = kappa_g * kappa_g * res.Ltot;
    ChainConfig perturbed = chain;
    perturbed.coupling = InputCoupling(new_k2lin / 0.01, 0.1);
    return noise_temperature_real_source(system_noise_budget(perturbed, omega0), res.R);
  };
  const double at_match = t_at(match.kappa_g);
  CHECK(at_match == doctest::Approx(match.T_min).epsilon(1e-9));
  CHECK(t_at(1.1 * match.kappa_g) > at_match);
  CHECK(t_at(0.9 * match.kappa_g) > at_match);
}

TEST_CASE("the match fails loudly when the resonator is too lossy") {
  const auto b = tc_budget(30e6);
  // the bare first stage needs kappa_g^2 = 1.206/Q, unreachable at Q = 1.1
  CHECK_THROWS_AS(match_on_resonance(b, k2lin(ref_coupling()), 1.1), std::domain_error);
  CHECK_THROWS_AS(match_on_resonance(b, k2lin(ref_coupling()), 0.5), std::invalid_argument);
}

TEST_CASE("scan-optimal imprecision closed form") {
  const auto omega = AngularFrequency::from_hz(30e6);
  const double hw = hbar * omega.rad_per_s();
  // n = 0, eta = 1: exactly half a quantum per unit resistance
  CHECK(scan_optimal_imprecision(omega, 2.0, 1.0, 0.0) ==
        doctest::Approx(hw / (2.0 * 2.0)).epsilon(1e-12));
  // the worked point at eta = 3.7
  CHECK(scan_optimal_imprecision(omega, 1.0, 3.7, 0.0) ==
        doctest::Approx(2.3782123202 * hw).epsilon(1e-9));
  // high occupation forces the imprecision down as eta^2/(2n+1)
  const double n_big = 1e8;
  CHECK(scan_optimal_imprecision(omega, 1.0, 3.7, n_big) ==
        doctest::Approx(hw * 3.7 * 3.7 / (2.0 * n_big + 1.0)).epsilon(1e-3));
}

TEST_CASE("scan-sensitivity match for the bare first stage") {
  const auto b = tc_budget(30e6);
  const double quality = 1e6;
  const double kg = match_scan_sensitivity(b, k2lin(ref_coupling()), quality, 0.0);
  CHECK(kg * kg * quality == doctest::Approx(4.4001023277).epsilon(1e-9));
}

TEST_CASE("scan match scales exactly as 1/Q and fails loudly past kappa_g = 1") {
  const auto chain = default_chain();
  const auto omega = AngularFrequency::from_hz(30e6);
  const auto b = system_noise_budget(chain, omega);
  const double kl = chain.coupling.kappa * chain.coupling.kappa * chain.coupling.Lin;
  const double kg_a = match_scan_sensitivity(b, kl, 1e5, 2.0);
  const double kg_b = match_scan_sensitivity(b, kl, 1e7, 2.0);
  CHECK(kg_a * kg_a * 1e5 == doctest::Approx(kg_b * kg_b * 1e7).epsilon(1e-12));
  CHECK_THROWS_AS(match_scan_sensitivity(b, kl, 1.5, 1e4), std::domain_error);
}

TEST_CASE("scan match through a tuned resonator reproduces the optimal imprecision") {
  const auto chain = default_chain();
  for (double f : {10e6, 30e6, 150e6}) {
    const auto omega = AngularFrequency::from_hz(f);
    const auto res = resonator_from_target(f, 2e6, 1e-6, 0.020);
    const double kg = match_scan_sensitivity(chain, res, omega);

    const auto b = system_noise_budget(chain, omega);
    const double kl = chain.coupling.kappa * chain.coupling.kappa * chain.coupling.Lin;
    const double s_ii_at_match = b.S_II_sys.value * kl / (kg * kg * res.Ltot);
    const double target = scan_optimal_imprecision(
        omega, res.R, eta(b), thermal_occupation(omega, res.Tres));
    CHECK(s_ii_at_match == doctest::Approx(target).epsilon(1e-9));
  }
}

TEST_CASE("detuned resonator realizes the complex-match optimum") {
  const auto b = tc_budget(30e6);
  const auto omega = AngularFrequency::from_hz(30e6);
  const auto res = detuned_resonator_for_optimum(b, 1e-6, 0.010);
  const double achieved = noise_temperature(b, impedance(res, omega));
  CHECK(achieved == doctest::Approx(t_min_complex(b)).epsilon(1e-9));
  // within 1.5% of the independently published 2.8 coefficient
  CHECK(k_boltzmann * achieved / energy_scale(30e6) == doctest::Approx(2.8).epsilon(0.015));
}

TEST_CASE("without correlations the constructed resonator sits on resonance") {
  NoiseBudget b = tc_budget(30e6);
  b.imS_IV = Psd(0.0, PsdKind::cross_iv);
  const auto res = detuned_resonator_for_optimum(b, 1e-6, 0.010);
  CHECK(resonance(res).omega0 == doctest::Approx(b.omega.rad_per_s()).epsilon(1e-12));
}

TEST_CASE("the construction fails when the inductor cannot supply the reactance") {
  const auto b = tc_budget(30e6);
  const double x_opt = optimal_complex_source(b).im;
  const double ltot_small = 0.5 * x_opt / b.omega.rad_per_s();
  CHECK_THROWS_AS(detuned_resonator_for_optimum(b, ltot_small, 0.010), std::domain_error);
}

TEST_CASE("system budget matches its ingredients") {
  const auto chain = default_chain();
  const auto omega = AngularFrequency::from_hz(75e6);
  const auto b = system_noise_budget(chain, omega);
  const auto fs = input_referred_noise(chain.first_stage, chain.coupling, omega);
  CHECK(b.S_VV.value == fs.S_VV.value);
  CHECK(b.imS_IV.value == fs.imS_IV.value);
  CHECK(b.reS_IV.value == 0.0);
  CHECK(b.S_II_sys.value ==
        doctest::Approx(fs.S_II.value + referred_imprecision(chain, omega)).epsilon(1e-14));
}
