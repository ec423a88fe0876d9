#include <doctest.h>

#include <cmath>

#include "domainkit/calculus.hpp"
#include "domainkit/classic_domains.hpp"
#include "domainkit/interval.hpp"
#include "domainkit/rng.hpp"

using namespace domainkit;

namespace {

bool raises_kind(const char* kind, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const DomainError& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("interval order is reverse inclusion") {
  CHECK(interval_leq(Interval(0, 2), Interval(0.5, 1)));
  CHECK(interval_leq(Interval(0, 1), Interval(0, 1)));
  CHECK_FALSE(interval_leq(Interval(0.5, 1), Interval(0, 2)));
  CHECK(raises_kind("invalid-interval", [] { Interval(2, 1); }));
  CHECK(raises_kind("invalid-interval", [] { Interval(0, std::nan("")); }));
}

TEST_CASE("interval way-below needs interior containment") {
  CHECK(interval_waybelow(Interval(0, 2), Interval(0.5, 1)));
  CHECK_FALSE(interval_waybelow(Interval(0, 1), Interval(0, 1)));
  CHECK_FALSE(interval_waybelow(Interval(0, 1), Interval(0, 0.5)));
  CHECK(scott_basic_contains(Interval(0, 2), Interval(0.5, 1)));
  CHECK_FALSE(scott_basic_contains(Interval(0, 1), Interval(0, 0.5)));
}

TEST_CASE("length measurement") {
  CHECK(interval_length(Interval(1, 3)) == doctest::Approx(2.0));
  CHECK(interval_length(Interval::point(7)) == 0.0);

  const auto mu = length_measurement();
  CHECK(mu_ball_contains(mu, Interval::point(1), Interval(0.5, 1.5), 2.0));
  CHECK_FALSE(mu_ball_contains(mu, Interval::point(1), Interval(0, 3), 2.0));
  CHECK(mu_ball_contains(mu, Interval::point(1), Interval::point(1), 1e-12));
  // Not below x at all: outside the ball no matter the content.
  CHECK_FALSE(mu_ball_contains(mu, Interval::point(1), Interval(1.5, 1.6), 10.0));
}

TEST_CASE("bit strings under the prefix order") {
  const BitString empty;
  const BitString t = BitString::finite({0, 1, 1, 0});
  CHECK(string_leq(empty, t));
  CHECK(string_waybelow(empty, t));
  CHECK(string_waybelow(BitString::finite({0, 1}), t));
  CHECK_FALSE(string_waybelow(BitString::finite({1, 1}), t));

  const BitString inf = BitString::infinite([](std::uint64_t i) { return i % 2 == 0 ? 1 : 0; });
  CHECK_FALSE(string_waybelow(inf, inf));
  CHECK(string_leq(inf, inf));  // certified through rule identity
  CHECK(string_waybelow(BitString::finite({1, 0, 1}), inf));

  // Distinct rules that agree below the horizon cannot be certified equal.
  const BitString other = BitString::infinite([](std::uint64_t i) { return i % 2 == 0 ? 1 : 0; }, 16);
  CHECK(raises_kind("horizon-too-small", [&] { string_leq(other, inf); }));

  CHECK(string_measure(empty) == 1.0);
  CHECK(string_measure(BitString::finite({0, 1})) == doctest::Approx(0.25));
  CHECK(string_measure(inf) == 0.0);
}

TEST_CASE("natural-number sets under inclusion") {
  const NatSet omega = NatSet::rule([](std::uint64_t) { return true; });
  CHECK(natset_waybelow(NatSet::finite({}), omega));
  CHECK(natset_waybelow(NatSet::finite({1, 2}), omega));
  CHECK_FALSE(natset_waybelow(omega, omega));
  CHECK(natset_leq(omega, omega));

  CHECK(natset_measure(NatSet::finite({})) == doctest::Approx(1.0));
  CHECK(natset_measure(NatSet::finite({0})) == doctest::Approx(0.5));
  CHECK(natset_measure(NatSet::finite({0, 1})) == doctest::Approx(0.25));

  // Rule sets past their horizon fail loudly.
  const NatSet shallow = NatSet::rule([](std::uint64_t) { return false; }, 8);
  CHECK(raises_kind("horizon-too-small", [&] { shallow.contains(9); }));
  CHECK(raises_kind("horizon-too-small", [&] { natset_measure(shallow); }));
  CHECK(natset_measure(shallow, 1e-2) == doctest::Approx(1.0));
  CHECK(raises_kind("horizon-too-small",
                    [&] { natset_leq(NatSet::finite({100}), shallow); }));
}

TEST_CASE("partial maps under extension") {
  const PartialNatMap empty;
  const PartialNatMap g{{1, 1}, {2, 4}};
  CHECK(pmap_waybelow(empty, g));
  CHECK(pmap_waybelow(PartialNatMap{{1, 1}}, g));
  CHECK_FALSE(pmap_waybelow(PartialNatMap{{1, 2}}, PartialNatMap{{1, 3}}));
  CHECK(pmap_measure(empty) == doctest::Approx(1.0));
  CHECK(pmap_measure(PartialNatMap{{0, 9}}) == doctest::Approx(0.5));
}

TEST_CASE("order axioms hold on random samples in all four domains") {
  Rng rng(2024);
  for (int s = 0; s < 1000; ++s) {
    // Interval triples.
    const double lo = rng.uniform(-4, 4);
    const Interval a(lo, lo + rng.uniform(0, 3));
    const Interval b(a.lo() + 0.25 * a.width(), a.hi() - 0.25 * a.width());
    const Interval c(b.lo() + 0.25 * b.width(), b.hi());
    CHECK(interval_leq(a, a));
    CHECK(interval_leq(a, b));
    CHECK(interval_leq(b, c));
    CHECK(interval_leq(a, c));

    // Strings.
    std::vector<int> bits;
    for (int i = 0; i < 12; ++i) bits.push_back(static_cast<int>(rng.below(2)));
    const BitString t = BitString::finite(bits);
    bits.resize(8);
    const BitString m = BitString::finite(bits);
    bits.resize(3);
    const BitString s3 = BitString::finite(bits);
    CHECK(string_leq(t, t));
    CHECK(string_leq(s3, m));
    CHECK(string_leq(m, t));
    CHECK(string_leq(s3, t));

    // Sets and maps piggyback on std containers; spot-check transitivity.
    std::set<std::uint64_t> zs;
    for (std::uint64_t k = 0; k < 24; ++k) {
      if (rng.below(2) == 0) zs.insert(k);
    }
    const NatSet z = NatSet::finite(zs);
    std::set<std::uint64_t> ys, xs;
    for (std::uint64_t k : zs) {
      if (rng.below(2) == 0) {
        ys.insert(k);
        if (rng.below(2) == 0) xs.insert(k);
      }
    }
    CHECK(natset_leq(NatSet::finite(xs), NatSet::finite(ys)));
    CHECK(natset_leq(NatSet::finite(ys), z));
    CHECK(natset_leq(NatSet::finite(xs), z));
    if (natset_leq(z, NatSet::finite(ys))) CHECK(ys == zs);  // antisymmetry

    PartialNatMap h;
    for (std::uint64_t k = 0; k < 16; ++k) {
      if (rng.below(2) == 0) h[k] = rng.below(7);
    }
    PartialNatMap gsub, fsub;
    for (const auto& [k, v] : h) {
      if (rng.below(2) == 0) {
        gsub[k] = v;
        if (rng.below(2) == 0) fsub[k] = v;
      }
    }
    CHECK(pmap_leq(h, h));
    CHECK(pmap_leq(fsub, gsub));
    CHECK(pmap_leq(gsub, h));
    CHECK(pmap_leq(fsub, h));
    if (pmap_leq(h, gsub)) CHECK(gsub == h);  // antisymmetry
  }
}

TEST_CASE("fixpoint iteration brackets fixed points") {
  const Interval a = fixpoint_iterate([](double v) { return 0.5 * v + 1.0; }, Interval(0, 10), 60);
  CHECK(a.contains(2.0));
  CHECK(a.width() < 1e-9);
  // Contraction-rate oracle: width shrinks by exactly 1/2 per step.
  CHECK(a.width() <= 10.0 * std::ldexp(1.0, -60) + 1e-18);

  const Interval seed(0.25, 0.75);
  CHECK(fixpoint_iterate([](double v) { return v; }, seed, 9) == seed);

  const Interval c = fixpoint_iterate([](double v) { return std::cos(v); }, Interval(0, 1), 200);
  // Independent oracle: iterate the scalar map to its fixed point.
  double fixed = 0.5;
  for (int k = 0; k < 500; ++k) fixed = std::cos(fixed);
  CHECK(std::abs(c.midpoint() - fixed) <= 1e-9);
  CHECK(std::abs(c.midpoint() - 0.7390851332151607) <= 1e-9);
  CHECK(c.width() < 1e-9);

  CHECK(raises_kind("not-invariant", [] {
    fixpoint_iterate([](double v) { return v + 1.0; }, Interval(0, 1), 5);
  }));
  CHECK(raises_kind("not-monotone", [] {
    fixpoint_iterate([](double v) { return std::abs(v - 0.5); }, Interval(0, 1), 5);
  }));
}

TEST_CASE("informatic derivative matches |f'|") {
  CHECK(informatic_derivative([](double v) { return v * v; }, 2.0) == doctest::Approx(4.0).epsilon(1e-4));
  CHECK(informatic_derivative([](double) { return 1.25; }, 0.3) == 0.0);
  CHECK(informatic_derivative([](double v) { return std::sin(v); }, 0.0) ==
        doctest::Approx(1.0).epsilon(1e-4));
  // Antitone branch: |f'| of a decreasing map. Cancellation at the smallest
  // probe width caps the achievable accuracy around 1e-8.
  CHECK(informatic_derivative([](double v) { return -3.0 * v + 1.0; }, 0.7) ==
        doctest::Approx(3.0).epsilon(1e-6));

  DerivativeOptions coarse;
  coarse.widths = {0.8, 0.7, 0.6};
  CHECK(raises_kind("no-convergence", [&] {
    informatic_derivative([](double v) { return std::exp(20.0 * v); }, 0.0, coarse);
  }));
  DerivativeOptions bad;
  bad.widths = {0.1, 0.2};
  CHECK(raises_kind("bad-flags", [&] {
    informatic_derivative([](double v) { return v; }, 0.0, bad);
  }));
}

TEST_CASE("measurements reverse the order on sampled comparable pairs") {
  Rng rng(99);
  const auto mu_str = string_measurement();
  const auto mu_nat = natset_measurement();
  const auto mu_pm = pmap_measurement();
  for (int s = 0; s < 500; ++s) {
    std::vector<int> bits;
    for (int i = 0; i < 16; ++i) bits.push_back(static_cast<int>(rng.below(2)));
    const BitString t = BitString::finite(bits);
    bits.resize(rng.below(17));
    const BitString p = BitString::finite(bits);
    CHECK(mu_str.value(p) >= mu_str.value(t));

    std::set<std::uint64_t> big, small;
    for (std::uint64_t k = 0; k < 30; ++k) {
      if (rng.below(2) == 0) {
        big.insert(k);
        if (rng.below(2) == 0) small.insert(k);
      }
    }
    CHECK(mu_nat.value(NatSet::finite(small)) >= mu_nat.value(NatSet::finite(big)));

    PartialNatMap g, f;
    for (std::uint64_t k = 0; k < 10; ++k) {
      if (rng.below(2) == 0) {
        g[k] = rng.below(5);
        if (rng.below(2) == 0) f[k] = g[k];
      }
    }
    CHECK(mu_pm.value(f) >= mu_pm.value(g));
  }
}
