#include "domainkit/classic_domains.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace domainkit {

namespace {

int validated_bit(int b) {
  if (b != 0 && b != 1) raise("invalid-bit", "bits must be 0 or 1, got " + std::to_string(b));
  return b;
}

}  // namespace

BitString BitString::finite(std::vector<int> bits) {
  for (int b : bits) validated_bit(b);
  BitString s;
  s.prefix_ = std::move(bits);
  return s;
}

BitString BitString::infinite(TailRule rule, std::uint64_t horizon) {
  return infinite({}, std::move(rule), horizon);
}

BitString BitString::infinite(std::vector<int> prefix, TailRule rule, std::uint64_t horizon) {
  for (int b : prefix) validated_bit(b);
  BitString s;
  s.prefix_ = std::move(prefix);
  s.tail_ = std::make_shared<const TailRule>(std::move(rule));
  s.horizon_ = horizon;
  return s;
}

std::uint64_t BitString::length() const {
  if (!is_finite()) raise("out-of-range", "infinite string has no finite length");
  return prefix_.size();
}

int BitString::bit(std::uint64_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  if (is_finite()) raise("out-of-range", "bit index past the end of a finite string");
  if (i >= horizon_) {
    raise("horizon-too-small",
          "bit " + std::to_string(i) + " is past the evaluation horizon " +
              std::to_string(horizon_));
  }
  return validated_bit((*tail_)(i));
}

bool string_leq(const BitString& s, const BitString& t) {
  if (s.is_finite()) {
    if (t.is_finite() && t.length() < s.length()) return false;
    for (std::uint64_t i = 0; i < s.length(); ++i) {
      if (s.bit(i) != t.bit(i)) return false;
    }
    return true;
  }
  // s infinite: only infinite t can extend it, and then only by being equal.
  if (t.is_finite()) return false;
  const std::uint64_t depth = std::min(s.horizon(), t.horizon());
  for (std::uint64_t i = 0; i < depth; ++i) {
    if (s.bit(i) != t.bit(i)) return false;
  }
  if (s.shares_rule_with(t)) {
    // Identical tail rule and agreement over both prefixes: equality is
    // certified without evaluating past the horizon.
    const std::uint64_t joint = std::max(s.prefix_length(), t.prefix_length());
    if (joint <= depth) return true;
  }
  raise("horizon-too-small", "infinite strings agree to the horizon but equality is uncertified");
}

bool string_waybelow(const BitString& s, const BitString& t) {
  if (!s.is_finite()) return false;
  return string_leq(s, t);
}

double string_measure(const BitString& s) {
  if (!s.is_finite()) return 0.0;
  const std::uint64_t len = s.length();
  if (len > 1074) return 0.0;  // below the smallest subnormal
  return std::ldexp(1.0, -static_cast<int>(len));
}

NatSet NatSet::finite(std::set<std::uint64_t> members) {
  NatSet x;
  x.members_ = std::move(members);
  return x;
}

NatSet NatSet::rule(MembershipRule rule, std::uint64_t horizon) {
  NatSet x;
  x.rule_ = std::make_shared<const MembershipRule>(std::move(rule));
  x.horizon_ = horizon;
  return x;
}

const std::set<std::uint64_t>& NatSet::members() const {
  if (!is_finite()) raise("out-of-range", "rule set has no explicit member list");
  return members_;
}

bool NatSet::contains(std::uint64_t n) const {
  if (is_finite()) return members_.count(n) != 0;
  if (n >= horizon_) {
    raise("horizon-too-small",
          "membership of " + std::to_string(n) + " is past the horizon " +
              std::to_string(horizon_));
  }
  return (*rule_)(n);
}

bool natset_leq(const NatSet& x, const NatSet& y) {
  if (x.is_finite()) {
    for (std::uint64_t n : x.members()) {
      if (!y.contains(n)) return false;
    }
    return true;
  }
  if (x.shares_rule_with(y)) return true;
  // A rule set can only be refuted below the joint horizon; inclusion past
  // it is uncertifiable.
  const std::uint64_t depth = y.is_finite() ? x.horizon() : std::min(x.horizon(), y.horizon());
  for (std::uint64_t n = 0; n < depth; ++n) {
    if (x.contains(n) && !y.contains(n)) return false;
  }
  raise("horizon-too-small", "rule-set inclusion holds to the horizon but is uncertified");
}

bool natset_waybelow(const NatSet& x, const NatSet& y) {
  if (!x.is_finite()) return false;
  return natset_leq(x, y);
}

double natset_measure(const NatSet& x, double tolerance) {
  if (x.is_finite()) {
    double sum = 0.0;
    for (std::uint64_t n : x.members()) {
      if (n <= 1073) sum += std::ldexp(1.0, -static_cast<int>(n) - 1);
    }
    return 1.0 - sum;
  }
  const double tail_bound =
      x.horizon() > 1073 ? 0.0 : std::ldexp(1.0, -static_cast<int>(x.horizon()));
  if (tail_bound >= tolerance) {
    raise("horizon-too-small", "tail bound 2^-" + std::to_string(x.horizon()) +
                                   " does not fit the requested tolerance");
  }
  double sum = 0.0;
  for (std::uint64_t n = 0; n < x.horizon(); ++n) {
    if (x.contains(n) && n <= 1073) sum += std::ldexp(1.0, -static_cast<int>(n) - 1);
  }
  return 1.0 - sum;
}

bool pmap_leq(const PartialNatMap& f, const PartialNatMap& g) {
  for (const auto& [k, v] : f) {
    auto it = g.find(k);
    if (it == g.end() || it->second != v) return false;
  }
  return true;
}

bool pmap_waybelow(const PartialNatMap& f, const PartialNatMap& g) {
  // Every map in this representation is finite, so ≪ collapses to ⊑.
  return pmap_leq(f, g);
}

double pmap_measure(const PartialNatMap& f) {
  std::set<std::uint64_t> dom;
  for (const auto& [k, v] : f) dom.insert(k);
  return natset_measure(NatSet::finite(std::move(dom)));
}

Measurement<BitString> string_measurement() {
  return {"cantor-length",
          [](const BitString& s) { return string_measure(s); },
          [](const BitString& a, const BitString& b) { return string_leq(a, b); }};
}

Measurement<NatSet> natset_measurement() {
  return {"natset-content",
          [](const NatSet& x) { return natset_measure(x); },
          [](const NatSet& a, const NatSet& b) { return natset_leq(a, b); }};
}

Measurement<PartialNatMap> pmap_measurement() {
  return {"domain-content",
          [](const PartialNatMap& f) { return pmap_measure(f); },
          [](const PartialNatMap& a, const PartialNatMap& b) { return pmap_leq(a, b); }};
}

}  // namespace domainkit
