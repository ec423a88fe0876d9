#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "domainkit/errors.hpp"
#include "domainkit/measurement.hpp"

namespace domainkit {

inline constexpr std::uint64_t kDefaultHorizon = 64;

// Finite or infinite bit string under the prefix order. Infinite strings are
// an explicit prefix plus a total rule for the tail, usable up to a horizon;
// any comparison that would need bits past the horizon raises
// "horizon-too-small" instead of guessing. Finite strings answer everything.
class BitString {
 public:
  using TailRule = std::function<int(std::uint64_t)>;

  BitString() = default;  // empty string, the least element

  static BitString finite(std::vector<int> bits);
  static BitString infinite(TailRule rule, std::uint64_t horizon = kDefaultHorizon);
  static BitString infinite(std::vector<int> prefix, TailRule rule,
                            std::uint64_t horizon = kDefaultHorizon);

  bool is_finite() const { return tail_ == nullptr; }
  // Finite length; raises on infinite strings.
  std::uint64_t length() const;
  std::uint64_t horizon() const { return horizon_; }
  std::uint64_t prefix_length() const { return prefix_.size(); }

  // Bit at position i (0-based). Raises "horizon-too-small" for rule bits at
  // or past the horizon, and "out-of-range" past the end of a finite string.
  int bit(std::uint64_t i) const;

  // True when both strings evaluate their tails through the same rule
  // object; used to certify comparisons identity-wise.
  bool shares_rule_with(const BitString& other) const {
    return tail_ != nullptr && tail_ == other.tail_;
  }

 private:
  std::vector<int> prefix_;
  std::shared_ptr<const TailRule> tail_;
  std::uint64_t horizon_ = kDefaultHorizon;
};

// Prefix (extension) order.
bool string_leq(const BitString& s, const BitString& t);
// s ≪ t iff s is finite and a prefix of t.
bool string_waybelow(const BitString& s, const BitString& t);
// Cantor content 1/2^{|s|}; zero exactly on infinite strings.
double string_measure(const BitString& s);

// Subset-ordered set of naturals: either an explicitly enumerated finite set
// or a membership rule valid strictly below a horizon.
class NatSet {
 public:
  using MembershipRule = std::function<bool(std::uint64_t)>;

  NatSet() = default;  // empty set

  static NatSet finite(std::set<std::uint64_t> members);
  static NatSet rule(MembershipRule rule, std::uint64_t horizon = kDefaultHorizon);

  bool is_finite() const { return rule_ == nullptr; }
  const std::set<std::uint64_t>& members() const;  // finite only
  std::uint64_t horizon() const { return horizon_; }

  // Membership; raises "horizon-too-small" for rule sets at n >= horizon.
  bool contains(std::uint64_t n) const;

  bool shares_rule_with(const NatSet& other) const {
    return rule_ != nullptr && rule_ == other.rule_;
  }

 private:
  std::set<std::uint64_t> members_;
  std::shared_ptr<const MembershipRule> rule_;
  std::uint64_t horizon_ = kDefaultHorizon;
};

// Inclusion order.
bool natset_leq(const NatSet& x, const NatSet& y);
// x ≪ y iff x is explicit-finite and x ⊆ y.
bool natset_waybelow(const NatSet& x, const NatSet& y);
// Content 1 - sum_{n in x} 1/2^{n+1}. For rule sets the unseen tail
// contributes at most 2^-horizon, which must fit inside `tolerance`.
double natset_measure(const NatSet& x, double tolerance = 1e-12);

// Finite partial map on the naturals under graph extension.
using PartialNatMap = std::map<std::uint64_t, std::uint64_t>;

bool pmap_leq(const PartialNatMap& f, const PartialNatMap& g);
bool pmap_waybelow(const PartialNatMap& f, const PartialNatMap& g);
// Content of the domain, routed through the natural-set measurement.
double pmap_measure(const PartialNatMap& f);

Measurement<BitString> string_measurement();
Measurement<NatSet> natset_measurement();
Measurement<PartialNatMap> pmap_measurement();

}  // namespace domainkit
