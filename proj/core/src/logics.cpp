#include "domainkit/logics.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace domainkit {

namespace {

std::vector<int> rational_support(const RationalState& x) {
  std::vector<int> s;
  for (int i = 0; i < x.dim(); ++i) {
    if (x[i] != 0) s.push_back(i);
  }
  return s;
}

RationalState uniform_on(int n, const std::vector<int>& support) {
  std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
  for (int i : support) v[static_cast<std::size_t>(i)] = Rational(1, support.size());
  return RationalState(std::move(v));
}

// Random exact state from an integer composition.
RationalState sample_rational_state(int n, Rng& rng) {
  std::vector<BigInt> a(static_cast<std::size_t>(n));
  BigInt total(0);
  for (auto& v : a) {
    v = BigInt(1 + rng.below(1000));
    total += v;
  }
  std::vector<Rational> p;
  p.reserve(a.size());
  for (const auto& v : a) p.emplace_back(v, total);
  return RationalState(std::move(p));
}

}  // namespace

std::vector<RationalState> irreducibles_classical(int n) {
  if (n < 2) raise("dimension-mismatch", "need at least two outcomes");
  if (n > 10) raise("dimension-too-large", "irreducible enumeration capped at n = 10");

  std::set<std::vector<Rational>> seen;
  std::deque<RationalState> queue;
  const RationalState bottom = RationalState::uniform(n);
  seen.insert(bottom.coords());
  queue.push_back(bottom);

  while (!queue.empty()) {
    const RationalState current = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      if (current[i] == 1) continue;  // projection undefined at its pure state
      RationalState child = bayes_projection_plus(i, current);
      if (seen.insert(child.coords()).second) queue.push_back(child);
    }
  }

  std::vector<RationalState> result(seen.begin(), seen.end());
  // Bottom-up listing: large supports (low in the order) first, then by
  // support set lexicographically.
  std::sort(result.begin(), result.end(), [](const RationalState& a, const RationalState& b) {
    const auto sa = rational_support(a);
    const auto sb = rational_support(b);
    if (sa.size() != sb.size()) return sa.size() > sb.size();
    return sa < sb;
  });
  return result;
}

bool is_irreducible_classical(const RationalState& x, Rng& rng, int certification_samples) {
  const int n = x.dim();
  if (n > 12) raise("dimension-too-large", "irreducibility certification capped at n = 12");

  std::vector<int> above;
  for (int i = 0; i < n; ++i) {
    if (bayesian_leq(x, RationalState::pure(n, i))) above.push_back(i);
  }
  const RationalState candidate = uniform_on(n, above);
  if (!(candidate == x)) return false;

  // Certify that the candidate really is the greatest lower bound of the
  // pure states above x: every uniform-support lower bound and a sample of
  // constructed/random lower bounds must sit below it.
  auto below_all = [&](const RationalState& v) {
    for (int i : above) {
      if (!bayesian_leq(v, RationalState::pure(n, i))) return false;
    }
    return true;
  };
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.push_back(i);
    }
    const RationalState v = uniform_on(n, s);
    if (below_all(v) && !bayesian_leq(v, candidate)) return false;
  }
  for (int k = 0; k < certification_samples; ++k) {
    const Rational t(rng.below(1000), 1000);
    const RationalState path_point = line_path(candidate, t);
    if (!bayesian_leq(path_point, candidate)) return false;
    const RationalState w = sample_rational_state(n, rng);
    if (below_all(w) && !bayesian_leq(w, candidate)) return false;
  }
  return true;
}

HasseDiagram hasse_classical(int n) {
  HasseDiagram h;
  h.nodes = irreducibles_classical(n);
  const int count = static_cast<int>(h.nodes.size());
  h.supports.reserve(h.nodes.size());
  for (const auto& node : h.nodes) h.supports.push_back(rational_support(node));

  std::vector<std::vector<bool>> leq(count, std::vector<bool>(count, false));
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      leq[i][j] = bayesian_leq(h.nodes[i], h.nodes[j]);
    }
  }
  // Covering pairs: strict relations with nothing strictly between.
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      if (i == j || !leq[i][j]) continue;
      bool covered = true;
      for (int k = 0; k < count && covered; ++k) {
        if (k != i && k != j && leq[i][k] && leq[k][j]) covered = false;
      }
      if (covered) h.edges.emplace_back(i, j);
    }
  }
  return h;
}

std::string hasse_to_dot(const HasseDiagram& h) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    os << "  n" << i << " [label=\"{";
    for (std::size_t k = 0; k < h.supports[i].size(); ++k) {
      if (k > 0) os << ",";
      os << h.supports[i][k] + 1;
    }
    os << "}\"];\n";
  }
  for (const auto& [lower, upper] : h.edges) {
    os << "  n" << lower << " -> n" << upper << ";\n";
  }
  os << "}\n";
  return os.str();
}

DensityMatrix uniform_projection_state(const std::vector<CVector>& basis) {
  if (basis.empty()) raise("not-orthonormal", "empty basis");
  const Eigen::Index n = basis.front().size();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].size() != n) raise("dimension-mismatch", "basis vectors disagree in dimension");
    for (std::size_t j = 0; j <= i; ++j) {
      const std::complex<double> g = (basis[j].adjoint() * basis[i])(0, 0);
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(g - expected) > 1e-10) {
        raise("not-orthonormal", "gram residual " + std::to_string(std::abs(g - expected)));
      }
    }
  }
  CMatrix p = CMatrix::Zero(n, n);
  for (const auto& v : basis) p += v * v.adjoint();
  p /= static_cast<double>(basis.size());
  return DensityMatrix::validated(std::move(p));
}

ConsistencyReport quantum_logic_consistency(int n, int samples, Rng& rng) {
  if (n < 2 || n > 4) raise("dimension-too-large", "consistency sampling runs at n in {2,3,4}");
  ConsistencyReport report;

  auto span_state = [&](const CMatrix& u, int k) {
    std::vector<CVector> cols;
    cols.reserve(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) cols.push_back(u.col(c));
    return uniform_projection_state(cols);
  };

  for (int s = 0; s < samples; ++s) {
    // Nested pair: V strictly inside W, both spanned by columns of one frame.
    const CMatrix u = sample_unitary(n, rng);
    const int kv = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    const int kw = kv + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - kv)));
    const DensityMatrix rho_v = span_state(u, kv);
    const DensityMatrix rho_w = span_state(u, kw);
    ++report.nested_checked;
    if (spectral_leq(rho_w, rho_v) && !spectral_leq(rho_v, rho_w)) ++report.nested_passed;

    // Incomparable pair: independently drawn proper subspaces.
    const CMatrix u1 = sample_unitary(n, rng);
    const CMatrix u2 = sample_unitary(n, rng);
    const int k1 = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    const int k2 = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    const DensityMatrix a = span_state(u1, k1);
    const DensityMatrix b = span_state(u2, k2);
    ++report.incomparable_checked;
    if (!spectral_leq(a, b) && !spectral_leq(b, a)) ++report.incomparable_passed;
  }
  return report;
}

}  // namespace domainkit
