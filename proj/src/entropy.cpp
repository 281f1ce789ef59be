#include "deltamix/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "deltamix/errors.hpp"

namespace deltamix {

namespace {

// strongly connected components of the state graph, smallest-index order
std::vector<std::vector<int>> components(const BitMat& adj) {
  int n = adj.n;
  std::vector<uint64_t> fwd(n), bwd(n);
  for (int i = 0; i < n; ++i) {
    uint64_t seen = 1ull << i;
    bool grew = true;
    while (grew) {
      grew = false;
      uint64_t next = adj.forward(seen) | seen;
      if (next != seen) { seen = next; grew = true; }
    }
    fwd[i] = seen;
  }
  for (int i = 0; i < n; ++i) {
    uint64_t seen = 1ull << i;
    bool grew = true;
    while (grew) {
      grew = false;
      uint64_t next = adj.backward(seen) | seen;
      if (next != seen) { seen = next; grew = true; }
    }
    bwd[i] = seen;
  }
  std::vector<bool> used(n, false);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    uint64_t comp = fwd[i] & bwd[i];
    std::vector<int> members;
    uint64_t cur = comp;
    while (cur) {
      int j = __builtin_ctzll(cur);
      cur &= cur - 1;
      used[j] = true;
      members.push_back(j);
    }
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

EntropyReport sft_entropy(const SubshiftSpec& spec, double tol,
                          long long max_iterations) {
  if (tol <= 0) throw InvalidTolerance("tolerance must be positive");
  EntropyReport rep;
  rep.method = "perron";

  double best = 0.0;
  for (const auto& comp : components(spec.adjacency())) {
    bool has_edge = false;
    for (int i : comp)
      for (int j : comp)
        if (spec.adjacency().get(i, j)) has_edge = true;
    if (!has_edge) continue;  // transient singleton, growth 0

    int m = static_cast<int>(comp.size());
    // shifted matrix A = M|comp + I keeps the iteration aperiodic
    std::vector<std::vector<double>> a(m, std::vector<double>(m, 0.0));
    for (int i = 0; i < m; ++i) {
      a[i][i] += 1.0;
      for (int j = 0; j < m; ++j)
        if (spec.adjacency().get(comp[i], comp[j])) a[i][j] += 1.0;
    }
    std::vector<double> v(m, 1.0), w(m, 0.0);
    double lo = 0.0, hi = 0.0;
    long long it = 0;
    for (; it < max_iterations; ++it) {
      for (int i = 0; i < m; ++i) {
        double acc = 0.0;
        for (int j = 0; j < m; ++j) acc += a[i][j] * v[j];
        w[i] = acc;
      }
      lo = w[0] / v[0];
      hi = lo;
      for (int i = 1; i < m; ++i) {
        double q = w[i] / v[i];
        lo = std::min(lo, q);
        hi = std::max(hi, q);
      }
      double norm = *std::max_element(w.begin(), w.end());
      for (int i = 0; i < m; ++i) v[i] = w[i] / norm;
      if (hi - lo <= tol) break;
    }
    rep.iterations += it + 1;
    if (hi - lo > tol) rep.converged = false;
    rep.residual = std::max(rep.residual, hi - lo);
    // Perron root of A is in [lo, hi]; the component entropy is log(root-1)
    double lambda = std::max(0.5 * (lo + hi) - 1.0, 1.0);
    best = std::max(best, std::log(lambda));
  }
  rep.value = best;
  return rep;
}

EntropyReport word_count_entropy(const SubshiftSpec& spec, int n_max,
                                 const RunConfig& config) {
  if (n_max < 1) throw InvalidArgument("n_max must be >= 1");
  if (n_max > config.enum_max_len)
    throw CapExceeded("n_max beyond enumeration cap");
  EntropyReport rep;
  rep.method = "word_count";
  for (int n = 1; n <= n_max; ++n) {
    unsigned long long count = spec.language_count(n);
    rep.sequence.push_back(std::log(double(count)) / n);
  }
  rep.value = rep.sequence.back();
  rep.residual = rep.sequence.size() >= 2
                     ? std::abs(rep.sequence[rep.sequence.size() - 2] - rep.value)
                     : 0.0;
  rep.iterations = n_max;
  return rep;
}

std::string EntropyReport::text() const {
  std::ostringstream os;
  os << std::fixed << std::setprecision(12);
  os << "method " << method << "\n";
  os << "value " << value << "\n";
  os << "residual " << residual << "\n";
  os << "iterations " << iterations << "\n";
  os << "converged " << (converged ? "yes" : "no") << "\n";
  if (!sequence.empty()) {
    os << "sequence";
    for (double h : sequence) os << " " << h;
    os << "\n";
  }
  return os.str();
}

std::optional<EntropyTupleCandidate> entropy_tuple_candidate(
    const SubshiftSpec& spec, const std::vector<CylinderUnion>& cylinders,
    int horizon, int min_size, long long cap) {
  if (cylinders.size() < 2) throw InvalidArgument("need n >= 2 neighborhoods");
  for (size_t i = 0; i < cylinders.size(); ++i)
    for (size_t j = i + 1; j < cylinders.size(); ++j)
      if (!cylinders[i].disjoint_from(cylinders[j]))
        throw InvalidArgument("neighborhoods must be pairwise disjoint");
  try {
    ExtendResult ext =
        independence_extend(spec, cylinders, {}, horizon, min_size, cap);
    if (static_cast<int>(ext.certificate.J.size()) < min_size)
      return std::nullopt;
    return EntropyTupleCandidate{cylinders, std::move(ext.certificate),
                                 ext.density};
  } catch (const NoWitnessInHorizon&) {
    return std::nullopt;
  }
}

}  // namespace deltamix
