#include "deltamix/independence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "deltamix/errors.hpp"
#include "deltamix/feasibility.hpp"

namespace deltamix {

namespace {

long long selector_count(int k, size_t j_size, long long cap) {
  long long total = 1;
  for (size_t i = 0; i < j_size; ++i) {
    total *= k;
    if (total > cap) return total;
  }
  return total;
}

bool next_selector(Selector& s, int k) {
  for (size_t i = s.size(); i-- > 0;) {
    if (s[i] < k) { ++s[i]; std::fill(s.begin() + i + 1, s.end(), 1); return true; }
  }
  return false;
}

}  // namespace

bool IndependenceCertificate::covers_all_selectors() const {
  size_t expected = 1;
  for (size_t i = 0; i < J.size(); ++i) expected *= tuple.size();
  return witnesses.size() == expected;
}

std::string IndependenceCertificate::text() const {
  std::ostringstream os;
  os << "tuple";
  for (const CylinderUnion& u : tuple) os << " " << u.text();
  os << "\n";
  if (relative_to) os << "relative " << relative_to->text() << "\n";
  os << "J";
  for (int j : J) os << " " << j;
  os << "\n";
  for (const auto& [s, w] : witnesses) {
    os << "witness";
    for (int v : s) os << " " << v;
    os << " -> " << w.text() << "\n";
  }
  return os.str();
}

IndependenceResult independence_check(
    const SubshiftSpec& spec, const std::vector<CylinderUnion>& tuple,
    const std::vector<int>& J, long long cap,
    const std::optional<CylinderUnion>& relative_to) {
  if (tuple.size() < 2) throw InvalidArgument("tuple needs k >= 2 sets");
  if (J.empty()) throw InvalidArgument("J must be non-empty");
  std::vector<int> js(J);
  std::sort(js.begin(), js.end());
  js.erase(std::unique(js.begin(), js.end()), js.end());
  if (js.front() < 0) throw InvalidArgument("J elements must be >= 0");
  int k = static_cast<int>(tuple.size());
  if (selector_count(k, js.size(), cap) > cap)
    throw CapExceeded("selector count k^|J| exceeds cap " + std::to_string(cap));
  for (const CylinderUnion& u : tuple)
    if (!u.nonempty_in(spec))
      throw EmptyOpenSet("tuple member " + u.text() + " is empty");
  if (relative_to && !relative_to->nonempty_in(spec))
    throw EmptyOpenSet("relative set is empty");

  std::vector<CylinderUnion> live;
  live.reserve(tuple.size());
  for (const CylinderUnion& u : tuple) live.push_back(u.restricted_to(spec));
  std::optional<CylinderUnion> rel;
  if (relative_to) rel = relative_to->restricted_to(spec);

  ReachCache reach(spec);
  IndependenceCertificate cert;
  cert.tuple = tuple;
  cert.relative_to = relative_to;
  cert.J = js;

  Selector s(js.size(), 1);
  while (true) {
    std::vector<std::pair<int, const CylinderUnion*>> slots;
    slots.reserve(js.size() + 1);
    if (rel) slots.emplace_back(0, &*rel);
    for (size_t i = 0; i < js.size(); ++i)
      slots.emplace_back(js[i], &live[s[i] - 1]);
    auto w = union_placements_witness(spec, reach, slots);
    if (!w) {
      IndependenceFailure fail;
      fail.selector = s;
      fail.reason = "no point realizes this selector";
      return IndependenceResult{std::nullopt, fail};
    }
    cert.witnesses.emplace_back(s, *w);
    if (!next_selector(s, k)) break;
  }
  return IndependenceResult{std::move(cert), std::nullopt};
}

ExtendResult independence_extend(
    const SubshiftSpec& spec, const std::vector<CylinderUnion>& tuple,
    const std::vector<int>& J_seed, int horizon, int target_size,
    long long cap, const std::optional<CylinderUnion>& relative_to) {
  if (target_size < 1) throw InvalidArgument("target_size must be >= 1");
  int k = static_cast<int>(tuple.size());
  if (selector_count(k, static_cast<size_t>(target_size), cap) > cap)
    throw CapExceeded("target size implies k^|J| beyond cap " +
                      std::to_string(cap));

  std::vector<int> J(J_seed);
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  std::optional<IndependenceCertificate> best;
  if (!J.empty()) {
    auto seeded = independence_check(spec, tuple, J, cap, relative_to);
    if (!seeded.ok())
      throw InvalidArgument("seed J is not an independence set");
    best = std::move(*seeded.certificate);
  }

  for (int cand = 0; cand <= horizon &&
       static_cast<int>(J.size()) < target_size; ++cand) {
    if (std::binary_search(J.begin(), J.end(), cand)) continue;
    std::vector<int> trial(J);
    trial.insert(std::lower_bound(trial.begin(), trial.end(), cand), cand);
    auto res = independence_check(spec, tuple, trial, cap, relative_to);
    if (res.ok()) {
      J = std::move(trial);
      best = std::move(*res.certificate);
    }
  }
  if (!best) {
    // even singletons failed everywhere; report the empty-J outcome honestly
    throw NoWitnessInHorizon("no independence set found within horizon");
  }
  ExtendResult out;
  out.certificate = std::move(*best);
  out.density = density_bounds(out.certificate.J, horizon > 0 ? horizon : 1);
  return out;
}

SplitResult split_tuple(const SubshiftSpec& spec,
                        const std::vector<CylinderUnion>& tuple,
                        const CylinderUnion& a11, const CylinderUnion& a12,
                        const std::vector<int>& J, long long cap) {
  if (tuple.empty()) throw InvalidArgument("tuple must be non-empty");
  // a11 ∪ a12 must cover a1
  for (const Word& w : tuple[0].cylinders)
    if (!a11.contains_word_prefix(w) && !a12.contains_word_prefix(w)) {
      // also fine if w splits into longer members of the halves; check by
      // verifying every allowed extension of w at the halves' max length
      int target = std::max(a11.max_len(), a12.max_len());
      if (w.size() >= target)
        throw InvalidSplit("halves do not cover tuple member " + w.text());
      bool covered = true;
      for (const Word& ext : spec.language(target)) {
        if (!w.is_prefix_of(ext)) continue;
        if (!a11.contains_word_prefix(ext) && !a12.contains_word_prefix(ext))
          covered = false;
      }
      if (!covered)
        throw InvalidSplit("halves do not cover tuple member " + w.text());
    }

  std::vector<int> js(J);
  std::sort(js.begin(), js.end());
  js.erase(std::unique(js.begin(), js.end()), js.end());
  if (js.empty()) throw InvalidArgument("J must be non-empty");

  auto try_half = [&](const CylinderUnion& half, int which,
                      const std::vector<int>& sub) -> std::optional<SplitResult> {
    if (!half.nonempty_in(spec)) return std::nullopt;
    std::vector<CylinderUnion> t(tuple);
    t[0] = half;
    auto res = independence_check(spec, t, sub, cap);
    if (res.ok()) return SplitResult{which, std::move(*res.certificate)};
    return std::nullopt;
  };

  // full J on either half first
  if (auto r = try_half(a11, 1, js)) return std::move(*r);
  if (auto r = try_half(a12, 2, js)) return std::move(*r);

  // subsets, larger first, lexicographic within a size, half 1 before half 2
  int m = static_cast<int>(js.size());
  int floor_half = (m + 1) / 2;
  for (int size = m - 1; size >= floor_half; --size) {
    std::vector<int> pick(size);
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      for (int i = 0; i < size; ++i) pick[i] = js[idx[i]];
      if (auto r = try_half(a11, 1, pick)) return std::move(*r);
      if (auto r = try_half(a12, 2, pick)) return std::move(*r);
      // next combination
      int i = size - 1;
      while (i >= 0 && idx[i] == m - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int t = i + 1; t < size; ++t) idx[t] = idx[t - 1] + 1;
    }
  }
  throw InvalidSplit("no half certifies a subset of size >= ceil(|J|/2)");
}

bool replay_independence_witness(const SubshiftSpec& spec,
                                 const IndependenceCertificate& cert,
                                 const Selector& selector, const Word& word) {
  if (!spec.word_allowed(word)) return false;
  if (selector.size() != cert.J.size()) return false;
  auto window_hits = [&](const CylinderUnion& u, int offset) {
    for (const Word& w : u.cylinders) {
      if (offset + w.size() > word.size()) continue;
      bool match = true;
      for (int t = 0; t < w.size() && match; ++t)
        if (word[offset + t] != w[t]) match = false;
      if (match) return true;
    }
    return false;
  };
  if (cert.relative_to && !window_hits(*cert.relative_to, 0)) return false;
  for (size_t i = 0; i < cert.J.size(); ++i) {
    int choice = selector[i];
    if (choice < 1 || choice > static_cast<int>(cert.tuple.size())) return false;
    if (!window_hits(cert.tuple[choice - 1], cert.J[i])) return false;
  }
  return true;
}

}  // namespace deltamix
