#include "deltamix/chaos.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "deltamix/errors.hpp"
#include "deltamix/feasibility.hpp"

namespace deltamix {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::AsymptoticEvidence: return "asymptotic-evidence";
    case Verdict::ScrambledEvidence: return "scrambled-evidence";
    case Verdict::ProximalEvidence: return "proximal-evidence";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<std::pair<long long, DyadicDistance>> orbit_distance_profile(
    const PointGen& x, const PointGen& y, int r, int s, int horizon,
    int window) {
  if (r < 1 || s < 1) throw InvalidArgument("need r, s >= 1");
  if (horizon < 1) throw InvalidArgument("horizon must be >= 1");
  long long need = static_cast<long long>(std::max(r, s)) * horizon + window;
  if (need > x.horizon() || need > y.horizon())
    throw HorizonExceeded("generators do not cover the requested profile");
  std::vector<std::pair<long long, DyadicDistance>> out;
  out.reserve(horizon);
  for (long long n = 1; n <= horizon; ++n)
    out.emplace_back(n, shift_distance(x, y, n, r, s, window));
  return out;
}

ScrambledReport scrambled_report(const PointGen& x, const PointGen& y,
                                 const std::string& pair_id, int r, int s,
                                 int horizon, int window,
                                 const ScrambledThresholds& thresholds,
                                 bool keep_trace) {
  auto profile = orbit_distance_profile(x, y, r, s, horizon, window);
  ScrambledReport rep;
  rep.pair_id = pair_id;
  rep.r = r;
  rep.s = s;
  rep.horizon = horizon;
  rep.window = window;
  rep.thresholds = thresholds;
  rep.tail_start =
      horizon - (horizon * thresholds.tail_num) / thresholds.tail_den + 1;

  bool first = true;
  for (const auto& [n, d] : profile) {
    if (n < rep.tail_start) continue;
    if (first) { rep.min_tail = d; rep.max_tail = d; first = false; }
    if (d.less_than(rep.min_tail)) rep.min_tail = d;
    if (rep.max_tail.less_than(d)) rep.max_tail = d;
  }
  if (keep_trace) rep.trace = std::move(profile);

  bool close = rep.min_tail.at_most_exp(thresholds.p_min);
  bool apart = rep.max_tail.at_least_exp(thresholds.eps_min_exp);
  bool flat = rep.max_tail.at_most_exp(thresholds.p_min);
  if (flat) rep.verdict = Verdict::AsymptoticEvidence;
  else if (close && apart) rep.verdict = Verdict::ScrambledEvidence;
  else if (close) rep.verdict = Verdict::ProximalEvidence;
  else rep.verdict = Verdict::Inconclusive;
  return rep;
}

std::string ScrambledReport::row() const {
  std::ostringstream os;
  os << pair_id << "\t" << r << "\t" << s << "\t" << horizon << "\t" << window
     << "\t" << tail_start << "\t" << min_tail.text() << "\t"
     << max_tail.text() << "\t" << verdict_name(verdict) << "\tp_min="
     << thresholds.p_min << ",eps=2^-" << thresholds.eps_min_exp << ",tail="
     << thresholds.tail_num << "/" << thresholds.tail_den;
  return os.str();
}

std::vector<ScrambledReport> prox_asy_grid(
    const std::vector<NamedPair>& pairs,
    const std::vector<std::pair<int, int>>& rs_list, int horizon, int window,
    const ScrambledThresholds& thresholds) {
  std::vector<ScrambledReport> out;
  for (const NamedPair& p : pairs) {
    for (const auto& [r, s] : rs_list)
      out.push_back(scrambled_report(p.x, p.y, p.id, r, s, horizon, window,
                                     thresholds, false));
    // subsampling identity: the (T^k,T^k) profile is the (T,T) profile at
    // multiples of k
    bool has_diag1 = false;
    std::set<int> diag_ks;
    for (const auto& [r, s] : rs_list) {
      if (r == 1 && s == 1) has_diag1 = true;
      if (r == s && r > 1) diag_ks.insert(r);
    }
    if (has_diag1) {
      for (int k : diag_ks) {
        for (long long n = 1; k * n <= horizon; ++n) {
          DyadicDistance a = shift_distance(p.x, p.y, n, k, k, window);
          DyadicDistance b = shift_distance(p.x, p.y, k * n, 1, 1, window);
          if (a.zero != b.zero || (!a.zero && a.exponent != b.exponent))
            throw InvariantViolation("subsampling identity failed for pair " +
                                     p.id + " at k=" + std::to_string(k));
        }
      }
    }
  }
  return out;
}

namespace {

struct IntervalSet {
  std::vector<std::pair<long long, long long>> spans;  // [a, b)
  bool clashes(long long a, long long b) const {
    for (const auto& [x, y] : spans)
      if (a < y && x < b) return true;
    return false;
  }
  void add(long long a, long long b) { spans.emplace_back(a, b); }
  long long max_end() const {
    long long m = 0;
    for (const auto& [a, b] : spans) m = std::max(m, b);
    return m;
  }
};

Symbol find_filler(const SubshiftSpec& spec, const std::vector<Word>& words) {
  for (Symbol a = 0; a < spec.alphabet_size(); ++a) {
    if (!spec.symbol_alive(a)) continue;
    Word aa{{a, a}};
    if (!spec.word_allowed(aa)) continue;
    bool ok = true;
    for (const Word& w : words) {
      if (w.empty()) continue;
      if (!spec.word_allowed(Word{{a, w[0]}})) ok = false;
      if (!spec.word_allowed(Word{{w.syms.back(), a}})) ok = false;
    }
    if (ok) return a;
  }
  throw NoWitnessInHorizon(
      "no filler symbol joins the tree words in this subshift");
}

}  // namespace

TreePair pair_from_tree(const SubshiftSpec& spec, const ConstructionTree& tree,
                        int branch_a, int branch_b,
                        const std::vector<std::pair<int, int>>& rs_list,
                        const ScrambledThresholds& thresholds) {
  const std::vector<Word>& leaves = tree.levels.back().words;
  int leaf_count = static_cast<int>(leaves.size());
  if (branch_a < 0 || branch_b < 0 || branch_a >= leaf_count ||
      branch_b >= leaf_count || branch_a == branch_b)
    throw InvalidArgument("branch indices must be distinct and in range");
  if (rs_list.empty()) throw InvalidArgument("need at least one (r,s)");

  // shared proximal target: the first leaf, extended past the closeness depth
  Word shared = extend_word(spec, leaves[0],
                            std::max(leaves[0].size(), thresholds.p_min + 2));

  // distal targets: the leaf pair with the earliest first difference
  int best_pos = -1, wa = -1, wb = -1;
  for (int i = 0; i < leaf_count; ++i)
    for (int j = i + 1; j < leaf_count; ++j) {
      int lim = std::min(leaves[i].size(), leaves[j].size());
      for (int t = 0; t < lim; ++t) {
        if (leaves[i][t] != leaves[j][t]) {
          if (best_pos < 0 || t < best_pos) { best_pos = t; wa = i; wb = j; }
          break;
        }
      }
    }
  if (best_pos < 0 || best_pos > thresholds.eps_min_exp)
    throw NoWitnessInHorizon(
        "no leaf pair separates above the distance threshold");
  const Word& distal_a = leaves[wa];
  const Word& distal_b = leaves[wb];

  std::vector<Word> all_words{leaves[branch_a], leaves[branch_b], shared,
                              distal_a, distal_b};
  Symbol filler = find_filler(spec, all_words);

  // schedule events greedily: per (r,s) one shared window then one distal
  // window, never overlapping anything already placed on either point
  struct Region {
    long long at;
    const Word* word;
  };
  std::vector<Region> rx{{0, &leaves[branch_a]}};
  std::vector<Region> ry{{0, &leaves[branch_b]}};
  IntervalSet ox, oy;
  ox.add(0, leaves[branch_a].size() + 1);
  oy.add(0, leaves[branch_b].size() + 1);

  std::vector<std::pair<int, int>> rs_unique;
  for (const auto& rs : rs_list)
    if (std::find(rs_unique.begin(), rs_unique.end(), rs) == rs_unique.end())
      rs_unique.push_back(rs);

  TreePair out;
  for (const auto& [r, s] : rs_unique) {
    if (r < 1 || s < 1) throw InvalidArgument("need r, s >= 1");
    for (int phase = 0; phase < 2; ++phase) {
      const Word& xw = phase == 0 ? shared : distal_a;
      const Word& yw = phase == 0 ? shared : distal_b;
      long long n = 1;
      while (true) {
        long long ax = static_cast<long long>(r) * n;
        long long ay = static_cast<long long>(s) * n;
        if (!ox.clashes(ax, ax + xw.size() + 1) &&
            !oy.clashes(ay, ay + yw.size() + 1))
          break;
        ++n;
      }
      long long ax = static_cast<long long>(r) * n;
      long long ay = static_cast<long long>(s) * n;
      ox.add(ax, ax + xw.size() + 1);
      oy.add(ay, ay + yw.size() + 1);
      rx.push_back({ax, &xw});
      ry.push_back({ay, &yw});
      out.schedule.push_back({r, s, phase == 0, n});
    }
  }

  long long period = std::max(ox.max_end(), oy.max_end()) + 1;
  auto assemble = [&](const std::vector<Region>& regions) {
    std::vector<Symbol> syms(static_cast<size_t>(period), filler);
    for (const Region& reg : regions)
      for (int t = 0; t < reg.word->size(); ++t)
        syms[static_cast<size_t>(reg.at + t)] = (*reg.word)[t];
    return Word{std::move(syms)};
  };
  Word px = assemble(rx);
  Word py = assemble(ry);
  // the doubled period covers every junction including the wrap-around
  for (const Word* w : {&px, &py}) {
    std::vector<Symbol> doubled(w->syms);
    doubled.insert(doubled.end(), w->syms.begin(), w->syms.end());
    if (!spec.word_allowed(Word{doubled}))
      throw NoWitnessInHorizon("assembled periodic pair leaves the language");
  }

  out.x = PointGen::eventually_periodic(Word(), px);
  out.y = PointGen::eventually_periodic(Word(), py);
  out.period = static_cast<int>(period);
  out.suggested_horizon = static_cast<int>(4 * period);
  return out;
}

}  // namespace deltamix
