#include "deltamix/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "deltamix/density.hpp"
#include "deltamix/entropy.hpp"
#include "deltamix/errors.hpp"
#include "deltamix/feasibility.hpp"
#include "deltamix/hitting.hpp"

namespace deltamix {

std::string delta_kind_name(DeltaKind kind) {
  switch (kind) {
    case DeltaKind::TransitiveSystem: return "delta_transitive_system";
    case DeltaKind::TransitiveSet: return "delta_transitive_set";
    case DeltaKind::WeaklyMixingSet: return "delta_wm_set";
    case DeltaKind::AmMembership: return "a_m_membership";
  }
  return "?";
}

std::string DeltaCertificate::text() const {
  std::ostringstream os;
  os << "kind " << delta_kind_name(kind) << "\n";
  os << "d " << d << "\n";
  if (m > 0) os << "m " << m << "\n";
  os << "n " << n << "\n";
  os << "sets";
  for (const CylinderUnion& u : sets) os << " " << u.text();
  os << "\n";
  if (relative_set) os << "relative " << relative_set->text() << "\n";
  if (!cover.empty()) {
    os << "cover";
    for (const Word& w : cover) os << " " << w.text();
    os << "\n";
  }
  if (witness) os << "witness " << witness->text() << "\n";
  if (independence) os << independence->text();
  return os.str();
}

DeltaCertificate delta_transitive_certificate(const SubshiftSpec& spec,
                                              const std::vector<CylinderUnion>& us,
                                              int horizon) {
  if (us.size() < 2) throw InvalidArgument("need d >= 2 sets");
  TimeSet t = generalized_hitting_set(spec, us, horizon, true);
  if (t.members.empty())
    throw NoWitnessInHorizon("hitting set empty within horizon " +
                             std::to_string(horizon));
  DeltaCertificate cert;
  cert.kind = DeltaKind::TransitiveSystem;
  cert.d = static_cast<int>(us.size());
  cert.n = t.members.front();
  cert.sets = us;
  cert.witness = t.witnesses.at(cert.n);
  return cert;
}

DeltaSystemReport delta_transitive_system_report(const SubshiftSpec& spec,
                                                 int max_word_len, int max_d,
                                                 int horizon) {
  if (max_word_len < 1 || max_d < 2)
    throw InvalidArgument("need max_word_len >= 1 and max_d >= 2");
  std::vector<Word> words;
  for (int len = 1; len <= max_word_len; ++len)
    for (const Word& w : spec.language(len)) words.push_back(w);

  DeltaSystemReport rep;
  rep.max_word_len = max_word_len;
  rep.max_d = max_d;
  rep.horizon = horizon;
  for (int d = 2; d <= max_d; ++d) {
    std::vector<size_t> idx(d, 0);
    while (true) {
      DeltaSystemRow row;
      row.d = d;
      std::vector<CylinderUnion> us;
      for (int i = 0; i < d; ++i) {
        row.words.push_back(words[idx[i]]);
        us.push_back(CylinderUnion({words[idx[i]]}));
      }
      TimeSet t = generalized_hitting_set(spec, us, horizon, false);
      if (!t.members.empty()) {
        row.n = t.members.front();
        ++rep.certified;
      } else {
        ++rep.failed;
      }
      rep.rows.push_back(std::move(row));
      int pos = d - 1;
      while (pos >= 0 && ++idx[pos] == words.size()) idx[pos--] = 0;
      if (pos < 0) break;
    }
  }
  return rep;
}

DeltaCertificate delta_wm_certificate(const SubshiftSpec& spec,
                                      const CylinderUnion& a,
                                      const std::vector<CylinderUnion>& us,
                                      int horizon, long long cap) {
  int d = static_cast<int>(us.size());
  if (d < 2) throw InvalidArgument("need d >= 2 sets");
  if (!a.nonempty_in(spec)) throw EmptyOpenSet("relative set is empty");
  // every U_i must meet A
  {
    ReachCache reach(spec);
    for (const CylinderUnion& u : us) {
      std::vector<std::pair<int, const CylinderUnion*>> slots{{0, &a}, {0, &u}};
      if (!union_placements_feasible(spec, reach, slots))
        throw EmptyOpenSet("set " + u.text() + " does not meet the relative set");
    }
  }
  long long selectors = 1;
  for (int i = 0; i < d; ++i) {
    selectors *= d;
    if (selectors > cap)
      throw CapExceeded("d^d selector count exceeds cap " + std::to_string(cap));
  }
  for (int n = 1; n <= horizon; ++n) {
    std::vector<int> J;
    for (int i = 0; i < d; ++i) J.push_back(i * n);
    auto res = independence_check(spec, us, J, cap, a);
    if (res.ok()) {
      DeltaCertificate cert;
      cert.kind = DeltaKind::WeaklyMixingSet;
      cert.d = d;
      cert.n = n;
      cert.sets = us;
      cert.relative_set = a;
      cert.independence = std::move(*res.certificate);
      return cert;
    }
  }
  throw NoWitnessInHorizon("no n certifies {0,n,...,(d-1)n} within horizon " +
                           std::to_string(horizon));
}

DeltaCertificate a_m_membership(const SubshiftSpec& spec, const CylinderUnion& e,
                                int m, int horizon, long long cap) {
  if (m < 1) throw InvalidArgument("m must be >= 1");
  if (e.cylinders.size() < 2)
    throw InvalidArgument("the set needs at least two cylinders");
  if (!e.nonempty_in(spec)) throw EmptyOpenSet("the set is empty");

  int len = 1;
  while ((1 << (len - 1)) <= m - 1) ++len;  // len = ceil(log2 m) + 1
  if (m == 1) len = 1;

  // cover: all allowed len-words whose cylinder meets e
  std::vector<Word> cover;
  for (const Word& w : spec.language(len)) {
    bool meets = false;
    for (const Word& u : e.cylinders)
      if (u.is_prefix_of(w) || w.is_prefix_of(u)) { meets = true; break; }
    if (meets) cover.push_back(w);
  }
  int k = static_cast<int>(cover.size());
  if (k < 2) throw InvalidArgument("cover has fewer than two cylinders");

  long long selectors = 1;
  for (int i = 0; i < k; ++i) {
    selectors *= k;
    if (selectors > cap)
      throw CapExceeded("k^k = " + std::to_string(k) + "^" + std::to_string(k) +
                        " selector count exceeds cap");
  }

  std::vector<CylinderUnion> tuple;
  for (const Word& w : cover) tuple.push_back(CylinderUnion({w}));
  for (int n = 1; n <= horizon; ++n) {
    std::vector<int> J;
    for (int i = 0; i < k; ++i) J.push_back(i * n);
    auto res = independence_check(spec, tuple, J, cap, e);
    if (res.ok()) {
      DeltaCertificate cert;
      cert.kind = DeltaKind::AmMembership;
      cert.d = k;
      cert.m = m;
      cert.n = n;
      cert.sets = tuple;
      cert.relative_set = e;
      cert.cover = cover;
      cert.independence = std::move(*res.certificate);
      return cert;
    }
  }
  throw NoWitnessInHorizon("no n certifies the A_m cover within horizon " +
                           std::to_string(horizon));
}

// ----- spread witnesses -----------------------------------------------------

namespace {

// Every allowed extension of `base` compatible with E matches `target` at
// `offset`. Exact: checks that no allowed completion deviates at any window
// position.
bool window_forced(const SubshiftSpec& spec, ReachCache& reach, const Word& base,
                   int offset, const Word& target) {
  std::vector<std::pair<int, Symbol>> fixed;
  for (int i = 0; i < base.size(); ++i) fixed.emplace_back(i, base[i]);
  // consistency of base with target where they overlap
  for (int t = 0; t < target.size(); ++t) {
    int pos = offset + t;
    if (pos < base.size()) {
      if (base[pos] != target[t]) return false;
    }
  }
  if (!constraints_feasible(spec, reach, fixed)) return false;
  // a deviation at window position t is a completion matching target on
  // [offset, offset+t) and differing at offset+t
  for (int t = 0; t < target.size(); ++t) {
    int pos = offset + t;
    if (pos < base.size()) continue;  // already forced by the base
    for (Symbol s = 0; s < spec.alphabet_size(); ++s) {
      if (s == target[t]) continue;
      std::vector<std::pair<int, Symbol>> probe(fixed);
      for (int u = 0; u < t; ++u)
        if (offset + u >= base.size()) probe.emplace_back(offset + u, target[u]);
      probe.emplace_back(pos, s);
      std::sort(probe.begin(), probe.end());
      if (constraints_feasible(spec, reach, probe)) return false;
    }
  }
  return true;
}

}  // namespace

SpreadWitness spread_witness(const SubshiftSpec& spec, const CylinderUnion& e,
                             const std::vector<Word>& zs,
                             const std::vector<std::vector<Word>>& targets,
                             int horizon) {
  if (zs.empty()) throw InvalidArgument("need at least one base point");
  if (targets.size() != zs.size())
    throw InvalidArgument("one target row per base point");
  size_t d = targets[0].size();
  if (d < 1) throw InvalidArgument("need d >= 1 targets per base point");
  int q = targets[0][0].size();
  for (const auto& row : targets) {
    if (row.size() != d) throw InvalidArgument("ragged target table");
    for (const Word& g : row) {
      if (g.size() != q)
        throw InvalidArgument("targets must share one length");
      if (!spec.word_allowed(g))
        throw InvalidArgument("target " + g.text() + " is not in the language");
    }
  }

  // base point z_i merged with its covering cylinder of E
  std::vector<Word> bases;
  for (const Word& z : zs) {
    if (!spec.word_allowed(z))
      throw InvalidArgument("base point " + z.text() + " is not in the language");
    std::optional<Word> merged;
    for (const Word& u : e.cylinders) {
      if (u.is_prefix_of(z)) { merged = z; break; }
      if (z.is_prefix_of(u)) { merged = u; break; }
    }
    if (!merged)
      throw InvalidArgument("base point " + z.text() + " lies outside E");
    bases.push_back(*merged);
  }

  ReachCache reach(spec);
  int k_min = (q >= 31 ? horizon + 1 : (1 << q) + 1);  // 1/k < 2^-q
  for (int k = k_min; k <= horizon; ++k) {
    bool ok = true;
    for (size_t i = 0; i < bases.size() && ok; ++i)
      for (size_t j = 1; j <= d && ok; ++j)
        if (!window_forced(spec, reach, bases[i], static_cast<int>(j) * k,
                           targets[i][j - 1]))
          ok = false;
    if (ok) {
      SpreadWitness w;
      w.base_points = zs;
      w.targets = targets;
      w.d = static_cast<int>(d);
      w.k = k;
      w.target_len = q;
      return w;
    }
  }
  throw NoWitnessInHorizon("no spread time k within horizon " +
                           std::to_string(horizon));
}

// ----- Theorem-B-style construction ----------------------------------------

long long tree_level_size(int seed_count, int level) {
  long long size = seed_count;
  for (int k = 2; k <= level; ++k) {
    long long next = 1;
    for (int i = 0; i < k; ++i) {
      next *= size;
      if (next > (1ll << 40)) return next;  // caller caps anyway
    }
    size = next;
  }
  return size;
}

namespace {

int clamped_target(long long family, int wanted, long long cap) {
  int size = 0;
  long long total = 1;
  while (size < wanted) {
    if (total > cap / family) break;
    total *= family;
    ++size;
  }
  return size;
}

Word realize_product_word(const SubshiftSpec& spec,
                          const std::vector<const Word*>& parts, int step,
                          int final_len) {
  std::vector<std::pair<int, Symbol>> fixed;
  for (size_t i = 0; i < parts.size(); ++i)
    for (int t = 0; t < parts[i]->size(); ++t)
      fixed.emplace_back(static_cast<int>(i) * step + t, (*parts[i])[t]);
  std::sort(fixed.begin(), fixed.end());
  for (size_t i = 0; i + 1 < fixed.size(); ++i)
    if (fixed[i].first == fixed[i + 1].first &&
        fixed[i].second != fixed[i + 1].second)
      throw InvariantViolation(
          "translated progression failed to unify product word");
  fixed.erase(std::unique(fixed.begin(), fixed.end()), fixed.end());
  auto w = smallest_witness(spec, final_len, fixed);
  if (!w)
    throw InvariantViolation("certified product word has no realization");
  return *w;
}

}  // namespace

ConstructionTree theorem_b_construct(const SubshiftSpec& spec,
                                     const std::vector<Word>& seeds, int depth,
                                     int horizon, const RunConfig& config) {
  int n = static_cast<int>(seeds.size());
  if (n < 2) throw InvalidArgument("need at least two seeds");
  if (depth < 1) throw InvalidArgument("depth must be >= 1");
  if (depth > config.tree_depth_cap)
    throw CapExceeded("depth beyond cap " +
                      std::to_string(config.tree_depth_cap));
  for (const Word& s : seeds)
    if (!spec.word_allowed(s))
      throw EmptyOpenSet("seed " + s.text() + " is not in the language");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!CylinderUnion({seeds[i]}).disjoint_from(CylinderUnion({seeds[j]})))
        throw InvalidArgument("seeds must be pairwise disjoint cylinders");
  if (tree_level_size(n, depth) > config.tree_family_cap)
    throw CapExceeded("family size n^{k!} beyond cap " +
                      std::to_string(config.tree_family_cap));

  EntropyReport h = sft_entropy(spec, 1e-12, config.power_iter_cap);
  if (h.value < 1e-9)
    throw EntropyZero("construction requires positive entropy; measured " +
                      std::to_string(h.value));

  ConstructionTree tree;
  tree.spec_json = spec_to_json_text(spec);
  tree.seeds = seeds;
  tree.depth = depth;
  tree.horizon = horizon;
  tree.selector_cap = config.selector_cap;

  std::vector<Word> family = seeds;
  int pending_step = 0;  // spacing that produced the current family
  for (int k = 1; k <= depth; ++k) {
    TreeLevel level;
    level.words = family;
    level.n_k = (k == 1) ? 0 : pending_step;

    std::vector<CylinderUnion> tuple;
    for (const Word& w : family) tuple.push_back(CylinderUnion({w}));
    int target = clamped_target(static_cast<long long>(family.size()),
                                2 * (k + 1), config.selector_cap);
    if (target < 1)
      throw CapExceeded("family too large for any certified J under cap");
    ExtendResult ext = independence_extend(spec, tuple, {}, horizon, target,
                                           config.selector_cap);
    level.target_size = target;
    level.J = ext.certificate.J;
    level.certificate = std::move(ext.certificate);
    level.density = ext.density;
    tree.levels.push_back(std::move(level));

    if (k == depth) break;

    // pull a (k+1)-term progression out of the certified set; its
    // translate {0, step, ..., k*step} stays certified
    auto ap = find_ap(tree.levels.back().J, k + 1);
    if (!ap)
      throw NoWitnessInHorizon("no " + std::to_string(k + 1) +
                               "-term progression in the level-" +
                               std::to_string(k) + " independence set");
    int step = ap->second;

    int len_max = 0;
    for (const Word& w : family) len_max = std::max(len_max, w.size());
    int final_len = std::max(k * step + len_max, k + 2);

    std::vector<Word> next_family;
    long long count = tree_level_size(n, k + 1);
    std::vector<int> index(static_cast<size_t>(k) + 1, 0);
    for (long long c = 0; c < count; ++c) {
      std::vector<const Word*> parts;
      for (int i = 0; i <= k; ++i) parts.push_back(&family[index[i]]);
      next_family.push_back(realize_product_word(spec, parts, step, final_len));
      int pos = k;
      while (pos >= 0 && ++index[pos] == static_cast<int>(family.size()))
        index[pos--] = 0;
    }
    family = std::move(next_family);
    pending_step = step;
  }
  check_tree_invariants(spec, tree);
  return tree;
}

void check_tree_invariants(const SubshiftSpec& spec,
                           const ConstructionTree& tree) {
  int n = static_cast<int>(tree.seeds.size());
  if (static_cast<int>(tree.levels.size()) != tree.depth)
    throw InvariantViolation("level count differs from depth");
  for (int k = 1; k <= tree.depth; ++k) {
    const TreeLevel& level = tree.levels[k - 1];
    if (static_cast<long long>(level.words.size()) != tree_level_size(n, k))
      throw InvariantViolation("level " + std::to_string(k) +
                               " family size is not n^{k!}");
    for (const Word& w : level.words)
      if (!spec.word_allowed(w))
        throw InvariantViolation("level " + std::to_string(k) + " word " +
                                 w.text() + " is not in the language");
    // pairwise disjoint cylinders
    for (size_t i = 0; i < level.words.size(); ++i)
      for (size_t j = i + 1; j < level.words.size(); ++j)
        if (level.words[i].is_prefix_of(level.words[j]) ||
            level.words[j].is_prefix_of(level.words[i]))
          throw InvariantViolation("level " + std::to_string(k) +
                                   " cylinders are not pairwise disjoint");
    if (k >= 2) {
      const TreeLevel& parent = tree.levels[k - 2];
      if (level.n_k < 1)
        throw InvariantViolation("level " + std::to_string(k) +
                                 " has no spacing n_k");
      for (const Word& w : level.words)
        if (w.size() < k + 1)
          throw InvariantViolation("level " + std::to_string(k) +
                                   " cylinder shorter than the diameter bound");
      // nesting against the parent family in odometer order
      long long parent_size = static_cast<long long>(parent.words.size());
      for (size_t widx = 0; widx < level.words.size(); ++widx) {
        long long code = static_cast<long long>(widx);
        std::vector<int> comp(static_cast<size_t>(k), 0);
        for (int i = k - 1; i >= 0; --i) {
          comp[i] = static_cast<int>(code % parent_size);
          code /= parent_size;
        }
        const Word& w = level.words[widx];
        for (int i = 0; i < k; ++i) {
          const Word& p = parent.words[comp[i]];
          int offset = i * level.n_k;
          if (offset + p.size() > w.size())
            throw InvariantViolation("level " + std::to_string(k) +
                                     " word too short for nesting window");
          for (int t = 0; t < p.size(); ++t)
            if (w[offset + t] != p[t])
              throw InvariantViolation(
                  "nesting violated at level " + std::to_string(k) +
                  " index " + std::to_string(widx));
        }
      }
    }
    if (level.J.empty())
      throw InvariantViolation("level " + std::to_string(k) +
                               " has no independence evidence");
    // replay the independence evidence
    std::vector<CylinderUnion> tuple;
    for (const Word& w : level.words) tuple.push_back(CylinderUnion({w}));
    auto res = independence_check(spec, tuple, level.J, tree.selector_cap);
    if (!res.ok())
      throw InvariantViolation("level " + std::to_string(k) +
                               " independence evidence does not replay");
  }
}

TransitivePointResult delta_transitive_point(
    int alphabet_size, const std::vector<TransitivePointRequirement>& reqs,
    int budget) {
  if (alphabet_size < 1) throw InvalidArgument("alphabet_size must be >= 1");
  std::map<int, Symbol> fixed;
  int frontier = 0;
  TransitivePointResult out;

  for (size_t ri = 0; ri < reqs.size(); ++ri) {
    const auto& req = reqs[ri];
    if (req.d < 1 || static_cast<int>(req.words.size()) != req.d)
      throw InvalidArgument("requirement needs d words");
    for (const Word& w : req.words)
      for (Symbol s : w.syms)
        if (s < 0 || s >= alphabet_size)
          throw InvalidArgument("requirement word outside the alphabet");

    bool placed = false;
    for (int n = std::max(1, frontier); !placed; ++n) {
      int extent = req.d * n + req.words.back().size();
      if (extent > budget)
        throw BudgetExceeded("requirement " + std::to_string(ri) +
                             " does not fit in budget " +
                             std::to_string(budget));
      // windows at n, 2n, ..., dn; self-overlaps must unify
      std::map<int, Symbol> trial;
      bool ok = true;
      for (int j = 1; j <= req.d && ok; ++j) {
        const Word& w = req.words[j - 1];
        for (int t = 0; t < w.size() && ok; ++t) {
          int pos = j * n + t;
          auto it = trial.find(pos);
          if (it == trial.end()) trial.emplace(pos, w[t]);
          else if (it->second != w[t]) ok = false;
        }
      }
      if (!ok) continue;
      for (const auto& [pos, sym] : trial) fixed[pos] = sym;
      out.schedule.emplace_back(static_cast<int>(ri), n);
      for (const auto& [pos, sym] : trial)
        frontier = std::max(frontier, pos + 1);
      placed = true;
    }
  }

  std::vector<Symbol> prefix(static_cast<size_t>(frontier), 0);
  for (const auto& [pos, sym] : fixed) prefix[static_cast<size_t>(pos)] = sym;
  out.prefix = Word{std::move(prefix)};
  return out;
}

}  // namespace deltamix
