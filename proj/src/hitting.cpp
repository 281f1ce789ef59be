#include "deltamix/hitting.hpp"

#include <algorithm>

#include "deltamix/errors.hpp"
#include "deltamix/feasibility.hpp"

namespace deltamix {

namespace {

void require_nonempty(const SubshiftSpec& spec,
                      const std::vector<CylinderUnion>& us) {
  for (const CylinderUnion& u : us)
    if (!u.nonempty_in(spec))
      throw EmptyOpenSet("cylinder union " + u.text() +
                         " is empty in the subshift");
}

}  // namespace

TimeSet generalized_hitting_set(const SubshiftSpec& spec,
                                const std::vector<CylinderUnion>& us,
                                int horizon, bool witnesses) {
  if (us.size() < 2) throw InvalidArgument("need d >= 2 cylinder unions");
  if (horizon < 1) throw InvalidArgument("horizon must be >= 1");
  require_nonempty(spec, us);
  std::vector<CylinderUnion> live;
  live.reserve(us.size());
  for (const CylinderUnion& u : us) live.push_back(u.restricted_to(spec));

  TimeSet out;
  out.horizon = horizon;
  ReachCache reach(spec);
  int d = static_cast<int>(live.size());
  for (int n = 1; n <= horizon; ++n) {
    std::vector<std::pair<int, const CylinderUnion*>> slots;
    slots.reserve(d);
    for (int i = 0; i < d; ++i) slots.emplace_back(i * n, &live[i]);
    if (witnesses) {
      auto w = union_placements_witness(spec, reach, slots);
      if (w) {
        out.members.push_back(n);
        out.witnesses.emplace(n, *w);
      }
    } else if (union_placements_feasible(spec, reach, slots)) {
      out.members.push_back(n);
    }
  }
  return out;
}

TimeSet hitting_set(const SubshiftSpec& spec, const CylinderUnion& u,
                    const CylinderUnion& v, int horizon, bool witnesses) {
  return generalized_hitting_set(spec, {u, v}, horizon, witnesses);
}

TimeSet entering_time_set(const SubshiftSpec& spec, const PointGen& x,
                          const CylinderUnion& u, int horizon) {
  if (horizon < 1) throw InvalidArgument("horizon must be >= 1");
  if (!u.nonempty_in(spec))
    throw EmptyOpenSet("cylinder union " + u.text() + " is empty in the subshift");
  TimeSet out;
  out.horizon = horizon;
  for (int n = 1; n <= horizon; ++n) {
    for (const Word& w : u.cylinders) {
      if (!spec.word_allowed(w)) continue;
      if (x.window(n, w.size()) == w) {
        out.members.push_back(n);
        break;
      }
    }
  }
  return out;
}

std::optional<int> thickness_certificate(const TimeSet& t, int block_length) {
  if (block_length < 1) throw InvalidArgument("block_length must be >= 1");
  int run = 0, prev = 0;
  for (int n : t.members) {
    run = (n == prev + 1) ? run + 1 : 1;
    prev = n;
    if (run >= block_length) return n - block_length + 1;
  }
  return std::nullopt;
}

FilterBaseWitness filter_base_witness(const SubshiftSpec& spec,
                                      const std::vector<CylinderUnion>& us,
                                      const std::vector<CylinderUnion>& vs,
                                      int horizon) {
  if (us.size() != vs.size() || us.size() < 2)
    throw InvalidArgument("need |us| = |vs| = d >= 2");
  require_nonempty(spec, us);
  require_nonempty(spec, vs);
  int d = static_cast<int>(us.size());

  for (int m = 1; m <= horizon; ++m) {
    std::vector<CylinderUnion> ws;
    ws.reserve(d);
    bool all_nonempty = true;
    for (int i = 0; i < d && all_nonempty; ++i) {
      CylinderUnion w = intersect_shifted(spec, us[i], m, vs[i]);
      if (!w.nonempty_in(spec)) all_nonempty = false;
      else ws.push_back(std::move(w));
    }
    if (!all_nonempty) continue;

    // spot-verify the inclusion N(W...) ⊆ N(U...) ∩ N(V...) on the horizon
    TimeSet nw = generalized_hitting_set(spec, ws, horizon, false);
    TimeSet nu = generalized_hitting_set(spec, us, horizon, false);
    TimeSet nv = generalized_hitting_set(spec, vs, horizon, false);
    if (!nw.subset_of(nu) || !nw.subset_of(nv))
      throw InvariantViolation("filter-base inclusion failed at m=" +
                               std::to_string(m));
    return FilterBaseWitness{m, std::move(ws)};
  }
  throw NoWitnessInHorizon("no filter-base shift m within horizon " +
                           std::to_string(horizon));
}

bool replay_hitting_witness(const SubshiftSpec& spec,
                            const std::vector<CylinderUnion>& us, int n,
                            const Word& word) {
  if (!spec.word_allowed(word)) return false;
  for (size_t i = 0; i < us.size(); ++i) {
    int offset = static_cast<int>(i) * n;
    bool hit = false;
    for (const Word& w : us[i].cylinders) {
      if (offset + w.size() > word.size()) continue;
      bool match = true;
      for (int t = 0; t < w.size() && match; ++t)
        if (word[offset + t] != w[t]) match = false;
      if (match) { hit = true; break; }
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace deltamix
