#pragma once

#include <optional>
#include <vector>

#include "deltamix/cylinder.hpp"
#include "deltamix/point.hpp"
#include "deltamix/subshift.hpp"
#include "deltamix/timeset.hpp"

namespace deltamix {

// N(U,V) = {n : U ∩ T^-n V != empty}, truncated to [1, horizon].
TimeSet hitting_set(const SubshiftSpec& spec, const CylinderUnion& u,
                    const CylinderUnion& v, int horizon, bool witnesses = true);

// N(U_1,...,U_d) = {n : ⋂_i T^-(i-1)n U_i != empty}; overlapping windows are
// unified symbol-wise, gaps bridged by adjacency powers.
TimeSet generalized_hitting_set(const SubshiftSpec& spec,
                                const std::vector<CylinderUnion>& us,
                                int horizon, bool witnesses = true);

// N(x,U) = {n : T^n x ∈ U}
TimeSet entering_time_set(const SubshiftSpec& spec, const PointGen& x,
                          const CylinderUnion& u, int horizon);

// least start of a run {start,...,start+block_length-1} inside the members;
// nullopt is horizon-limited evidence, never a disproof
std::optional<int> thickness_certificate(const TimeSet& t, int block_length);

// Witness for the filter-base property: m with every W_i = U_i ∩ T^-m V_i
// non-empty, the W_i returned explicitly. The inclusion
// N(W_1..W_d) ⊆ N(U...) ∩ N(V...) is verified on the horizon before return.
struct FilterBaseWitness {
  int m = 0;
  std::vector<CylinderUnion> ws;
};
FilterBaseWitness filter_base_witness(const SubshiftSpec& spec,
                                      const std::vector<CylinderUnion>& us,
                                      const std::vector<CylinderUnion>& vs,
                                      int horizon);

// replay helper: does `word` witness membership of n in N(U_1,...,U_d)?
bool replay_hitting_witness(const SubshiftSpec& spec,
                            const std::vector<CylinderUnion>& us, int n,
                            const Word& word);

}  // namespace deltamix
