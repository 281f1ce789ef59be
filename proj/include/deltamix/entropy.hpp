#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltamix/config.hpp"
#include "deltamix/independence.hpp"
#include "deltamix/subshift.hpp"

namespace deltamix {

struct EntropyReport {
  double value = 0.0;            // natural log
  std::string method;            // "perron" or "word_count"
  long long iterations = 0;
  double residual = 0.0;
  bool converged = true;
  std::vector<double> sequence;  // (1/n) log |L_n| for word_count
  std::string text() const;      // fixed 12-digit formatting
};

// log of the Perron root of the transition graph, one strongly connected
// component at a time, largest taken. Power iteration on M+I with
// Collatz-Wielandt brackets; the bracket width is the reported residual.
EntropyReport sft_entropy(const SubshiftSpec& spec, double tol = 1e-9,
                          long long max_iterations = 100000);

// (1/n) log |L_n| for n = 1..n_max; upper bounds the Perron value
EntropyReport word_count_entropy(const SubshiftSpec& spec, int n_max,
                                 const RunConfig& config = RunConfig());

struct EntropyTupleCandidate {
  std::vector<CylinderUnion> cylinders;
  IndependenceCertificate certificate;
  DensityReport density;
};

// finite proxy for the entropy-tuple criterion: pairwise disjoint
// neighborhoods admitting an independence set of size >= min_size
std::optional<EntropyTupleCandidate> entropy_tuple_candidate(
    const SubshiftSpec& spec, const std::vector<CylinderUnion>& cylinders,
    int horizon, int min_size, long long cap = 4096);

}  // namespace deltamix
