#pragma once

#include <cstdint>
#include <vector>

#include "ultra/tree.hpp"

// Independent brute-force oracles and deterministic random instances. These
// recover paths with their own breadth-first search and never call into the
// metric module, so equality against dist_naive / PathMaxIndex is a real
// cross-check and not a tautology.
namespace ultra::oracle {

struct RandomTreeSpec {
  enum class Mode { PositiveUniform, WithZeros, InjectiveOrdinal };
  std::size_t n = 1;
  Mode mode = Mode::PositiveUniform;
  double zero_probability = 0.25;  // WithZeros only
  std::uint64_t seed = 0;
};

// Deterministic: vertex k attaches to a uniformly chosen earlier vertex.
// The same spec always yields the identical tree.
ultra::LabeledTree random_tree(const RandomTreeSpec& spec);

double brute_dist(const ultra::LabeledTree& t, int u, int v);

// Intersection of all connected vertex supersets of `a`; |V| <= 16.
std::vector<int> brute_hull(const ultra::LabeledTree& t, const std::vector<int>& a);

// Filter by all-pairs distances; |V| <= 64.
std::vector<int> brute_ball(const ultra::LabeledTree& t, int center, double radius);

// Exhaustive subset maximization; |a| <= 14.
std::size_t brute_packing(const ultra::LabeledTree& t, const std::vector<int>& a,
                          double eps);

}  // namespace ultra::oracle
