#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "ultra/tree.hpp"

namespace ultra {

// The distance generated by a labeled tree: 0 on the diagonal, otherwise the
// maximum label over the unique connecting path, endpoints included. Every
// computation below uses only comparisons and max on the stored labels, so
// the naive, swept and indexed routes return bit-identical doubles.

struct UltrametricVerdict {
  bool non_degenerate = true;
  // Offending edge when degenerate: both endpoints labeled 0, u < v.
  int u = -1;
  int v = -1;
};

// Non-degenerate iff max{l(u), l(v)} > 0 on every edge; otherwise reports the
// first offending edge in index order.
UltrametricVerdict validate_labeling(const LabeledTree& t);

double dist_naive(const LabeledTree& t, int u, int v);

// Distances from one source to every vertex in a single sweep.
std::vector<double> distances_from(const LabeledTree& t, int source);

// Ancestor-jump (binary lifting) structure over a rooted orientation of the
// tree. Rooted at the lexicographically smallest vertex id; jump level k
// stores the 2^k-th ancestor and the maximum label on the vertex interval
// from the node up to, and excluding, that ancestor. Build is O(n log n),
// queries O(log n). Immutable after construction; concurrent reads are safe.
class PathMaxIndex {
 public:
  explicit PathMaxIndex(const LabeledTree& t);

  double distance(int u, int v) const;
  double distance(std::string_view u, std::string_view v) const;
  int root() const noexcept { return 0; }
  int size() const noexcept { return static_cast<int>(label_.size()); }

 private:
  int index_of(std::string_view id) const;
  std::vector<std::string> ids_;
  std::vector<double> label_;
  std::vector<int> depth_;
  std::vector<std::vector<int>> up_;      // up_[k][v]: 2^k-th ancestor
  std::vector<std::vector<double>> mx_;   // max label on [v, up_[k][v])
};

inline PathMaxIndex build_index(const LabeledTree& t) { return PathMaxIndex(t); }

struct Ball {
  int center = 0;
  double radius = 0;
  std::vector<int> members;  // sorted; exactly {x : d(center, x) <= radius}
};

// Closed ball. Flood fill from the center over vertices with label <= r;
// the center belongs to its ball even when its own label exceeds r.
Ball ball(const LabeledTree& t, int center, double radius);

// Max distance over pairs of `a`; 0 for singletons.
double diameter(const LabeledTree& t, const std::vector<int>& a);

struct DiscreteCheck {
  bool discrete = true;
  // When discrete: per member, half the minimum positive distance to the
  // other members (1 for singletons).
  std::vector<std::pair<int, double>> witness_radii;
  // When not: two distinct members at distance 0.
  std::pair<int, int> violating_pair{-1, -1};
};

DiscreteCheck is_discrete_subset(const LabeledTree& t, const std::vector<int>& s);

// Equivalence classes of d <= eps restricted to `a`; requires a
// non-degenerate labeling and eps > 0. Classes are ordered by smallest
// member, members sorted.
std::vector<std::vector<int>> ball_partition(const LabeledTree& t,
                                             const std::vector<int>& a, double eps);

// Size of a maximum subset of `a` with pairwise distance > eps; equals the
// number of ball_partition classes.
std::size_t packing_number(const LabeledTree& t, const std::vector<int>& a,
                           double eps);

// All vertices with label <= eps (possibly empty), sorted.
std::vector<int> w_epsilon(const LabeledTree& t, double eps);

}  // namespace ultra
