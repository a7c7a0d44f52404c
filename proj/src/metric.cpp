#include "ultra/metric.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>

namespace ultra {
namespace {

void check_vertex(const LabeledTree& t, int v) {
  if (v < 0 || v >= t.size()) throw std::invalid_argument("unknown vertex index");
}

void require_non_degenerate(const LabeledTree& t) {
  auto verdict = validate_labeling(t);
  if (!verdict.non_degenerate)
    throw std::invalid_argument("degenerate labeling: edge {" + t.id(verdict.u) +
                                ", " + t.id(verdict.v) + "} has both labels 0");
}

// Connected component of `start` inside the subgraph induced by label <= eps.
// Component ids are assigned lazily into `comp`.
void flood_component(const LabeledTree& t, int start, double eps,
                     std::vector<int>& comp, int mark) {
  std::queue<int> q;
  q.push(start);
  comp[static_cast<std::size_t>(start)] = mark;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : t.neighbors(x)) {
      if (comp[static_cast<std::size_t>(y)] < 0 && t.label(y) <= eps) {
        comp[static_cast<std::size_t>(y)] = mark;
        q.push(y);
      }
    }
  }
}

}  // namespace

UltrametricVerdict validate_labeling(const LabeledTree& t) {
  for (int u = 0; u < t.size(); ++u) {
    if (t.label(u) > 0) continue;
    for (int v : t.neighbors(u)) {
      if (u < v && t.label(v) <= 0) return {false, u, v};
    }
  }
  return {};
}

double dist_naive(const LabeledTree& t, int u, int v) {
  if (u == v) {
    check_vertex(t, u);
    return 0.0;
  }
  double m = 0.0;
  for (int x : path_between(t, u, v)) m = std::max(m, t.label(x));
  return m;
}

std::vector<double> distances_from(const LabeledTree& t, int source) {
  check_vertex(t, source);
  std::vector<double> dist(static_cast<std::size_t>(t.size()), -1.0);
  std::queue<int> q;
  q.push(source);
  dist[static_cast<std::size_t>(source)] = t.label(source);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : t.neighbors(x)) {
      if (dist[static_cast<std::size_t>(y)] < 0) {
        dist[static_cast<std::size_t>(y)] =
            std::max(dist[static_cast<std::size_t>(x)], t.label(y));
        q.push(y);
      }
    }
  }
  dist[static_cast<std::size_t>(source)] = 0.0;
  return dist;
}

PathMaxIndex::PathMaxIndex(const LabeledTree& t)
    : ids_(t.ids()), label_(static_cast<std::size_t>(t.size())),
      depth_(static_cast<std::size_t>(t.size()), 0) {
  const int n = t.size();
  for (int v = 0; v < n; ++v) label_[static_cast<std::size_t>(v)] = t.label(v);

  // Iterative BFS orientation from the lexicographically smallest id
  // (index 0); no recursion so path-shaped trees of any size are fine.
  std::vector<int> parent(static_cast<std::size_t>(n), 0);
  {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : t.neighbors(x)) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          parent[static_cast<std::size_t>(y)] = x;
          depth_[static_cast<std::size_t>(y)] = depth_[static_cast<std::size_t>(x)] + 1;
          q.push(y);
        }
      }
    }
  }

  int max_depth = 0;
  for (int v = 0; v < n; ++v) max_depth = std::max(max_depth, depth_[static_cast<std::size_t>(v)]);
  const int levels = std::max(1, static_cast<int>(std::bit_width(
                                     static_cast<unsigned>(max_depth) | 1u)));
  up_.assign(static_cast<std::size_t>(levels),
             std::vector<int>(static_cast<std::size_t>(n)));
  mx_.assign(static_cast<std::size_t>(levels),
             std::vector<double>(static_cast<std::size_t>(n)));
  for (int v = 0; v < n; ++v) {
    up_[0][static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(v)];
    mx_[0][static_cast<std::size_t>(v)] = label_[static_cast<std::size_t>(v)];
  }
  for (int k = 1; k < levels; ++k) {
    for (int v = 0; v < n; ++v) {
      int mid = up_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(v)];
      up_[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)] =
          up_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(mid)];
      mx_[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)] =
          std::max(mx_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(v)],
                   mx_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(mid)]);
    }
  }
}

int PathMaxIndex::index_of(std::string_view id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id)
    throw std::invalid_argument("unknown vertex id '" + std::string(id) + "'");
  return static_cast<int>(it - ids_.begin());
}

double PathMaxIndex::distance(std::string_view u, std::string_view v) const {
  return distance(index_of(u), index_of(v));
}

double PathMaxIndex::distance(int u, int v) const {
  if (u < 0 || u >= size() || v < 0 || v >= size())
    throw std::invalid_argument("unknown vertex index");
  if (u == v) return 0.0;

  double m = 0.0;
  if (depth_[static_cast<std::size_t>(u)] < depth_[static_cast<std::size_t>(v)])
    std::swap(u, v);
  int lift = depth_[static_cast<std::size_t>(u)] - depth_[static_cast<std::size_t>(v)];
  for (int k = 0; lift != 0; ++k, lift >>= 1) {
    if (lift & 1) {
      m = std::max(m, mx_[static_cast<std::size_t>(k)][static_cast<std::size_t>(u)]);
      u = up_[static_cast<std::size_t>(k)][static_cast<std::size_t>(u)];
    }
  }
  if (u == v) return std::max(m, label_[static_cast<std::size_t>(u)]);
  for (int k = static_cast<int>(up_.size()) - 1; k >= 0; --k) {
    int pu = up_[static_cast<std::size_t>(k)][static_cast<std::size_t>(u)];
    int pv = up_[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)];
    if (pu != pv) {
      m = std::max({m, mx_[static_cast<std::size_t>(k)][static_cast<std::size_t>(u)],
                    mx_[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)]});
      u = pu;
      v = pv;
    }
  }
  m = std::max({m, mx_[0][static_cast<std::size_t>(u)], mx_[0][static_cast<std::size_t>(v)]});
  int lca = up_[0][static_cast<std::size_t>(u)];
  return std::max(m, label_[static_cast<std::size_t>(lca)]);
}

Ball ball(const LabeledTree& t, int center, double radius) {
  check_vertex(t, center);
  if (radius < 0) throw std::invalid_argument("negative radius");
  Ball b;
  b.center = center;
  b.radius = radius;
  if (t.label(center) > radius) {
    b.members = {center};
    return b;
  }
  std::vector<int> comp(static_cast<std::size_t>(t.size()), -1);
  flood_component(t, center, radius, comp, 0);
  for (int v = 0; v < t.size(); ++v)
    if (comp[static_cast<std::size_t>(v)] == 0) b.members.push_back(v);
  return b;
}

double diameter(const LabeledTree& t, const std::vector<int>& a) {
  auto set = checked_vertex_set(t, a);
  double best = 0.0;
  if (set.size() < 2) return best;
  for (int u : set) {
    auto dist = distances_from(t, u);
    for (int v : set)
      if (v != u) best = std::max(best, dist[static_cast<std::size_t>(v)]);
  }
  return best;
}

DiscreteCheck is_discrete_subset(const LabeledTree& t, const std::vector<int>& s) {
  auto set = checked_vertex_set(t, s);
  DiscreteCheck check;
  for (std::size_t i = 0; i < set.size(); ++i) {
    auto dist = distances_from(t, set[i]);
    double closest = -1.0;
    for (std::size_t j = 0; j < set.size(); ++j) {
      if (i == j) continue;
      double d = dist[static_cast<std::size_t>(set[j])];
      if (d == 0.0) {
        check.discrete = false;
        check.witness_radii.clear();
        check.violating_pair = {std::min(set[i], set[j]), std::max(set[i], set[j])};
        return check;
      }
      if (closest < 0 || d < closest) closest = d;
    }
    check.witness_radii.emplace_back(set[i], closest < 0 ? 1.0 : closest / 2.0);
  }
  return check;
}

std::vector<std::vector<int>> ball_partition(const LabeledTree& t,
                                             const std::vector<int>& a, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("epsilon must be positive");
  require_non_degenerate(t);
  auto set = checked_vertex_set(t, a);

  std::vector<int> comp(static_cast<std::size_t>(t.size()), -1);
  int next_mark = 0;
  for (int v : set)
    if (t.label(v) <= eps && comp[static_cast<std::size_t>(v)] < 0)
      flood_component(t, v, eps, comp, next_mark++);

  // Members whose label exceeds eps sit at distance > eps from everything
  // else, so each forms its own class.
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of_mark(static_cast<std::size_t>(next_mark), -1);
  for (int v : set) {
    if (t.label(v) > eps) {
      classes.push_back({v});
      continue;
    }
    int mark = comp[static_cast<std::size_t>(v)];
    int& slot = class_of_mark[static_cast<std::size_t>(mark)];
    if (slot < 0) {
      slot = static_cast<int>(classes.size());
      classes.push_back({v});
    } else {
      classes[static_cast<std::size_t>(slot)].push_back(v);
    }
  }
  // `set` is sorted, so classes are ordered by smallest member already and
  // class members are sorted by construction.
  return classes;
}

std::size_t packing_number(const LabeledTree& t, const std::vector<int>& a,
                           double eps) {
  return ball_partition(t, a, eps).size();
}

std::vector<int> w_epsilon(const LabeledTree& t, double eps) {
  std::vector<int> out;
  for (int v = 0; v < t.size(); ++v)
    if (t.label(v) <= eps) out.push_back(v);
  return out;
}

}  // namespace ultra
