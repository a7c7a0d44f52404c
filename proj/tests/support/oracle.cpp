#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>

namespace ultra::oracle {
namespace {

std::vector<int> bfs_path(const ultra::LabeledTree& t, int u, int v) {
  std::vector<int> parent(static_cast<std::size_t>(t.size()), -1);
  std::queue<int> q;
  q.push(u);
  parent[static_cast<std::size_t>(u)] = u;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    if (x == v) break;
    for (int y : t.neighbors(x)) {
      if (parent[static_cast<std::size_t>(y)] < 0) {
        parent[static_cast<std::size_t>(y)] = x;
        q.push(y);
      }
    }
  }
  std::vector<int> path;
  for (int x = v; x != u; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
  path.push_back(u);
  return path;
}

bool induced_connected(const ultra::LabeledTree& t, unsigned mask) {
  if (mask == 0) return false;
  int start = 0;
  while (!(mask & (1u << start))) ++start;
  unsigned seen = 1u << start;
  std::vector<int> stack{start};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : t.neighbors(x)) {
      unsigned bit = 1u << y;
      if ((mask & bit) && !(seen & bit)) {
        seen |= bit;
        stack.push_back(y);
      }
    }
  }
  return seen == mask;
}

}  // namespace

ultra::LabeledTree random_tree(const RandomTreeSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("random tree needs n >= 1");
  std::mt19937_64 rng(spec.seed);
  std::vector<std::pair<std::string, double>> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t k = 1; k <= spec.n; ++k) {
    double label = 0;
    switch (spec.mode) {
      case RandomTreeSpec::Mode::PositiveUniform:
        label = (1 + rng() % 10000) / 1000.0;
        break;
      case RandomTreeSpec::Mode::WithZeros:
        label = (rng() % 1000) / 1000.0 < spec.zero_probability
                    ? 0.0
                    : (1 + rng() % 10000) / 1000.0;
        break;
      case RandomTreeSpec::Mode::InjectiveOrdinal:
        label = static_cast<double>(k);
        break;
    }
    vertices.emplace_back("v" + std::to_string(k), label);
    if (k > 1) {
      std::size_t parent = 1 + rng() % (k - 1);
      edges.emplace_back("v" + std::to_string(parent), "v" + std::to_string(k));
    }
  }
  return ultra::LabeledTree::from_parts("random", std::move(vertices), std::move(edges));
}

double brute_dist(const ultra::LabeledTree& t, int u, int v) {
  if (u < 0 || u >= t.size() || v < 0 || v >= t.size())
    throw std::invalid_argument("unknown vertex index");
  if (u == v) return 0.0;
  double m = 0.0;
  for (int x : bfs_path(t, u, v)) m = std::max(m, t.label(x));
  return m;
}

std::vector<int> brute_hull(const ultra::LabeledTree& t, const std::vector<int>& a) {
  auto set = ultra::checked_vertex_set(t, a);
  if (t.size() > 16) throw std::invalid_argument("brute_hull: tree too large");
  unsigned required = 0;
  for (int v : set) required |= 1u << v;
  unsigned intersection = (1u << t.size()) - 1;
  for (unsigned mask = 0; mask < (1u << t.size()); ++mask) {
    if ((mask & required) != required) continue;
    if (!induced_connected(t, mask)) continue;
    intersection &= mask;
  }
  std::vector<int> out;
  for (int v = 0; v < t.size(); ++v)
    if (intersection & (1u << v)) out.push_back(v);
  return out;
}

std::vector<int> brute_ball(const ultra::LabeledTree& t, int center, double radius) {
  if (t.size() > 64) throw std::invalid_argument("brute_ball: tree too large");
  if (radius < 0) throw std::invalid_argument("negative radius");
  std::vector<int> out;
  for (int v = 0; v < t.size(); ++v)
    if (brute_dist(t, center, v) <= radius) out.push_back(v);
  return out;
}

std::size_t brute_packing(const ultra::LabeledTree& t, const std::vector<int>& a,
                          double eps) {
  auto set = ultra::checked_vertex_set(t, a);
  if (set.size() > 14) throw std::invalid_argument("brute_packing: set too large");
  const std::size_t m = set.size();
  std::vector<std::vector<double>> dist(m, std::vector<double>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      dist[i][j] = dist[j][i] = brute_dist(t, set[i], set[j]);

  std::size_t best = 0;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!(mask & (1u << i))) continue;
      for (std::size_t j = i + 1; j < m && ok; ++j)
        if ((mask & (1u << j)) && dist[i][j] <= eps) ok = false;
    }
    if (ok) best = std::max<std::size_t>(best, std::popcount(mask));
  }
  return best;
}

}  // namespace ultra::oracle
