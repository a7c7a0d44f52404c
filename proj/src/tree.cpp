#include "ultra/tree.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <queue>
#include <unordered_set>

#include "ultra/decimal.hpp"

namespace ultra {
namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  // Returns false when x and y are already joined.
  bool join(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    parent[static_cast<std::size_t>(rx)] = ry;
    return true;
  }
};

std::string join_ids(const std::vector<std::string>& ids, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += sep;
    out += ids[i];
  }
  return out;
}

// Path between u and v inside a partially built adjacency, used to report
// the witness cycle when an edge closes one.
std::vector<int> partial_path(const std::vector<std::vector<int>>& adj, int u,
                              int v) {
  std::vector<int> parent(adj.size(), -1);
  std::queue<int> q;
  q.push(u);
  parent[static_cast<std::size_t>(u)] = u;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    if (x == v) break;
    for (int y : adj[static_cast<std::size_t>(x)]) {
      if (parent[static_cast<std::size_t>(y)] < 0) {
        parent[static_cast<std::size_t>(y)] = x;
        q.push(y);
      }
    }
  }
  std::vector<int> path;
  for (int x = v; x != u; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
  path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (c == '#' || std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.emplace_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

LabeledTree LabeledTree::from_parts(
    std::string name, std::vector<std::pair<std::string, double>> vertices,
    std::vector<std::pair<std::string, std::string>> edges) {
  if (!valid_name(name)) throw std::invalid_argument("invalid tree name");
  if (vertices.empty()) throw std::invalid_argument("not a tree: no vertices");

  LabeledTree t;
  t.name_ = std::move(name);

  std::sort(vertices.begin(), vertices.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    if (vertices[i].first == vertices[i + 1].first)
      throw std::invalid_argument("duplicate vertex '" + vertices[i].first + "'");
  }
  t.ids_.reserve(vertices.size());
  t.labels_.reserve(vertices.size());
  for (auto& [id, label] : vertices) {
    if (!std::isfinite(label) || label < 0.0)
      throw std::invalid_argument("invalid label for vertex '" + id + "'");
    t.ids_.push_back(std::move(id));
    t.labels_.push_back(label);
  }

  const int n = t.size();
  t.adj_.assign(static_cast<std::size_t>(n), {});
  UnionFind uf(n);
  std::unordered_set<std::uint64_t> seen_edges;
  for (const auto& [a, b] : edges) {
    int u = t.index_of(a);
    int v = t.index_of(b);
    if (u == v) throw std::invalid_argument("self-loop at '" + a + "'");
    auto key = std::minmax(u, v);
    std::uint64_t packed = static_cast<std::uint64_t>(key.first) *
                               static_cast<std::uint64_t>(n) +
                           static_cast<std::uint64_t>(key.second);
    if (!seen_edges.insert(packed).second)
      throw std::invalid_argument("duplicate edge {" + t.id(key.first) + ", " +
                                  t.id(key.second) + "}");
    if (!uf.join(u, v)) {
      std::vector<std::string> cycle;
      for (int x : partial_path(t.adj_, u, v)) cycle.push_back(t.id(x));
      throw std::invalid_argument("not a tree: cycle " + join_ids(cycle, ","));
    }
    t.adj_[static_cast<std::size_t>(u)].push_back(v);
    t.adj_[static_cast<std::size_t>(v)].push_back(u);
  }

  int main_root = uf.find(0);
  for (int v = 1; v < n; ++v) {
    if (uf.find(v) != main_root) {
      // Report the whole stray component containing the smallest such id.
      int stray = uf.find(v);
      std::vector<std::string> comp;
      for (int w = 0; w < n; ++w)
        if (uf.find(w) == stray) comp.push_back(t.id(w));
      throw std::invalid_argument("not a tree: disconnected component " +
                                  join_ids(comp, ","));
    }
  }

  for (auto& list : t.adj_) std::sort(list.begin(), list.end());
  return t;
}

int LabeledTree::index_of(std::string_view id) const {
  auto found = find(id);
  if (!found) throw std::invalid_argument("unknown vertex id '" + std::string(id) + "'");
  return *found;
}

std::optional<int> LabeledTree::find(std::string_view id) const noexcept {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<int>(it - ids_.begin());
}

std::vector<std::pair<int, int>> LabeledTree::edge_list() const {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < size(); ++u)
    for (int v : neighbors(u))
      if (u < v) edges.emplace_back(u, v);
  return edges;
}

bool LabeledTree::operator==(const LabeledTree& other) const {
  return name_ == other.name_ && ids_ == other.ids_ && labels_ == other.labels_ &&
         adj_ == other.adj_;
}

LabeledTree parse_tree(std::string_view text) {
  std::string name;
  bool saw_header = false;
  std::vector<std::pair<std::string, double>> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::unordered_set<std::string> declared;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;

    if (!saw_header) {
      if (tokens[0] != "tree" || tokens.size() != 2)
        throw ParseError(line_no, "expected 'tree <name>'");
      name = tokens[1];
      saw_header = true;
      continue;
    }
    if (tokens[0] == "vertex") {
      if (tokens.size() != 3)
        throw ParseError(line_no, "expected 'vertex <id> <label>'");
      auto label = parse_label(tokens[2]);
      if (!label) throw ParseError(line_no, "invalid label '" + tokens[2] + "'");
      if (!declared.insert(tokens[1]).second)
        throw ParseError(line_no, "duplicate vertex '" + tokens[1] + "'");
      vertices.emplace_back(tokens[1], *label);
    } else if (tokens[0] == "edge") {
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'edge <id> <id>'");
      for (int k = 1; k <= 2; ++k) {
        if (!declared.count(tokens[static_cast<std::size_t>(k)]))
          throw ParseError(line_no, "unknown vertex id '" +
                                        tokens[static_cast<std::size_t>(k)] + "'");
      }
      edges.emplace_back(tokens[1], tokens[2]);
    } else if (tokens[0] == "tree") {
      throw ParseError(line_no, "duplicate 'tree' directive");
    } else {
      throw ParseError(line_no, "unknown directive '" + tokens[0] + "'");
    }
  }
  if (!saw_header) throw ParseError(line_no, "expected 'tree <name>'");
  return LabeledTree::from_parts(std::move(name), std::move(vertices), std::move(edges));
}

std::string serialize_tree(const LabeledTree& t) {
  std::string out = "tree " + t.name() + "\n";
  for (int v = 0; v < t.size(); ++v)
    out += "vertex " + t.id(v) + " " + format_double(t.label(v)) + "\n";
  for (auto [u, v] : t.edge_list())
    out += "edge " + t.id(u) + " " + t.id(v) + "\n";
  return out;
}

std::vector<int> path_between(const LabeledTree& t, int u, int v) {
  if (u < 0 || u >= t.size() || v < 0 || v >= t.size())
    throw std::invalid_argument("unknown vertex index");
  if (u == v) return {u};
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
  std::reverse(path.begin(), path.end());
  return path;
}

int degree(const LabeledTree& t, int v) {
  if (v < 0 || v >= t.size()) throw std::invalid_argument("unknown vertex index");
  return static_cast<int>(t.neighbors(v).size());
}

std::vector<std::vector<int>> bfs_layers(const LabeledTree& t, int v) {
  if (v < 0 || v >= t.size()) throw std::invalid_argument("unknown vertex index");
  std::vector<std::vector<int>> layers;
  std::vector<char> seen(static_cast<std::size_t>(t.size()), 0);
  seen[static_cast<std::size_t>(v)] = 1;
  int covered = 1;
  std::vector<int> current{v};
  while (covered < t.size()) {
    std::vector<char> in_layer(static_cast<std::size_t>(t.size()), 0);
    std::vector<int> next;
    for (int u : current)
      for (int w : t.neighbors(u))
        if (!in_layer[static_cast<std::size_t>(w)]) {
          in_layer[static_cast<std::size_t>(w)] = 1;
          next.push_back(w);
        }
    std::sort(next.begin(), next.end());
    for (int w : next)
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++covered;
      }
    layers.push_back(next);
    current = layers.back();
  }
  return layers;
}

std::vector<int> checked_vertex_set(const LabeledTree& t, std::vector<int> a) {
  if (a.empty()) throw std::invalid_argument("empty vertex set");
  for (int v : a)
    if (v < 0 || v >= t.size()) throw std::invalid_argument("unknown vertex index");
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

LabeledTree hull(const LabeledTree& t, const std::vector<int>& a) {
  auto set = checked_vertex_set(t, a);
  return hull(t, set, set.front());
}

LabeledTree hull(const LabeledTree& t, const std::vector<int>& a, int base) {
  auto set = checked_vertex_set(t, a);
  if (std::find(set.begin(), set.end(), base) == set.end())
    throw std::invalid_argument("hull base point must belong to the set");
  std::vector<char> mark(static_cast<std::size_t>(t.size()), 0);
  mark[static_cast<std::size_t>(base)] = 1;
  for (int v : set)
    for (int x : path_between(t, base, v)) mark[static_cast<std::size_t>(x)] = 1;

  std::vector<std::pair<std::string, double>> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int v = 0; v < t.size(); ++v) {
    if (!mark[static_cast<std::size_t>(v)]) continue;
    vertices.emplace_back(t.id(v), t.label(v));
    for (int w : t.neighbors(v))
      if (v < w && mark[static_cast<std::size_t>(w)]) edges.emplace_back(t.id(v), t.id(w));
  }
  return LabeledTree::from_parts(t.name(), std::move(vertices), std::move(edges));
}

}  // namespace ultra
