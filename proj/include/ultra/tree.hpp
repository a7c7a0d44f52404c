#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ultra {

/// Raised by the text-format parsers; carries the 1-based input line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Finite tree with a nonnegative real label on every vertex.
//
// Vertices carry user-visible string ids; internally they are addressed by
// dense indexes in lexicographic id order (the dense indexing never leaks
// into serialized output). Instances are immutable after construction and
// safe to read from multiple threads.
class LabeledTree {
 public:
  // Validates and builds a tree. Throws std::invalid_argument on structural
  // problems: duplicate or unknown ids, self-loops, bad labels, a cycle
  // ("not a tree: cycle a,b,c") or a disconnected component.
  static LabeledTree from_parts(
      std::string name, std::vector<std::pair<std::string, double>> vertices,
      std::vector<std::pair<std::string, std::string>> edges);

  const std::string& name() const noexcept { return name_; }
  int size() const noexcept { return static_cast<int>(ids_.size()); }

  int index_of(std::string_view id) const;  // throws on unknown id
  std::optional<int> find(std::string_view id) const noexcept;
  const std::string& id(int v) const { return ids_[static_cast<std::size_t>(v)]; }
  double label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& neighbors(int v) const {
    return adj_[static_cast<std::size_t>(v)];
  }
  const std::vector<std::string>& ids() const noexcept { return ids_; }

  // Edges as (lo, hi) index pairs in sorted order.
  std::vector<std::pair<int, int>> edge_list() const;

  bool operator==(const LabeledTree& other) const;

 private:
  LabeledTree() = default;
  std::string name_;
  std::vector<std::string> ids_;            // lexicographically sorted
  std::vector<double> labels_;
  std::vector<std::vector<int>> adj_;       // each list sorted
};

// Line-based text format:
//   tree <name>
//   vertex <id> <label>
//   edge <id> <id>
// '#' begins a comment line; unknown directives are errors.
LabeledTree parse_tree(std::string_view text);

// Canonical form: vertices and edges sorted lexicographically, labels in
// shortest round-trip decimal. parse_tree(serialize_tree(t)) == t.
std::string serialize_tree(const LabeledTree& t);

// The unique path from u to v, endpoints included; {u} when u == v.
std::vector<int> path_between(const LabeledTree& t, int u, int v);

int degree(const LabeledTree& t, int v);

// Iterated neighborhood layers N_1(v) = N(v), N_{j+1} = union of N(u) over
// u in N_j, listed until every vertex has been seen at least once. Layers
// may repeat vertices (on a path, N_2 from an end contains the end again).
std::vector<std::vector<int>> bfs_layers(const LabeledTree& t, int v);

// Smallest subtree containing `a`, returned as the induced subtree carrying
// the original ids and labels. The default base point is the smallest member
// of `a`; the explicit-base overload exists because the result does not
// depend on the choice, and tests quantify over it.
LabeledTree hull(const LabeledTree& t, const std::vector<int>& a);
LabeledTree hull(const LabeledTree& t, const std::vector<int>& a, int base);

// Validates that `a` is a nonempty collection of in-range vertex indexes;
// returns it sorted and deduplicated.
std::vector<int> checked_vertex_set(const LabeledTree& t, std::vector<int> a);

}  // namespace ultra
