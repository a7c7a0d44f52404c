#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ultra/cardinality.hpp"
#include "ultra/metric.hpp"
#include "ultra/tree.hpp"

namespace ultra {

// Finite descriptions of lazily-generated, possibly infinite labeled trees.

// Label sequence over the index n = 1, 2, 3, ...; every rule in the family
// is monotone (or constant) and evaluates to a nonnegative value for all n.
//
// Depth scope: a vertex at distance d from the root (root has depth 0)
// evaluates its rule at n = d + 1, i.e. n counts vertices along the root
// path, so a chain of one depth-scoped rule realizes l(v_n) = rule(n).
// Sibling scope: n is the child's 1-based position within its spec,
// restarting at 1 for every parent vertex.
class LabelRule {
 public:
  enum class Kind { Const, Affine, Recip, Pow, Geom };
  enum class Scope { Depth, Sibling };
  enum class Trend { Constant, Increasing, Decreasing };

  static LabelRule constant(double c, Scope scope = Scope::Depth);
  static LabelRule affine(double a, double b, Scope scope);  // a + b*n
  static LabelRule recip(Scope scope);                       // 1/n
  static LabelRule power(double p, Scope scope);             // n^p
  static LabelRule geometric(double a, double r, Scope scope);  // a*r^n

  Kind kind() const noexcept { return kind_; }
  Scope scope() const noexcept { return scope_; }
  double param0() const noexcept { return p0_; }
  double param1() const noexcept { return p1_; }

  double eval(std::uint64_t n) const;

  // |{n : eval(n) <= eps}| is finite for every eps > 0 (equivalently, the
  // sequence tends to infinity).
  bool divergent() const;
  // sup over n is finite. In this rule family, bounded == !divergent.
  bool bounded() const;
  // Attained supremum of a bounded rule (the value at n = 1, or the constant).
  double sup_value() const;

  struct ZeroSet {
    enum class Kind { Empty, FiniteList, All };
    Kind kind = Kind::Empty;
    std::vector<std::uint64_t> indices;  // FiniteList only
  };
  ZeroSet zero_set() const;
  bool can_be_zero() const { return zero_set().kind != ZeroSet::Kind::Empty; }

  Trend trend() const;
  // Smallest n with eval(n) <= bound for a Decreasing rule; nullopt when no
  // such n exists (bound <= 0, the sequence stays positive).
  std::optional<std::uint64_t> first_index_leq(double bound) const;

  std::string to_string() const;   // DSL form, e.g. "affine 1 1"
  std::string scope_word() const;  // "depth" | "sibling"

 private:
  LabelRule(Kind kind, Scope scope, double p0, double p1)
      : kind_(kind), scope_(scope), p0_(p0), p1_(p1) {}
  Kind kind_;
  Scope scope_;
  double p0_ = 0;
  double p1_ = 0;
};

struct ChildSpec {
  std::string child_type;
  Cardinality count;  // finite(k >= 1) | omega | uncountable
  LabelRule rule;
};

struct NodeType {
  std::string name;
  std::vector<ChildSpec> children;
};

// Validated schema: every referenced type is declared, uncountable counts
// carry a positive constant rule, and no reachable parent/child rule pair
// can evaluate to 0 on the same edge (checked conservatively via zero-sets).
class TreeSchema {
 public:
  static TreeSchema create(std::string name, std::string root_type,
                           double root_label, std::vector<NodeType> types);

  const std::string& name() const noexcept { return name_; }
  const std::string& root_type() const noexcept { return root_type_; }
  double root_label() const noexcept { return root_label_; }
  const std::vector<NodeType>& types() const noexcept { return types_; }

  int type_index(std::string_view name) const;  // throws on unknown type
  const NodeType& type_at(int i) const { return types_[static_cast<std::size_t>(i)]; }
  int root_type_index() const { return type_index(root_type_); }

  // Type indexes reachable from the root, in ascending (declaration) order.
  std::vector<int> reachable_types() const;

 private:
  TreeSchema() = default;
  std::string name_;
  std::string root_type_;
  double root_label_ = 0;
  std::vector<NodeType> types_;
};

// Line-based text format:
//   schema <name>
//   root <TypeName> <decimal-root-label>
//   type <TypeName>
//     child <TypeName> count <int|omega|uncountable> rule <RULE> scope <depth|sibling>
// RULE is one of: const <c> | affine <a> <b> | recip | pow <p> | geom <a> <r>.
// '#' begins a comment line; counts must be positive integers or the two
// infinite words.
TreeSchema parse_schema(std::string_view text);

TreeSchema canonical_ray(const LabelRule& rule);  // requires Depth scope
TreeSchema canonical_star(Cardinality count, const LabelRule& rule,
                          double center_label);

// Spine ray labeled 1, 2, 3, ... where every spine vertex carries one
// pendant leaf labeled by the same depth rule.
TreeSchema fig1_comb();
// Center labeled 1 with countably many arms; arm n starts with label n + 1
// and continues as a fixed-length path labeled by depth.
TreeSchema fig2_star_of_paths();

struct Budget {
  std::uint64_t max_vertices = 10000;
  // Number of materialized levels: vertices at depth < max_depth.
  std::uint64_t max_depth = 1000;
};

struct Truncation {
  LabeledTree tree;
  // Vertices whose child specs were left (partly) unexpanded, sorted by id.
  std::vector<std::string> frontier;
};

// Deterministic breadth-first materialization. Vertices are named v1, v2,
// ... in creation order; omega counts expand in sibling order until the
// vertex budget stops them; uncountable counts expand a sample of at most 8
// children and always leave the parent on the frontier.
Truncation instantiate(const TreeSchema& schema, const Budget& budget);

// Pruned expansion of the closed ball around the schema root: only vertices
// with label <= radius are materialized (the root always is). `finite` is
// true exactly when the region closed off with no unexpanded frontier inside
// it; otherwise `open_frontier` lists the region vertices that still had
// potential in-region children when expansion stopped.
struct ExploreOutcome {
  bool finite = false;
  Ball ball;         // valid when finite; indexes refer to probe.tree
  Truncation probe;  // the materialized region
  std::vector<std::string> open_frontier;
};

ExploreOutcome explore_ball(const TreeSchema& schema, double radius,
                            const Budget& budget);

// Creation ordinal of a materialized vertex id ("v17" -> 17).
std::uint64_t creation_ordinal(std::string_view id);

}  // namespace ultra
