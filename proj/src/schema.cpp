#include "ultra/schema.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "ultra/decimal.hpp"

namespace ultra {
namespace {

void check_finite_nonneg(double x, const char* what) {
  if (!std::isfinite(x) || x < 0.0)
    throw std::invalid_argument(std::string(what) + " must be a nonnegative finite number");
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

LabelRule LabelRule::constant(double c, Scope scope) {
  check_finite_nonneg(c, "const parameter");
  return LabelRule(Kind::Const, scope, c, 0);
}

LabelRule LabelRule::affine(double a, double b, Scope scope) {
  check_finite_nonneg(a, "affine parameter a");
  check_finite_nonneg(b, "affine parameter b");
  return LabelRule(Kind::Affine, scope, a, b);
}

LabelRule LabelRule::recip(Scope scope) { return LabelRule(Kind::Recip, scope, 0, 0); }

LabelRule LabelRule::power(double p, Scope scope) {
  if (!std::isfinite(p)) throw std::invalid_argument("pow parameter must be finite");
  return LabelRule(Kind::Pow, scope, p, 0);
}

LabelRule LabelRule::geometric(double a, double r, Scope scope) {
  check_finite_nonneg(a, "geom parameter a");
  check_finite_nonneg(r, "geom parameter r");
  return LabelRule(Kind::Geom, scope, a, r);
}

double LabelRule::eval(std::uint64_t n) const {
  const double x = static_cast<double>(n);
  switch (kind_) {
    case Kind::Const:
      return p0_;
    case Kind::Affine:
      return p0_ + p1_ * x;
    case Kind::Recip:
      return 1.0 / x;
    case Kind::Pow:
      return std::pow(x, p0_);
    case Kind::Geom:
      return p0_ * std::pow(p1_, x);
  }
  return 0;
}

bool LabelRule::divergent() const {
  switch (kind_) {
    case Kind::Const:
      return false;
    case Kind::Affine:
      return p1_ > 0;
    case Kind::Recip:
      return false;
    case Kind::Pow:
      return p0_ > 0;
    case Kind::Geom:
      return p0_ > 0 && p1_ > 1;
  }
  return false;
}

bool LabelRule::bounded() const {
  switch (kind_) {
    case Kind::Const:
      return true;
    case Kind::Affine:
      return p1_ == 0;
    case Kind::Recip:
      return true;
    case Kind::Pow:
      return p0_ <= 0;
    case Kind::Geom:
      return p0_ == 0 || p1_ <= 1;
  }
  return true;
}

double LabelRule::sup_value() const {
  if (!bounded()) throw std::logic_error("sup_value of an unbounded rule");
  switch (kind_) {
    case Kind::Const:
      return p0_;
    case Kind::Affine:
      return p0_;
    case Kind::Recip:
      return 1.0;
    case Kind::Pow:
      return 1.0;  // n^p with p <= 0 peaks at n = 1
    case Kind::Geom:
      return p0_ * p1_;  // nonincreasing for r <= 1, peak at n = 1
  }
  return 0;
}

LabelRule::ZeroSet LabelRule::zero_set() const {
  // Within this family the zero set is never a proper finite list: values
  // are either identically zero or positive for every n >= 1.
  bool all = false;
  switch (kind_) {
    case Kind::Const:
      all = p0_ == 0;
      break;
    case Kind::Affine:
      all = p0_ == 0 && p1_ == 0;
      break;
    case Kind::Recip:
    case Kind::Pow:
      all = false;
      break;
    case Kind::Geom:
      all = p0_ == 0 || p1_ == 0;
      break;
  }
  ZeroSet z;
  z.kind = all ? ZeroSet::Kind::All : ZeroSet::Kind::Empty;
  return z;
}

LabelRule::Trend LabelRule::trend() const {
  switch (kind_) {
    case Kind::Const:
      return Trend::Constant;
    case Kind::Affine:
      return p1_ == 0 ? Trend::Constant : Trend::Increasing;
    case Kind::Recip:
      return Trend::Decreasing;
    case Kind::Pow:
      if (p0_ == 0) return Trend::Constant;
      return p0_ > 0 ? Trend::Increasing : Trend::Decreasing;
    case Kind::Geom:
      if (p0_ == 0 || p1_ == 0 || p1_ == 1) return Trend::Constant;
      return p1_ > 1 ? Trend::Increasing : Trend::Decreasing;
  }
  return Trend::Constant;
}

std::optional<std::uint64_t> LabelRule::first_index_leq(double bound) const {
  if (trend() != Trend::Decreasing) throw std::logic_error("rule is not decreasing");
  // Decreasing rules here tend to 0 from above, so nothing qualifies for a
  // nonpositive bound and everything past some index does otherwise.
  if (!(bound > 0)) return std::nullopt;
  if (eval(1) <= bound) return 1;

  double guess = 1;
  switch (kind_) {
    case Kind::Recip:
      guess = 1.0 / bound;
      break;
    case Kind::Pow:
      guess = std::pow(bound, 1.0 / p0_);
      break;
    case Kind::Geom:
      guess = std::log(bound / p0_) / std::log(p1_);
      break;
    default:
      break;
  }
  if (!(guess >= 1) || !std::isfinite(guess)) guess = 1;
  if (guess > 9.0e15) guess = 9.0e15;  // past exact-integer doubles; adjust below
  std::uint64_t k = static_cast<std::uint64_t>(guess);
  if (k < 1) k = 1;
  int guard = 0;
  while (k > 1 && eval(k - 1) <= bound && ++guard < 4096) --k;
  guard = 0;
  while (eval(k) > bound && ++guard < (1 << 20)) ++k;
  if (eval(k) > bound) throw std::logic_error("first_index_leq failed to converge");
  return k;
}

std::string LabelRule::to_string() const {
  switch (kind_) {
    case Kind::Const:
      return "const " + format_double(p0_);
    case Kind::Affine:
      return "affine " + format_double(p0_) + " " + format_double(p1_);
    case Kind::Recip:
      return "recip";
    case Kind::Pow:
      return "pow " + format_double(p0_);
    case Kind::Geom:
      return "geom " + format_double(p0_) + " " + format_double(p1_);
  }
  return {};
}

std::string LabelRule::scope_word() const {
  return scope_ == Scope::Depth ? "depth" : "sibling";
}

TreeSchema TreeSchema::create(std::string name, std::string root_type,
                              double root_label, std::vector<NodeType> types) {
  TreeSchema s;
  s.name_ = std::move(name);
  s.root_type_ = std::move(root_type);
  s.root_label_ = root_label;
  s.types_ = std::move(types);

  check_finite_nonneg(s.root_label_, "root label");
  if (s.types_.empty()) throw std::invalid_argument("schema declares no types");

  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < s.types_.size(); ++i) {
    if (!index.emplace(s.types_[i].name, static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate type '" + s.types_[i].name + "'");
  }
  if (!index.count(s.root_type_))
    throw std::invalid_argument("undeclared root type '" + s.root_type_ + "'");

  for (const auto& type : s.types_) {
    for (const auto& spec : type.children) {
      if (!index.count(spec.child_type))
        throw std::invalid_argument("undeclared child type '" + spec.child_type +
                                    "' in type '" + type.name + "'");
      if (spec.count.is_finite() && spec.count.value == 0)
        throw std::invalid_argument("child count must be at least 1");
      if (spec.count.kind == Cardinality::Kind::Uncountable &&
          (spec.rule.kind() != LabelRule::Kind::Const || !(spec.rule.param0() > 0)))
        throw std::invalid_argument(
            "uncountable count requires rule 'const c' with c > 0");
    }
  }

  // Schema-level non-degeneracy: on every reachable edge the parent label
  // source and the child rule must not both be able to evaluate to 0. Zero
  // sets in this rule family are all-or-nothing, so overlap of the two flags
  // already witnesses a concrete degenerate edge.
  auto reach = s.reachable_types();
  std::vector<char> reachable(s.types_.size(), 0);
  for (int i : reach) reachable[static_cast<std::size_t>(i)] = 1;

  std::vector<char> can_be_zero(s.types_.size(), 0);
  if (s.root_label_ == 0)
    can_be_zero[static_cast<std::size_t>(s.root_type_index())] = 1;
  for (int i : reach)
    for (const auto& spec : s.types_[static_cast<std::size_t>(i)].children)
      if (spec.rule.can_be_zero())
        can_be_zero[static_cast<std::size_t>(index.at(spec.child_type))] = 1;

  for (int i : reach) {
    const auto& type = s.types_[static_cast<std::size_t>(i)];
    if (!can_be_zero[static_cast<std::size_t>(i)]) continue;
    for (const auto& spec : type.children) {
      if (spec.rule.can_be_zero())
        throw std::invalid_argument("degenerate edge rule pair: type '" + type.name +
                                    "' can be labeled 0 and child spec '" + type.name +
                                    " -> " + spec.child_type + "' can be labeled 0");
    }
  }
  return s;
}

int TreeSchema::type_index(std::string_view name) const {
  for (std::size_t i = 0; i < types_.size(); ++i)
    if (types_[i].name == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown type '" + std::string(name) + "'");
}

std::vector<int> TreeSchema::reachable_types() const {
  std::vector<char> seen(types_.size(), 0);
  std::vector<int> stack{root_type_index()};
  seen[static_cast<std::size_t>(root_type_index())] = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (const auto& spec : types_[static_cast<std::size_t>(i)].children) {
      int j = type_index(spec.child_type);
      if (!seen[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = 1;
        stack.push_back(j);
      }
    }
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < types_.size(); ++i)
    if (seen[i]) out.push_back(static_cast<int>(i));
  return out;
}

namespace {

LabelRule parse_rule_tokens(const std::vector<std::string>& tokens, std::size_t& pos,
                            LabelRule::Scope scope, std::size_t line_no) {
  auto need = [&](std::size_t extra) {
    if (pos + extra > tokens.size())
      throw ParseError(line_no, "incomplete rule specification");
  };
  auto num = [&](std::size_t at) {
    auto v = parse_double(tokens[at]);
    if (!v || !std::isfinite(*v))
      throw ParseError(line_no, "invalid rule parameter '" + tokens[at] + "'");
    return *v;
  };
  need(1);
  const std::string& kind = tokens[pos];
  try {
    if (kind == "const") {
      need(2);
      auto r = LabelRule::constant(num(pos + 1), scope);
      pos += 2;
      return r;
    }
    if (kind == "affine") {
      need(3);
      auto r = LabelRule::affine(num(pos + 1), num(pos + 2), scope);
      pos += 3;
      return r;
    }
    if (kind == "recip") {
      pos += 1;
      return LabelRule::recip(scope);
    }
    if (kind == "pow") {
      need(2);
      auto r = LabelRule::power(num(pos + 1), scope);
      pos += 2;
      return r;
    }
    if (kind == "geom") {
      need(3);
      auto r = LabelRule::geometric(num(pos + 1), num(pos + 2), scope);
      pos += 3;
      return r;
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
  throw ParseError(line_no, "unknown rule '" + kind + "'");
}

Cardinality parse_count_token(const std::string& token, std::size_t line_no) {
  if (token == "omega") return Cardinality::omega();
  if (token == "uncountable") return Cardinality::uncountable();
  std::uint64_t value = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last)
    throw ParseError(line_no, "invalid count '" + token + "'");
  if (value == 0) throw ParseError(line_no, "count must be at least 1");
  return Cardinality::finite(value);
}

}  // namespace

TreeSchema parse_schema(std::string_view text) {
  std::string name;
  std::string root_type;
  double root_label = 0;
  bool saw_header = false, saw_root = false;
  std::vector<NodeType> types;

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
      if (tokens[0] != "schema" || tokens.size() != 2)
        throw ParseError(line_no, "expected 'schema <name>'");
      name = tokens[1];
      saw_header = true;
      continue;
    }
    if (!saw_root) {
      if (tokens[0] != "root" || tokens.size() != 3)
        throw ParseError(line_no, "expected 'root <TypeName> <label>'");
      auto label = parse_label(tokens[2]);
      if (!label) throw ParseError(line_no, "invalid root label '" + tokens[2] + "'");
      root_type = tokens[1];
      root_label = *label;
      saw_root = true;
      continue;
    }
    if (tokens[0] == "type") {
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'type <TypeName>'");
      types.push_back(NodeType{tokens[1], {}});
    } else if (tokens[0] == "child") {
      if (types.empty())
        throw ParseError(line_no, "'child' outside of a type block");
      if (tokens.size() < 7 || tokens[2] != "count" || tokens[4] != "rule")
        throw ParseError(line_no,
                         "expected 'child <TypeName> count <n> rule <RULE> scope "
                         "<depth|sibling>'");
      Cardinality count = parse_count_token(tokens[3], line_no);
      // Scope comes last; read it first so the rule can be built in one go.
      if (tokens[tokens.size() - 2] != "scope")
        throw ParseError(line_no, "missing 'scope <depth|sibling>'");
      const std::string& scope_word = tokens.back();
      LabelRule::Scope scope;
      if (scope_word == "depth")
        scope = LabelRule::Scope::Depth;
      else if (scope_word == "sibling")
        scope = LabelRule::Scope::Sibling;
      else
        throw ParseError(line_no, "invalid scope '" + scope_word + "'");
      std::size_t cursor = 5;
      LabelRule rule = parse_rule_tokens(tokens, cursor, scope, line_no);
      if (cursor != tokens.size() - 2)
        throw ParseError(line_no, "unexpected tokens after rule");
      types.back().children.push_back(ChildSpec{tokens[1], count, rule});
    } else {
      throw ParseError(line_no, "unknown directive '" + tokens[0] + "'");
    }
  }
  if (!saw_header) throw ParseError(line_no, "expected 'schema <name>'");
  if (!saw_root) throw ParseError(line_no, "expected 'root <TypeName> <label>'");
  return TreeSchema::create(std::move(name), std::move(root_type), root_label,
                            std::move(types));
}

TreeSchema canonical_ray(const LabelRule& rule) {
  if (rule.scope() != LabelRule::Scope::Depth)
    throw std::invalid_argument("canonical_ray requires a depth-scope rule");
  std::vector<NodeType> types;
  types.push_back(NodeType{"Spine", {ChildSpec{"Spine", Cardinality::finite(1), rule}}});
  return TreeSchema::create("ray", "Spine", rule.eval(1), std::move(types));
}

TreeSchema canonical_star(Cardinality count, const LabelRule& rule,
                          double center_label) {
  std::vector<NodeType> types;
  types.push_back(NodeType{"Center", {ChildSpec{"Leaf", count, rule}}});
  types.push_back(NodeType{"Leaf", {}});
  return TreeSchema::create("star", "Center", center_label, std::move(types));
}

TreeSchema fig1_comb() {
  auto depth_rule = LabelRule::affine(0, 1, LabelRule::Scope::Depth);
  std::vector<NodeType> types;
  types.push_back(NodeType{"Spine",
                           {ChildSpec{"Spine", Cardinality::finite(1), depth_rule},
                            ChildSpec{"Tooth", Cardinality::finite(1), depth_rule}}});
  types.push_back(NodeType{"Tooth", {}});
  return TreeSchema::create("fig1_comb", "Spine", 1.0, std::move(types));
}

TreeSchema fig2_star_of_paths() {
  auto depth_rule = LabelRule::affine(0, 1, LabelRule::Scope::Depth);
  std::vector<NodeType> types;
  types.push_back(NodeType{
      "Center",
      {ChildSpec{"Arm", Cardinality::omega(),
                 LabelRule::affine(1, 1, LabelRule::Scope::Sibling)}}});
  types.push_back(NodeType{"Arm", {ChildSpec{"ArmTail", Cardinality::finite(1), depth_rule}}});
  types.push_back(
      NodeType{"ArmTail", {ChildSpec{"ArmTip", Cardinality::finite(1), depth_rule}}});
  types.push_back(NodeType{"ArmTip", {}});
  return TreeSchema::create("fig2_star_of_paths", "Center", 1.0, std::move(types));
}

namespace {

void check_budget(const Budget& budget) {
  if (budget.max_vertices < 1 || budget.max_depth < 1)
    throw std::invalid_argument("budget bounds must be >= 1");
}

// Shared growth state for instantiate and explore_ball. Vertices are kept in
// creation order; ids are assigned as v1, v2, ... at the end.
struct Grower {
  struct Vertex {
    int type;
    std::uint64_t depth;
    double label;
  };

  const TreeSchema& schema;
  Budget budget;
  std::vector<Vertex> verts;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  Grower(const TreeSchema& s, const Budget& b) : schema(s), budget(b) {}

  std::uint64_t created() const { return verts.size(); }
  bool can_create() const { return verts.size() < budget.max_vertices; }

  std::size_t create(int type, std::uint64_t depth, double label,
                     std::optional<std::size_t> parent) {
    verts.push_back(Vertex{type, depth, label});
    if (parent) edges.emplace_back(*parent, verts.size() - 1);
    return verts.size() - 1;
  }

  double child_label(const ChildSpec& spec, std::uint64_t child_depth,
                     std::uint64_t sibling) const {
    return spec.rule.scope() == LabelRule::Scope::Depth
               ? spec.rule.eval(child_depth + 1)
               : spec.rule.eval(sibling);
  }

  Truncation finish(const std::vector<std::size_t>& frontier_verts) const {
    std::vector<std::pair<std::string, double>> vertices;
    vertices.reserve(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
      vertices.emplace_back("v" + std::to_string(i + 1), verts[i].label);
    std::vector<std::pair<std::string, std::string>> edge_ids;
    edge_ids.reserve(edges.size());
    for (auto [a, b] : edges)
      edge_ids.emplace_back("v" + std::to_string(a + 1), "v" + std::to_string(b + 1));
    Truncation out{LabeledTree::from_parts(schema.name(), std::move(vertices),
                                           std::move(edge_ids)),
                   {}};
    for (std::size_t i : frontier_verts)
      out.frontier.push_back("v" + std::to_string(i + 1));
    std::sort(out.frontier.begin(), out.frontier.end());
    out.frontier.erase(std::unique(out.frontier.begin(), out.frontier.end()),
                       out.frontier.end());
    return out;
  }
};

}  // namespace

Truncation instantiate(const TreeSchema& schema, const Budget& budget) {
  check_budget(budget);
  Grower g(schema, budget);
  g.create(schema.root_type_index(), 0, schema.root_label(), std::nullopt);

  std::vector<std::size_t> frontier;
  bool stopped = false;
  std::size_t pos = 0;
  while (pos < g.verts.size() && !stopped) {
    const std::size_t v = pos++;
    const auto& specs = schema.type_at(g.verts[v].type).children;
    if (specs.empty()) continue;
    const std::uint64_t child_depth = g.verts[v].depth + 1;
    if (child_depth >= budget.max_depth) {
      frontier.push_back(v);
      continue;
    }
    for (const auto& spec : specs) {
      if (spec.count.kind == Cardinality::Kind::Uncountable) {
        std::uint64_t sample =
            std::min<std::uint64_t>(8, budget.max_vertices - g.created());
        for (std::uint64_t n = 1; n <= sample; ++n)
          g.create(schema.type_index(spec.child_type), child_depth,
                   g.child_label(spec, child_depth, n), v);
        frontier.push_back(v);
        continue;
      }
      const bool unbounded = spec.count.kind == Cardinality::Kind::CountablyInfinite;
      for (std::uint64_t n = 1; unbounded || n <= spec.count.value; ++n) {
        if (!g.can_create()) {
          frontier.push_back(v);
          stopped = true;
          break;
        }
        g.create(schema.type_index(spec.child_type), child_depth,
                 g.child_label(spec, child_depth, n), v);
      }
      if (stopped) break;
    }
  }
  if (stopped) {
    for (std::size_t w = pos; w < g.verts.size(); ++w)
      if (!schema.type_at(g.verts[w].type).children.empty()) frontier.push_back(w);
  }
  return g.finish(frontier);
}

namespace {

// Whether a spec can produce children with label <= radius at this depth.
bool has_region_children(const ChildSpec& spec, std::uint64_t child_depth,
                         double radius) {
  if (spec.rule.scope() == LabelRule::Scope::Depth)
    return spec.rule.eval(child_depth + 1) <= radius;
  switch (spec.rule.trend()) {
    case LabelRule::Trend::Constant:
    case LabelRule::Trend::Increasing:
      return spec.rule.eval(1) <= radius;
    case LabelRule::Trend::Decreasing: {
      auto first = spec.rule.first_index_leq(radius);
      if (!first) return false;
      return !spec.count.is_finite() || *first <= spec.count.value;
    }
  }
  return false;
}

}  // namespace

ExploreOutcome explore_ball(const TreeSchema& schema, double radius,
                            const Budget& budget) {
  check_budget(budget);
  if (radius < 0) throw std::invalid_argument("negative radius");

  Grower g(schema, budget);
  g.create(schema.root_type_index(), 0, schema.root_label(), std::nullopt);

  std::vector<std::size_t> open;
  bool stopped = false;

  if (schema.root_label() <= radius) {
    std::size_t pos = 0;
    while (pos < g.verts.size() && !stopped) {
      const std::size_t v = pos++;
      const auto& specs = schema.type_at(g.verts[v].type).children;
      if (specs.empty()) continue;
      const std::uint64_t child_depth = g.verts[v].depth + 1;
      if (child_depth >= budget.max_depth) {
        for (const auto& spec : specs)
          if (has_region_children(spec, child_depth, radius)) {
            open.push_back(v);
            break;
          }
        continue;
      }
      for (const auto& spec : specs) {
        const int child_type = schema.type_index(spec.child_type);
        if (spec.count.kind == Cardinality::Kind::Uncountable) {
          // Only positive constants are allowed here; if they fall inside
          // the radius the region holds uncountably many points and can
          // never be closed off.
          if (spec.rule.eval(1) <= radius) {
            std::uint64_t sample =
                std::min<std::uint64_t>(8, budget.max_vertices - g.created());
            for (std::uint64_t n = 1; n <= sample; ++n)
              g.create(child_type, child_depth, g.child_label(spec, child_depth, n), v);
            open.push_back(v);
          }
          continue;
        }
        const bool unbounded = spec.count.kind == Cardinality::Kind::CountablyInfinite;
        const bool depth_scoped = spec.rule.scope() == LabelRule::Scope::Depth;
        auto trend = depth_scoped ? LabelRule::Trend::Constant : spec.rule.trend();
        std::uint64_t first = 1;
        if (trend == LabelRule::Trend::Decreasing) {
          auto idx = spec.rule.first_index_leq(radius);
          if (!idx) continue;
          if (spec.count.is_finite() && *idx > spec.count.value) continue;
          first = *idx;
        }
        for (std::uint64_t n = first; unbounded || n <= spec.count.value; ++n) {
          double label = g.child_label(spec, child_depth, n);
          if (label > radius) {
            if (trend != LabelRule::Trend::Decreasing) break;  // rest only larger
            continue;
          }
          if (!g.can_create()) {
            open.push_back(v);
            stopped = true;
            break;
          }
          g.create(child_type, child_depth, label, v);
        }
        if (stopped) break;
      }
    }
    if (stopped) {
      for (std::size_t w = pos; w < g.verts.size(); ++w) {
        const auto& specs = schema.type_at(g.verts[w].type).children;
        for (const auto& spec : specs)
          if (has_region_children(spec, g.verts[w].depth + 1, radius)) {
            open.push_back(w);
            break;
          }
      }
    }
  }

  ExploreOutcome out{false, Ball{}, g.finish(open), {}};
  out.open_frontier = out.probe.frontier;
  out.finite = out.open_frontier.empty();
  if (out.finite) {
    out.ball.center = out.probe.tree.index_of("v1");
    out.ball.radius = radius;
    out.ball.members.resize(static_cast<std::size_t>(out.probe.tree.size()));
    for (int i = 0; i < out.probe.tree.size(); ++i)
      out.ball.members[static_cast<std::size_t>(i)] = i;
  }
  return out;
}

std::uint64_t creation_ordinal(std::string_view id) {
  if (id.size() < 2 || id[0] != 'v')
    throw std::invalid_argument("not a materialized vertex id: '" + std::string(id) + "'");
  std::uint64_t value = 0;
  auto res = std::from_chars(id.data() + 1, id.data() + id.size(), value);
  if (res.ec != std::errc{} || res.ptr != id.data() + id.size() || value == 0)
    throw std::invalid_argument("not a materialized vertex id: '" + std::string(id) + "'");
  return value;
}

}  // namespace ultra
