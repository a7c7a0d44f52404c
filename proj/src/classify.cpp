#include "ultra/classify.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "ultra/decimal.hpp"

namespace ultra {
namespace {

// Along a pumped ray a sibling-scoped rule is re-entered at index 1 every
// pass, so it contributes a constant; only depth-scoped rules track the
// growing depth.
bool bounded_on_ray(const LabelRule& rule) {
  return rule.scope() == LabelRule::Scope::Sibling || rule.bounded();
}

struct TypeGraph {
  const TreeSchema& schema;
  std::vector<int> reachable;
  std::vector<char> is_reachable;

  explicit TypeGraph(const TreeSchema& s)
      : schema(s), reachable(s.reachable_types()),
        is_reachable(s.types().size(), 0) {
    for (int i : reachable) is_reachable[static_cast<std::size_t>(i)] = 1;
  }

  // First cycle among reachable types using only edges admitted by `keep`,
  // found by an iterative DFS in declaration order. Returns the types on the
  // cycle and the rule on each edge (the edge leaving types[i]).
  std::optional<BoundedCycleWitness> find_cycle(
      const std::function<bool(const ChildSpec&)>& keep) const {
    const int n = static_cast<int>(schema.types().size());
    // 0 = unvisited, 1 = on stack, 2 = done
    std::vector<char> color(static_cast<std::size_t>(n), 0);
    std::vector<int> stack_types;
    std::vector<const ChildSpec*> stack_edges;  // edge taken out of stack_types[i]

    struct Frame {
      int type;
      std::size_t next_spec = 0;
    };
    for (int start : reachable) {
      if (color[static_cast<std::size_t>(start)] != 0) continue;
      std::vector<Frame> frames{{start}};
      color[static_cast<std::size_t>(start)] = 1;
      stack_types.push_back(start);
      while (!frames.empty()) {
        Frame& f = frames.back();
        const auto& specs = schema.type_at(f.type).children;
        bool descended = false;
        while (f.next_spec < specs.size()) {
          const ChildSpec& spec = specs[f.next_spec++];
          if (!keep(spec)) continue;
          int j = schema.type_index(spec.child_type);
          if (!is_reachable[static_cast<std::size_t>(j)]) continue;
          if (color[static_cast<std::size_t>(j)] == 1) {
            // Cycle: suffix of the stack from j, plus this closing edge.
            BoundedCycleWitness w;
            auto it = std::find(stack_types.begin(), stack_types.end(), j);
            for (auto k = it; k != stack_types.end(); ++k)
              w.types.push_back(schema.type_at(*k).name);
            for (auto k = stack_edges.begin() + (it - stack_types.begin());
                 k != stack_edges.end(); ++k)
              w.rules.push_back((*k)->rule);
            w.rules.push_back(spec.rule);
            return w;
          }
          if (color[static_cast<std::size_t>(j)] == 0) {
            color[static_cast<std::size_t>(j)] = 1;
            stack_types.push_back(j);
            stack_edges.push_back(&spec);
            frames.push_back(Frame{j});
            descended = true;
            break;
          }
        }
        if (!descended) {
          color[static_cast<std::size_t>(f.type)] = 2;
          frames.pop_back();
          stack_types.pop_back();
          if (!stack_edges.empty()) stack_edges.pop_back();
        }
      }
    }
    return std::nullopt;
  }
};

// Epsilon certifying that a non-divergent rule keeps infinitely many labels
// small: its attained supremum (every index qualifies).
double witness_eps(const LabelRule& rule) { return rule.sup_value(); }

}  // namespace

Cardinality cardinality_of_vertex_set(const TreeSchema& schema) {
  TypeGraph graph(schema);
  bool has_omega = false;
  for (int i : graph.reachable) {
    for (const auto& spec : schema.type_at(i).children) {
      if (spec.count.kind == Cardinality::Kind::Uncountable)
        return Cardinality::uncountable();
      if (spec.count.kind == Cardinality::Kind::CountablyInfinite) has_omega = true;
    }
  }
  if (has_omega) return Cardinality::omega();
  if (graph.find_cycle([](const ChildSpec&) { return true; }))
    return Cardinality::omega();

  // Finite unfolding: all counts finite and the reachable type graph is
  // acyclic, so subtree sizes close over a DAG.
  std::vector<Cardinality> size(schema.types().size(), Cardinality::finite(0));
  std::vector<char> done(schema.types().size(), 0);
  // Types in reverse topological need: repeated passes are fine at this scale.
  auto compute = [&](auto&& self, int i) -> Cardinality {
    if (done[static_cast<std::size_t>(i)]) return size[static_cast<std::size_t>(i)];
    Cardinality total = Cardinality::finite(1);
    for (const auto& spec : schema.type_at(i).children) {
      auto child = self(self, schema.type_index(spec.child_type));
      auto block = Cardinality::product(spec.count, child);
      if (!total.is_finite() || !block.is_finite())
        throw std::logic_error("finite unfolding expected");
      total = Cardinality::finite(total.value + block.value);
    }
    done[static_cast<std::size_t>(i)] = 1;
    size[static_cast<std::size_t>(i)] = total;
    return total;
  };
  return compute(compute, schema.root_type_index());
}

SeparabilityVerdict classify_separable(const TreeSchema& schema) {
  SeparabilityVerdict verdict;
  verdict.cardinality = cardinality_of_vertex_set(schema);
  verdict.separable = verdict.cardinality.countable();
  if (verdict.separable) {
    verdict.certificate =
        "every reachable child count is at most omega; the vertex set is a "
        "countable union of countable neighborhood layers";
    return verdict;
  }
  TypeGraph graph(schema);
  for (int i : graph.reachable) {
    const auto& type = schema.type_at(i);
    for (std::size_t k = 0; k < type.children.size(); ++k) {
      const auto& spec = type.children[k];
      if (spec.count.kind != Cardinality::Kind::Uncountable) continue;
      verdict.witness = UncountableWitness{type.name, k, spec.child_type,
                                           spec.rule.param0()};
      verdict.certificate =
          "uncountably many children share one positive label, an "
          "uncountable discrete subspace";
      return verdict;
    }
  }
  return verdict;  // unreachable: non-countable implies an uncountable spec
}

RayVerdict ray_criterion(const std::vector<LabelRule>& cycle_rules) {
  if (cycle_rules.empty()) throw std::invalid_argument("empty rule cycle");
  for (const auto& rule : cycle_rules) {
    if (rule.scope() == LabelRule::Scope::Depth && rule.divergent()) return {};
  }
  RayVerdict verdict;
  verdict.locally_finite = false;
  std::vector<std::size_t> all(cycle_rules.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  verdict.bounded_cycle = std::move(all);
  return verdict;
}

StarVerdict star_criterion(const NodeType& type) {
  for (std::size_t k = 0; k < type.children.size(); ++k) {
    const auto& spec = type.children[k];
    if (spec.count.kind == Cardinality::Kind::Uncountable) {
      return {false, InfiniteWEpsWitness{type.name, k, spec.child_type, spec.count,
                                         spec.rule.param0()}};
    }
    if (spec.count.kind == Cardinality::Kind::CountablyInfinite &&
        !spec.rule.divergent()) {
      return {false, InfiniteWEpsWitness{type.name, k, spec.child_type, spec.count,
                                         witness_eps(spec.rule)}};
    }
  }
  return {};
}

LocalFinitenessVerdict classify_locally_finite(const TreeSchema& schema) {
  LocalFinitenessVerdict verdict;
  TypeGraph graph(schema);

  for (int i : graph.reachable) {
    auto star = star_criterion(schema.type_at(i));
    if (!star.locally_finite) {
      verdict.locally_finite = false;
      verdict.infinite_star = star.witness;
      return verdict;
    }
  }
  if (auto cycle = graph.find_cycle(
          [](const ChildSpec& spec) { return bounded_on_ray(spec.rule); })) {
    verdict.locally_finite = false;
    verdict.bounded_cycle = std::move(cycle);
    return verdict;
  }
  verdict.certificate =
      "every omega-count spec has a divergent rule, no uncountable spec is "
      "reachable, and every reachable cycle carries a divergent depth rule";
  return verdict;
}

KonigWitness find_ray_or_hub(const TreeSchema& schema) {
  KonigWitness witness;
  TypeGraph graph(schema);
  for (int i : graph.reachable) {
    const auto& type = schema.type_at(i);
    for (std::size_t k = 0; k < type.children.size(); ++k) {
      const auto& spec = type.children[k];
      if (spec.count.is_finite()) continue;
      witness.kind = KonigWitness::Kind::Hub;
      witness.hub_type = type.name;
      witness.hub_spec_index = k;
      witness.hub_child = spec.child_type;
      witness.hub_count = spec.count;
      return witness;
    }
  }
  if (auto cycle = graph.find_cycle([](const ChildSpec&) { return true; })) {
    witness.kind = KonigWitness::Kind::Ray;
    witness.ray_cycle = std::move(cycle->types);
    return witness;
  }
  return witness;  // finite schema
}

LabeledTree synthesize_labeling(const LabeledTree& t) {
  std::vector<double> ordinal(static_cast<std::size_t>(t.size()), 0);
  std::vector<char> seen(static_cast<std::size_t>(t.size()), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  double next = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    ordinal[static_cast<std::size_t>(x)] = next++;
    for (int y : t.neighbors(x)) {
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        q.push(y);
      }
    }
  }
  std::vector<std::pair<std::string, double>> vertices;
  for (int v = 0; v < t.size(); ++v)
    vertices.emplace_back(t.id(v), ordinal[static_cast<std::size_t>(v)]);
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [u, v] : t.edge_list()) edges.emplace_back(t.id(u), t.id(v));
  return LabeledTree::from_parts(t.name(), std::move(vertices), std::move(edges));
}

SynthesizedLabeling::SynthesizedLabeling(TreeSchema schema) : schema_(std::move(schema)) {
  if (!cardinality_of_vertex_set(schema_).countable())
    throw std::invalid_argument("synthesize_labeling requires a countable schema");
}

Truncation SynthesizedLabeling::instantiate(const Budget& budget) const {
  Truncation base = ultra::instantiate(schema_, budget);
  std::vector<std::pair<std::string, double>> vertices;
  for (int v = 0; v < base.tree.size(); ++v) {
    const std::string& id = base.tree.id(v);
    vertices.emplace_back(id, static_cast<double>(creation_ordinal(id)));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [u, v] : base.tree.edge_list())
    edges.emplace_back(base.tree.id(u), base.tree.id(v));
  base.tree = LabeledTree::from_parts(base.tree.name(), std::move(vertices),
                                      std::move(edges));
  return base;
}

SynthesizedLabeling synthesize_labeling(const TreeSchema& schema) {
  return SynthesizedLabeling(schema);
}

ClassificationReport classify(const TreeSchema& schema) {
  ClassificationReport report{cardinality_of_vertex_set(schema),
                              classify_separable(schema),
                              classify_locally_finite(schema)};
  return report;
}

namespace {

std::string witness_text(const UncountableWitness& w) {
  return "uncountable spec " + w.type + " -> " + w.child_type +
         ", eps = " + format_double(w.eps);
}

std::string witness_text(const InfiniteWEpsWitness& w) {
  return "infinite W_eps at " + w.type + " -> " + w.child_type + ", count " +
         w.count.count_word() + ", eps = " + format_double(w.eps);
}

std::string witness_text(const BoundedCycleWitness& w) {
  std::string types, rules;
  for (std::size_t i = 0; i < w.types.size(); ++i) {
    if (i) types += ", ";
    types += w.types[i];
  }
  for (std::size_t i = 0; i < w.rules.size(); ++i) {
    if (i) rules += ", ";
    rules += w.rules[i].to_string();
  }
  return "bounded cycle [" + types + "], rule " + rules;
}

}  // namespace

std::string to_report(const ClassificationReport& report) {
  std::string out = "cardinality: " + report.cardinality.to_string() + "\n";
  out += "separable: ";
  if (report.separable.separable) {
    out += "yes\n";
  } else {
    out += "no (witness: " + witness_text(*report.separable.witness) + ")\n";
  }
  out += "locally-finite: ";
  if (report.locally_finite.locally_finite) {
    out += "yes\n";
  } else if (report.locally_finite.infinite_star) {
    out += "no (witness: " + witness_text(*report.locally_finite.infinite_star) + ")\n";
  } else {
    out += "no (witness: " + witness_text(*report.locally_finite.bounded_cycle) + ")\n";
  }
  return out;
}

std::string to_report(const KonigWitness& witness) {
  switch (witness.kind) {
    case KonigWitness::Kind::Hub:
      return "hub: " + witness.hub_type + " (count " + witness.hub_count.count_word() +
             ")\n";
    case KonigWitness::Kind::Ray: {
      std::string types;
      for (std::size_t i = 0; i < witness.ray_cycle.size(); ++i) {
        if (i) types += ", ";
        types += witness.ray_cycle[i];
      }
      return "ray: cycle [" + types + "]\n";
    }
    default:
      return "finite: no ray, no hub\n";
  }
}

ReportSummary parse_report(std::string_view text) {
  ReportSummary summary;
  auto next_line = [&](std::string_view prefix) {
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    if (line.substr(0, prefix.size()) != prefix)
      throw std::invalid_argument("malformed report: expected '" +
                                  std::string(prefix) + "'");
    return std::string(line.substr(prefix.size()));
  };

  std::string card = next_line("cardinality: ");
  if (card == "omega") {
    summary.cardinality = Cardinality::omega();
  } else if (card == "uncountable") {
    summary.cardinality = Cardinality::uncountable();
  } else if (card.rfind("finite(", 0) == 0 && card.back() == ')') {
    summary.cardinality =
        Cardinality::finite(std::stoull(card.substr(7, card.size() - 8)));
  } else {
    throw std::invalid_argument("malformed report: bad cardinality '" + card + "'");
  }

  auto verdict_line = [&](std::string_view prefix, bool& flag, std::string& witness) {
    std::string rest = next_line(prefix);
    if (rest == "yes") {
      flag = true;
      return;
    }
    const std::string open = "no (witness: ";
    if (rest.rfind(open, 0) != 0 || rest.back() != ')')
      throw std::invalid_argument("malformed report: bad verdict '" + rest + "'");
    flag = false;
    witness = rest.substr(open.size(), rest.size() - open.size() - 1);
  };
  verdict_line("separable: ", summary.separable, summary.separable_witness);
  verdict_line("locally-finite: ", summary.locally_finite,
               summary.locally_finite_witness);
  return summary;
}

}  // namespace ultra
