#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ultra/cardinality.hpp"
#include "ultra/schema.hpp"
#include "ultra/tree.hpp"

namespace ultra {

// Theorem-level verdicts over schemas: vertex cardinality, separability and
// local finiteness with certificates, the ray-or-hub dichotomy, and ordinal
// labeling synthesis. All functions are pure; witnesses are found by a
// deterministic declaration-order scan.

Cardinality cardinality_of_vertex_set(const TreeSchema& schema);

struct UncountableWitness {
  std::string type;
  std::size_t spec_index = 0;
  std::string child_type;
  double eps = 0;  // all children of the spec carry exactly this label
};

struct SeparabilityVerdict {
  bool separable = true;
  Cardinality cardinality;
  std::optional<UncountableWitness> witness;
  std::string certificate;
};

SeparabilityVerdict classify_separable(const TreeSchema& schema);

// A cycle in the type graph whose rules all yield bounded labels along the
// pumped infinite path; such a cycle realizes a bounded ray.
struct BoundedCycleWitness {
  std::vector<std::string> types;  // in cycle order
  std::vector<LabelRule> rules;    // rule of each edge, aligned with types
};

struct RayVerdict {
  bool locally_finite = true;
  // When not: the input treated as the all-bounded cycle.
  std::optional<std::vector<std::size_t>> bounded_cycle;
};

// Rules read along one type-graph cycle. The pumped ray re-enters each
// sibling-scoped rule at index 1, so only depth-scoped divergent rules can
// push labels to infinity.
RayVerdict ray_criterion(const std::vector<LabelRule>& cycle_rules);

struct InfiniteWEpsWitness {
  std::string type;
  std::size_t spec_index = 0;
  std::string child_type;
  Cardinality count;
  double eps = 0;  // infinitely many children have label <= eps
};

struct StarVerdict {
  bool locally_finite = true;
  std::optional<InfiniteWEpsWitness> witness;
};

// A star centered on vertices of this type stays locally finite iff every
// omega-count spec has a divergent rule and no uncountable spec exists.
StarVerdict star_criterion(const NodeType& type);

struct LocalFinitenessVerdict {
  bool locally_finite = true;
  std::optional<InfiniteWEpsWitness> infinite_star;
  std::optional<BoundedCycleWitness> bounded_cycle;
  std::string certificate;
};

LocalFinitenessVerdict classify_locally_finite(const TreeSchema& schema);

struct KonigWitness {
  enum class Kind { Hub, Ray, NeitherFinite };
  Kind kind = Kind::NeitherFinite;
  // Hub: the reachable spec with count >= omega.
  std::string hub_type;
  std::size_t hub_spec_index = 0;
  std::string hub_child;
  Cardinality hub_count;
  // Ray: a reachable type-graph cycle, pumpable into an infinite path.
  std::vector<std::string> ray_cycle;
};

// For an infinite schema: a hub when some reachable count is infinite,
// otherwise a reachable type-graph cycle. NeitherFinite for finite schemas.
KonigWitness find_ray_or_hub(const TreeSchema& schema);

// Relabels a finite tree with its breadth-first ordinals 1..n (start vertex
// and neighbor order both lexicographic). The result is non-degenerate and
// every ball satisfies |B_r(v)| <= floor(r) + 1.
LabeledTree synthesize_labeling(const LabeledTree& t);

// Lazy ordinal labeling over a countable schema: truncations are
// materialized as usual and then relabeled by creation ordinal, which is
// stable under budget growth.
class SynthesizedLabeling {
 public:
  explicit SynthesizedLabeling(TreeSchema schema);
  Truncation instantiate(const Budget& budget) const;
  const TreeSchema& schema() const noexcept { return schema_; }

 private:
  TreeSchema schema_;
};

SynthesizedLabeling synthesize_labeling(const TreeSchema& schema);

struct ClassificationReport {
  Cardinality cardinality;
  SeparabilityVerdict separable;
  LocalFinitenessVerdict locally_finite;
};

ClassificationReport classify(const TreeSchema& schema);

// Line-oriented report:
//   cardinality: finite(4)|omega|uncountable
//   separable: yes|no (witness ...)
//   locally-finite: yes|no (witness ...)
std::string to_report(const ClassificationReport& report);
std::string to_report(const KonigWitness& witness);

// Parsed shape of a report; round-trips with to_report.
struct ReportSummary {
  Cardinality cardinality;
  bool separable = true;
  bool locally_finite = true;
  std::string separable_witness;       // inner text, empty for yes
  std::string locally_finite_witness;  // inner text, empty for yes
};

ReportSummary parse_report(std::string_view text);

}  // namespace ultra
