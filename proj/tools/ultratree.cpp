// Batch front end over the tree and schema text formats. Exit codes:
// 0 success, 1 domain error (bad input data, violated precondition),
// 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ultra/classify.hpp"
#include "ultra/decimal.hpp"
#include "ultra/metric.hpp"
#include "ultra/schema.hpp"
#include "ultra/tree.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ultra::LabeledTree load_tree(const std::string& path) {
  return ultra::parse_tree(read_file(path));
}

ultra::TreeSchema load_schema(const std::string& path) {
  return ultra::parse_schema(read_file(path));
}

std::vector<int> resolve_set(const ultra::LabeledTree& t, const std::string& csv) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::string id = csv.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!id.empty()) out.push_back(t.index_of(id));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty vertex set");
  return out;
}

void print_members(const ultra::LabeledTree& t, const std::vector<int>& members) {
  std::string line = "members:";
  for (int v : members) line += " " + t.id(v);
  std::cout << line << "\n";
}

void require_non_degenerate(const ultra::LabeledTree& t) {
  auto verdict = ultra::validate_labeling(t);
  if (!verdict.non_degenerate)
    throw std::invalid_argument("degenerate labeling: edge {" + t.id(verdict.u) +
                                ", " + t.id(verdict.v) + "} has both labels 0");
}

void print_truncation(const ultra::Truncation& truncation) {
  std::cout << ultra::serialize_tree(truncation.tree);
  if (!truncation.frontier.empty()) {
    std::string line = "# frontier:";
    for (const auto& id : truncation.frontier) line += " " + id;
    std::cout << line << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ultrametric spaces generated by vertex-labeled trees"};
  app.require_subcommand(1);

  std::string file, schema_file, from, to, center, set_csv;
  double radius = 0, epsilon = 0;
  std::uint64_t budget_vertices = 10000, budget_depth = 1000;

  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget-vertices", budget_vertices, "vertex budget")
        ->default_val(10000);
    cmd->add_option("--budget-depth", budget_depth, "depth budget")->default_val(1000);
  };

  auto* validate = app.add_subcommand("validate", "check a tree or schema file");
  validate->add_option("--file", file, "finite tree file");
  validate->add_option("--schema", schema_file, "schema file");

  auto* dist = app.add_subcommand("dist", "distance between two vertices");
  dist->add_option("--file", file)->required();
  dist->add_option("--from", from)->required();
  dist->add_option("--to", to)->required();

  auto* ball_cmd = app.add_subcommand("ball", "closed ball members");
  ball_cmd->add_option("--file", file)->required();
  ball_cmd->add_option("--center", center)->required();
  ball_cmd->add_option("--radius", radius)->required();

  auto* hull_cmd = app.add_subcommand("hull", "smallest subtree containing a set");
  hull_cmd->add_option("--file", file)->required();
  hull_cmd->add_option("--set", set_csv, "comma-separated vertex ids")->required();

  auto* partition = app.add_subcommand("partition", "classes of d <= epsilon");
  partition->add_option("--file", file)->required();
  partition->add_option("--set", set_csv)->required();
  partition->add_option("--epsilon", epsilon)->required();

  auto* packing = app.add_subcommand("packing", "maximum epsilon-separated subset size");
  packing->add_option("--file", file)->required();
  packing->add_option("--set", set_csv)->required();
  packing->add_option("--epsilon", epsilon)->required();

  auto* classify_cmd = app.add_subcommand("classify", "separability and local finiteness");
  classify_cmd->add_option("--file", file, "finite tree file");
  classify_cmd->add_option("--schema", schema_file, "schema file");

  auto* witness = app.add_subcommand("witness", "ray-or-hub witness for a schema");
  witness->add_option("--schema", schema_file)->required();

  auto* synth = app.add_subcommand("synth-labeling", "relabel with BFS ordinals");
  synth->add_option("--file", file, "finite tree file");
  synth->add_option("--schema", schema_file, "schema file");
  add_budget(synth);

  auto* explore = app.add_subcommand("explore", "semi-decide ball finiteness");
  explore->add_option("--schema", schema_file)->required();
  explore->add_option("--radius", radius)->required();
  add_budget(explore);

  auto* instantiate_cmd = app.add_subcommand("instantiate", "materialize a schema");
  instantiate_cmd->add_option("--schema", schema_file)->required();
  add_budget(instantiate_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    ultra::Budget budget{budget_vertices, budget_depth};

    if (validate->parsed()) {
      if (file.empty() == schema_file.empty())
        throw CLI::ValidationError("validate", "exactly one of --file/--schema");
      if (!file.empty()) {
        auto t = load_tree(file);
        auto verdict = ultra::validate_labeling(t);
        if (verdict.non_degenerate)
          std::cout << "non-degenerate\n";
        else
          std::cout << "degenerate edge {" << t.id(verdict.u) << ", "
                    << t.id(verdict.v) << "}\n";
      } else {
        load_schema(schema_file);
        std::cout << "valid\n";
      }
    } else if (dist->parsed()) {
      auto t = load_tree(file);
      std::cout << "d = " << ultra::format_double(
                       ultra::dist_naive(t, t.index_of(from), t.index_of(to)))
                << "\n";
    } else if (ball_cmd->parsed()) {
      auto t = load_tree(file);
      auto b = ultra::ball(t, t.index_of(center), radius);
      print_members(t, b.members);
    } else if (hull_cmd->parsed()) {
      auto t = load_tree(file);
      std::cout << ultra::serialize_tree(ultra::hull(t, resolve_set(t, set_csv)));
    } else if (partition->parsed()) {
      auto t = load_tree(file);
      for (const auto& cls :
           ultra::ball_partition(t, resolve_set(t, set_csv), epsilon)) {
        std::string line = "class:";
        for (int v : cls) line += " " + t.id(v);
        std::cout << line << "\n";
      }
    } else if (packing->parsed()) {
      auto t = load_tree(file);
      std::cout << "packing = "
                << ultra::packing_number(t, resolve_set(t, set_csv), epsilon) << "\n";
    } else if (classify_cmd->parsed()) {
      if (file.empty() == schema_file.empty())
        throw CLI::ValidationError("classify", "exactly one of --file/--schema");
      if (!schema_file.empty()) {
        std::cout << ultra::to_report(ultra::classify(load_schema(schema_file)));
      } else {
        auto t = load_tree(file);
        require_non_degenerate(t);
        // A finite tree is separable and locally finite outright.
        ultra::ClassificationReport report;
        report.cardinality =
            ultra::Cardinality::finite(static_cast<std::uint64_t>(t.size()));
        report.separable.separable = true;
        report.separable.cardinality = report.cardinality;
        report.separable.certificate = "finite vertex set";
        report.locally_finite.locally_finite = true;
        report.locally_finite.certificate = "finite vertex set";
        std::cout << ultra::to_report(report);
      }
    } else if (witness->parsed()) {
      std::cout << ultra::to_report(ultra::find_ray_or_hub(load_schema(schema_file)));
    } else if (synth->parsed()) {
      if (file.empty() == schema_file.empty())
        throw CLI::ValidationError("synth-labeling", "exactly one of --file/--schema");
      if (!file.empty()) {
        std::cout << ultra::serialize_tree(ultra::synthesize_labeling(load_tree(file)));
      } else {
        auto lazy = ultra::synthesize_labeling(load_schema(schema_file));
        print_truncation(lazy.instantiate(budget));
      }
    } else if (explore->parsed()) {
      auto outcome = ultra::explore_ball(load_schema(schema_file), radius, budget);
      if (outcome.finite) {
        std::cout << "result: finite\n";
        print_members(outcome.probe.tree, outcome.ball.members);
      } else {
        std::cout << "result: budget-exceeded\n";
        std::string line = "frontier:";
        for (const auto& id : outcome.open_frontier) line += " " + id;
        std::cout << line << "\n";
      }
    } else if (instantiate_cmd->parsed()) {
      print_truncation(ultra::instantiate(load_schema(schema_file), budget));
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
