#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracle.hpp"
#include "ultra/decimal.hpp"
#include "ultra/tree.hpp"

using namespace ultra;
using oracle::RandomTreeSpec;
using oracle::random_tree;

namespace {

LabeledTree three_path() {
  return parse_tree("tree t\nvertex a 3\nvertex b 1\nvertex c 2\nedge a b\nedge b c\n");
}

std::vector<int> ids_to_indexes(const LabeledTree& t, const std::vector<std::string>& ids) {
  std::vector<int> out;
  for (const auto& id : ids) out.push_back(t.index_of(id));
  return out;
}

}  // namespace

TEST_CASE("parse_tree accepts the smallest non-singleton tree") {
  auto t = parse_tree("tree t\nvertex a 3\nvertex b 1\nedge a b\n");
  CHECK(t.size() == 2);
  CHECK(t.label(t.index_of("a")) == 3.0);
  CHECK(t.label(t.index_of("b")) == 1.0);
  CHECK(degree(t, t.index_of("a")) == 1);
}

TEST_CASE("parse_tree rejects the minimal cycle with a witness") {
  const char* text =
      "tree t\nvertex a 1\nvertex b 1\nvertex c 1\n"
      "edge a b\nedge b c\nedge c a\n";
  CHECK_THROWS_WITH_AS(parse_tree(text), doctest::Contains("not a tree: cycle"),
                       std::invalid_argument);
}

TEST_CASE("parse_tree rejects malformed input with line numbers") {
  CHECK_THROWS_AS(parse_tree("vertex a 1\n"), ParseError);
  CHECK_THROWS_AS(parse_tree("tree t\nfrob a\n"), ParseError);
  CHECK_THROWS_AS(parse_tree("tree t\nvertex a -1\n"), ParseError);
  CHECK_THROWS_AS(parse_tree("tree t\nvertex a inf\n"), ParseError);
  CHECK_THROWS_AS(parse_tree("tree t\nvertex a 1\nvertex a 2\n"), ParseError);
  CHECK_THROWS_AS(parse_tree("tree t\nvertex a 1\nedge a b\n"), ParseError);
  try {
    parse_tree("tree t\nvertex a 1\n# fine\nwhat\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_WITH_AS(
      parse_tree("tree t\nvertex a 0\nvertex b 1\nvertex c 1\nedge b c\n"),
      doctest::Contains("disconnected component"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_tree("tree t\nvertex a 1\nedge a a\n"),
                       doctest::Contains("self-loop"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_tree("tree t\nvertex a 1\nvertex b 2\nedge a b\nedge b a\n"),
      doctest::Contains("duplicate edge"), std::invalid_argument);
}

TEST_CASE("singleton tree serializes to the two canonical lines") {
  auto t = LabeledTree::from_parts("t", {{"a", 0.0}}, {});
  CHECK(serialize_tree(t) == "tree t\nvertex a 0\n");
}

TEST_CASE("serialize/parse round-trips random trees structurally") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto t = random_tree({1 + seed * 7 % 60, RandomTreeSpec::Mode::PositiveUniform,
                          0.25, seed});
    auto back = parse_tree(serialize_tree(t));
    CHECK(back == t);
  }
}

TEST_CASE("labels round-trip through shortest decimal text") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    double x = static_cast<double>(rng()) / 3.17 / (1 + rng() % 100000);
    auto parsed = parse_double(format_double(x));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == x);
  }
}

TEST_CASE("path_between handles trivial and forced cases") {
  auto t = three_path();
  int a = t.index_of("a"), b = t.index_of("b"), c = t.index_of("c");
  CHECK(path_between(t, a, a) == std::vector<int>{a});
  CHECK(path_between(t, a, c) == std::vector<int>{a, b, c});
}

TEST_CASE("path_between matches a BFS parent-chain oracle and reverses") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto t = random_tree({2 + seed % 63, RandomTreeSpec::Mode::PositiveUniform, 0.25,
                          100 + seed});
    for (int u = 0; u < t.size(); ++u) {
      for (int v = 0; v < t.size(); ++v) {
        auto p = path_between(t, u, v);
        REQUIRE(p.front() == u);
        REQUIRE(p.back() == v);
        // consecutive adjacency + no repeats
        std::set<int> uniq(p.begin(), p.end());
        CHECK(uniq.size() == p.size());
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
          const auto& nb = t.neighbors(p[i]);
          CHECK(std::find(nb.begin(), nb.end(), p[i + 1]) != nb.end());
        }
        auto q = path_between(t, v, u);
        std::reverse(q.begin(), q.end());
        CHECK(p == q);
      }
    }
  }
}

TEST_CASE("degree: star center, leaves, handshake identity") {
  auto star = parse_tree(
      "tree s\nvertex c 1\nvertex l1 1\nvertex l2 1\nvertex l3 1\n"
      "edge c l1\nedge c l2\nedge c l3\n");
  CHECK(degree(star, star.index_of("c")) == 3);
  CHECK(degree(star, star.index_of("l1")) == 1);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto t = random_tree({1 + seed * 13 % 100, RandomTreeSpec::Mode::PositiveUniform,
                          0.25, 200 + seed});
    int total = 0;
    for (int v = 0; v < t.size(); ++v) total += degree(t, v);
    CHECK(total == 2 * (t.size() - 1));
  }
}

TEST_CASE("bfs_layers on the 3-path and singleton") {
  auto t = three_path();
  int a = t.index_of("a"), b = t.index_of("b"), c = t.index_of("c");
  auto layers = bfs_layers(t, a);
  REQUIRE(layers.size() == 2);
  CHECK(layers[0] == std::vector<int>{b});
  CHECK(layers[1] == std::vector<int>{a, c});

  auto single = LabeledTree::from_parts("t", {{"a", 0.0}}, {});
  CHECK(bfs_layers(single, 0).empty());
}

TEST_CASE("bfs_layers covers the vertex set from every start") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto t = random_tree({1 + seed * 11 % 40, RandomTreeSpec::Mode::PositiveUniform,
                          0.25, 300 + seed});
    for (int v = 0; v < t.size(); ++v) {
      std::set<int> covered{v};
      for (const auto& layer : bfs_layers(t, v)) covered.insert(layer.begin(), layer.end());
      CHECK(covered.size() == static_cast<std::size_t>(t.size()));
    }
  }
}

TEST_CASE("hull base cases") {
  auto t = three_path();
  auto single = hull(t, {t.index_of("b")});
  CHECK(single.size() == 1);
  CHECK(single.label(0) == 1.0);

  auto whole = hull(t, ids_to_indexes(t, {"a", "c"}));
  CHECK(whole.size() == 3);
  CHECK(whole == t);

  CHECK_THROWS_AS(hull(t, {}), std::invalid_argument);
  CHECK_THROWS_AS(hull(t, {99}), std::invalid_argument);
}

TEST_CASE("hull matches the exhaustive intersection oracle") {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 60; ++round) {
    auto t = random_tree({1 + rng() % 12, RandomTreeSpec::Mode::PositiveUniform, 0.25,
                          400 + static_cast<std::uint64_t>(round)});
    std::vector<int> a;
    for (int v = 0; v < t.size(); ++v)
      if (rng() % 3 == 0) a.push_back(v);
    if (a.empty()) a.push_back(static_cast<int>(rng() % t.size()));

    auto h = hull(t, a);
    std::vector<int> got;
    for (const auto& id : h.ids()) got.push_back(t.index_of(id));
    std::sort(got.begin(), got.end());
    CHECK(got == oracle::brute_hull(t, a));

    // Base-point independence, quantified over every member.
    for (int base : a) {
      auto other = hull(t, a, base);
      CHECK(other == h);
    }

    // Idempotence.
    std::vector<int> again;
    for (const auto& id : h.ids()) again.push_back(t.index_of(id));
    CHECK(hull(t, again) == h);
  }
}

TEST_CASE("hull is monotone, exhaustively on a small tree") {
  auto t = random_tree({10, RandomTreeSpec::Mode::PositiveUniform, 0.25, 99});
  const int n = t.size();
  for (unsigned b = 1; b < (1u << n); ++b) {
    // Enumerate a as submasks of b; skip empty.
    for (unsigned a = b;; a = (a - 1) & b) {
      if (a != 0 && a != b) {
        std::vector<int> sa, sb;
        for (int v = 0; v < n; ++v) {
          if (a & (1u << v)) sa.push_back(v);
          if (b & (1u << v)) sb.push_back(v);
        }
        auto ha = hull(t, sa);
        auto hb = hull(t, sb);
        for (const auto& id : ha.ids()) CHECK(hb.find(id).has_value());
      }
      if (a == 0) break;
    }
  }
}
