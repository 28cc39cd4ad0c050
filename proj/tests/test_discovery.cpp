#include <doctest.h>

#include <random>

#include "capclose/closure.hpp"
#include "capclose/discovery.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace capclose;
using namespace capclose::testing;

namespace {

std::size_t gain_of(const std::vector<MaskEdge>& edges, Mask a, Mask b) {
  return popcount(saturate(edges, a | b)) - popcount(saturate(edges, a));
}

CapabilityHypergraph chain_with_join() {
  std::vector<LabelledEdge> edges{{{"a"}, {"b"}, {}}, {{"b", "w"}, {"g"}, {}}};
  return CapabilityHypergraph::build({"a", "b", "w", "g"}, edges);
}

}  // namespace

TEST_CASE("emergent") {
  const auto h = paris();
  CHECK(emergent(h, h.make_set({"c1", "c2"})) ==
        h.make_set({"c5", "c7", "c8", "c9", "c10", "c11", "c12"}));
  // Oracle: closure minus the singleton-restricted closure.
  const auto sg = singleton_restriction(h);
  const Mask a = to_mask(h.make_set({"c1", "c2"}));
  CHECK(to_mask(emergent(h, h.make_set({"c1", "c2"}))) ==
        (saturate(mask_edges(h), a) & ~saturate(mask_edges(sg), a)));

  const auto ce = counterexample();
  CHECK(emergent(ce, ce.make_set({"u1", "u2"})) == ce.make_set({"f"}));

  PairwiseGraph g{{"a", "b", "c"}, {{0, 1}, {1, 2}}};
  const auto pairwise = embed_graph(g);
  for (Mask m = 0; m < 8; ++m) CHECK(emergent(pairwise, from_mask(3, m)).empty());
}

TEST_CASE("boundary") {
  const auto ce = counterexample();
  const auto b = boundary(ce, ce.make_set({"u1"}));
  REQUIRE(b.size() == 1);
  CHECK(b[0] == BoundaryEntry{0, ce.id_of("u2")});
  CHECK(boundary(ce, ce.empty_set()).empty());

  const auto h = paris();
  CHECK(boundary(h, h.make_set({"c1", "c2"})).empty());
}

TEST_CASE("near-miss frontier") {
  const auto ce = counterexample();
  const auto nmf = near_miss_frontier(ce, ce.make_set({"u1"}), ce.empty_set());
  REQUIRE(nmf.size() == 1);
  CHECK(nmf[0].vertex == ce.id_of("u2"));
  CHECK(near_miss_frontier(ce, ce.make_set({"u1"}), ce.make_set({"f"})).empty());

  const auto h = paris();
  CHECK(near_miss_frontier(h, h.make_set({"c1", "c2"}), h.empty_set()).empty());
  std::vector<std::string> from_c1;
  for (const auto& e : near_miss_frontier(h, h.make_set({"c1"}), h.empty_set())) {
    from_c1.push_back(h.label(e.vertex));
  }
  CHECK(from_c1 == std::vector<std::string>{"c2", "c5", "c7", "c8"});
}

TEST_CASE("marginal gain") {
  const auto h = paris();
  CHECK(marginal_gain(h, h.make_set({"c1"}), h.id_of("c2")).gain == 8);
  CHECK(marginal_gain(h, h.make_set({"c1"}), h.id_of("c3")).gain == 0);
  const auto ce = counterexample();
  CHECK(marginal_gain(ce, ce.make_set({"u1"}), ce.id_of("u2")).gain == 2);
  CHECK(marginal_gain(ce, ce.make_set({"u1"}), ce.id_of("u2"), ce.make_set({"f"})).gain == 1);
}

TEST_CASE("acquisition distance examples") {
  const auto h = paris();
  const auto zero = acquisition_distance(h, h.make_set({"c1"}), h.id_of("c3"));
  REQUIRE(std::holds_alternative<DistanceExact>(zero));
  CHECK(std::get<DistanceExact>(zero).distance == 0);

  const auto ce = counterexample();
  const auto one = acquisition_distance(ce, ce.make_set({"u1"}), ce.id_of("f"));
  REQUIRE(std::holds_alternative<DistanceExact>(one));
  CHECK(std::get<DistanceExact>(one).distance == 1);
  CHECK(std::get<DistanceExact>(one).witness == ce.make_set({"u2"}));

  const auto two = acquisition_distance(h, h.empty_set(), h.id_of("c12"));
  REQUIRE(std::holds_alternative<DistanceExact>(two));
  CHECK(std::get<DistanceExact>(two).distance == 2);
  CHECK(std::get<DistanceExact>(two).witness == h.make_set({"c1", "c2"}));

  // c1 appears in no head, so nothing but c1 itself derives it.
  CHECK(std::holds_alternative<DistanceUnreachable>(
      acquisition_distance(h, h.empty_set(), h.id_of("c1"))));

  const auto capped = acquisition_distance(h, h.empty_set(), h.id_of("c12"), 1);
  REQUIRE(std::holds_alternative<DistanceExceeded>(capped));
  CHECK(std::get<DistanceExceeded>(capped).budget == 1);
}

TEST_CASE("acquisition distance matches subset enumeration, n <= 10") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 150; ++round) {
    const std::size_t n = 4 + static_cast<std::size_t>(round % 7);
    const auto h = random_hypergraph(rng, {n, 2 * n, 3, 2, false});
    const auto edges = mask_edges(h);
    const auto a = random_subset(rng, n, 0.15);
    for (std::size_t g = 0; g < n; ++g) {
      const auto goal = static_cast<CapabilityId>(g);
      const auto out = acquisition_distance(h, a, goal, n);
      const auto expected = brute_distance(n, edges, to_mask(a), goal);
      if (!expected) {
        REQUIRE(std::holds_alternative<DistanceUnreachable>(out));
        continue;
      }
      const auto* exact = std::get_if<DistanceExact>(&out);
      REQUIRE(exact != nullptr);
      REQUIRE(exact->distance == *expected);
      REQUIRE(exact->witness.size() == *expected);
      REQUIRE(reach(h, a | exact->witness).contains(goal));
    }
  }
}

TEST_CASE("greedy acquisition") {
  const auto h = paris();
  const auto pick = greedy_acquire(h, h.make_set({"c1"}), 1);
  REQUIRE(pick.size() == 1);
  CHECK(pick[0] == GainEntry{h.id_of("c2"), 8});
  CHECK(greedy_acquire(h, h.make_set({"c1", "c2"}), 3).empty());

  const auto ce = counterexample();
  const auto safe = greedy_acquire(ce, ce.empty_set(), 2, ce.make_set({"f"}));
  REQUIRE(safe.size() == 1);
  CHECK(safe[0].vertex == ce.id_of("u1"));
}

TEST_CASE("top gains") {
  const auto h = paris();
  const auto top = top_gains(h, h.make_set({"c1"}), 3);
  REQUIRE(top.size() == 3);
  CHECK(top[0] == GainEntry{h.id_of("c2"), 8});
  for (std::size_t i = 1; i < top.size(); ++i) {
    CHECK(top[i - 1].gain >= top[i].gain);
    if (top[i - 1].gain == top[i].gain) CHECK(top[i - 1].vertex < top[i].vertex);
  }
  CHECK(top_gains(h, h.make_set({"c1"}), 100).size() == 8);
}

TEST_CASE("emergent is nonempty iff a conjunctive edge fires outside cl_sg, axiom-free n <= 6") {
  std::mt19937_64 rng(77);
  for (int fixture = 0; fixture < 30; ++fixture) {
    const auto h = random_hypergraph(rng, {6, 7, 3, 2, false});
    const auto sg_edges = mask_edges(singleton_restriction(h));
    const auto edges = mask_edges(h);
    for (Mask a = 0; a < 64; ++a) {
      const Mask cl = saturate(edges, a);
      const Mask cl_sg = saturate(sg_edges, a);
      bool witness = false;
      for (const auto& e : h.edges()) {
        Mask tail = 0;
        Mask head = 0;
        for (auto v : e.tail) tail |= Mask{1} << v;
        for (auto v : e.head) head |= Mask{1} << v;
        if (e.tail.size() >= 2 && (tail & ~cl) == 0 && (head & ~cl_sg) != 0) witness = true;
      }
      REQUIRE(emergent(h, from_mask(6, a)).empty() == !witness);
    }
  }
}

TEST_CASE("acquiring a frontier vertex retires its boundary edges") {
  std::mt19937_64 rng(78);
  for (int fixture = 0; fixture < 30; ++fixture) {
    const auto h = random_hypergraph(rng, {6, 8, 3, 2, true});
    for (Mask a = 0; a < 64; ++a) {
      const auto set = from_mask(6, a);
      const auto bnd = boundary(h, set);
      for (const auto& f : near_miss_frontier(h, set, h.empty_set())) {
        auto grown = set;
        grown.insert(f.vertex);
        const auto after = boundary(h, grown);
        for (const auto& b : bnd) {
          if (b.missing != f.vertex) continue;
          const bool still = std::any_of(after.begin(), after.end(),
                                         [&](const BoundaryEntry& x) { return x.edge == b.edge; });
          REQUIRE_FALSE(still);
        }
      }
    }
  }
}

TEST_CASE("non-trivial growth implies frontier membership") {
  // Every vertex outside cl(A) trivially grows the closure, so the frontier is
  // compared against the non-trivial growth cl(A ∪ {v}) ⊋ cl(A) ∪ {v}. The
  // converse fails when a boundary edge's head is already in cl(A).
  std::mt19937_64 rng(79);
  for (int fixture = 0; fixture < 40; ++fixture) {
    const auto h = random_hypergraph(rng, {7, 9, 3, 2, false});
    const auto edges = mask_edges(h);
    for (Mask a = 0; a < 128; a += 5) {
      const Mask cl = saturate(edges, a);
      Mask nmf = 0;
      for (const auto& f : near_miss_frontier(h, from_mask(7, a), h.empty_set())) {
        nmf |= Mask{1} << f.vertex;
      }
      for (std::size_t v = 0; v < 7; ++v) {
        const Mask bit = Mask{1} << v;
        if (cl & bit) {
          REQUIRE((nmf & bit) == 0);
          continue;
        }
        const Mask grown = saturate(edges, cl | bit);
        if (grown != (cl | bit)) REQUIRE((nmf & bit) != 0);
      }
    }
  }
}

TEST_CASE("closure gain is normalised and monotone") {
  std::mt19937_64 rng(80);
  for (int round = 0; round < 500; ++round) {
    const auto h = random_hypergraph(rng, {8, 10, 3, 2, false});
    const auto edges = mask_edges(h);
    const Mask a = to_mask(random_subset(rng, 8, 0.15));
    const Mask b = to_mask(random_subset(rng, 8, 0.3));
    const Mask c = b | to_mask(random_subset(rng, 8, 0.3));
    REQUIRE(gain_of(edges, a, 0) == 0);
    REQUIRE(gain_of(edges, a, b) <= gain_of(edges, a, c));
  }
}

TEST_CASE("closure gain is submodular without conjunctive edges") {
  std::mt19937_64 rng(81);
  for (int round = 0; round < 2000; ++round) {
    const auto h = singleton_restriction(random_hypergraph(rng, {8, 14, 1, 3, false}));
    const auto edges = mask_edges(h);
    const Mask a = to_mask(random_subset(rng, 8, 0.15));
    const Mask b = to_mask(random_subset(rng, 8, 0.25));
    const Mask c = b | to_mask(random_subset(rng, 8, 0.25));
    const Mask cl_c = saturate(edges, a | c);
    for (std::size_t v = 0; v < 8; ++v) {
      const Mask bit = Mask{1} << v;
      if (cl_c & bit) continue;
      REQUIRE(gain_of(edges, a, b | bit) - gain_of(edges, a, b) >=
              gain_of(edges, a, c | bit) - gain_of(edges, a, c));
    }
  }
}

TEST_CASE("a single conjunctive edge breaks diminishing returns") {
  const auto ce = counterexample();
  const auto edges = mask_edges(ce);
  const Mask u1 = to_mask(ce.make_set({"u1"}));
  const Mask u2 = to_mask(ce.make_set({"u2"}));
  CHECK(gain_of(edges, 0, u2) - gain_of(edges, 0, 0) == 1);
  CHECK(gain_of(edges, 0, u1 | u2) - gain_of(edges, 0, u1) == 2);
}

TEST_CASE("greedy gain meets the (1 - 1/e) bound without conjunctive edges") {
  std::mt19937_64 rng(82);
  const double ratio = 1.0 - 1.0 / std::exp(1.0);
  for (int round = 0; round < 200; ++round) {
    const auto h = singleton_restriction(random_hypergraph(rng, {9, 14, 1, 3, false}));
    const auto edges = mask_edges(h);
    const auto a = random_subset(rng, 9, 0.1);
    const Mask cl = saturate(edges, to_mask(a));
    const Mask pool = ((Mask{1} << 9) - 1) & ~cl;
    for (std::size_t k = 1; k <= 3; ++k) {
      std::size_t opt = 0;
      for (Mask s = pool;; s = (s - 1) & pool) {
        if (popcount(s) <= k) opt = std::max(opt, gain_of(edges, cl, s));
        if (s == 0) break;
      }
      Mask picked = 0;
      for (const auto& g : greedy_acquire(h, a, k)) picked |= Mask{1} << g.vertex;
      REQUIRE(static_cast<double>(gain_of(edges, cl, picked)) >= ratio * static_cast<double>(opt));
    }
  }
}

TEST_CASE("greedy prefixes stay clear of the forbidden set") {
  std::mt19937_64 rng(83);
  for (int round = 0; round < 300; ++round) {
    const auto h = random_hypergraph(rng, {9, 12, 3, 2, false});
    const auto f = random_subset(rng, 9, 0.2);
    const auto a = random_subset(rng, 9, 0.15) - f;
    if (reach(h, a).intersects(f)) continue;
    auto cur = a;
    for (const auto& g : greedy_acquire(h, a, 4, f)) {
      cur.insert(g.vertex);
      REQUIRE_FALSE(reach(h, cur).intersects(f));
    }
  }
}

TEST_CASE("chain fixture has one frontier vertex") {
  const auto h = chain_with_join();
  const auto nmf = near_miss_frontier(h, h.make_set({"a"}), h.empty_set());
  REQUIRE(nmf.size() == 1);
  CHECK(nmf[0].vertex == h.id_of("w"));
}
