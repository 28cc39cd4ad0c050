#include <doctest.h>

#include <random>

#include "capclose/closure.hpp"
#include "capclose/discovery.hpp"
#include "capclose/error.hpp"
#include "capclose/reductions.hpp"
#include "capclose/safety.hpp"
#include "support/oracles.hpp"

using namespace capclose;
using namespace capclose::testing;

namespace {

MonotoneCircuit two_input(GateKind kind) {
  MonotoneCircuit c;
  c.gates = {{GateKind::Input, {}}, {GateKind::Input, {}}, {kind, {0, 1}}};
  c.output = 2;
  return c;
}

bool probe_emergent(const CvpInstance& inst) {
  return emergent(inst.hypergraph, inst.initial).contains(inst.probe);
}

TransversalInstance make_transversal(std::vector<std::string> universe,
                                     std::vector<std::vector<std::string>> edges,
                                     std::vector<std::string> candidate) {
  return {std::move(universe), std::move(edges), std::move(candidate)};
}

}  // namespace

TEST_CASE("circuit value examples") {
  const auto and_c = two_input(GateKind::And);
  const auto on = cvp_to_instance(and_c, {true, true});
  CHECK_FALSE(emergent(on.hypergraph, on.initial).empty());
  CHECK(probe_emergent(on));
  CHECK(on.initial.contains(on.hypergraph.id_of("v_top")));

  const auto off = cvp_to_instance(and_c, {true, false});
  CHECK(emergent(off.hypergraph, off.initial).empty());

  const auto or_c = two_input(GateKind::Or);
  const auto or_on = cvp_to_instance(or_c, {true, false});
  CHECK(or_on.hypergraph.find("g_out").has_value());
  CHECK(probe_emergent(or_on));
  CHECK_FALSE(probe_emergent(cvp_to_instance(or_c, {false, false})));
}

TEST_CASE("circuit validation") {
  MonotoneCircuit forward;
  forward.gates = {{GateKind::And, {0, 1}}, {GateKind::Input, {}}};
  CHECK_THROWS_AS(forward.validate(), ValidationError);

  MonotoneCircuit wide;
  wide.gates = {{GateKind::Input, {}}, {GateKind::Input, {}}, {GateKind::Input, {}},
                {GateKind::Or, {0, 1, 2}}};
  wide.output = 3;
  CHECK_THROWS_AS(wide.validate(), ValidationError);

  CHECK_THROWS_AS(cvp_to_instance(two_input(GateKind::And), {true}), ValidationError);
}

TEST_CASE("an inner AND gate can be emergent while the circuit outputs 0") {
  MonotoneCircuit c;
  c.gates = {{GateKind::Input, {}}, {GateKind::Input, {}}, {GateKind::Input, {}},
             {GateKind::And, {0, 1}}, {GateKind::And, {3, 2}}};
  c.output = 4;
  const auto inst = cvp_to_instance(c, {true, true, false});
  CHECK_FALSE(evaluate_circuit(c, {true, true, false}));
  CHECK_FALSE(emergent(inst.hypergraph, inst.initial).empty());
  CHECK_FALSE(probe_emergent(inst));
}

TEST_CASE("probe emergence matches circuit evaluation on every assignment") {
  std::mt19937_64 rng(301);
  for (int round = 0; round < 400; ++round) {
    const std::size_t inputs = 1 + static_cast<std::size_t>(round % 4);
    std::uniform_int_distribution<std::size_t> gate_count(1, 8 - inputs);
    const auto c = random_circuit(rng, inputs, gate_count(rng));
    for (unsigned bits = 0; bits < (1u << inputs); ++bits) {
      std::vector<bool> assignment;
      for (std::size_t i = 0; i < inputs; ++i) assignment.push_back((bits >> i) & 1u);
      REQUIRE(probe_emergent(cvp_to_instance(c, assignment)) == evaluate_circuit(c, assignment));
    }
  }
}

TEST_CASE("transversal examples") {
  const auto minimal = transversal_to_instance(make_transversal({"a", "b"}, {{"a"}, {"b"}}, {"a", "b"}));
  CHECK(is_minimal_unsafe(minimal.hypergraph, minimal.forbidden, minimal.candidate));

  const auto partial = transversal_to_instance(make_transversal({"a", "b"}, {{"a"}, {"b"}}, {"a"}));
  CHECK(is_contained(partial.hypergraph, partial.candidate, partial.forbidden));

  const auto loose = transversal_to_instance(make_transversal({"a", "b"}, {{"a", "b"}}, {"a", "b"}));
  CHECK_FALSE(is_contained(loose.hypergraph, loose.candidate, loose.forbidden));
  CHECK_FALSE(is_minimal_unsafe(loose.hypergraph, loose.forbidden, loose.candidate));

  CHECK_THROWS_AS(transversal_to_instance(make_transversal({"a"}, {{"q"}}, {"a"})), ValidationError);
}

TEST_CASE("antichain membership matches minimal transversals") {
  std::mt19937_64 rng(302);
  for (int round = 0; round < 300; ++round) {
    const std::size_t u = 2 + static_cast<std::size_t>(round % 5);
    std::vector<std::string> universe;
    for (std::size_t i = 0; i < u; ++i) universe.push_back("x" + std::to_string(i));
    std::uniform_int_distribution<std::size_t> edge_count(1, 4);
    std::vector<std::vector<std::string>> edges;
    std::vector<Mask> edge_masks;
    const std::size_t m = edge_count(rng);
    for (std::size_t i = 0; i < m; ++i) {
      Mask mask = 0;
      while (mask == 0) mask = to_mask(random_subset(rng, u, 0.4));
      std::vector<std::string> e;
      for (std::size_t v = 0; v < u; ++v) {
        if (mask & (Mask{1} << v)) e.push_back(universe[v]);
      }
      edges.push_back(std::move(e));
      edge_masks.push_back(mask);
    }
    const Mask t = to_mask(random_subset(rng, u, 0.5));
    std::vector<std::string> cand;
    for (std::size_t v = 0; v < u; ++v) {
      if (t & (Mask{1} << v)) cand.push_back(universe[v]);
    }
    const auto red = transversal_to_instance(make_transversal(universe, edges, cand));
    const bool expected = is_minimal_transversal(edge_masks, t);
    REQUIRE(is_minimal_unsafe(red.hypergraph, red.forbidden, red.candidate) == expected);

    const auto b = minimal_unsafe_antichain(red.hypergraph, red.forbidden,
                                            red.hypergraph.vertex_count());
    REQUIRE(b.exhaustive);
    const bool member = std::find(b.sets.begin(), b.sets.end(), red.candidate) != b.sets.end();
    REQUIRE(member == expected);
  }
}
