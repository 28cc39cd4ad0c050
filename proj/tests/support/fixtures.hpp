#pragma once

#include <string>

#include "capclose/hypergraph.hpp"
#include "capclose/json_io.hpp"

#ifndef CAPCLOSE_FIXTURE_DIR
#error "CAPCLOSE_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace capclose::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(CAPCLOSE_FIXTURE_DIR) + "/" + name;
}

inline CapabilityHypergraph load_fixture(const std::string& name) {
  return json::read_hypergraph(json::read_file(fixture_path(name)));
}

// Booking example: c1..c12, edges h1..h8.
inline CapabilityHypergraph paris() { return load_fixture("paris.json"); }

// V = {u1, u2, f}, one edge ({u1, u2}, {f}).
inline CapabilityHypergraph counterexample() {
  return load_fixture("counterexample.json");
}

}  // namespace capclose::testing
