#pragma once

// Second evaluator: webs as edge graphs, matrix entries as sums over states.
//
// Every edge carries a subset of {1..N}. On a dual edge the subset is the
// index of the dual basis vector xhat_S, so |S| is the edge colour either way.
// Local weights are written out directly from the basis formulas and never
// call into the tensor module.

#include "skewhowe/web.hpp"

#include <vector>

namespace skewhowe {

/// A web as vertices on numbered edges. Edges 0..d-1 are the domain slots
/// (slot order); `outputs` lists the codomain edges in slot order.
struct WebGraph {
  struct Vertex {
    Slice slice;
    std::vector<int> in;   // consumed edges, slot order
    std::vector<int> out;  // created edges, slot order
    std::vector<Factor> out_factors;
  };
  BoundaryObject domain;
  std::vector<Factor> edges;  // colour and duality per edge
  std::vector<Vertex> vertices;
  std::vector<int> outputs;
};

WebGraph build_graph(const Web& web);

/// Edge labelling, indexed by edge id.
struct State {
  std::vector<Subset> labels;
  friend bool operator==(const State&, const State&) = default;
};

/// All states with the given boundary subsets at both ends.
std::vector<State> enumerate_states(const Web& web, const BasisIndex& bottom, const BasisIndex& top);

/// Signed monomial contributed by one state.
LaurentPoly state_weight(const Web& web, const State& state);

TensorVector evaluate_statesum(const Web& web, const TensorVector& x);

}  // namespace skewhowe
