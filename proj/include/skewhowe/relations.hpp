#pragma once

// Spider relations as pairs of web combinations compared as matrices on
// standard bases.

#include "skewhowe/web.hpp"

#include <string>
#include <vector>

namespace skewhowe {

struct WebTerm {
  LaurentPoly coeff;
  Web web;
};
using WebCombo = std::vector<WebTerm>;

struct RelationCase {
  std::string relation;  // paralleldigon, oppositedigon, ...
  std::string labels;    // human-readable label values
  BoundaryObject domain;
  WebCombo lhs;
  WebCombo rhs;
};

/// Every admissible instance for one N. Square relations use ladders on two
/// uprights with s+t <= 3 (parallel) and s,t <= 2 (opposite).
std::vector<RelationCase> relation_cases(int N);

/// The combination applied to x; annihilated terms are simply absent.
TensorVector evaluate_combo(const WebCombo& combo, const TensorVector& x);

/// True when both sides agree on every standard basis vector of the domain.
/// On failure `detail` names the first differing input.
bool check_relation(const RelationCase& rc, std::string* detail = nullptr);

struct RelationSummary {
  std::string relation;
  int cases = 0;
  int failures = 0;
  std::vector<std::string> failed;  // "labels: detail"
};

/// Sweep all relations for one N, in a fixed order.
std::vector<RelationSummary> verify_relations(int N);

}  // namespace skewhowe
