#pragma once

#include "skewhowe/howe.hpp"
#include "skewhowe/web.hpp"

#include <map>
#include <string>
#include <vector>

namespace skewhowe {

struct LTBasisElement {
  Tableau tableau;
  PeelWord word;
  TableauVector expansion;
};

struct DualCanonicalElement {
  Tableau tableau;
  TableauVector expansion;
  std::map<Tableau, LaurentPoly> beta;  // b = A^T + sum beta_S A^S
};

/// Ladder word (bottom rung first) realising the peeling word.
std::vector<LadderStep> lt_ladder_word(const PeelWord& word);

/// A^T from the divided-power chain; INVARIANT-VIOLATION unless unitriangular
/// with coefficients in N[v, v^-1].
LTBasisElement lt_vector(const Tableau& t);

/// The ladder web of A^T, from the highest object to the type of t.
Web lt_web(const Tableau& t);

struct NegExpReport {
  bool pass = true;
  std::vector<std::pair<Tableau, LaurentPoly>> violations;
};

/// Coefficient 1 at `leading`, everything else in v^-1 Z[v^-1].
NegExpReport check_negative_exponent(const TableauVector& x, const Tableau& leading);

/// LT and dual canonical elements for every semistandard tableau of a type.
struct BlockBasis {
  Shape shape;
  GlWeight type;
  std::vector<Tableau> labels;  // semistandard, descending
  std::vector<LTBasisElement> lt;
  std::vector<DualCanonicalElement> dual;
};

BlockBasis compute_block(const Shape& shape, const GlWeight& type);

/// b^T via the triangular elimination.
DualCanonicalElement dual_canonical(const Tableau& t);

/// <x, y> = bar(sum_tau c^x_tau c^y_tau).
LaurentPoly tensor_form(const TableauVector& x, const TableauVector& y);

enum class BasisKind { LT, DualCanonical };

struct GradedMatrix {
  std::vector<Tableau> labels;
  std::vector<std::vector<LaurentPoly>> entries;
  friend bool operator==(const GradedMatrix&, const GradedMatrix&) = default;
};

/// Gram matrix of the block computed from tensor expansions and from web
/// evaluation; INVARIANT-VIOLATION if the two disagree.
GradedMatrix gram_matrix(const Shape& shape, const GlWeight& type, BasisKind kind);
GradedMatrix gram_matrix(const BlockBasis& block, BasisKind kind);

}  // namespace skewhowe
