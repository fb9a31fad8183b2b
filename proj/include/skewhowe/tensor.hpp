#pragma once

// Standard bases of tensor products of fundamental SL_N representations and
// their duals, with the elementary intertwiners.
//
// Conventions, fixed so that the web evaluations reproduce the known small
// dual canonical vectors exactly:
//  * Slot 1 is the RIGHTMOST tensor factor. A BoundaryObject stores factors
//    slot-1-first, and so does a BasisIndex.
//  * merge(a,b) at position p consumes slot p+1 (left, colour a, subset S)
//    and slot p (right, colour b, subset T), producing x_S ^ x_T =
//    v^{l(T,S)} x_{S u T} in slot p.
//  * split(a,b) at position p replaces slot p (colour a+b, subset S) by slot
//    p+1 (left, colour a, subset T) and slot p (right, colour b, S\T) with
//    coefficient v^{-l(T, S\T)}.
//  * tag(a, side) on a plain factor of colour a gives the dual factor of
//    colour N-a: x_S -> sgn * v^{l(S^c,S)} xhat_{S^c}, sgn = 1 for the left
//    tag and (-1)^{a(N-a)} for the right tag. On a dual factor the tag is the
//    inverse of the plain tag with the same side.
//  * cup(a) at position p inserts sum_S x_S (x) xhat_S: plain slot p+1, dual
//    slot p. cap(a) at p pairs dual slot p+1 with plain slot p.

#include "skewhowe/laurent.hpp"
#include "skewhowe/subset.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace skewhowe {

struct Factor {
  int color = 0;
  bool dual = false;
  friend bool operator==(const Factor&, const Factor&) = default;
  friend auto operator<=>(const Factor&, const Factor&) = default;
};

/// Ordered tensor factors, slot 1 first.
struct BoundaryObject {
  int N = 2;
  std::vector<Factor> factors;

  BoundaryObject() = default;
  BoundaryObject(int n, std::vector<Factor> fs);  // validates colours

  /// Plain factors with the given colours (slot 1 first).
  static BoundaryObject plain(int n, const std::vector<int>& colors);

  int size() const { return static_cast<int>(factors.size()); }
  const Factor& slot(int p) const { return factors[static_cast<std::size_t>(p - 1)]; }
  std::string to_string() const;

  friend bool operator==(const BoundaryObject&, const BoundaryObject&) = default;
};

/// One subset per factor, slot 1 first.
using BasisIndex = std::vector<Subset>;

enum class TagSide { Left, Right };

/// Sparse vector over the standard basis of a BoundaryObject.
class TensorVector {
 public:
  using Terms = std::map<BasisIndex, LaurentPoly>;

  TensorVector() = default;
  explicit TensorVector(BoundaryObject space) : space_(std::move(space)) {}

  /// The basis vector at `index` (validated against the space).
  static TensorVector basis(const BoundaryObject& space, const BasisIndex& index);

  const BoundaryObject& space() const { return space_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coefficient(const BasisIndex& index) const;

  /// Adds c * x_index; index must conform to the space.
  void add(const BasisIndex& index, const LaurentPoly& c);
  TensorVector& operator+=(const TensorVector& o);
  TensorVector& operator-=(const TensorVector& o);
  TensorVector scaled(const LaurentPoly& c) const;

  friend bool operator==(const TensorVector&, const TensorVector&) = default;

 private:
  BoundaryObject space_;
  Terms terms_;
};

/// True when the index has one subset of the right size per factor.
bool conforms(const BoundaryObject& space, const BasisIndex& index);
/// Every basis index of the space, in increasing order.
std::vector<BasisIndex> standard_basis(const BoundaryObject& space);

/// |{(i,j) : i in S, j in T, i < j}|.
int ell(Subset S, Subset T);

TensorVector apply_merge(int a, int b, int position, const TensorVector& x);
TensorVector apply_split(int a, int b, int position, const TensorVector& x);
TensorVector apply_tag(int a, TagSide side, int position, const TensorVector& x);
/// Inverse direction of a tag: dual factor of colour N-a back to plain colour a.
TensorVector apply_untag(int a, TagSide side, int position, const TensorVector& x);
TensorVector apply_cup(int a, int position, const TensorVector& x);
TensorVector apply_cap(int a, int position, const TensorVector& x);

/// Sign attached to a tag of the given side on colour a.
int tag_sign(int N, int a, TagSide side);

}  // namespace skewhowe
