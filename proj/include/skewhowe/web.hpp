#pragma once

#include "skewhowe/laurent.hpp"
#include "skewhowe/tableau.hpp"
#include "skewhowe/tensor.hpp"

#include <string>
#include <vector>

namespace skewhowe {

enum class SliceKind { Identity, Merge, Split, Cup, Cap, Tag };

std::string_view to_string(SliceKind k);

/// One generator placed at a slot. Positions follow the tensor-module slot
/// conventions (slot 1 rightmost). For a tag, `a` is always the colour of the
/// plain side: on a plain factor it applies D_a, on a dual factor of colour
/// N-a it applies the inverse.
///
/// A mirrored cup creates xhat (x) x (dual slot p+1, plain slot p) and a
/// mirrored cap pairs plain slot p+1 with dual slot p. Both are built from the
/// standard cup/cap of colour N-a conjugated by left tags, which makes them
/// intertwiners; they are what reflection turns standard caps/cups into.
struct Slice {
  SliceKind kind = SliceKind::Identity;
  int position = 1;
  int a = 0;
  int b = 0;
  TagSide side = TagSide::Left;
  bool mirrored = false;

  static Slice identity() { return {}; }
  static Slice merge(int a, int b, int pos) { return {SliceKind::Merge, pos, a, b}; }
  static Slice split(int a, int b, int pos) { return {SliceKind::Split, pos, a, b}; }
  static Slice cup(int a, int pos, bool mirrored = false) {
    return {SliceKind::Cup, pos, a, 0, TagSide::Left, mirrored};
  }
  static Slice cap(int a, int pos, bool mirrored = false) {
    return {SliceKind::Cap, pos, a, 0, TagSide::Left, mirrored};
  }
  static Slice tag(int a, TagSide side, int pos) { return {SliceKind::Tag, pos, a, 0, side}; }

  friend bool operator==(const Slice&, const Slice&) = default;
};

/// Slices applied bottom to top starting from `domain`.
struct Web {
  BoundaryObject domain;
  std::vector<Slice> slices;

  friend bool operator==(const Web&, const Web&) = default;
};

/// Boundary after one slice; throws SHAPE-MISMATCH when it does not fit.
BoundaryObject apply_slice(const BoundaryObject& obj, const Slice& s);

/// Codomain of the web, or IllFormedWeb naming the first bad slice.
BoundaryObject validate(const Web& web);

/// Web doing `first` then `second` (second stacked on top).
Web compose(const Web& first, const Web& second);

enum class Sign { Minus, Plus };

/// E_{+i}^{(a)} (Plus) or E_{-i}^{(a)} (Minus); i is 1-based upright index.
struct LadderStep {
  Sign sign = Sign::Minus;
  int index = 1;
  int multiplicity = 1;
  friend bool operator==(const LadderStep&, const LadderStep&) = default;
};

/// Ladder on m uprights for a divided-power word, applied in list order
/// (first step is the bottom rung). Colour-0 uprights stay as factors.
/// Throws ANNIHILATED when an intermediate colour leaves 0..N.
Web ladder_from_word(int N, const GlWeight& start, const std::vector<LadderStep>& word);

/// The slices of a single rung E_{+-i}^{(a)} on the given upright colours.
std::vector<Slice> rung_slices(int N, const GlWeight& colors, const LadderStep& step);

/// Gl weight reached after the step, or ANNIHILATED.
GlWeight step_weight(int N, const GlWeight& colors, const LadderStep& step);

/// Slice-by-slice composition of the elementary intertwiners.
TensorVector apply_slice(const Slice& s, const TensorVector& x);
TensorVector evaluate_dense(const Web& web, const TensorVector& x);

/// Mirror image in the horizontal axis with orientations reversed.
Web reflect(const Web& web);

/// The object (N^l) padded with colour-0 uprights to m factors: slots 1..l
/// carry colour N.
BoundaryObject highest_object(int N, int l, int m);

/// Coefficient of a closed web (endomorphism of (N^l) plus colour-0 padding).
LaurentPoly ev_closed(const Web& web);

/// d(k) = (N(N-1)l - sum k_i(k_i-1)) / 2 with l = sum(k)/N.
int d_norm(int N, const GlWeight& k);

/// <u, w> = v^{d(k)} ev(u* w) for webs from the highest object to k.
LaurentPoly web_form(const Web& u, const Web& w);

/// Tensor expansion of a web with domain highest_object: the image of the
/// unique basis vector.
TensorVector web_vector(const Web& web);

}  // namespace skewhowe
