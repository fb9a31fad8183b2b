#pragma once

// The U_v(sl_m) action on tableaux and its transport to tensors.

#include "skewhowe/tableau.hpp"
#include "skewhowe/tensor.hpp"
#include "skewhowe/web.hpp"

#include <map>
#include <optional>

namespace skewhowe {

/// Sparse combination of column-strict tableaux of one shape.
class TableauVector {
 public:
  using Terms = std::map<Tableau, LaurentPoly>;  // ascending, lowest tableau first

  TableauVector() = default;
  explicit TableauVector(Shape shape) : shape_(shape) {}
  static TableauVector delta(const Tableau& t);

  const Shape& shape() const { return shape_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coefficient(const Tableau& t) const;

  /// Adds c * x^t; t must be column-strict of the shape.
  void add(const Tableau& t, const LaurentPoly& c);
  TableauVector& operator+=(const TableauVector& o);
  TableauVector& operator-=(const TableauVector& o);
  TableauVector scaled(const LaurentPoly& c) const;

  friend bool operator==(const TableauVector&, const TableauVector&) = default;

 private:
  Shape shape_;
  Terms terms_;
};

/// E_{+i} or E_{-i} in tableaux coordinates.
TableauVector act_E(Sign sign, int i, const TableauVector& x);
/// E_{+-i}^{(r)} = E^r / [r]!.
TableauVector act_divided(Sign sign, int i, int r, const TableauVector& x);

/// lambda_i = k_i - k_{i+1}.
SlWeight sl_weight(const GlWeight& k);
SlWeight weight_of(const Tableau& t);

/// The gl weight with entries in 0..N, differences lambda and sum d, if any.
std::optional<GlWeight> phi(int N, const SlWeight& lambda, int d);

/// x^T -> x_{nu^m} (x) ... (x) x_{nu^1}: slot i carries nu^i.
BasisIndex tableau_index(const Tableau& t);
/// Requires every term to have the same type; that type gives the space.
TensorVector to_tensor(const TableauVector& x);
TableauVector from_tensor(const Shape& shape, const TensorVector& x);

}  // namespace skewhowe
