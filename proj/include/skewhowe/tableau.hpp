#pragma once

#include "skewhowe/subset.hpp"

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace skewhowe {

/// Rectangular shape (N^l): `rows` rows of length N, entries bounded by m = N*l.
struct Shape {
  int N = 2;
  int rows = 1;

  Shape() = default;
  Shape(int n, int l);  // validates N >= 2, l >= 1, m <= 64

  int columns() const { return N; }
  int entry_bound() const { return N * rows; }
  int cells() const { return N * rows; }

  friend bool operator==(const Shape&, const Shape&) = default;
  friend auto operator<=>(const Shape&, const Shape&) = default;
};

/// gl_m weight (k_1, ..., k_m).
using GlWeight = std::vector<int>;
/// sl_m weight (lambda_1, ..., lambda_{m-1}).
using SlWeight = std::vector<int>;

/// A filling of the l x N rectangle (row-major), entries in 1..m.
///
/// Ordering follows the total order on column-strict tableaux: columns are
/// compared left to right, and a column is greater when its first differing
/// entry is smaller. `a < b` therefore means a precedes b (a is lower).
class Tableau {
 public:
  Tableau() = default;
  /// Throws INVALID-INPUT for wrong dimensions or out-of-range entries.
  Tableau(Shape shape, std::vector<std::vector<int>> rows);

  const Shape& shape() const { return shape_; }
  int at(int row, int col) const { return cells_[static_cast<std::size_t>(row * shape_.N + col)]; }  // 0-based
  void set(int row, int col, int value) { cells_[static_cast<std::size_t>(row * shape_.N + col)] = value; }
  std::vector<std::vector<int>> rows() const;
  /// Column c (0-based), top to bottom.
  std::vector<int> column(int c) const;

  bool is_column_strict() const;
  bool is_semistandard() const;

  std::string to_string() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend std::strong_ordering operator<=>(const Tableau& a, const Tableau& b);

 private:
  Shape shape_;
  std::vector<int> cells_;
};

/// Order on tableaux of one shape: greater means higher in the total order.
std::strong_ordering compare(const Tableau& a, const Tableau& b);

/// Column-strict (optionally semistandard) tableaux of the shape, optionally of
/// a fixed type, sorted strictly descending.
std::vector<Tableau> enumerate_tableaux(const Shape& shape,
                                        const std::optional<GlWeight>& type = std::nullopt,
                                        bool semistandard_only = false);

/// The tableau whose row r is constantly r.
Tableau highest_tableau(const Shape& shape);

/// Entry multiplicities (k_1..k_m).
GlWeight tableau_type(const Tableau& t);

/// nu^i (subset of columns {1..N}) for i = 1..m: j in nu^i iff column j contains i.
std::vector<Subset> tableau_to_nu(const Tableau& t);
/// mu^j (subset of entries {1..m}) for column j = 1..N.
std::vector<Subset> tableau_to_mu(const Tableau& t);
/// Inverses; throw INVALID-INPUT when the data does not describe a tableau of the shape.
Tableau tableau_from_nu(const Shape& shape, const std::vector<Subset>& nu);
Tableau tableau_from_mu(const Shape& shape, const std::vector<Subset>& mu);

/// One step (i, r) of the peeling procedure.
struct PeelStep {
  int index = 0;
  int multiplicity = 0;
  friend bool operator==(const PeelStep&, const PeelStep&) = default;
};
using PeelWord = std::vector<PeelStep>;

/// Peeling word of a semistandard tableau: outermost factor first, so the
/// basis vector is E_{-i_1}^{(r_1)} ... E_{-i_s}^{(r_s)} applied to the
/// highest weight vector. Throws NOT-SEMISTANDARD.
PeelWord peel_LT(const Tableau& t);
/// Same, also returning the chain T = T_1, T_2, ..., T_s = highest tableau.
PeelWord peel_LT(const Tableau& t, std::vector<Tableau>* chain);

/// All gl_m weights k with entries in 0..N summing to m = N*l.
std::vector<GlWeight> level_weights(const Shape& shape);

}  // namespace skewhowe
