#include "skewhowe/howe.hpp"

#include "skewhowe/error.hpp"

namespace skewhowe {

TableauVector TableauVector::delta(const Tableau& t) {
  TableauVector x(t.shape());
  x.add(t, 1);
  return x;
}

LaurentPoly TableauVector::coefficient(const Tableau& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void TableauVector::add(const Tableau& t, const LaurentPoly& c) {
  if (c.is_zero()) return;
  if (!(t.shape() == shape_)) throw Error(ErrorKind::ShapeMismatch, "tableau of another shape");
  if (!t.is_column_strict()) throw Error(ErrorKind::InvalidInput, "tableau is not column-strict: " + t.to_string());
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TableauVector& TableauVector::operator+=(const TableauVector& o) {
  if (&o == this) return *this += TableauVector(o);
  if (!(o.shape_ == shape_)) throw Error(ErrorKind::ShapeMismatch, "adding tableau vectors of different shapes");
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

TableauVector& TableauVector::operator-=(const TableauVector& o) {
  if (&o == this) return *this -= TableauVector(o);
  if (!(o.shape_ == shape_)) throw Error(ErrorKind::ShapeMismatch, "subtracting tableau vectors of different shapes");
  for (const auto& [t, c] : o.terms_) add(t, -c);
  return *this;
}

TableauVector TableauVector::scaled(const LaurentPoly& c) const {
  TableauVector r(shape_);
  if (c.is_zero()) return r;
  for (const auto& [t, p] : terms_) r.terms_.emplace(t, p * c);
  return r;
}

namespace {

/// Row of `value` in column c, or -1.
int row_of(const Tableau& t, int c, int value) {
  for (int r = 0; r < t.shape().rows; ++r)
    if (t.at(r, c) == value) return r;
  return -1;
}

int count_in_columns(const Tableau& t, int from, int to, int value) {
  int n = 0;
  for (int c = from; c < to; ++c)
    if (row_of(t, c, value) >= 0) ++n;
  return n;
}

}  // namespace

TableauVector act_E(Sign sign, int i, const TableauVector& x) {
  const Shape& sh = x.shape();
  const int m = sh.entry_bound();
  if (i < 1 || i >= m) throw Error(ErrorKind::InvalidInput, "generator index out of range 1..m-1");
  TableauVector out(sh);
  const int from = sign == Sign::Minus ? i : i + 1;
  const int to = sign == Sign::Minus ? i + 1 : i;
  for (const auto& [t, coeff] : x.terms()) {
    for (int c = 0; c < sh.N; ++c) {
      const int r = row_of(t, c, from);
      if (r < 0 || row_of(t, c, to) >= 0) continue;
      Tableau moved = t;
      moved.set(r, c, to);
      int e;
      if (sign == Sign::Minus)
        e = -(count_in_columns(t, c + 1, sh.N, i) - count_in_columns(t, c + 1, sh.N, i + 1));
      else
        e = count_in_columns(t, 0, c, i) - count_in_columns(t, 0, c, i + 1);
      out.add(moved, coeff.shifted(e));
    }
  }
  return out;
}

TableauVector act_divided(Sign sign, int i, int r, const TableauVector& x) {
  if (r < 0) throw Error(ErrorKind::InvalidInput, "negative divided power");
  TableauVector y = x;
  for (int j = 0; j < r; ++j) y = act_E(sign, i, y);
  if (r <= 1) return y;
  const LaurentPoly f = qfactorial(r);
  TableauVector out(x.shape());
  for (const auto& [t, c] : y.terms()) out.add(t, exact_divide(c, f));
  return out;
}

SlWeight sl_weight(const GlWeight& k) {
  SlWeight l;
  for (std::size_t i = 0; i + 1 < k.size(); ++i) l.push_back(k[i] - k[i + 1]);
  return l;
}

SlWeight weight_of(const Tableau& t) { return sl_weight(tableau_type(t)); }

std::optional<GlWeight> phi(int N, const SlWeight& lambda, int d) {
  const int m = static_cast<int>(lambda.size()) + 1;
  // k_i = k_1 - (lambda_1 + ... + lambda_{i-1})
  std::vector<int> offset(static_cast<std::size_t>(m), 0);
  for (int i = 1; i < m; ++i) offset[i] = offset[i - 1] + lambda[i - 1];
  int total = d;
  for (int o : offset) total += o;
  if (total % m != 0) return std::nullopt;
  const int k1 = total / m;
  GlWeight k;
  for (int o : offset) {
    const int ki = k1 - o;
    if (ki < 0 || ki > N) return std::nullopt;
    k.push_back(ki);
  }
  return k;
}

BasisIndex tableau_index(const Tableau& t) { return tableau_to_nu(t); }

TensorVector to_tensor(const TableauVector& x) {
  if (x.is_zero()) throw Error(ErrorKind::InvalidInput, "zero vector has no tensor space");
  const GlWeight k = tableau_type(x.terms().begin()->first);
  TensorVector out(BoundaryObject::plain(x.shape().N, k));
  for (const auto& [t, c] : x.terms()) {
    if (tableau_type(t) != k) throw Error(ErrorKind::ShapeMismatch, "tableau vector mixes types");
    out.add(tableau_index(t), c);
  }
  return out;
}

TableauVector from_tensor(const Shape& shape, const TensorVector& x) {
  TableauVector out(shape);
  for (const auto& [idx, c] : x.terms()) {
    for (const auto& f : x.space().factors)
      if (f.dual) throw Error(ErrorKind::ShapeMismatch, "dual factors have no tableau");
    out.add(tableau_from_nu(shape, idx), c);
  }
  return out;
}

}  // namespace skewhowe
