#include "skewhowe/tensor.hpp"

#include "skewhowe/error.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace skewhowe {

BoundaryObject::BoundaryObject(int n, std::vector<Factor> fs) : N(n), factors(std::move(fs)) {
  if (n < 2 || n > 64) throw Error(ErrorKind::InvalidInput, "N must lie in 2..64");
  for (const auto& f : factors)
    if (f.color < 0 || f.color > N) throw Error(ErrorKind::InvalidInput, "factor colour out of 0..N");
}

BoundaryObject BoundaryObject::plain(int n, const std::vector<int>& colors) {
  std::vector<Factor> fs;
  for (int c : colors) fs.push_back({c, false});
  return BoundaryObject(n, std::move(fs));
}

std::string BoundaryObject::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < factors.size(); ++i)
    os << (i ? "," : "") << factors[i].color << (factors[i].dual ? "-" : "+");
  os << "]";
  return os.str();
}

bool conforms(const BoundaryObject& space, const BasisIndex& index) {
  if (index.size() != space.factors.size()) return false;
  const Subset full = Subset::range(1, space.N);
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (index[i].size() != space.factors[i].color) return false;
    if (!index[i].minus(full).empty()) return false;
  }
  return true;
}

std::vector<BasisIndex> standard_basis(const BoundaryObject& space) {
  std::vector<BasisIndex> out;
  BasisIndex cur(space.factors.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == space.factors.size()) {
      out.push_back(cur);
      return;
    }
    for (Subset s : subsets_of_size(space.N, space.factors[i].color)) {
      cur[i] = s;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

TensorVector TensorVector::basis(const BoundaryObject& space, const BasisIndex& index) {
  TensorVector x(space);
  x.add(index, 1);
  return x;
}

LaurentPoly TensorVector::coefficient(const BasisIndex& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void TensorVector::add(const BasisIndex& index, const LaurentPoly& c) {
  if (c.is_zero()) return;
  if (!conforms(space_, index)) throw Error(ErrorKind::ShapeMismatch, "basis index does not fit " + space_.to_string());
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
  if (&o == this) return *this += TensorVector(o);
  if (!(o.space_ == space_)) throw Error(ErrorKind::ShapeMismatch, "adding vectors of different spaces");
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
  if (&o == this) return *this -= TensorVector(o);
  if (!(o.space_ == space_)) throw Error(ErrorKind::ShapeMismatch, "subtracting vectors of different spaces");
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

TensorVector TensorVector::scaled(const LaurentPoly& c) const {
  TensorVector r(space_);
  if (c.is_zero()) return r;
  for (const auto& [k, p] : terms_) r.terms_.emplace(k, p * c);
  return r;
}

int ell(Subset S, Subset T) {
  int count = 0;
  for (int i = 1; i <= 64; ++i) {
    if (!S.contains(i)) continue;
    for (int j = i + 1; j <= 64; ++j)
      if (T.contains(j)) ++count;
  }
  return count;
}

int tag_sign(int N, int a, TagSide side) {
  if (side == TagSide::Left) return 1;
  return ((a * (N - a)) % 2 == 0) ? 1 : -1;
}

namespace {

void require_slot(const BoundaryObject& obj, int position, int span, const char* op) {
  if (position < 1 || position + span - 1 > obj.size())
    throw Error(ErrorKind::ShapeMismatch, std::string(op) + ": position out of range for " + obj.to_string());
}

/// Replaces the `span` slots starting at `position` by `replacement` (slot order).
BoundaryObject splice(const BoundaryObject& obj, int position, int span, const std::vector<Factor>& replacement) {
  std::vector<Factor> fs(obj.factors.begin(), obj.factors.begin() + (position - 1));
  fs.insert(fs.end(), replacement.begin(), replacement.end());
  fs.insert(fs.end(), obj.factors.begin() + (position - 1 + span), obj.factors.end());
  return BoundaryObject(obj.N, std::move(fs));
}

BasisIndex splice(const BasisIndex& idx, int position, int span, const std::vector<Subset>& replacement) {
  BasisIndex out(idx.begin(), idx.begin() + (position - 1));
  out.insert(out.end(), replacement.begin(), replacement.end());
  out.insert(out.end(), idx.begin() + (position - 1 + span), idx.end());
  return out;
}

}  // namespace

TensorVector apply_merge(int a, int b, int position, const TensorVector& x) {
  const BoundaryObject& obj = x.space();
  require_slot(obj, position, 2, "merge");
  const Factor right = obj.slot(position);
  const Factor left = obj.slot(position + 1);
  if (left.dual || right.dual || left.color != a || right.color != b || a + b > obj.N)
    throw Error(ErrorKind::ShapeMismatch, "merge(" + std::to_string(a) + "," + std::to_string(b) +
                                              ") does not fit " + obj.to_string());
  TensorVector out(splice(obj, position, 2, {{a + b, false}}));
  for (const auto& [idx, c] : x.terms()) {
    const Subset T = idx[position - 1];
    const Subset S = idx[position];
    if (!S.disjoint(T)) continue;
    out.add(splice(idx, position, 2, {S | T}), c.shifted(ell(T, S)));
  }
  return out;
}

TensorVector apply_split(int a, int b, int position, const TensorVector& x) {
  const BoundaryObject& obj = x.space();
  require_slot(obj, position, 1, "split");
  const Factor f = obj.slot(position);
  if (f.dual || f.color != a + b || a < 0 || b < 0)
    throw Error(ErrorKind::ShapeMismatch, "split(" + std::to_string(a) + "," + std::to_string(b) +
                                              ") does not fit " + obj.to_string());
  TensorVector out(splice(obj, position, 1, {{b, false}, {a, false}}));
  for (const auto& [idx, c] : x.terms()) {
    const Subset S = idx[position - 1];
    for (Subset T : subsets_of_size(obj.N, a)) {
      if (!T.minus(S).empty()) continue;
      const Subset rest = S.minus(T);
      out.add(splice(idx, position, 1, {rest, T}), c.shifted(-ell(T, rest)));
    }
  }
  return out;
}

TensorVector apply_tag(int a, TagSide side, int position, const TensorVector& x) {
  const BoundaryObject& obj = x.space();
  require_slot(obj, position, 1, "tag");
  const Factor f = obj.slot(position);
  if (f.dual) return apply_untag(a, side, position, x);
  if (f.color != a) throw Error(ErrorKind::ShapeMismatch, "tag colour does not fit " + obj.to_string());
  const int N = obj.N;
  const int sign = tag_sign(N, a, side);
  TensorVector out(splice(obj, position, 1, {{N - a, true}}));
  for (const auto& [idx, c] : x.terms()) {
    const Subset S = idx[position - 1];
    const Subset Sc = S.complement(N);
    out.add(splice(idx, position, 1, {Sc}), c.shifted(ell(Sc, S)) * LaurentPoly(sign));
  }
  return out;
}

TensorVector apply_untag(int a, TagSide side, int position, const TensorVector& x) {
  const BoundaryObject& obj = x.space();
  require_slot(obj, position, 1, "tag");
  const Factor f = obj.slot(position);
  const int N = obj.N;
  if (!f.dual || f.color != N - a)
    throw Error(ErrorKind::ShapeMismatch, "inverse tag colour does not fit " + obj.to_string());
  const int sign = tag_sign(N, a, side);
  TensorVector out(splice(obj, position, 1, {{a, false}}));
  for (const auto& [idx, c] : x.terms()) {
    const Subset T = idx[position - 1];  // xhat_T with T = S^c
    const Subset S = T.complement(N);
    out.add(splice(idx, position, 1, {S}), c.shifted(-ell(T, S)) * LaurentPoly(sign));
  }
  return out;
}

TensorVector apply_cup(int a, int position, const TensorVector& x) {
  const BoundaryObject& obj = x.space();
  if (position < 1 || position > obj.size() + 1 || a < 0 || a > obj.N)
    throw Error(ErrorKind::ShapeMismatch, "cup does not fit " + obj.to_string());
  TensorVector out(splice(obj, position, 0, {{a, true}, {a, false}}));
  const auto choices = subsets_of_size(obj.N, a);
  for (const auto& [idx, c] : x.terms())
    for (Subset S : choices) out.add(splice(idx, position, 0, {S, S}), c);
  return out;
}

TensorVector apply_cap(int a, int position, const TensorVector& x) {
  const BoundaryObject& obj = x.space();
  require_slot(obj, position, 2, "cap");
  const Factor right = obj.slot(position);
  const Factor left = obj.slot(position + 1);
  if (!left.dual || right.dual || left.color != a || right.color != a)
    throw Error(ErrorKind::ShapeMismatch, "cap(" + std::to_string(a) + ") does not fit " + obj.to_string());
  TensorVector out(splice(obj, position, 2, {}));
  for (const auto& [idx, c] : x.terms())
    if (idx[position - 1] == idx[position]) out.add(splice(idx, position, 2, {}), c);
  return out;
}

}  // namespace skewhowe
