#include "skewhowe/tableau.hpp"

#include "skewhowe/error.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace skewhowe {

std::vector<Subset> subsets_of_size(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  const std::uint64_t limit = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  if (k == 0) return {Subset()};
  // Gosper's hack walks k-subsets in increasing order.
  std::uint64_t s = (std::uint64_t{1} << k) - 1;
  while (s <= limit && s != 0) {
    out.emplace_back(s);
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    if (r == 0) break;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

Shape::Shape(int n, int l) : N(n), rows(l) {
  if (n < 2 || l < 1) throw Error(ErrorKind::InvalidInput, "shape needs N >= 2 and l >= 1");
  if (n * l > 64) throw Error(ErrorKind::InvalidInput, "shape too large (N*l must be <= 64)");
}

Tableau::Tableau(Shape shape, std::vector<std::vector<int>> rows) : shape_(shape) {
  if (static_cast<int>(rows.size()) != shape.rows)
    throw Error(ErrorKind::InvalidInput, "tableau has wrong number of rows");
  cells_.reserve(static_cast<std::size_t>(shape.cells()));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != shape.N)
      throw Error(ErrorKind::InvalidInput, "tableau row has wrong length");
    for (int e : row) {
      if (e < 1 || e > shape.entry_bound())
        throw Error(ErrorKind::InvalidInput, "tableau entry out of range 1..m");
      cells_.push_back(e);
    }
  }
}

std::vector<std::vector<int>> Tableau::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(shape_.rows));
  for (int r = 0; r < shape_.rows; ++r)
    for (int c = 0; c < shape_.N; ++c) out[r].push_back(at(r, c));
  return out;
}

std::vector<int> Tableau::column(int c) const {
  std::vector<int> out;
  for (int r = 0; r < shape_.rows; ++r) out.push_back(at(r, c));
  return out;
}

bool Tableau::is_column_strict() const {
  for (int c = 0; c < shape_.N; ++c)
    for (int r = 1; r < shape_.rows; ++r)
      if (at(r - 1, c) >= at(r, c)) return false;
  return true;
}

bool Tableau::is_semistandard() const {
  if (!is_column_strict()) return false;
  for (int r = 0; r < shape_.rows; ++r)
    for (int c = 1; c < shape_.N; ++c)
      if (at(r, c - 1) > at(r, c)) return false;
  return true;
}

std::string Tableau::to_string() const {
  std::ostringstream os;
  for (int r = 0; r < shape_.rows; ++r) {
    if (r) os << " / ";
    for (int c = 0; c < shape_.N; ++c) os << (c ? " " : "") << at(r, c);
  }
  return os.str();
}

std::strong_ordering operator<=>(const Tableau& a, const Tableau& b) {
  if (auto s = a.shape_ <=> b.shape_; s != 0) return s;
  // Column-major reading; the smaller reading is the greater tableau.
  for (int c = 0; c < a.shape_.N; ++c)
    for (int r = 0; r < a.shape_.rows; ++r)
      if (a.at(r, c) != b.at(r, c)) return b.at(r, c) <=> a.at(r, c);
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const Tableau& a, const Tableau& b) {
  if (!(a.shape() == b.shape())) throw Error(ErrorKind::InvalidInput, "comparing tableaux of different shapes");
  return a <=> b;
}

std::vector<Tableau> enumerate_tableaux(const Shape& shape, const std::optional<GlWeight>& type,
                                        bool semistandard_only) {
  const int m = shape.entry_bound();
  const int l = shape.rows;
  if (type) {
    if (static_cast<int>(type->size()) != m)
      throw Error(ErrorKind::InvalidInput, "type must have m = N*l entries");
    int sum = 0;
    for (int k : *type) {
      if (k < 0) throw Error(ErrorKind::InvalidInput, "type entries must be nonnegative");
      sum += k;
    }
    if (sum != m) throw Error(ErrorKind::InvalidInput, "type entries must sum to m");
  }

  const std::vector<Subset> columns = subsets_of_size(m, l);
  std::vector<Tableau> out;
  std::vector<Subset> chosen;
  std::vector<int> remaining = type ? *type : std::vector<int>{};

  auto fits = [&](Subset col) {
    if (!type) return true;
    for (int e = 1; e <= m; ++e)
      if (col.contains(e) && remaining[e - 1] == 0) return false;
    return true;
  };
  auto take = [&](Subset col, int delta) {
    if (!type) return;
    for (int e = 1; e <= m; ++e)
      if (col.contains(e)) remaining[e - 1] += delta;
  };
  auto row_ok = [&](Subset left, Subset right) {
    // rows weakly increase: i-th smallest of left <= i-th smallest of right
    auto a = left.descending();
    auto b = right.descending();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };

  std::function<void()> rec = [&]() {
    if (static_cast<int>(chosen.size()) == shape.N) {
      std::vector<std::vector<int>> rows(static_cast<std::size_t>(l));
      for (const Subset col : chosen) {
        auto desc = col.descending();
        for (int r = 0; r < l; ++r) rows[r].push_back(desc[static_cast<std::size_t>(l - 1 - r)]);
      }
      out.emplace_back(shape, std::move(rows));
      return;
    }
    for (const Subset col : columns) {
      if (!fits(col)) continue;
      if (semistandard_only && !chosen.empty() && !row_ok(chosen.back(), col)) continue;
      take(col, -1);
      chosen.push_back(col);
      rec();
      chosen.pop_back();
      take(col, +1);
    }
  };
  rec();
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Tableau highest_tableau(const Shape& shape) {
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= shape.rows; ++r) rows.emplace_back(static_cast<std::size_t>(shape.N), r);
  return Tableau(shape, std::move(rows));
}

GlWeight tableau_type(const Tableau& t) {
  GlWeight k(static_cast<std::size_t>(t.shape().entry_bound()), 0);
  for (int r = 0; r < t.shape().rows; ++r)
    for (int c = 0; c < t.shape().N; ++c) ++k[t.at(r, c) - 1];
  return k;
}

std::vector<Subset> tableau_to_nu(const Tableau& t) {
  std::vector<Subset> nu(static_cast<std::size_t>(t.shape().entry_bound()));
  for (int r = 0; r < t.shape().rows; ++r)
    for (int c = 0; c < t.shape().N; ++c) nu[t.at(r, c) - 1].insert(c + 1);
  return nu;
}

std::vector<Subset> tableau_to_mu(const Tableau& t) {
  std::vector<Subset> mu(static_cast<std::size_t>(t.shape().N));
  for (int r = 0; r < t.shape().rows; ++r)
    for (int c = 0; c < t.shape().N; ++c) mu[c].insert(t.at(r, c));
  return mu;
}

Tableau tableau_from_mu(const Shape& shape, const std::vector<Subset>& mu) {
  if (static_cast<int>(mu.size()) != shape.N) throw Error(ErrorKind::InvalidInput, "need one subset per column");
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows));
  for (const Subset col : mu) {
    if (col.size() != shape.rows) throw Error(ErrorKind::InvalidInput, "column subset has wrong size");
    auto desc = col.descending();
    if (desc.front() > shape.entry_bound()) throw Error(ErrorKind::InvalidInput, "entry out of range");
    for (int r = 0; r < shape.rows; ++r) rows[r].push_back(desc[static_cast<std::size_t>(shape.rows - 1 - r)]);
  }
  return Tableau(shape, std::move(rows));
}

Tableau tableau_from_nu(const Shape& shape, const std::vector<Subset>& nu) {
  if (static_cast<int>(nu.size()) != shape.entry_bound())
    throw Error(ErrorKind::InvalidInput, "need one subset per entry value 1..m");
  std::vector<Subset> mu(static_cast<std::size_t>(shape.N));
  for (int i = 1; i <= shape.entry_bound(); ++i) {
    const Subset cols = nu[i - 1];
    for (int j = 1; j <= 64; ++j) {
      if (!cols.contains(j)) continue;
      if (j > shape.N) throw Error(ErrorKind::InvalidInput, "column index out of range");
      mu[j - 1].insert(i);
    }
  }
  return tableau_from_mu(shape, mu);
}

PeelWord peel_LT(const Tableau& t) { return peel_LT(t, nullptr); }

PeelWord peel_LT(const Tableau& t, std::vector<Tableau>* chain) {
  if (!t.is_semistandard()) throw Error(ErrorKind::NotSemistandard, t.to_string());
  const Shape& sh = t.shape();
  const int m = sh.entry_bound();
  PeelWord word;
  Tableau cur = t;
  if (chain) chain->push_back(cur);
  for (;;) {
    int found = 0;
    int count = 0;
    // Search bound is m-1, not l: entries above l+1 must also be peeled.
    for (int i = 1; i <= m - 1 && !found; ++i) {
      const int last_row = std::min(i, sh.rows);
      for (int r = 0; r < last_row; ++r)
        for (int c = 0; c < sh.N; ++c)
          if (cur.at(r, c) == i + 1) ++count;
      if (count > 0) found = i;
    }
    if (!found) break;
    for (int r = 0; r < std::min(found, sh.rows); ++r)
      for (int c = 0; c < sh.N; ++c)
        if (cur.at(r, c) == found + 1) cur.set(r, c, found);
    word.push_back({found, count});
    if (chain) chain->push_back(cur);
  }
  if (!(cur == highest_tableau(sh)))
    throw Error(ErrorKind::InvariantViolation, "peeling did not terminate at the highest tableau");
  return word;
}

std::vector<GlWeight> level_weights(const Shape& shape) {
  const int m = shape.entry_bound();
  std::vector<GlWeight> out;
  GlWeight cur;
  std::function<void(int)> rec = [&](int left) {
    if (static_cast<int>(cur.size()) == m) {
      if (left == 0) out.push_back(cur);
      return;
    }
    const int slots_after = m - static_cast<int>(cur.size()) - 1;
    for (int k = std::min(shape.N, left); k >= 0; --k) {
      if (left - k > slots_after * shape.N) break;
      cur.push_back(k);
      rec(left - k);
      cur.pop_back();
    }
  };
  rec(m);
  return out;
}

}  // namespace skewhowe
