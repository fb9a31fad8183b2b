#include "skewhowe/webalg.hpp"

namespace skewhowe {

GradedMatrix cartan_matrix(const Shape& shape, const GlWeight& k) {
  return gram_matrix(shape, k, BasisKind::LT);
}

int gorenstein_parameter(int N, const GlWeight& k) { return 2 * d_norm(N, k); }

LaurentPoly total_dimension(const GradedMatrix& c) {
  LaurentPoly d;
  for (const auto& row : c.entries)
    for (const auto& e : row) d += e;
  return d;
}

FrobeniusReport frobenius_check(const GradedMatrix& c, int N, const GlWeight& k) {
  FrobeniusReport r;
  r.total = total_dimension(c);
  r.d = d_norm(N, k);
  r.pass = r.total.bar() == r.total.shifted(-2 * r.d);
  return r;
}

FrobeniusReport frobenius_check(const Shape& shape, const GlWeight& k) {
  return frobenius_check(cartan_matrix(shape, k), shape.N, k);
}

bool bar_transpose_symmetric(const GradedMatrix& c) {
  for (std::size_t i = 0; i < c.entries.size(); ++i)
    for (std::size_t j = 0; j < c.entries.size(); ++j)
      if (c.entries[i][j].bar() != c.entries[j][i]) return false;
  return true;
}

bool transpose_symmetric(const GradedMatrix& c) {
  for (std::size_t i = 0; i < c.entries.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (c.entries[i][j] != c.entries[j][i]) return false;
  return true;
}

bool bar_shift_symmetric(const GradedMatrix& c, int d) {
  for (const auto& row : c.entries)
    for (const auto& e : row)
      if (e.bar() != e.shifted(-2 * d)) return false;
  return true;
}

bool nonnegative_entries(const GradedMatrix& c) {
  for (const auto& row : c.entries)
    for (const auto& e : row)
      if (!e.has_nonnegative_coefficients()) return false;
  return true;
}

}  // namespace skewhowe
