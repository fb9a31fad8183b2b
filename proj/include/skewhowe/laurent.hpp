#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace skewhowe {

using Integer = boost::multiprecision::cpp_int;

/// Exact Laurent polynomial in v with arbitrary-precision integer coefficients.
///
/// Stored as an exponent-sorted map holding only nonzero coefficients, so
/// structural equality is polynomial equality.
class LaurentPoly {
 public:
  using Terms = std::map<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(Integer(c)) {}  // NOLINT: implicit constants read naturally
  LaurentPoly(const Integer& c);                   // NOLINT

  static LaurentPoly monomial(int exponent, const Integer& coeff = 1);
  /// The indeterminate v itself.
  static LaurentPoly v() { return monomial(1); }
  static LaurentPoly from_terms(const std::vector<std::pair<int, Integer>>& terms);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Integer coefficient(int exponent) const;
  int min_exponent() const;  // requires !is_zero()
  int max_exponent() const;  // requires !is_zero()

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;

  /// Adds c * v^e in place.
  void add_term(int exponent, const Integer& coeff);

  /// Multiplication by v^k.
  LaurentPoly shifted(int k) const;

  /// v -> v^{-1}.
  LaurentPoly bar() const;
  bool is_bar_invariant() const { return bar() == *this; }

  /// True when every exponent is < 0 (the zero polynomial qualifies).
  bool in_negative_part() const;
  /// True when every exponent is > 0 (the zero polynomial qualifies).
  bool in_positive_part() const;
  bool has_nonnegative_coefficients() const;

  Integer eval_at_one() const;

  std::string to_string() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  Terms terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

inline LaurentPoly bar(const LaurentPoly& p) { return p.bar(); }

/// Balanced quantum integer [n] = (v^n - v^-n)/(v - v^-1); negative n gives -[|n|].
LaurentPoly qint(int n);
/// [n]! for n >= 0.
LaurentPoly qfactorial(int n);
/// Balanced Gaussian binomial. Zero for k < 0, and for k > n when n >= 0.
/// For n < 0 it is the generic [n][n-1]...[n-k+1]/[k]!.
LaurentPoly qbinom(int n, int k);

/// The unique bar-invariant g with p - g in v^{-1} Z[v^{-1}].
LaurentPoly symmetrize_correction(const LaurentPoly& p);

/// Exact quotient p / q; throws Error(NonDivisible) when q does not divide p.
LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace skewhowe
