#include "skewhowe/laurent.hpp"

#include "skewhowe/error.hpp"

#include <sstream>

namespace skewhowe {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "INVALID-INPUT";
    case ErrorKind::NonDivisible: return "NON-DIVISIBLE";
    case ErrorKind::NotSemistandard: return "NOT-SEMISTANDARD";
    case ErrorKind::ShapeMismatch: return "SHAPE-MISMATCH";
    case ErrorKind::IllFormed: return "ILL-FORMED";
    case ErrorKind::Annihilated: return "ANNIHILATED";
    case ErrorKind::NonIntegral: return "NON-INTEGRAL";
    case ErrorKind::InvariantViolation: return "INVARIANT-VIOLATION";
  }
  return "UNKNOWN";
}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, const Integer& coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, Integer>>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly::min_exponent() const { return terms_.begin()->first; }
int LaurentPoly::max_exponent() const { return terms_.rbegin()->first; }

void LaurentPoly::add_term(int exponent, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (&o == this) return *this += LaurentPoly(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (&o == this) return *this -= LaurentPoly(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

bool LaurentPoly::in_negative_part() const { return is_zero() || max_exponent() < 0; }
bool LaurentPoly::in_positive_part() const { return is_zero() || min_exponent() > 0; }

bool LaurentPoly::has_nonnegative_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

Integer LaurentPoly::eval_at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) r.add_term(ea + eb, ca * cb);
  return r;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly qint(int n) {
  if (n < 0) return -qint(-n);
  LaurentPoly r;
  for (int e = n - 1; e >= 1 - n; e -= 2) r.add_term(e, 1);
  return r;
}

LaurentPoly qfactorial(int n) {
  LaurentPoly r = 1;
  for (int j = 2; j <= n; ++j) r *= qint(j);
  return r;
}

LaurentPoly qbinom(int n, int k) {
  if (k < 0) return {};
  if (n >= 0) {
    if (k > n) return {};
    // Pascal recursion on the balanced form:
    // [n,k] = v^{-k}[n-1,k-1] + v^{n-k}[n-1,k]
    std::vector<LaurentPoly> row{LaurentPoly(1)};
    for (int i = 1; i <= n; ++i) {
      std::vector<LaurentPoly> next(static_cast<std::size_t>(i) + 1);
      for (int j = 0; j <= i; ++j) {
        LaurentPoly val;
        if (j >= 1) val += row[j - 1].shifted(-(i - j));
        if (j <= i - 1) val += row[j].shifted(j);
        next[j] = std::move(val);
      }
      row = std::move(next);
    }
    return row[k];
  }
  // [n,k] = (-1)^k [k-n-1, k] for n < 0
  LaurentPoly r = qbinom(k - n - 1, k);
  return (k % 2 == 0) ? r : -r;
}

LaurentPoly symmetrize_correction(const LaurentPoly& p) {
  LaurentPoly g;
  for (const auto& [e, c] : p.terms()) {
    if (e < 0) continue;
    g.add_term(e, c);
    if (e > 0) g.add_term(-e, c);
  }
  return g;
}

LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw Error(ErrorKind::InvalidInput, "division by the zero polynomial");
  if (p.is_zero()) return {};
  const int lead_q = q.max_exponent();
  const Integer& lead_c = q.terms().rbegin()->second;
  // The quotient's exponents are bounded below by min(p) - min(q).
  const int floor_exp = p.min_exponent() - q.min_exponent();
  LaurentPoly rem = p;
  LaurentPoly quot;
  while (!rem.is_zero()) {
    const int e = rem.max_exponent() - lead_q;
    const Integer& c = rem.terms().rbegin()->second;
    if (e < floor_exp || c % lead_c != 0)
      throw Error(ErrorKind::NonDivisible, p.to_string() + " / " + q.to_string());
    LaurentPoly step = LaurentPoly::monomial(e, c / lead_c);
    quot += step;
    rem -= step * q;
  }
  return quot;
}

}  // namespace skewhowe
