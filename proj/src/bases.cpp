#include "skewhowe/bases.hpp"

#include "skewhowe/error.hpp"

#include <algorithm>

namespace skewhowe {

std::vector<LadderStep> lt_ladder_word(const PeelWord& word) {
  std::vector<LadderStep> steps;
  for (auto it = word.rbegin(); it != word.rend(); ++it) steps.push_back({Sign::Minus, it->index, it->multiplicity});
  return steps;
}

LTBasisElement lt_vector(const Tableau& t) {
  LTBasisElement el{t, peel_LT(t), TableauVector(t.shape())};
  TableauVector x = TableauVector::delta(highest_tableau(t.shape()));
  for (const auto& step : lt_ladder_word(el.word)) x = act_divided(step.sign, step.index, step.multiplicity, x);
  if (x.coefficient(t) != LaurentPoly(1))
    throw Error(ErrorKind::InvariantViolation, "A^T does not have coefficient 1 at " + t.to_string());
  for (const auto& [tau, c] : x.terms()) {
    if (tau > t) throw Error(ErrorKind::InvariantViolation, "A^T has a term above its tableau: " + tau.to_string());
    if (!c.has_nonnegative_coefficients())
      throw Error(ErrorKind::InvariantViolation, "A^T has a negative coefficient at " + tau.to_string());
  }
  el.expansion = std::move(x);
  return el;
}

Web lt_web(const Tableau& t) {
  const Shape& sh = t.shape();
  return ladder_from_word(sh.N, tableau_type(highest_tableau(sh)), lt_ladder_word(peel_LT(t)));
}

NegExpReport check_negative_exponent(const TableauVector& x, const Tableau& leading) {
  NegExpReport rep;
  const LaurentPoly lead = x.coefficient(leading);
  if (lead != LaurentPoly(1)) {
    rep.pass = false;
    rep.violations.emplace_back(leading, lead);
  }
  for (const auto& [tau, c] : x.terms()) {
    if (tau == leading || c.in_negative_part()) continue;
    rep.pass = false;
    rep.violations.emplace_back(tau, c);
  }
  return rep;
}

BlockBasis compute_block(const Shape& shape, const GlWeight& type) {
  BlockBasis b{shape, type, enumerate_tableaux(shape, type, true), {}, {}};
  for (const auto& t : b.labels) b.lt.push_back(lt_vector(t));
  for (std::size_t j = 0; j < b.labels.size(); ++j) {
    DualCanonicalElement el{b.labels[j], b.lt[j].expansion, {}};
    for (std::size_t s = j + 1; s < b.labels.size(); ++s) {
      const LaurentPoly c = el.expansion.coefficient(b.labels[s]);
      if (c.in_negative_part()) continue;
      const LaurentPoly g = symmetrize_correction(c);
      el.expansion -= b.lt[s].expansion.scaled(g);
      el.beta.emplace(b.labels[s], -g);
    }
    const NegExpReport rep = check_negative_exponent(el.expansion, el.tableau);
    if (!rep.pass)
      throw Error(ErrorKind::InvariantViolation, "negative exponent property fails for b at " + el.tableau.to_string() +
                                                     " (coefficient at " + rep.violations.front().first.to_string() +
                                                     " is " + rep.violations.front().second.to_string() + ")");
    b.dual.push_back(std::move(el));
  }
  return b;
}

DualCanonicalElement dual_canonical(const Tableau& t) {
  if (!t.is_semistandard()) throw Error(ErrorKind::NotSemistandard, t.to_string());
  const BlockBasis b = compute_block(t.shape(), tableau_type(t));
  for (std::size_t j = 0; j < b.labels.size(); ++j)
    if (b.labels[j] == t) return b.dual[j];
  throw Error(ErrorKind::InvariantViolation, "tableau missing from its own block");
}

LaurentPoly tensor_form(const TableauVector& x, const TableauVector& y) {
  LaurentPoly sum;
  for (const auto& [t, c] : x.terms()) {
    auto it = y.terms().find(t);
    if (it != y.terms().end()) sum += c * it->second;
  }
  return sum.bar();
}

GradedMatrix gram_matrix(const Shape& shape, const GlWeight& type, BasisKind kind) {
  return gram_matrix(compute_block(shape, type), kind);
}

GradedMatrix gram_matrix(const BlockBasis& block, BasisKind kind) {
  const std::size_t n = block.labels.size();
  std::vector<Web> webs;
  for (const auto& t : block.labels) webs.push_back(lt_web(t));
  // LT form by web evaluation.
  std::vector<std::vector<LaurentPoly>> web_lt(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) web_lt[i][j] = web_form(webs[i], webs[j]);

  GradedMatrix g{block.labels, std::vector<std::vector<LaurentPoly>>(n, std::vector<LaurentPoly>(n))};
  // Coefficients of each basis vector in the LT basis (identity for LT).
  std::vector<std::vector<LaurentPoly>> coeff(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    coeff[i][i] = 1;
    if (kind == BasisKind::DualCanonical)
      for (const auto& [s, beta] : block.dual[i].beta) {
        const auto pos = std::find(block.labels.begin(), block.labels.end(), s) - block.labels.begin();
        coeff[i][static_cast<std::size_t>(pos)] = beta;
      }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const TableauVector& xi = kind == BasisKind::LT ? block.lt[i].expansion : block.dual[i].expansion;
      const TableauVector& xj = kind == BasisKind::LT ? block.lt[j].expansion : block.dual[j].expansion;
      const LaurentPoly from_tensors = tensor_form(xi, xj);
      LaurentPoly from_webs;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
          if (!coeff[i][p].is_zero() && !coeff[j][q].is_zero())
            from_webs += bar(coeff[i][p]) * bar(coeff[j][q]) * web_lt[p][q];
      if (from_tensors != from_webs)
        throw Error(ErrorKind::InvariantViolation, "Gram entry (" + block.labels[i].to_string() + ", " +
                                                       block.labels[j].to_string() + "): tensors give " +
                                                       from_tensors.to_string() + ", webs give " +
                                                       from_webs.to_string());
      g.entries[i][j] = from_tensors;
    }
  return g;
}

}  // namespace skewhowe
