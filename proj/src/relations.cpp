#include "skewhowe/relations.hpp"

#include "skewhowe/error.hpp"

#include <algorithm>
#include <sstream>

namespace skewhowe {

namespace {

std::string labels(std::initializer_list<std::pair<const char*, int>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    os << (first ? "" : " ") << k << "=" << v;
    first = false;
  }
  return os.str();
}

Web make(const BoundaryObject& domain, std::vector<Slice> slices) { return Web{domain, std::move(slices)}; }

/// A ladder term on two uprights, or nothing when the word is annihilated.
void add_ladder(WebCombo& combo, const LaurentPoly& c, int N, const GlWeight& start,
                const std::vector<LadderStep>& word) {
  if (c.is_zero()) return;
  try {
    combo.push_back({c, ladder_from_word(N, start, word)});
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Annihilated) throw;
  }
}

void digons(int N, std::vector<RelationCase>& out) {
  for (int a = 0; a <= N; ++a)
    for (int b = 0; a + b <= N; ++b) {
      const auto dom = BoundaryObject::plain(N, {a + b});
      out.push_back({"paralleldigon", labels({{"a", a}, {"b", b}}), dom,
                     {{1, make(dom, {Slice::split(a, b, 1), Slice::merge(a, b, 1)})}},
                     {{qbinom(a + b, a), make(dom, {})}}});
    }
  for (int a = 0; a <= N; ++a)
    for (int b = 0; a + b <= N; ++b) {
      const auto dom = BoundaryObject::plain(N, {a});
      // b-loop running down on the right of the a strand
      out.push_back({"oppositedigon", labels({{"a", a}, {"b", b}, {"loop", 1}}), dom,
                     {{1, make(dom, {Slice::cup(b, 1), Slice::merge(a, b, 2), Slice::split(a, b, 2),
                                     Slice::cap(b, 1, true)})}},
                     {{qbinom(N - a, b), make(dom, {})}}});
      // and on the left
      out.push_back({"oppositedigon", labels({{"a", a}, {"b", b}, {"loop", 2}}), dom,
                     {{1, make(dom, {Slice::cup(b, 2, true), Slice::merge(b, a, 1), Slice::split(b, a, 1),
                                     Slice::cap(b, 2)})}},
                     {{qbinom(N - a, b), make(dom, {})}}});
    }
}

void associativity(int N, std::vector<RelationCase>& out) {
  for (int a = 0; a <= N; ++a)
    for (int b = 0; a + b <= N; ++b)
      for (int c = 0; a + b + c <= N; ++c) {
        const auto top = BoundaryObject::plain(N, {a + b + c});
        const Web lhs = make(top, {Slice::split(a + b, c, 1), Slice::split(a, b, 2)});
        const Web rhs = make(top, {Slice::split(a, b + c, 1), Slice::split(b, c, 1)});
        out.push_back({"associativity", labels({{"a", a}, {"b", b}, {"c", c}, {"split", 1}}), top,
                       {{1, lhs}}, {{1, rhs}}});
        const auto bottom = BoundaryObject::plain(N, {c, b, a});
        const Web mlhs = make(bottom, {Slice::merge(a, b, 2), Slice::merge(a + b, c, 1)});
        const Web mrhs = make(bottom, {Slice::merge(b, c, 1), Slice::merge(a, b + c, 1)});
        out.push_back({"associativity", labels({{"a", a}, {"b", b}, {"c", c}, {"split", 0}}), bottom,
                       {{1, mlhs}}, {{1, mrhs}}});
      }
}

void squares(int N, std::vector<RelationCase>& out) {
  // Uprights: slot 1 (right) has colour b, slot 2 (left) colour a.
  for (int a = 0; a <= N; ++a)
    for (int b = 0; b <= N; ++b) {
      const GlWeight k{b, a};
      const auto dom = BoundaryObject::plain(N, k);
      for (int s = 0; s <= 3; ++s)
        for (int t = 0; s + t <= 3; ++t)
          for (Sign sg : {Sign::Plus, Sign::Minus}) {
            RelationCase rc{"parallelsquare",
                            labels({{"a", a}, {"b", b}, {"s", s}, {"t", t}, {"plus", sg == Sign::Plus}}), dom, {}, {}};
            add_ladder(rc.lhs, 1, N, k, {{sg, 1, s}, {sg, 1, t}});
            add_ladder(rc.rhs, qbinom(s + t, s), N, k, {{sg, 1, s + t}});
            out.push_back(std::move(rc));
          }
      for (int s = 0; s <= 2; ++s)
        for (int t = 0; t <= 2; ++t) {
          RelationCase rc{"oppositesquare", labels({{"a", a}, {"b", b}, {"s", s}, {"t", t}}), dom, {}, {}};
          add_ladder(rc.lhs, 1, N, k, {{Sign::Plus, 1, s}, {Sign::Minus, 1, t}});
          for (int r = 0; r <= std::min(s, t); ++r)
            add_ladder(rc.rhs, qbinom(a - b + t - s, r), N, k, {{Sign::Minus, 1, t - r}, {Sign::Plus, 1, s - r}});
          out.push_back(std::move(rc));
        }
    }
}

void tags(int N, std::vector<RelationCase>& out) {
  for (int a = 0; a <= N; ++a) {
    const LaurentPoly sign = ((a * (N - a)) % 2 == 0) ? 1 : -1;
    const auto plain = BoundaryObject::plain(N, {a});
    const BoundaryObject dual(N, {{N - a, true}});
    out.push_back({"tagswitch", labels({{"a", a}, {"dual", 0}}), plain,
                   {{1, make(plain, {Slice::tag(a, TagSide::Right, 1)})}},
                   {{sign, make(plain, {Slice::tag(a, TagSide::Left, 1)})}}});
    out.push_back({"tagswitch", labels({{"a", a}, {"dual", 1}}), dual,
                   {{1, make(dual, {Slice::tag(a, TagSide::Right, 1)})}},
                   {{sign, make(dual, {Slice::tag(a, TagSide::Left, 1)})}}});
    for (TagSide side : {TagSide::Left, TagSide::Right})
      out.push_back({"tagswitch", labels({{"a", a}, {"inverse", side == TagSide::Left ? 0 : 1}}), plain,
                     {{1, make(plain, {Slice::tag(a, side, 1), Slice::tag(a, side, 1)})}},
                     {{1, make(plain, {})}}});
  }
}

void zigzags(int N, std::vector<RelationCase>& out) {
  for (int a = 0; a <= N; ++a) {
    const auto dom = BoundaryObject::plain(N, {a});
    out.push_back({"zigzag", labels({{"a", a}, {"mirrored", 0}}), dom,
                   {{1, make(dom, {Slice::cup(a, 2), Slice::cap(a, 1)})}}, {{1, make(dom, {})}}});
    out.push_back({"zigzag", labels({{"a", a}, {"mirrored", 1}}), dom,
                   {{1, make(dom, {Slice::cup(a, 1, true), Slice::cap(a, 2, true)})}}, {{1, make(dom, {})}}});
  }
}

}  // namespace

std::vector<RelationCase> relation_cases(int N) {
  if (N < 2) throw Error(ErrorKind::InvalidInput, "N must be at least 2");
  std::vector<RelationCase> out;
  tags(N, out);
  digons(N, out);
  associativity(N, out);
  squares(N, out);
  zigzags(N, out);
  return out;
}

TensorVector evaluate_combo(const WebCombo& combo, const TensorVector& x) {
  TensorVector acc;
  bool started = false;
  for (const auto& term : combo) {
    TensorVector y = evaluate_dense(term.web, x).scaled(term.coeff);
    if (!started) {
      acc = std::move(y);
      started = true;
    } else {
      acc += y;
    }
  }
  return acc;
}

bool check_relation(const RelationCase& rc, std::string* detail) {
  for (const auto& idx : standard_basis(rc.domain)) {
    const TensorVector x = TensorVector::basis(rc.domain, idx);
    const TensorVector l = evaluate_combo(rc.lhs, x);
    const TensorVector r = evaluate_combo(rc.rhs, x);
    // An empty combination is the zero map; compare coordinates only.
    if (l.terms() != r.terms() || (!l.is_zero() && !r.is_zero() && !(l.space() == r.space()))) {
      if (detail) {
        std::ostringstream os;
        os << "input";
        for (Subset s : idx) {
          os << " {";
          bool first = true;
          for (int e : s.descending()) {
            os << (first ? "" : ",") << e;
            first = false;
          }
          os << "}";
        }
        *detail = os.str();
      }
      return false;
    }
  }
  return true;
}

std::vector<RelationSummary> verify_relations(int N) {
  std::vector<RelationSummary> out;
  for (const auto& rc : relation_cases(N)) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& r) { return r.relation == rc.relation; });
    if (it == out.end()) it = out.insert(out.end(), {rc.relation, 0, 0, {}});
    auto& sum = *it;
    ++sum.cases;
    std::string detail;
    if (!check_relation(rc, &detail)) {
      ++sum.failures;
      sum.failed.push_back(rc.labels + ": " + detail);
    }
  }
  return out;
}

}  // namespace skewhowe
