#include "oracles.hpp"
#include "skewhowe/error.hpp"
#include "skewhowe/relations.hpp"
#include "skewhowe/statesum.hpp"
#include "skewhowe/web.hpp"

#include <doctest.h>

#include <random>

using namespace skewhowe;

namespace {

const LaurentPoly v = LaurentPoly::v();

Web random_ladder(std::mt19937_64& rng, int N, int m, int rungs) {
  GlWeight k(static_cast<std::size_t>(m));
  for (auto& c : k) c = static_cast<int>(rng() % static_cast<unsigned>(N + 1));
  std::vector<LadderStep> word;
  GlWeight cur = k;
  for (int r = 0; r < rungs; ++r) {
    const LadderStep st{rng() % 2 ? Sign::Plus : Sign::Minus, 1 + static_cast<int>(rng() % static_cast<unsigned>(m - 1)),
                        1 + static_cast<int>(rng() % 2)};
    try {
      cur = step_weight(N, cur, st);
      word.push_back(st);
    } catch (const Error&) {
    }
  }
  return ladder_from_word(N, k, word);
}

}  // namespace

TEST_CASE("validation names the first bad slice") {
  const Web ok{BoundaryObject::plain(3, {1, 2}), {Slice::merge(2, 1, 1), Slice::split(1, 2, 1)}};
  CHECK(validate(ok) == BoundaryObject::plain(3, {2, 1}));
  const Web bad{BoundaryObject::plain(3, {1, 2}), {Slice::merge(2, 1, 1), Slice::merge(1, 1, 1)}};
  try {
    validate(bad);
    FAIL("expected IllFormedWeb");
  } catch (const IllFormedWeb& e) {
    CHECK(e.slice_index() == 1);
    CHECK(e.kind() == ErrorKind::IllFormed);
  }
  CHECK_THROWS_AS(validate(Web{BoundaryObject::plain(2, {1}), {Slice::split(1, 1, 1)}}), IllFormedWeb);
  CHECK_THROWS_AS(validate(Web{BoundaryObject::plain(2, {1}), {Slice::merge(1, 1, 2)}}), IllFormedWeb);
}

TEST_CASE("ladder bookkeeping") {
  const Web w = ladder_from_word(2, {2, 0}, {{Sign::Minus, 1, 1}});
  CHECK(validate(w) == BoundaryObject::plain(2, {1, 1}));
  CHECK(w.slices.size() == 2);
  CHECK(step_weight(3, {1, 2, 0}, {Sign::Minus, 2, 2}) == GlWeight{1, 0, 2});
  try {
    ladder_from_word(2, {0, 2}, {{Sign::Minus, 1, 1}});
    FAIL("expected ANNIHILATED");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Annihilated);
  }
  // colour-0 uprights stay as factors
  const Web pad = ladder_from_word(2, {2, 0, 0}, {{Sign::Minus, 1, 2}, {Sign::Minus, 2, 1}});
  CHECK(validate(pad).size() == 3);
  CHECK(validate(pad) == BoundaryObject::plain(2, {0, 1, 1}));
}

TEST_CASE("E_{-1} ladder on the highest vector gives the first small example") {
  const Web w = ladder_from_word(2, {2, 0}, {{Sign::Minus, 1, 1}});
  const TensorVector x = web_vector(w);
  CHECK(x.terms().size() == 2);
  CHECK(x.coefficient({Subset{1}, Subset{2}}) == LaurentPoly(1));
  CHECK(x.coefficient({Subset{2}, Subset{1}}) == LaurentPoly::monomial(-1));
}

TEST_CASE("digon on x_{21}") {
  const auto dom = BoundaryObject::plain(2, {2});
  const Web w{dom, {Slice::split(1, 1, 1), Slice::merge(1, 1, 1)}};
  const auto x = TensorVector::basis(dom, {Subset{1, 2}});
  CHECK(evaluate_dense(w, x) == x.scaled(v + LaurentPoly::monomial(-1)));
}

TEST_CASE("reflect") {
  const Web id{BoundaryObject::plain(2, {1}), {}};
  CHECK(reflect(id) == id);
  const Web sp{BoundaryObject::plain(2, {2}), {Slice::split(1, 1, 1)}};
  const Web mg{BoundaryObject::plain(2, {1, 1}), {Slice::merge(1, 1, 1)}};
  CHECK(reflect(sp) == mg);
  std::mt19937_64 rng(21);
  for (int i = 0; i < 30; ++i) {
    const Web w = random_ladder(rng, 3, 4, 4);
    const Web r = reflect(w);
    CHECK(r.domain == validate(w));
    CHECK(validate(r) == w.domain);
    CHECK(reflect(r) == w);
  }
  const Web cups{BoundaryObject::plain(3, {1}),
                 {Slice::cup(2, 1), Slice::tag(1, TagSide::Left, 3), Slice::cap(2, 2)}};
  CHECK(reflect(reflect(cups)) == cups);
  CHECK(reflect(cups).slices[0].kind == SliceKind::Cup);
  CHECK(reflect(cups).slices[0].mirrored);
  CHECK(reflect(cups).slices[1].side == TagSide::Right);
}

TEST_CASE("closed circles evaluate to balanced binomials") {
  for (int N = 2; N <= 4; ++N)
    for (int a = 0; a <= N; ++a) {
      const Web circle{BoundaryObject(N, {}), {Slice::cup(a, 1), Slice::cap(a, 1, true)}};
      const LaurentPoly c = ev_closed(circle);
      CHECK(c == qbinom(N, a));
      CHECK(c.eval_at_one() == oracle::binomial(N, a));
      const Web other{BoundaryObject(N, {}), {Slice::cup(a, 1, true), Slice::cap(a, 1)}};
      CHECK(ev_closed(other) == qbinom(N, a));
    }
}

TEST_CASE("ev_closed, d_norm and web_form examples") {
  const auto top = highest_object(2, 1, 2);
  CHECK(ev_closed(Web{top, {}}) == LaurentPoly(1));
  const Web u = ladder_from_word(2, {2, 0}, {{Sign::Minus, 1, 1}});
  CHECK(ev_closed(compose(u, reflect(u))) == v + LaurentPoly::monomial(-1));
  CHECK(web_form(u, u) == v * v + LaurentPoly(1));
  CHECK(web_form(Web{top, {}}, Web{top, {}}) == LaurentPoly(1));

  CHECK(d_norm(2, {2, 0}) == 0);
  CHECK(d_norm(3, {3, 3, 0, 0, 0, 0}) == 0);
  CHECK(d_norm(2, {1, 1}) == 1);
  CHECK(d_norm(3, {1, 1, 1}) == 3);
  CHECK_THROWS_AS(d_norm(2, {1, 0}), Error);

  CHECK_THROWS_AS(ev_closed(Web{BoundaryObject::plain(2, {1, 1}), {}}), Error);
  const Web other = ladder_from_word(2, {2, 0}, {});
  CHECK_THROWS_AS(web_form(u, other), Error);
}

TEST_CASE("state sums") {
  const auto dom = BoundaryObject::plain(2, {2});
  const Web sp{dom, {Slice::split(1, 1, 1)}};
  const BasisIndex bottom{Subset{1, 2}};
  const auto all = enumerate_states(sp, bottom, {Subset{1}, Subset{2}});
  CHECK(all.size() == 1);
  int count = 0;
  for (const auto& top : standard_basis(validate(sp))) count += static_cast<int>(enumerate_states(sp, bottom, top).size());
  CHECK(count == 2);

  const Web s3{BoundaryObject::plain(3, {3}), {Slice::split(1, 2, 1)}};
  const auto st = enumerate_states(s3, {Subset{1, 2, 3}}, {Subset{2, 3}, Subset{1}});
  REQUIRE(st.size() == 1);
  CHECK(state_weight(s3, st[0]) == LaurentPoly::monomial(-2));

  const Web id{dom, {}};
  const auto x = TensorVector::basis(dom, bottom);
  CHECK(evaluate_statesum(id, x) == x);
}

TEST_CASE("state sum equals dense evaluation on random ladders") {
  std::mt19937_64 rng(99);
  for (int c = 0; c < 40; ++c) {
    const int N = 2 + static_cast<int>(rng() % 2);
    const int m = 2 + static_cast<int>(rng() % 4);
    const Web w = random_ladder(rng, N, m, 4);
    for (const auto& idx : standard_basis(w.domain)) {
      const auto x = TensorVector::basis(w.domain, idx);
      CHECK(evaluate_statesum(w, x) == evaluate_dense(w, x));
    }
  }
}

TEST_CASE("state sum equals dense evaluation on webs with tags, cups and caps") {
  const std::vector<Web> webs = {
      Web{BoundaryObject::plain(3, {1}), {Slice::cup(2, 1), Slice::merge(1, 2, 2), Slice::split(1, 2, 2), Slice::cap(2, 1, true)}},
      Web{BoundaryObject::plain(3, {2}), {Slice::tag(2, TagSide::Right, 1), Slice::tag(2, TagSide::Left, 1)}},
      Web{BoundaryObject::plain(4, {2, 1}), {Slice::cup(1, 1, true), Slice::cap(1, 1)}},
      Web{BoundaryObject::plain(3, {1}), {Slice::cup(1, 2), Slice::cap(1, 1)}},
  };
  for (const auto& w : webs)
    for (const auto& idx : standard_basis(w.domain)) {
      const auto x = TensorVector::basis(w.domain, idx);
      CHECK(evaluate_statesum(w, x) == evaluate_dense(w, x));
    }
}

TEST_CASE("associativity web in both evaluators") {
  const auto top = BoundaryObject::plain(3, {3});
  const Web l{top, {Slice::split(2, 1, 1), Slice::split(1, 1, 2)}};
  const Web r{top, {Slice::split(1, 2, 1), Slice::split(1, 1, 1)}};
  const auto x = TensorVector::basis(top, {Subset{1, 2, 3}});
  CHECK(evaluate_dense(l, x) == evaluate_dense(r, x));
  CHECK(evaluate_statesum(l, x) == evaluate_statesum(r, x));
}

TEST_CASE("relations hold for N = 2 and 3") {
  for (int N = 2; N <= 3; ++N)
    for (const auto& s : verify_relations(N)) {
      INFO("N=" << N << " " << s.relation << (s.failed.empty() ? "" : " first: " + s.failed.front()));
      CHECK(s.cases > 0);
      CHECK(s.failures == 0);
    }
}

TEST_CASE("a wrong coefficient is detected") {
  const auto dom = BoundaryObject::plain(2, {2});
  RelationCase rc{"paralleldigon", "a=1 b=1", dom,
                  {{1, Web{dom, {Slice::split(1, 1, 1), Slice::merge(1, 1, 1)}}}},
                  {{LaurentPoly(2), Web{dom, {}}}}};
  std::string detail;
  CHECK_FALSE(check_relation(rc, &detail));
  CHECK(!detail.empty());
}
