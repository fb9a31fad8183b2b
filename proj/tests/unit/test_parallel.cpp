#include "skewhowe/parallel.hpp"

#include <doctest.h>

#include <random>

using namespace skewhowe;

TEST_CASE("web matrix: serial and parallel agree for both evaluators") {
  const Web w = ladder_from_word(3, {2, 1, 2, 1}, {{Sign::Minus, 2, 1}, {Sign::Minus, 1, 1}, {Sign::Minus, 3, 1}});
  const auto ref = web_matrix(w, Evaluator::Dense, Exec::Serial);
  CHECK(ref.size() == standard_basis(w.domain).size());
  CHECK(web_matrix(w, Evaluator::Dense, Exec::Parallel) == ref);
  CHECK(web_matrix(w, Evaluator::StateSum, Exec::Parallel) == ref);
  CHECK(web_matrix(w, Evaluator::StateSum, Exec::Serial) == ref);
}

TEST_CASE("blocks and cartan matrices: serial and parallel agree") {
  const Shape sh(2, 3);
  const auto serial = all_blocks(sh, Exec::Serial);
  const auto par = all_blocks(sh, Exec::Parallel);
  REQUIRE(serial.size() == par.size());
  CHECK(serial.size() == level_weights(sh).size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].labels == par[i].labels);
    for (std::size_t j = 0; j < serial[i].dual.size(); ++j) {
      CHECK(serial[i].dual[j].expansion == par[i].dual[j].expansion);
      CHECK(serial[i].dual[j].beta == par[i].dual[j].beta);
    }
  }
  CHECK(all_cartan(serial, Exec::Serial) == all_cartan(par, Exec::Parallel));
}

TEST_CASE("errors inside parallel loops propagate") {
  // A cap on a plain-only boundary fails for every basis vector.
  const Web bad{BoundaryObject::plain(2, {1, 1}), {Slice::cap(1, 1)}};
  CHECK_THROWS(web_matrix(bad, Evaluator::Dense, Exec::Parallel));
  CHECK_THROWS(web_matrix(bad, Evaluator::Dense, Exec::Serial));
}
