#include "skewhowe/parallel.hpp"

#include "skewhowe/statesum.hpp"

#include <exception>

namespace skewhowe {

namespace {

/// Runs body(i) for i in [0, n); the first exception (by index) is rethrown.
template <class F>
void for_each_index(std::size_t n, Exec exec, F&& body) {
  std::vector<std::exception_ptr> errors(n);
  const long count = static_cast<long>(n);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  } else {
    for (long i = 0; i < count; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

WebMatrix web_matrix(const Web& web, Evaluator ev, Exec exec) {
  validate(web);
  const auto basis = standard_basis(web.domain);
  WebMatrix out(basis.size());
  for_each_index(basis.size(), exec, [&](std::size_t i) {
    const TensorVector x = TensorVector::basis(web.domain, basis[i]);
    out[i] = {basis[i], ev == Evaluator::Dense ? evaluate_dense(web, x) : evaluate_statesum(web, x)};
  });
  return out;
}

std::vector<BlockBasis> all_blocks(const Shape& shape, Exec exec) {
  const auto types = level_weights(shape);
  std::vector<BlockBasis> out(types.size());
  for_each_index(types.size(), exec, [&](std::size_t i) { out[i] = compute_block(shape, types[i]); });
  return out;
}

std::vector<GradedMatrix> all_cartan(const std::vector<BlockBasis>& blocks, Exec exec) {
  std::vector<GradedMatrix> out(blocks.size());
  for_each_index(blocks.size(), exec, [&](std::size_t i) { out[i] = gram_matrix(blocks[i], BasisKind::LT); });
  return out;
}

}  // namespace skewhowe
