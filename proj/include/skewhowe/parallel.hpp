#pragma once

// Batched kernels with an OpenMP version and a serial reference. Results are
// written into pre-sized slots, so both produce identical output. The worker
// count comes from OMP_NUM_THREADS.

#include "skewhowe/bases.hpp"
#include "skewhowe/web.hpp"

#include <utility>
#include <vector>

namespace skewhowe {

enum class Exec { Serial, Parallel };
enum class Evaluator { Dense, StateSum };

using WebMatrix = std::vector<std::pair<BasisIndex, TensorVector>>;

/// Image of every standard basis vector of the domain, in basis order.
WebMatrix web_matrix(const Web& web, Evaluator ev, Exec exec);

/// Blocks for every type in level_weights(shape), in that order.
std::vector<BlockBasis> all_blocks(const Shape& shape, Exec exec);

/// LT Gram (Cartan) matrices of the given blocks.
std::vector<GradedMatrix> all_cartan(const std::vector<BlockBasis>& blocks, Exec exec);

}  // namespace skewhowe
