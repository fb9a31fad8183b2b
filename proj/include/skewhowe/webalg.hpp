#pragma once

// Graded dimensions of the web algebras H(k, N).

#include "skewhowe/bases.hpp"

namespace skewhowe {

/// Entry (S,T) is the graded dimension of the S,T piece: <A^S, A^T>.
GradedMatrix cartan_matrix(const Shape& shape, const GlWeight& k);

/// 2 d(k).
int gorenstein_parameter(int N, const GlWeight& k);

/// Sum of all entries.
LaurentPoly total_dimension(const GradedMatrix& c);

struct FrobeniusReport {
  LaurentPoly total;  // D(v)
  int d = 0;
  bool pass = false;  // D(v^-1) == v^{-2d} D(v)
};

FrobeniusReport frobenius_check(const GradedMatrix& c, int N, const GlWeight& k);
FrobeniusReport frobenius_check(const Shape& shape, const GlWeight& k);

/// bar(C_ST) == C_TS for all S,T.
bool bar_transpose_symmetric(const GradedMatrix& c);
/// C_ST == C_TS for all S,T.
bool transpose_symmetric(const GradedMatrix& c);
/// bar(C_ST) == v^{-2d} C_ST for all S,T.
bool bar_shift_symmetric(const GradedMatrix& c, int d);
/// All entries in N[v, v^-1].
bool nonnegative_entries(const GradedMatrix& c);

}  // namespace skewhowe
