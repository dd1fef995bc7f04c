#pragma once

// Endomorphism rings, the trace-form radical, isomorphism testing and
// Fitting-lemma decomposition into indecomposable summands.

#include "arh/rep.hpp"

namespace arh {

struct EndData {
  int end_dim = 0;
  int rad_dim = 0;
  int top_dim = 0;  // end_dim - rad_dim; indecomposable iff 1 (and M != 0)
  HomSpace end;
  std::vector<Morphism> rad_basis;
};

// Radical of End(M) as the radical of the trace form trace(xy), valid for
// p > dim End(M); throws FieldTooSmall otherwise.
EndData end_local_data(const Rep& M);

bool is_indecomposable(const Rep& M);

// For indecomposables: some basis product g*f is invertible iff M and N are
// isomorphic.  For general inputs, compares decompositions.
bool is_isomorphic(const Rep& M, const Rep& N);

// Indecomposable summands with multiplicities, deterministic.
std::vector<std::pair<Rep, int>> decompose(const Rep& M);

}  // namespace arh
