#include "arh/decompose.hpp"

#include <string>

namespace arh {

namespace {

uint32_t trace_of(const Morphism& f) {
  const Fp F = f.src.field();
  uint32_t t = 0;
  for (const Mat& c : f.comps)
    for (int i = 0; i < c.rows() && i < c.cols(); ++i) t = F.add(t, c(i, i));
  return t;
}

}  // namespace

EndData end_local_data(const Rep& M) {
  EndData d;
  d.end = hom_basis(M, M);
  d.end_dim = d.end.dim();
  const Fp F = M.field();
  if (F.p() <= (uint32_t)d.end_dim)
    throw Error(Errc::FieldTooSmall,
                "trace-form radical needs p > dim End = " + std::to_string(d.end_dim));
  // Gram matrix of (x, y) -> trace(xy) on the End basis.
  Mat gram(F, d.end_dim, d.end_dim);
  for (int i = 0; i < d.end_dim; ++i)
    for (int j = 0; j <= i; ++j) {
      uint32_t t = trace_of(compose(d.end.basis()[i], d.end.basis()[j]));
      gram(i, j) = t;
      gram(j, i) = t;
    }
  Subspace radc = nullspace(gram);
  d.rad_dim = radc.dim();
  d.top_dim = d.end_dim - d.rad_dim;
  for (int k = 0; k < d.rad_dim; ++k)
    d.rad_basis.push_back(d.end.from_coords(radc.basis().col(k)));
  return d;
}

bool is_indecomposable(const Rep& M) {
  if (M.is_zero()) return false;
  return end_local_data(M).top_dim == 1;
}

namespace {

bool indec_isomorphic(const Rep& M, const Rep& N) {
  if (M.dims() != N.dims()) return false;
  HomSpace mn = hom_basis(M, N);
  HomSpace nm = hom_basis(N, M);
  for (const Morphism& f : mn.basis())
    for (const Morphism& g : nm.basis())
      if (is_invertible(compose(g, f))) return true;
  return false;
}

// Splitting along im(x^N) + ker(x^N) if the Fitting projection is proper.
bool try_fitting_split(const Rep& M, const Morphism& x, Rep& part1, Rep& part2) {
  int n = M.total_dim();
  Morphism pw = x;
  // Square until the exponent is >= total dimension; Fitting has stabilized.
  for (int e = 1; e < n; e *= 2) pw = compose(pw, pw);
  std::vector<Subspace> im, ker;
  int dim_im = 0;
  for (int v = 0; v < M.quiver()->vertex_count(); ++v) {
    im.push_back(column_space(pw.comps[v]));
    ker.push_back(nullspace(pw.comps[v]));
    dim_im += im.back().dim();
  }
  if (dim_im == 0 || dim_im == n) return false;
  part1 = restrict_to(M, im).rep;
  part2 = restrict_to(M, ker).rep;
  return true;
}

void decompose_into(const Rep& M, std::vector<Rep>& out) {
  if (M.is_zero()) return;
  EndData d = end_local_data(M);
  if (d.top_dim == 1) {
    out.push_back(M);
    return;
  }
  Rep a, b;
  for (const Morphism& e : d.end.basis())
    if (try_fitting_split(M, e, a, b)) {
      decompose_into(a, out);
      decompose_into(b, out);
      return;
    }
  for (int i = 0; i < d.end_dim; ++i)
    for (int j = 0; j < i; ++j)
      if (try_fitting_split(M, add(d.end.basis()[i], d.end.basis()[j]), a, b)) {
        decompose_into(a, out);
        decompose_into(b, out);
        return;
      }
  throw Error(Errc::DecompositionStuck, "no splitting endomorphism found with top_dim > 1");
}

}  // namespace

std::vector<std::pair<Rep, int>> decompose(const Rep& M) {
  std::vector<Rep> factors;
  decompose_into(M, factors);
  std::vector<std::pair<Rep, int>> grouped;
  for (const Rep& f : factors) {
    bool found = false;
    for (auto& [rep, mult] : grouped)
      if (indec_isomorphic(rep, f)) {
        ++mult;
        found = true;
        break;
      }
    if (!found) grouped.emplace_back(f, 1);
  }
  return grouped;
}

bool is_isomorphic(const Rep& M, const Rep& N) {
  if (M.quiver() != N.quiver()) return false;
  if (M.dims() != N.dims()) return false;
  if (M.is_zero()) return true;
  EndData dm = end_local_data(M);
  if (dm.top_dim == 1 && end_local_data(N).top_dim == 1) return indec_isomorphic(M, N);
  auto fm = decompose(M);
  auto fn = decompose(N);
  if (fm.size() != fn.size()) return false;
  std::vector<bool> used(fn.size(), false);
  for (const auto& [rep, mult] : fm) {
    bool matched = false;
    for (size_t j = 0; j < fn.size(); ++j) {
      if (used[j] || fn[j].second != mult) continue;
      if (indec_isomorphic(rep, fn[j].first)) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace arh
