#include "arh/rep.hpp"

#include <numeric>

namespace arh {

Rep::Rep(QuiverPtr q, const Fp& F, std::vector<int> dims, std::vector<Mat> maps, bool validate)
    : q_(std::move(q)), F_(F), dims_(std::move(dims)), maps_(std::move(maps)) {
  check((int)dims_.size() == q_->vertex_count(), "Rep: dims size");
  check((int)maps_.size() == q_->arrow_count(), "Rep: maps size");
  for (int a = 0; a < q_->arrow_count(); ++a) {
    const Arrow& ar = q_->arrow(a);
    check(maps_[a].rows() == dims_[ar.dst] && maps_[a].cols() == dims_[ar.src],
          "Rep: map shape mismatch");
    check(maps_[a].field() == F_, "Rep: map field mismatch");
  }
  if (validate)
    check(satisfies_relations(), "Rep: relations not satisfied");
}

Rep Rep::zero(QuiverPtr q, const Fp& F) {
  std::vector<int> dims(q->vertex_count(), 0);
  std::vector<Mat> maps;
  for (int a = 0; a < q->arrow_count(); ++a) maps.emplace_back(F, 0, 0);
  return Rep(std::move(q), F, std::move(dims), std::move(maps), false);
}

Rep Rep::simple(QuiverPtr q, const Fp& F, int vertex) {
  std::vector<int> dims(q->vertex_count(), 0);
  dims[vertex] = 1;
  std::vector<Mat> maps;
  for (int a = 0; a < q->arrow_count(); ++a) {
    const Arrow& ar = q->arrow(a);
    maps.emplace_back(F, dims[ar.dst], dims[ar.src]);
  }
  return Rep(std::move(q), F, std::move(dims), std::move(maps));
}

int Rep::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

Mat Rep::eval_path(const Path& p) const {
  Mat m = Mat::identity(F_, dims_[p.src]);
  for (int a : p.arrows) m = maps_[a] * m;
  return m;
}

Mat Rep::eval_relation(const Relation& r) const {
  int src = r.terms[0].path.src;
  int dst = q_->path_target(r.terms[0].path);
  Mat acc(F_, dims_[dst], dims_[src]);
  for (const RelTerm& t : r.terms)
    acc = acc + eval_path(t.path).scaled(F_.reduce(t.coeff));
  return acc;
}

bool Rep::satisfies_relations() const {
  for (const Relation& r : q_->relations())
    if (!eval_relation(r).is_zero()) return false;
  return true;
}

bool Morphism::intertwines() const {
  const Quiver& q = *src.quiver();
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (dst.map(a) * comps[ar.src] != comps[ar.dst] * src.map(a)) return false;
  }
  return true;
}

Morphism identity_morphism(const Rep& m) {
  std::vector<Mat> comps;
  for (int v = 0; v < m.quiver()->vertex_count(); ++v)
    comps.push_back(Mat::identity(m.field(), m.dim(v)));
  return Morphism{m, m, std::move(comps)};
}

Morphism zero_morphism(const Rep& src, const Rep& dst) {
  std::vector<Mat> comps;
  for (int v = 0; v < src.quiver()->vertex_count(); ++v)
    comps.emplace_back(src.field(), dst.dim(v), src.dim(v));
  return Morphism{src, dst, std::move(comps)};
}

Morphism compose(const Morphism& g, const Morphism& f) {
  check(g.src == f.dst, "compose: chain mismatch");
  std::vector<Mat> comps;
  for (size_t v = 0; v < f.comps.size(); ++v) comps.push_back(g.comps[v] * f.comps[v]);
  return Morphism{f.src, g.dst, std::move(comps)};
}

Morphism add(const Morphism& f, const Morphism& g) {
  check(f.src == g.src && f.dst == g.dst, "add: shape mismatch");
  std::vector<Mat> comps;
  for (size_t v = 0; v < f.comps.size(); ++v) comps.push_back(f.comps[v] + g.comps[v]);
  return Morphism{f.src, f.dst, std::move(comps)};
}

Morphism scale(const Morphism& f, uint32_t c) {
  std::vector<Mat> comps;
  for (const Mat& m : f.comps) comps.push_back(m.scaled(c));
  return Morphism{f.src, f.dst, std::move(comps)};
}

bool is_invertible(const Morphism& f) {
  for (const Mat& m : f.comps)
    if (!is_invertible(m)) return false;
  return true;
}

HomSpace::HomSpace(const Rep& M, const Rep& N) : src_(M), dst_(N) {
  check(M.quiver() == N.quiver() && M.field() == N.field(), "HomSpace: different quivers");
  const Quiver& q = *M.quiver();
  const Fp F = M.field();
  int nv = q.vertex_count();

  std::vector<int> offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + N.dim(v) * M.dim(v);
  vec_len_ = offset[nv];

  int n_eq = 0;
  for (int a = 0; a < q.arrow_count(); ++a)
    n_eq += N.dim(q.arrow(a).dst) * M.dim(q.arrow(a).src);

  // N_a f_i - f_j M_a = 0 for every arrow a : i -> j.
  Mat sys(F, n_eq, vec_len_);
  int row = 0;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    const Mat& Na = N.map(a);
    const Mat& Ma = M.map(a);
    for (int r = 0; r < N.dim(ar.dst); ++r)
      for (int c = 0; c < M.dim(ar.src); ++c) {
        // coefficient of f_i(s, c): N_a(r, s)
        for (int s = 0; s < N.dim(ar.src); ++s) {
          int col = offset[ar.src] + s * M.dim(ar.src) + c;
          sys(row, col) = F.add(sys(row, col), Na(r, s));
        }
        // coefficient of f_j(r, t): -M_a(t, c)
        for (int t = 0; t < M.dim(ar.dst); ++t) {
          int col = offset[ar.dst] + r * M.dim(ar.dst) + t;
          sys(row, col) = F.sub(sys(row, col), Ma(t, c));
        }
        ++row;
      }
  }
  space_ = nullspace(sys);
  for (int k = 0; k < space_.dim(); ++k)
    basis_.push_back(from_vector(space_.basis().col(k)));
}

Mat HomSpace::vectorize(const Morphism& f) const {
  const Fp F = src_.field();
  Mat v(F, vec_len_, 1);
  int pos = 0;
  for (int u = 0; u < src_.quiver()->vertex_count(); ++u) {
    const Mat& c = f.comps[u];
    for (int r = 0; r < c.rows(); ++r)
      for (int s = 0; s < c.cols(); ++s) v(pos++, 0) = c(r, s);
  }
  return v;
}

Morphism HomSpace::from_vector(const Mat& column) const {
  const Fp F = src_.field();
  std::vector<Mat> comps;
  int pos = 0;
  for (int u = 0; u < src_.quiver()->vertex_count(); ++u) {
    Mat c(F, dst_.dim(u), src_.dim(u));
    for (int r = 0; r < c.rows(); ++r)
      for (int s = 0; s < c.cols(); ++s) c(r, s) = column(pos++, 0);
    comps.push_back(std::move(c));
  }
  return Morphism{src_, dst_, std::move(comps)};
}

Mat HomSpace::coords_of(const Morphism& f) const { return space_.coords_of(vectorize(f)); }

Morphism HomSpace::from_coords(const Mat& coords) const {
  check(coords.rows() == dim() && coords.cols() == 1, "from_coords: bad shape");
  return from_vector(space_.basis() * coords);
}

HomSpace hom_basis(const Rep& M, const Rep& N) { return HomSpace(M, N); }

int hom_dim(const Rep& M, const Rep& N) { return HomSpace(M, N).dim(); }

Rep direct_sum(QuiverPtr q, const Fp& F, const std::vector<Rep>& parts) {
  return direct_sum_with_maps(std::move(q), F, parts).sum;
}

Rep direct_sum(const std::vector<Rep>& parts) {
  check(!parts.empty(), "direct_sum: empty list needs explicit quiver");
  return direct_sum(parts[0].quiver(), parts[0].field(), parts);
}

SumWithMaps direct_sum_with_maps(const std::vector<Rep>& parts) {
  check(!parts.empty(), "direct_sum_with_maps: empty list needs explicit quiver");
  return direct_sum_with_maps(parts[0].quiver(), parts[0].field(), parts);
}

SumWithMaps direct_sum_with_maps(QuiverPtr q, const Fp& F, const std::vector<Rep>& parts) {
  if (parts.empty()) return SumWithMaps{Rep::zero(std::move(q), F), {}, {}};
  int nv = q->vertex_count();
  std::vector<int> dims(nv, 0);
  std::vector<std::vector<int>> off(parts.size(), std::vector<int>(nv, 0));
  for (size_t k = 0; k < parts.size(); ++k) {
    check(parts[k].quiver() == q && parts[k].field() == F, "direct_sum: mixed quivers");
    for (int v = 0; v < nv; ++v) {
      off[k][v] = dims[v];
      dims[v] += parts[k].dim(v);
    }
  }
  std::vector<Mat> maps;
  for (int a = 0; a < q->arrow_count(); ++a) {
    const Arrow& ar = q->arrow(a);
    Mat m(F, dims[ar.dst], dims[ar.src]);
    for (size_t k = 0; k < parts.size(); ++k) {
      const Mat& pa = parts[k].map(a);
      for (int i = 0; i < pa.rows(); ++i)
        for (int j = 0; j < pa.cols(); ++j)
          m(off[k][ar.dst] + i, off[k][ar.src] + j) = pa(i, j);
    }
    maps.push_back(std::move(m));
  }
  SumWithMaps out{Rep(q, F, dims, std::move(maps), false), {}, {}};
  for (size_t k = 0; k < parts.size(); ++k) {
    std::vector<Mat> icomp, pcomp;
    for (int v = 0; v < nv; ++v) {
      Mat inj(F, dims[v], parts[k].dim(v));
      Mat proj(F, parts[k].dim(v), dims[v]);
      for (int i = 0; i < parts[k].dim(v); ++i) {
        inj(off[k][v] + i, i) = 1 % F.p();
        proj(i, off[k][v] + i) = 1 % F.p();
      }
      icomp.push_back(std::move(inj));
      pcomp.push_back(std::move(proj));
    }
    out.inj.push_back(Morphism{parts[k], out.sum, std::move(icomp)});
    out.proj.push_back(Morphism{out.sum, parts[k], std::move(pcomp)});
  }
  return out;
}

SubQuotient restrict_to(const Rep& M, const std::vector<Subspace>& sub) {
  const Quiver& q = *M.quiver();
  const Fp F = M.field();
  std::vector<int> dims;
  for (const Subspace& s : sub) dims.push_back(s.dim());
  std::vector<Mat> maps;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    // M_a basis_src = basis_dst X  (solvable exactly when sub is arrow-stable)
    maps.push_back(solve_exact(sub[ar.dst].basis(), M.map(a) * sub[ar.src].basis()));
  }
  Rep r(M.quiver(), F, std::move(dims), std::move(maps), false);
  std::vector<Mat> icomp;
  for (int v = 0; v < q.vertex_count(); ++v) icomp.push_back(sub[v].basis());
  return SubQuotient{r, Morphism{r, M, std::move(icomp)}};
}

SubQuotient kernel_rep(const Morphism& v) {
  std::vector<Subspace> ker;
  for (size_t u = 0; u < v.comps.size(); ++u) ker.push_back(nullspace(v.comps[u]));
  return restrict_to(v.src, ker);
}

SubQuotient cokernel_rep(const Morphism& u) {
  const Rep& Y = u.dst;
  const Quiver& q = *Y.quiver();
  const Fp F = Y.field();
  std::vector<QuotientData> qd;
  std::vector<int> dims;
  for (int v = 0; v < q.vertex_count(); ++v) {
    qd.push_back(quotient_data(column_space(u.comps[v])));
    dims.push_back(qd.back().projection.rows());
  }
  std::vector<Mat> maps;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    maps.push_back(qd[ar.dst].projection * Y.map(a) * qd[ar.src].section);
  }
  Rep z(Y.quiver(), F, std::move(dims), std::move(maps), false);
  std::vector<Mat> pcomp;
  for (int v = 0; v < q.vertex_count(); ++v) pcomp.push_back(qd[v].projection);
  return SubQuotient{z, Morphism{Y, z, std::move(pcomp)}};
}

}  // namespace arh
