#include "arh/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace arh {

int Catalog::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (objects[i].label == label) return i;
  return -1;
}

int Catalog::find_iso(const Rep& r) const {
  for (int i = 0; i < size(); ++i) {
    if (objects[i].rep.dims() != r.dims()) continue;
    if (is_isomorphic(objects[i].rep, r)) return i;
  }
  return -1;
}

std::vector<int> Catalog::projectives() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (objects[i].projective) out.push_back(i);
  return out;
}

std::vector<int> Catalog::injectives() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (objects[i].injective) out.push_back(i);
  return out;
}

// ---- path algebra of a tree quiver ----------------------------------------

namespace {

// Index of a path inside a path list, matching by arrow word.
int path_index(const std::vector<Path>& paths, const Path& p) {
  for (int i = 0; i < (int)paths.size(); ++i)
    if (paths[i].arrows == p.arrows && paths[i].src == p.src) return i;
  return -1;
}

void require_tree(const Quiver& q, const char* who) {
  if (!q.is_tree() || !q.relations().empty())
    throw Error(Errc::BadInput, std::string(who) + ": needs a tree quiver without relations");
}

}  // namespace

Rep proj_rep(QuiverPtr q, const Fp& F, int i) {
  require_tree(*q, "proj_rep");
  int nv = q->vertex_count();
  std::vector<std::vector<Path>> basis(nv);
  std::vector<int> dims(nv);
  for (int j = 0; j < nv; ++j) {
    basis[j] = q->paths_between(i, j);
    dims[j] = (int)basis[j].size();
  }
  std::vector<Mat> maps;
  for (int a = 0; a < q->arrow_count(); ++a) {
    const Arrow& ar = q->arrow(a);
    Mat m(F, dims[ar.dst], dims[ar.src]);
    for (int c = 0; c < dims[ar.src]; ++c) {
      Path ext = basis[ar.src][c];
      ext.arrows.push_back(a);
      int r = path_index(basis[ar.dst], ext);
      check(r >= 0, "proj_rep: concatenated path missing");
      m(r, c) = 1 % F.p();
    }
    maps.push_back(std::move(m));
  }
  return Rep(q, F, std::move(dims), std::move(maps));
}

Rep inj_rep(QuiverPtr q, const Fp& F, int i) {
  require_tree(*q, "inj_rep");
  int nv = q->vertex_count();
  std::vector<std::vector<Path>> basis(nv);  // paths j ~> i; I(i)_j is its dual
  std::vector<int> dims(nv);
  for (int j = 0; j < nv; ++j) {
    basis[j] = q->paths_between(j, i);
    dims[j] = (int)basis[j].size();
  }
  std::vector<Mat> maps;
  for (int a = 0; a < q->arrow_count(); ++a) {
    const Arrow& ar = q->arrow(a);
    // dual of precomposition by a : paths(dst ~> i) -> paths(src ~> i)
    Mat pre(F, dims[ar.src], dims[ar.dst]);
    for (int c = 0; c < dims[ar.dst]; ++c) {
      Path ext{ar.src, {a}};
      ext.arrows.insert(ext.arrows.end(), basis[ar.dst][c].arrows.begin(),
                        basis[ar.dst][c].arrows.end());
      int r = path_index(basis[ar.src], ext);
      if (r >= 0) pre(r, c) = 1 % F.p();
    }
    maps.push_back(pre.transpose());
  }
  return Rep(q, F, std::move(dims), std::move(maps));
}

Morphism proj_map(QuiverPtr q, const Fp& F, const Path& pi) {
  require_tree(*q, "proj_map");
  int i = pi.src;
  int j = q->path_target(pi);
  Rep pj = proj_rep(q, F, j);
  Rep pi_rep = proj_rep(q, F, i);
  int nv = q->vertex_count();
  std::vector<Mat> comps;
  for (int l = 0; l < nv; ++l) {
    std::vector<Path> bj = q->paths_between(j, l);
    std::vector<Path> bi = q->paths_between(i, l);
    Mat m(F, (int)bi.size(), (int)bj.size());
    for (int c = 0; c < (int)bj.size(); ++c) {
      Path cat = pi;
      cat.arrows.insert(cat.arrows.end(), bj[c].arrows.begin(), bj[c].arrows.end());
      int r = path_index(bi, cat);
      check(r >= 0, "proj_map: composite path missing");
      m(r, c) = 1 % F.p();
    }
    comps.push_back(std::move(m));
  }
  return Morphism{pj, pi_rep, std::move(comps)};
}

Morphism inj_map(QuiverPtr q, const Fp& F, const Path& pi) {
  require_tree(*q, "inj_map");
  int i = pi.src;
  int j = q->path_target(pi);
  Rep ij = inj_rep(q, F, j);
  Rep ii = inj_rep(q, F, i);
  int nv = q->vertex_count();
  std::vector<Mat> comps;
  for (int l = 0; l < nv; ++l) {
    std::vector<Path> bi = q->paths_between(l, i);  // I(i)_l is the dual of this
    std::vector<Path> bj = q->paths_between(l, j);
    // postcomposition with pi : paths(l ~> i) -> paths(l ~> j); dualize
    Mat post(F, (int)bj.size(), (int)bi.size());
    for (int c = 0; c < (int)bi.size(); ++c) {
      Path cat = bi[c];
      cat.arrows.insert(cat.arrows.end(), pi.arrows.begin(), pi.arrows.end());
      int r = path_index(bj, cat);
      if (r >= 0) post(r, c) = 1 % F.p();
    }
    comps.push_back(post.transpose());
  }
  return Morphism{ij, ii, std::move(comps)};
}

SubQuotient quotient_by_path(QuiverPtr q, const Fp& F, const Path& pi) {
  return cokernel_rep(proj_map(q, F, pi));
}

// ---- Dynkin catalogs via Tits roots and reflection functors ----------------

namespace {

int64_t tits_form(const Quiver& q, const std::vector<int>& d) {
  int64_t v = 0;
  for (int x : d) v += (int64_t)x * x;
  for (const Arrow& a : q.arrows()) v -= (int64_t)d[a.src] * d[a.dst];
  return v;
}

std::vector<std::vector<int>> positive_roots_impl(const Quiver& q, int bound) {
  int n = q.vertex_count();
  std::vector<std::vector<int>> roots;
  std::vector<int> d(n, 0);
  while (true) {
    int64_t val = tits_form(q, d);
    bool zero = std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
    if (!zero && val <= 0)
      throw Error(Errc::NotRepresentationFinite, "Tits form not positive on " + q.name());
    if (val == 1) {
      if (*std::max_element(d.begin(), d.end()) >= bound)
        throw Error(Errc::NotRepresentationFinite,
                    "root search hit the coordinate bound on " + q.name());
      roots.push_back(d);
    }
    int k = 0;
    while (k < n && d[k] == bound) d[k++] = 0;
    if (k == n) break;
    ++d[k];
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    int sa = std::accumulate(a.begin(), a.end(), 0);
    int sb = std::accumulate(b.begin(), b.end(), 0);
    if (sa != sb) return sa < sb;
    return a < b;
  });
  return roots;
}

struct Orientation {
  std::vector<std::pair<int, int>> arr;  // (src, dst) per arrow
  bool is_sink(int v) const {
    for (const auto& [s, t] : arr)
      if (s == v) return false;
    return true;
  }
  void flip_at(int v) {
    for (auto& [s, t] : arr)
      if (s == v || t == v) std::swap(s, t);
  }
};

// Weyl reflection of a dimension vector at v; orientation independent.
std::vector<int> reflect_dim(const Orientation& o, const std::vector<int>& d, int v) {
  std::vector<int> r = d;
  int s = 0;
  for (const auto& [a, b] : o.arr) {
    if (a == v) s += d[b];
    if (b == v) s += d[a];
  }
  r[v] = s - d[v];
  return r;
}

// Reverse topological order: each vertex is a sink once the previous ones
// have been reflected, and a full sweep restores the orientation.
std::vector<int> admissible_order(const Quiver& q) {
  int n = q.vertex_count();
  std::vector<int> outdeg(n, 0), order;
  std::vector<std::vector<int>> preds(n);
  for (const Arrow& a : q.arrows()) {
    ++outdeg[a.src];
    preds[a.dst].push_back(a.src);
  }
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!done[v] && outdeg[v] == 0) {
        pick = v;
        break;
      }
    check(pick >= 0, "admissible_order: oriented cycle");
    done[pick] = true;
    order.push_back(pick);
    for (int w : preds[pick])
      if (!done[w]) --outdeg[w];
  }
  return order;
}

// Representation data with map shapes following an explicit orientation,
// used while unwinding reflections (the quiver's own orientation only holds
// again at the very end).
struct RawRep {
  std::vector<int> dims;
  std::vector<Mat> maps;  // maps[a] : dims[src] -> dims[dst] per orientation
};

// Inverse reflection functor at v, a source of `before`: replaces M_v by the
// cokernel of M_v -> (sum over arrows leaving v) and reverses those arrows.
RawRep reflect_source(const Fp& F, const RawRep& m, const Orientation& before, int v) {
  std::vector<int> out_arrows;
  for (int a = 0; a < (int)before.arr.size(); ++a)
    if (before.arr[a].first == v) out_arrows.push_back(a);

  int total = 0;
  for (int a : out_arrows) total += m.dims[before.arr[a].second];
  Mat stack(F, total, m.dims[v]);
  int off = 0;
  for (int a : out_arrows) {
    const Mat& ma = m.maps[a];
    for (int i = 0; i < ma.rows(); ++i)
      for (int j = 0; j < ma.cols(); ++j) stack(off + i, j) = ma(i, j);
    off += ma.rows();
  }
  QuotientData qd = quotient_data(column_space(stack));

  RawRep out{m.dims, m.maps};
  out.dims[v] = qd.projection.rows();
  off = 0;
  for (int a : out_arrows) {
    int w = before.arr[a].second;
    out.maps[a] = qd.projection.block(0, off, out.dims[v], m.dims[w]);
    off += m.dims[w];
  }
  return out;
}

}  // namespace

Catalog dynkin_catalog(QuiverPtr q, const Fp& F, int coord_bound) {
  require_tree(*q, "dynkin_catalog");
  std::vector<std::vector<int>> roots = positive_roots_impl(*q, coord_bound);
  const std::vector<int> order = admissible_order(*q);
  int n = q->vertex_count();

  Catalog cat{q->name(), q, F, {}};
  for (const std::vector<int>& root : roots) {
    Orientation orient;
    for (const Arrow& a : q->arrows()) orient.arr.push_back({a.src, a.dst});
    std::vector<int> d = root;
    std::vector<int> seq;                      // vertices reflected, in order
    std::vector<Orientation> orients{orient};  // orientation before each step
    int simple_at = -1;
    for (int step = 0; step <= 64 * n; ++step) {
      if (std::accumulate(d.begin(), d.end(), 0) == 1) {
        simple_at = (int)(std::find(d.begin(), d.end(), 1) - d.begin());
        break;
      }
      int v = order[step % n];
      check(orient.is_sink(v), "dynkin_catalog: admissible order broken");
      d = reflect_dim(orient, d, v);
      check(std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; }),
            "dynkin_catalog: reflected root went negative");
      seq.push_back(v);
      orient.flip_at(v);
      orients.push_back(orient);
    }
    check(simple_at >= 0, "dynkin_catalog: reflection sweep did not terminate");

    // Build the simple over the final orientation, then unwind with inverse
    // reflection functors back to the original orientation.
    RawRep m;
    m.dims.assign(n, 0);
    m.dims[simple_at] = 1;
    for (int a = 0; a < q->arrow_count(); ++a) {
      const auto& [s, t] = orient.arr[a];
      m.maps.emplace_back(F, m.dims[t], m.dims[s]);
    }
    for (int k = (int)seq.size() - 1; k >= 0; --k)
      m = reflect_source(F, m, orients[k + 1], seq[k]);
    Rep final_rep(q, F, m.dims, m.maps);
    check(final_rep.dims() == root, "dynkin_catalog: dims after unwinding differ from root");

    std::string label;
    for (int x : final_rep.dims()) label += std::to_string(x);
    cat.objects.push_back(CatalogObject{label, final_rep, false, false});
  }

  for (int i = 0; i < n; ++i) {
    int pi = cat.find_iso(proj_rep(q, F, i));
    int ii = cat.find_iso(inj_rep(q, F, i));
    check(pi >= 0 && ii >= 0, "dynkin_catalog: projective/injective not matched");
    cat.objects[pi].projective = true;
    cat.objects[ii].injective = true;
  }
  return cat;
}

// ---- nilpotent operators ----------------------------------------------------

Mat jordan_block(const Fp& F, int l) {
  Mat m(F, l, l);
  for (int i = 0; i + 1 < l; ++i) m(i + 1, i) = 1 % F.p();
  return m;
}

Catalog nilpotent_catalog(int n, const Fp& F) {
  if (n < 1) throw Error(Errc::InvalidRange, "nilpotent_catalog: n >= 1");
  QuiverPtr q = make_nilpotent(n);
  Catalog cat{q->name(), q, F, {}};
  for (int l = 1; l <= n; ++l) {
    Rep r(q, F, {l}, {jordan_block(F, l)});
    cat.objects.push_back(CatalogObject{"P^" + std::to_string(l), std::move(r), l == n, l == n});
  }
  return cat;
}

Rep picket(QuiverPtr sub_quiver, const Fp& F, int n, int m, int l) {
  if (!(0 <= l && l <= m && m <= n))
    throw Error(Errc::InvalidPicket, "picket needs 0 <= l <= m <= n");
  // soc^l P^m = im T^{m-l} = span{e_{m-l+1}, ..., e_m}
  Mat incl(F, m, l);
  for (int j = 0; j < l; ++j) incl(m - l + j, j) = 1 % F.p();
  return Rep(sub_quiver, F, {l, m}, {jordan_block(F, l), jordan_block(F, m), incl});
}

std::vector<int> jordan_multiplicities(const Mat& T, int n) {
  check(T.rows() == T.cols(), "jordan_multiplicities: square operator expected");
  std::vector<int> r(n + 2, 0);
  r[0] = T.rows();
  Mat pw = Mat::identity(T.field(), T.rows());
  for (int j = 1; j <= n + 1; ++j) {
    pw = pw * T;
    r[j] = rank(pw);
  }
  if (r[n] != 0) throw Error(Errc::BadInput, "jordan_multiplicities: T^n != 0");
  std::vector<int> mu(n, 0);
  for (int m = 1; m <= n; ++m) mu[m - 1] = r[m - 1] - 2 * r[m] + r[m + 1];
  return mu;
}

std::vector<int> jordan_type(const Mat& T, int n) {
  std::vector<int> mu = jordan_multiplicities(T, n);
  std::vector<int> parts;
  for (int m = n; m >= 1; --m)
    for (int c = 0; c < mu[m - 1]; ++c) parts.push_back(m);
  return parts;
}

// ---- registry ----------------------------------------------------------------

Catalog catalog_by_name(const std::string& name, const Fp& F, int dim_bound) {
  if (name == "e6") return dynkin_catalog(make_e6(), F, dim_bound);
  if (name == "a2") return dynkin_catalog(make_a2(), F, dim_bound);
  if (name == "a3") return dynkin_catalog(make_a3(), F, dim_bound);
  try {
    if (name.rfind("nilp:", 0) == 0) return nilpotent_catalog(std::stoi(name.substr(5)), F);
    if (name.rfind("sub:", 0) == 0)
      return subspace_catalog(std::stoi(name.substr(4)), dim_bound, F);
  } catch (const std::invalid_argument&) {
    throw Error(Errc::BadInput, "malformed category: " + name);
  }
  throw Error(Errc::BadInput, "unknown category: " + name);
}

}  // namespace arh
