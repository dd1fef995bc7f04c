// Enumeration oracle for the invariant subspace categories S(n).
//
// Over F_2, for every ambient module V = (+) P^{lambda_i} of bounded
// dimension, all T-invariant subspaces U are enumerated by a closure walk of
// the subspace lattice (repeatedly adjoining cyclic submodules k[T]x).  Each
// pair (V, U) is tested for indecomposability; survivors are deduplicated up
// to isomorphism and lifted to F_p, where indecomposability is re-verified
// with the trace-form radical.
//
// Indecomposability over F_2 is decided exactly.  End(V, U) is the
// subalgebra {f in End_{k[T]}(V) : f(U) <= U}; its elements are found by a
// linear solve against the closed-form Toeplitz basis of End_{k[T]}(V).
// A pair splits iff End contains an idempotent besides 0 and 1.  Fitting
// powers of basis elements (and small sums) reject most decomposables
// cheaply; the remaining cases are settled by scanning the algebra, which is
// feasible because surviving endomorphism rings are small.
//
// Three elementary facts prune the walk for dim V >= 2:
//   (B)  soc V <= U + TV, else a summand (P^1, 0) splits off;
//   (C)  soc U <= TV,     else a summand (P^1, P^1) splits off;
//   (E)  if U = (U n B) + (U n B^c) for a block summand B of V, the pair
//        splits along that block decomposition.
// (B) and (C) are exact: the splitting is by a T-linear functional vanishing
// on U + TV resp. TV.  Combining the two also rules out whole Jordan types:
// more parts equal to 1 than parts >= 2 admits no indecomposable pair.

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_set>

#include "arh/catalog.hpp"

namespace arh {

namespace {

constexpr int kMaxDim = 10;  // vectorized endomorphisms must fit 128 bits

using u128 = unsigned __int128;

// Row-reduced F_2 subspace with bitmask rows; pivot = lowest set bit.
struct F2Space {
  std::array<uint16_t, kMaxDim> rows{};
  int k = 0;

  uint16_t reduce(uint16_t x) const {
    for (int i = 0; i < k; ++i) {
      uint16_t pv = rows[i] & (uint16_t)(-rows[i]);
      if (x & pv) x ^= rows[i];
    }
    return x;
  }
  bool contains(uint16_t x) const { return reduce(x) == 0; }
  bool insert(uint16_t x) {
    x = reduce(x);
    if (!x) return false;
    uint16_t pv = x & (uint16_t)(-x);
    for (int i = 0; i < k; ++i)
      if (rows[i] & pv) rows[i] ^= x;
    int pos = k;
    while (pos > 0 && (rows[pos - 1] & (uint16_t)(-rows[pos - 1])) > pv) {
      rows[pos] = rows[pos - 1];
      --pos;
    }
    rows[pos] = x;
    ++k;
    return true;
  }
  bool operator==(const F2Space& o) const { return k == o.k && rows == o.rows; }
};

struct F2SpaceHash {
  size_t operator()(const F2Space& s) const {
    uint64_t h = 0x9e3779b97f4a7c15ull + (uint64_t)s.k;
    for (int i = 0; i < s.k; ++i) h = (h ^ (h >> 29) ^ s.rows[i]) * 0xbf58476d1ce4e5b9ull;
    return (size_t)h;
  }
};

// Ambient module for a Jordan type: T shifts within blocks.
struct Ambient {
  std::vector<int> parts;  // descending
  int dim = 0;
  std::array<int, kMaxDim> nxt{};    // T e_b = e_{nxt[b]}, -1 at block ends
  std::array<int, kMaxDim> start{};  // block start index per block
  uint16_t soc_mask = 0;             // block ends
  uint16_t tv_mask = 0;              // everything except block starts

  explicit Ambient(std::vector<int> p) : parts(std::move(p)) {
    nxt.fill(-1);
    int b = 0;
    for (size_t blk = 0; blk < parts.size(); ++blk) {
      start[blk] = b;
      int part = parts[blk];
      for (int j = 0; j < part; ++j) {
        if (j + 1 < part) nxt[b + j] = b + j + 1;
        if (j > 0) tv_mask |= (uint16_t)(1u << (b + j));
      }
      soc_mask |= (uint16_t)(1u << (b + part - 1));
      b += part;
    }
    dim = b;
  }
  uint16_t apply_t(uint16_t x) const {
    uint16_t y = 0;
    while (x) {
      int b = __builtin_ctz(x);
      x &= (uint16_t)(x - 1);
      if (nxt[b] >= 0) y ^= (uint16_t)(1u << nxt[b]);
    }
    return y;
  }
  uint16_t block_mask(int blk) const {
    uint16_t m = 0;
    for (int j = 0; j < parts[blk]; ++j) m |= (uint16_t)(1u << (start[blk] + j));
    return m;
  }
};

// dim x dim matrix over F_2 stored column-wise as bitmasks.
struct BitMat {
  std::array<uint16_t, kMaxDim> col{};
  int n = 0;

  uint16_t apply(uint16_t x) const {
    uint16_t y = 0;
    while (x) {
      int b = __builtin_ctz(x);
      x &= (uint16_t)(x - 1);
      y ^= col[b];
    }
    return y;
  }
  bool is_zero() const {
    for (int j = 0; j < n; ++j)
      if (col[j]) return false;
    return true;
  }
};

BitMat bm_compose(const BitMat& a, const BitMat& b) {
  BitMat r;
  r.n = a.n;
  for (int j = 0; j < b.n; ++j) r.col[j] = a.apply(b.col[j]);
  return r;
}

BitMat bm_add(const BitMat& a, const BitMat& b) {
  BitMat r;
  r.n = a.n;
  for (int j = 0; j < a.n; ++j) r.col[j] = (uint16_t)(a.col[j] ^ b.col[j]);
  return r;
}

int bm_rank(const BitMat& a) {
  F2Space s;
  for (int j = 0; j < a.n; ++j)
    if (a.col[j]) s.insert(a.col[j]);
  return s.k;
}

// Pack an n x n bitmask matrix into 128 bits (n <= 10 so n*n <= 100).
u128 bm_pack(const BitMat& a) {
  u128 v = 0;
  for (int j = 0; j < a.n; ++j) v |= (u128)(a.col[j] & ((1u << a.n) - 1)) << (a.n * j);
  return v;
}

// Toeplitz basis of End_{k[T]}(V): for blocks s (size a) and t (size b), the
// equivariant maps P^a -> P^b send the top e_1 to a socle-bounded basis
// vector e_j, j > b - a.
std::vector<BitMat> module_end_basis(const Ambient& amb) {
  std::vector<BitMat> out;
  int nb = (int)amb.parts.size();
  for (int sblk = 0; sblk < nb; ++sblk)
    for (int tblk = 0; tblk < nb; ++tblk) {
      int a = amb.parts[sblk], b = amb.parts[tblk];
      for (int j = std::max(b - a, 0) + 1; j <= b; ++j) {
        BitMat m;
        m.n = amb.dim;
        for (int i = 0; i < a; ++i) {
          int target = j + i;  // e^a_{i+1} -> e^b_{j+i}
          if (target <= b) m.col[amb.start[sblk] + i] = (uint16_t)(1u << (amb.start[tblk] + target - 1));
        }
        out.push_back(m);
      }
    }
  return out;
}

// Basis of {f in End_{k[T]}(V) : f(U) <= U} inside the Toeplitz basis span.
std::vector<BitMat> pair_end_basis(const Ambient& amb, const F2Space& u,
                                   const std::vector<BitMat>& end0) {
  int e0 = (int)end0.size();
  check(e0 <= 62, "pair_end_basis: module End too large");
  // Constraint rows over the coefficient vector x: for each U generator and
  // each ambient coordinate, sum_t x_t (f_t(u_j) mod U) = 0.
  std::vector<uint64_t> rows;
  for (int j = 0; j < u.k; ++j) {
    std::array<uint16_t, 64> res{};
    uint16_t seen = 0;
    for (int t = 0; t < e0; ++t) {
      res[t] = u.reduce(end0[t].apply(u.rows[j]));
      seen |= res[t];
    }
    while (seen) {
      int b = __builtin_ctz(seen);
      seen &= (uint16_t)(seen - 1);
      uint64_t row = 0;
      for (int t = 0; t < e0; ++t)
        if (res[t] & (1u << b)) row |= 1ull << t;
      if (row) rows.push_back(row);
    }
  }
  // Nullspace of the row system over F_2.
  std::vector<uint64_t> rref;
  std::vector<int> pivots;
  for (uint64_t r : rows) {
    for (size_t i = 0; i < rref.size(); ++i) {
      uint64_t pv = rref[i] & (~rref[i] + 1);
      if (r & pv) r ^= rref[i];
    }
    if (r) {
      for (size_t i = 0; i < rref.size(); ++i) {
        uint64_t pv = r & (~r + 1);
        if (rref[i] & pv) rref[i] ^= r;
      }
      rref.push_back(r);
    }
  }
  std::vector<bool> is_piv(e0, false);
  for (uint64_t r : rref) is_piv[__builtin_ctzll(r & (~r + 1))] = true;
  // free coordinates parametrize the solution space
  std::sort(rref.begin(), rref.end(),
            [](uint64_t a, uint64_t b) { return (a & (~a + 1)) < (b & (~b + 1)); });
  std::vector<BitMat> basis;
  for (int f = 0; f < e0; ++f) {
    if (is_piv[f]) continue;
    uint64_t x = 1ull << f;
    for (uint64_t r : rref)
      if (r & (1ull << f)) x |= r & (~r + 1);
    BitMat m;
    m.n = amb.dim;
    uint64_t xi = x;
    while (xi) {
      int t = __builtin_ctzll(xi);
      xi &= xi - 1;
      m = bm_add(m, end0[t]);
    }
    basis.push_back(m);
  }
  return basis;
}

// Fitting power of f with exponent 2^ceil(log2 n) >= n.
BitMat bm_fitting_power(const BitMat& f, int n) {
  BitMat p = f;
  for (int e = 1; e < n; e *= 2) p = bm_compose(p, p);
  return p;
}

bool bm_fitting_splits(const BitMat& f, int n) {
  int r = bm_rank(bm_fitting_power(f, n));
  return r > 0 && r < n;
}

// Exact locality test: no idempotent besides 0 and 1.  Requires the span of
// `basis` to be closed under multiplication (it is: an endomorphism algebra).
bool algebra_is_local(const std::vector<BitMat>& basis, const BitMat& id, int dim) {
  int e = (int)basis.size();
  if (e == 1) return true;

  // quick rejects by Fitting splittings of basis elements and small sums
  for (int i = 0; i < e; ++i)
    if (bm_fitting_splits(basis[i], dim)) return false;
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < i; ++j)
      if (bm_fitting_splits(bm_add(basis[i], basis[j]), dim)) return false;

  check(e <= 18, "algebra_is_local: endomorphism ring too large to certify");

  // coordinates via a fully inter-reduced (RREF) vectorized basis with
  // combination tracking: red rows have pairwise distinct pivots and no row
  // contains another row's pivot
  std::vector<u128> red;
  std::vector<uint32_t> combo;
  auto reduce_tracked = [&](u128& v, uint32_t& c) {
    for (size_t r = 0; r < red.size(); ++r) {
      u128 pv = red[r] & (~red[r] + 1);
      if (v & pv) {
        v ^= red[r];
        c ^= combo[r];
      }
    }
  };
  for (int i = 0; i < e; ++i) {
    u128 v = bm_pack(basis[i]);
    uint32_t c = 1u << i;
    reduce_tracked(v, c);
    check(v != 0, "algebra_is_local: basis not independent");
    u128 pv = v & (~v + 1);
    for (size_t r = 0; r < red.size(); ++r)
      if (red[r] & pv) {
        red[r] ^= v;
        combo[r] ^= c;
      }
    red.push_back(v);
    combo.push_back(c);
  }
  auto coords = [&](const BitMat& m) -> uint32_t {
    u128 v = bm_pack(m);
    uint32_t c = 0;
    reduce_tracked(v, c);
    check(v == 0, "algebra_is_local: product escapes the algebra");
    return c;
  };

  std::vector<uint32_t> prod((size_t)e * e);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) prod[(size_t)i * e + j] = coords(bm_compose(basis[i], basis[j]));
  uint32_t id_bits = coords(id);

  for (uint32_t x = 1; x < (1u << e); ++x) {
    if (x == id_bits) continue;
    uint32_t sq = 0;
    uint32_t xi = x;
    while (xi) {
      int i = __builtin_ctz(xi);
      xi &= xi - 1;
      uint32_t xj = x;
      while (xj) {
        int j = __builtin_ctz(xj);
        xj &= xj - 1;
        sq ^= prod[(size_t)i * e + j];
      }
    }
    if (sq == x) return false;  // nontrivial idempotent
  }
  return true;
}

std::vector<F2Space> invariant_subspaces(const Ambient& amb) {
  std::vector<F2Space> all;
  std::unordered_set<F2Space, F2SpaceHash> seen;
  std::deque<F2Space> queue;
  F2Space zero;
  seen.insert(zero);
  queue.push_back(zero);
  all.push_back(zero);
  const uint32_t limit = 1u << amb.dim;
  while (!queue.empty()) {
    F2Space u = queue.front();
    queue.pop_front();
    for (uint32_t x = 1; x < limit; ++x) {
      if (u.contains((uint16_t)x)) continue;
      F2Space w = u;
      uint16_t y = (uint16_t)x;
      while (y && w.insert(y)) y = amb.apply_t(y);
      if (seen.insert(w).second) {
        queue.push_back(w);
        all.push_back(w);
      }
    }
  }
  return all;
}

// Prunes (B), (C), (E); only sound for dim V >= 2.
bool passes_split_prunes(const Ambient& amb, const F2Space& u) {
  // (B) soc V <= U + TV
  F2Space utv = u;
  uint16_t tv = amb.tv_mask;
  while (tv) {
    int b = __builtin_ctz(tv);
    tv &= (uint16_t)(tv - 1);
    utv.insert((uint16_t)(1u << b));
  }
  uint16_t soc = amb.soc_mask;
  while (soc) {
    int b = __builtin_ctz(soc);
    soc &= (uint16_t)(soc - 1);
    if (!utv.contains((uint16_t)(1u << b))) return false;
  }
  // (C) soc U <= TV: every element of U in the socle must avoid block starts
  std::vector<uint16_t> soc_bits;
  uint16_t s = amb.soc_mask;
  while (s) {
    int b = __builtin_ctz(s);
    s &= (uint16_t)(s - 1);
    soc_bits.push_back((uint16_t)(1u << b));
  }
  for (uint32_t mask = 1; mask < (1u << soc_bits.size()); ++mask) {
    uint16_t y = 0;
    for (size_t i = 0; i < soc_bits.size(); ++i)
      if (mask & (1u << i)) y ^= soc_bits[i];
    if ((y & ~amb.tv_mask) && u.contains(y)) return false;
  }
  // (E) split along a block summand
  if (amb.parts.size() >= 2) {
    for (size_t blk = 0; blk < amb.parts.size(); ++blk) {
      uint16_t bm = amb.block_mask((int)blk);
      int in_block = 0, in_complement = 0;
      // dim(U n W) = k - rank(U projected away from W)
      F2Space pb, pc;
      for (int j = 0; j < u.k; ++j) {
        pb.insert((uint16_t)(u.rows[j] & ~bm));
        pc.insert((uint16_t)(u.rows[j] & bm));
      }
      in_block = u.k - pb.k;
      in_complement = u.k - pc.k;
      if (in_block + in_complement == u.k) return false;
    }
  }
  return true;
}

Rep pair_rep(QuiverPtr q, const Fp& F, const Ambient& amb, const F2Space& u) {
  Mat tv(F, amb.dim, amb.dim);
  for (int b = 0; b < amb.dim; ++b)
    if (amb.nxt[b] >= 0) tv(amb.nxt[b], b) = 1 % F.p();
  Mat incl(F, amb.dim, u.k);
  for (int j = 0; j < u.k; ++j)
    for (int b = 0; b < amb.dim; ++b)
      if (u.rows[j] & (1u << b)) incl(b, j) = 1 % F.p();
  Mat tu = solve_exact(incl, tv * incl);  // T restricted to U in U's basis
  return Rep(std::move(q), F, {u.k, amb.dim}, {tu, tv, incl});
}

// Isomorphism of indecomposables over any field: some product of basis
// morphisms is invertible (both End rings are local).
bool indec_iso(const Rep& a, const Rep& b) {
  if (a.dims() != b.dims()) return false;
  HomSpace ab = hom_basis(a, b);
  HomSpace ba = hom_basis(b, a);
  for (const Morphism& f : ab.basis())
    for (const Morphism& g : ba.basis())
      if (is_invertible(compose(g, f))) return true;
  return false;
}

std::string partition_string(const std::vector<int>& parts) {
  if (parts.empty()) return "0";
  std::string s;
  for (int p : parts) s += std::to_string(p);
  return s;
}

void partitions_up_to(int max_part, int bound, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int mp) {
    if (!cur.empty()) out.push_back(cur);
    for (int p = std::min(remaining, mp); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(bound, max_part);
}

struct FoundPair {
  std::vector<int> parts;
  F2Space u;
};

// All indecomposable pairs with dim V <= bound over F_2, deduplicated.
std::vector<FoundPair> enumerate_f2(int n, int bound, QuiverPtr q) {
  const Fp F2(2);
  std::vector<std::vector<int>> lambdas;
  partitions_up_to(n, bound, lambdas);
  std::sort(lambdas.begin(), lambdas.end(), [](const auto& a, const auto& b) {
    int sa = std::accumulate(a.begin(), a.end(), 0);
    int sb = std::accumulate(b.begin(), b.end(), 0);
    if (sa != sb) return sa < sb;
    return a > b;
  });

  std::vector<FoundPair> found;
  for (const auto& lambda : lambdas) {
    Ambient amb(lambda);
    if (amb.dim >= 2) {
      int ones = (int)std::count(lambda.begin(), lambda.end(), 1);
      int big = (int)lambda.size() - ones;
      if (ones > big) continue;  // (B) + (C) rule out every U for this type
    }
    std::vector<BitMat> end0 = module_end_basis(amb);
    BitMat id;
    id.n = amb.dim;
    for (int b = 0; b < amb.dim; ++b) id.col[b] = (uint16_t)(1u << b);

    std::vector<FoundPair> local;
    std::vector<Rep> local_reps;
    for (const F2Space& u : invariant_subspaces(amb)) {
      if (amb.dim >= 2 && !passes_split_prunes(amb, u)) continue;
      std::vector<BitMat> endb = pair_end_basis(amb, u, end0);
      if (!algebra_is_local(endb, id, amb.dim)) continue;
      Rep r = pair_rep(q, F2, amb, u);
      bool dup = false;
      for (const Rep& prev : local_reps)
        if (indec_iso(prev, r)) {
          dup = true;
          break;
        }
      if (!dup) {
        local.push_back(FoundPair{lambda, u});
        local_reps.push_back(std::move(r));
      }
    }
    for (FoundPair& fp : local) found.push_back(std::move(fp));
  }
  return found;
}

// Lift a found pair to F_p: reuse the 0/1 subspace basis; fall back to the
// k[T]-generator span if the basis span fails to be T-stable mod p.
Rep lift_pair(QuiverPtr q, const Fp& F, const FoundPair& fp) {
  Ambient amb(fp.parts);
  Mat tv(F, amb.dim, amb.dim);
  for (int b = 0; b < amb.dim; ++b)
    if (amb.nxt[b] >= 0) tv(amb.nxt[b], b) = 1 % F.p();

  auto build = [&](const Mat& incl) -> Rep {
    Mat tu = solve_exact(incl, tv * incl);
    return Rep(q, F, {incl.cols(), amb.dim}, {tu, tv, incl});
  };

  Mat basis(F, amb.dim, fp.u.k);
  for (int j = 0; j < fp.u.k; ++j)
    for (int b = 0; b < amb.dim; ++b)
      if (fp.u.rows[j] & (1u << b)) basis(b, j) = 1 % F.p();
  try {
    return build(basis);
  } catch (const Error&) {
    // fall through to the generator-based lift
  }
  F2Space tu_span;
  for (int j = 0; j < fp.u.k; ++j) {
    uint16_t y = amb.apply_t(fp.u.rows[j]);
    while (y && tu_span.insert(y)) y = amb.apply_t(y);
  }
  std::vector<uint16_t> gens;
  F2Space w = tu_span;
  for (int j = 0; j < fp.u.k; ++j)
    if (!w.contains(fp.u.rows[j])) {
      gens.push_back(fp.u.rows[j]);
      uint16_t y = fp.u.rows[j];
      while (y && w.insert(y)) y = amb.apply_t(y);
    }
  Mat span(F, amb.dim, 0);
  for (uint16_t g : gens) {
    Mat v(F, amb.dim, 1);
    for (int b = 0; b < amb.dim; ++b)
      if (g & (1u << b)) v(b, 0) = 1 % F.p();
    for (int j = 0; j < amb.parts[0]; ++j) {
      span = Mat::hstack(span, v);
      v = tv * v;
    }
  }
  Subspace up = Subspace::span_of(span);
  if (up.dim() != fp.u.k)
    throw Error(Errc::EnumerationUnstable, "subspace lift changed dimension");
  return build(up.basis());
}

}  // namespace

Catalog subspace_catalog(int n, int ambient_dim_bound, const Fp& F, bool check_stability) {
  if (n < 1 || n > 4)
    throw Error(Errc::InvalidRange, "subspace_catalog supports 1 <= n <= 4");
  if (ambient_dim_bound < n || ambient_dim_bound + 1 > kMaxDim)
    throw Error(Errc::InvalidRange, "subspace_catalog: bound out of range");

  QuiverPtr q = make_subspace_pair(n);
  std::vector<FoundPair> found = enumerate_f2(n, ambient_dim_bound, q);
  if (check_stability) {
    std::vector<FoundPair> next = enumerate_f2(n, ambient_dim_bound + 1, q);
    if (next.size() != found.size())
      throw Error(Errc::EnumerationUnstable,
                  "counts differ between bound " + std::to_string(ambient_dim_bound) + " and " +
                      std::to_string(ambient_dim_bound + 1));
  }

  Catalog cat{q->name(), q, F, {}};
  for (const FoundPair& fp : found) {
    Rep lifted = lift_pair(q, F, fp);
    EndData d = end_local_data(lifted);
    if (d.top_dim != 1)
      throw Error(Errc::EnumerationUnstable, "lifted pair is not indecomposable over F_p");
    // injectivity of the inclusion is part of being an object of S(n)
    check(rank(lifted.map(2)) == lifted.dim(0), "subspace_catalog: arrow not injective");
    std::string label = "(" + partition_string(jordan_type(lifted.map(1), n)) + "|" +
                        partition_string(jordan_type(lifted.map(0), n)) + ")";
    cat.objects.push_back(CatalogObject{label, std::move(lifted), false, false});
  }

  // order by dimension, then label, for reproducible output
  std::stable_sort(cat.objects.begin(), cat.objects.end(),
                   [](const CatalogObject& a, const CatalogObject& b) {
                     if (a.rep.total_dim() != b.rep.total_dim())
                       return a.rep.total_dim() < b.rep.total_dim();
                     if (a.rep.dims() != b.rep.dims()) return a.rep.dims() < b.rep.dims();
                     return a.label < b.label;
                   });
  std::map<std::string, int> seen;
  for (CatalogObject& o : cat.objects) {
    int c = ++seen[o.label];
    if (c > 1) o.label += "#" + std::to_string(c);
  }
  // final pairwise distinctness at F_p
  for (int i = 0; i < cat.size(); ++i)
    for (int j = 0; j < i; ++j)
      if (cat.objects[i].rep.dims() == cat.objects[j].rep.dims() &&
          indec_iso(cat.objects[i].rep, cat.objects[j].rep))
        throw Error(Errc::EnumerationUnstable, "duplicate objects after lifting");

  int p0 = cat.find_iso(picket(q, F, n, n, 0));
  int pn = cat.find_iso(picket(q, F, n, n, n));
  check(p0 >= 0 && pn >= 0, "subspace_catalog: projective-injectives not found");
  cat.objects[p0].projective = cat.objects[p0].injective = true;
  cat.objects[pn].projective = cat.objects[pn].injective = true;
  return cat;
}

}  // namespace arh
