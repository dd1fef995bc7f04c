#pragma once

// Finite dimensional representations of a quiver with relations over F_p,
// morphisms (intertwiners), Hom spaces with canonical bases, direct sums,
// kernels and cokernels.  All values are immutable after construction and
// every operation is a pure function of its arguments.

#include <vector>

#include "arh/fp.hpp"
#include "arh/quiver.hpp"

namespace arh {

class Rep {
public:
  Rep() = default;
  // maps[a] has shape dims[arrow.dst] x dims[arrow.src]; relations are
  // checked unless validate is false.
  Rep(QuiverPtr q, const Fp& F, std::vector<int> dims, std::vector<Mat> maps,
      bool validate = true);
  static Rep zero(QuiverPtr q, const Fp& F);
  static Rep simple(QuiverPtr q, const Fp& F, int vertex);

  const QuiverPtr& quiver() const { return q_; }
  const Fp& field() const { return F_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim(int v) const { return dims_[v]; }
  const Mat& map(int arrow) const { return maps_[arrow]; }
  const std::vector<Mat>& maps() const { return maps_; }
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  Mat eval_path(const Path& p) const;          // M_pi, applied right to left
  Mat eval_relation(const Relation& r) const;  // must be zero for valid reps
  bool satisfies_relations() const;

  bool operator==(const Rep& o) const {
    return q_ == o.q_ && dims_ == o.dims_ && maps_ == o.maps_;
  }

private:
  QuiverPtr q_;
  Fp F_;
  std::vector<int> dims_;
  std::vector<Mat> maps_;
};

struct Morphism {
  Rep src, dst;
  std::vector<Mat> comps;  // comps[v] : src.dim(v) -> dst.dim(v)

  bool intertwines() const;  // dst.map(a) * comps[i] == comps[j] * src.map(a)
};

Morphism identity_morphism(const Rep& m);
Morphism zero_morphism(const Rep& src, const Rep& dst);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f
Morphism add(const Morphism& f, const Morphism& g);
Morphism scale(const Morphism& f, uint32_t c);
bool is_invertible(const Morphism& f);

// Canonical basis of Hom(M, N): the reduced-echelon nullspace of the
// stacked intertwining system.  Unknowns are ordered by vertex, then
// row-major within each component.
class HomSpace {
public:
  HomSpace() = default;
  HomSpace(const Rep& M, const Rep& N);

  int dim() const { return space_.dim(); }
  const Rep& src() const { return src_; }
  const Rep& dst() const { return dst_; }
  const std::vector<Morphism>& basis() const { return basis_; }
  Mat vectorize(const Morphism& f) const;        // column of length vec_len
  Morphism from_vector(const Mat& column) const;
  Mat coords_of(const Morphism& f) const;        // asserts membership
  Morphism from_coords(const Mat& coords) const;
  int vec_len() const { return vec_len_; }
  const Subspace& space() const { return space_; }

private:
  Rep src_, dst_;
  Subspace space_;
  std::vector<Morphism> basis_;
  int vec_len_ = 0;
};

HomSpace hom_basis(const Rep& M, const Rep& N);
int hom_dim(const Rep& M, const Rep& N);

Rep direct_sum(QuiverPtr q, const Fp& F, const std::vector<Rep>& parts);
Rep direct_sum(const std::vector<Rep>& parts);  // parts must be non-empty
struct SumWithMaps {
  Rep sum;
  std::vector<Morphism> inj;   // part -> sum
  std::vector<Morphism> proj;  // sum -> part
};
SumWithMaps direct_sum_with_maps(QuiverPtr q, const Fp& F, const std::vector<Rep>& parts);
SumWithMaps direct_sum_with_maps(const std::vector<Rep>& parts);

// Kernel of v with its inclusion, and cokernel of u with its projection.
struct SubQuotient {
  Rep rep;
  Morphism map;  // kernel: rep -> Y inclusion; cokernel: Y -> rep projection
};
SubQuotient kernel_rep(const Morphism& v);
SubQuotient cokernel_rep(const Morphism& u);

// Representation on arrow-stable subspaces, with its inclusion.
SubQuotient restrict_to(const Rep& M, const std::vector<Subspace>& sub);

}  // namespace arh
