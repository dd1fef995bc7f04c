#pragma once

// Concrete category providers: Dynkin path algebras, nilpotent operators
// N(n), and invariant subspace pairs S(n).  Each catalog lists one chosen
// representative per isomorphism class of indecomposables, with canonical
// labels and projective/injective designations.

#include <string>

#include "arh/decompose.hpp"
#include "arh/rep.hpp"

namespace arh {

struct CatalogObject {
  std::string label;
  Rep rep;
  bool projective = false;
  bool injective = false;
};

struct Catalog {
  std::string name;
  QuiverPtr quiver;
  Fp F;
  std::vector<CatalogObject> objects;

  int size() const { return (int)objects.size(); }
  int index_of(const std::string& label) const;  // -1 if absent
  // Index of the catalog object isomorphic to r, or -1.  Prefilters by dims.
  int find_iso(const Rep& r) const;
  std::vector<int> projectives() const;
  std::vector<int> injectives() const;
};

// ---- path algebra of a tree quiver ----------------------------------------

// P(i): basis at vertex j = paths i ~> j, arrow acting by concatenation.
Rep proj_rep(QuiverPtr q, const Fp& F, int i);
// I(i): basis at vertex j = dual of paths j ~> i.
Rep inj_rep(QuiverPtr q, const Fp& F, int i);
// For a path pi : i ~> j, the canonical maps P(pi): P(j) -> P(i) (compose
// with pi on the left) and its injective counterpart I(j) -> I(i).
Morphism proj_map(QuiverPtr q, const Fp& F, const Path& pi);
Morphism inj_map(QuiverPtr q, const Fp& F, const Path& pi);
// P(i)/(pi) together with the projection P(i) -> P(i)/(pi).
SubQuotient quotient_by_path(QuiverPtr q, const Fp& F, const Path& pi);

// ---- catalogs --------------------------------------------------------------

// Enumerates positive roots of the Tits form (bounded coordinate search) and
// builds one indecomposable per root by BGP reflection functors.
Catalog dynkin_catalog(QuiverPtr q, const Fp& F, int coord_bound = 8);

// P^1..P^n over k[T]/(T^n); P^n is projective-injective.
Catalog nilpotent_catalog(int n, const Fp& F);

// Nilpotent Jordan block: T e_i = e_{i+1}, T e_l = 0.
Mat jordan_block(const Fp& F, int l);

// The picket P^m_l = (P^m, soc^l P^m) as a representation of sub:n.
Rep picket(QuiverPtr sub_quiver, const Fp& F, int n, int m, int l);

// Multiplicity of the Jordan block of size m in a nilpotent operator:
// mu_m = r_{m-1} - 2 r_m + r_{m+1} with r_j = rank(T^j).
std::vector<int> jordan_multiplicities(const Mat& T, int n);
std::vector<int> jordan_type(const Mat& T, int n);  // partition, descending parts

// Indecomposable invariant subspace pairs with dim V <= ambient_dim_bound,
// enumerated over F_2 and lifted to F_p.  Throws EnumerationUnstable when
// bound and bound+1 disagree (check_stability).
Catalog subspace_catalog(int n, int ambient_dim_bound, const Fp& F, bool check_stability = true);

// Catalog registry used by the CLI: e6 | a2 | a3 | nilp:<n> | sub:<n>.
Catalog catalog_by_name(const std::string& name, const Fp& F, int dim_bound = 8);

}  // namespace arh
