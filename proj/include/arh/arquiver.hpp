#pragma once

// The Auslander-Reiten quiver of a catalog: irreducible-map multiplicities
// dim rad/rad^2, the translation tau found by the single-vertex hammock
// (defect) characterization, and the mesh list.

#include "arh/catalog.hpp"

namespace arh {

// One mesh per vertex (the mesh ending there), plus one extra mesh starting
// at each injective.  start/end use -1 for the missing side of a truncated
// mesh: projective meshes have no start, injective meshes no end.
struct Mesh {
  int start = -1;
  std::vector<int> middles;  // catalog indices with multiplicity, sorted
  int end = -1;
};

struct ARQuiver {
  Catalog cat;
  std::vector<std::vector<int>> hom;       // hom dims, [from][to]
  std::vector<std::vector<int>> rad_dim;   // dim rad(X, Y)
  std::vector<std::vector<int>> rad2_dim;  // dim rad^2(X, Y)
  std::vector<std::vector<int>> mult;      // arrow multiplicities, rad/rad^2
  std::vector<int> tau;                    // -1 for projectives
  std::vector<int> tau_inv;                // -1 for injectives
  std::vector<int> endo_top;               // d = dim End/rad End per object
  std::vector<Mesh> meshes;                // vertex meshes first, then injective meshes
  std::vector<int> mesh_ending_at;         // vertex -> index into meshes

  int size() const { return cat.size(); }
  const std::string& label(int i) const { return cat.objects[i].label; }
  bool is_projective(int i) const { return cat.objects[i].projective; }
  bool is_injective(int i) const { return cat.objects[i].injective; }
  // hom dim of a catalog object against an arbitrary representation
  int hom_to(int i, const Rep& m) const { return hom_dim(cat.objects[i].rep, m); }
  int hom_from(const Rep& m, int i) const { return hom_dim(m, cat.objects[i].rep); }
  int tau_power(int i, int k) const;  // tau^k, -1 when undefined along the way
};

// Radical data: rad = all of Hom for distinct vertices, rad End on the
// diagonal; rad^2 spanned by composites through every catalog object.
struct RadicalData {
  std::vector<std::vector<std::vector<Morphism>>> rad;  // [from][to] basis
  std::vector<std::vector<int>> rad_dim, rad2_dim, mult;
};
RadicalData radical_dims(const Catalog& cat);

// The object A completing the mesh ending at C: the unique catalog object
// with hom(A,M) - hom(B,M) + hom(C,M) = d_A [M = A] for every catalog M,
// where B is the sum of the mesh middles.  Throws TauUndefined for
// projectives, TauNotFound / TauAmbiguous on a broken catalog.
int compute_tau(int c, const Catalog& cat, const std::vector<std::vector<int>>& hom,
                const std::vector<std::vector<int>>& mult, const std::vector<int>& endo_top);

ARQuiver build_ar_quiver(const Catalog& cat);

}  // namespace arh
