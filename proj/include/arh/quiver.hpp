#pragma once

// Quivers with relations.  Paths are words of arrow indices read left to
// right: the path {a, b} traverses a first, so a representation evaluates it
// as M_b * M_a.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "arh/error.hpp"

namespace arh {

struct Arrow {
  std::string name;
  int src;
  int dst;
};

struct Path {
  int src = 0;
  std::vector<int> arrows;  // arrow indices, traversed left to right
};

struct RelTerm {
  int64_t coeff;  // reduced mod p at evaluation time
  Path path;
};

// Formal linear combination of parallel paths that evaluates to zero.
struct Relation {
  std::vector<RelTerm> terms;
};

class Quiver {
public:
  Quiver(std::string name, int vertex_count, std::vector<Arrow> arrows,
         std::vector<Relation> relations = {});

  const std::string& name() const { return name_; }
  int vertex_count() const { return nv_; }
  int arrow_count() const { return (int)arrows_.size(); }
  const Arrow& arrow(int i) const { return arrows_[i]; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<Relation>& relations() const { return relations_; }
  int arrow_index(const std::string& name) const;  // -1 if absent

  int path_target(const Path& p) const;
  bool is_tree() const;  // connected, no multiple edges, |arrows| = |vertices| - 1
  // All directed paths i -> j that use no arrow twice (enough for trees and
  // the small hereditary quivers used here).  Includes the lazy path if i == j.
  std::vector<Path> paths_between(int i, int j) const;

private:
  std::string name_;
  int nv_;
  std::vector<Arrow> arrows_;
  std::vector<Relation> relations_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

QuiverPtr make_a2();
QuiverPtr make_a3();
QuiverPtr make_e6();  // bipartite orientation, arrows alpha:1->2, beta:3->2, gamma:3->4, delta:3->5, epsilon:6->5
QuiverPtr make_point();           // one vertex, no arrows (plain vector spaces)
QuiverPtr make_nilpotent(int n);  // one loop t with t^n = 0
// Two vertices u (subspace side) and v (ambient side), loops tu, tv with
// t^n = 0, arrow a : u -> v, and the commutation relation (tu a) - (a tv).
QuiverPtr make_subspace_pair(int n);

Path parse_path(const Quiver& q, const std::string& text);  // "alpha" or "alpha.beta" or "e3"

}  // namespace arh
