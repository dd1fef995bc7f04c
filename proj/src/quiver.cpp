#include "arh/quiver.hpp"

#include <algorithm>
#include <functional>

namespace arh {

Quiver::Quiver(std::string name, int vertex_count, std::vector<Arrow> arrows,
               std::vector<Relation> relations)
    : name_(std::move(name)), nv_(vertex_count), arrows_(std::move(arrows)),
      relations_(std::move(relations)) {
  check(nv_ >= 0, "Quiver: negative vertex count");
  for (size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    check(a.src >= 0 && a.src < nv_ && a.dst >= 0 && a.dst < nv_, "Quiver: arrow out of range");
    for (size_t j = 0; j < i; ++j)
      check(arrows_[j].name != a.name, "Quiver: duplicate arrow name");
  }
  for (const Relation& r : relations_) {
    check(!r.terms.empty(), "Quiver: empty relation");
    int s = r.terms[0].path.src;
    int t = path_target(r.terms[0].path);
    for (const RelTerm& term : r.terms) {
      check(term.path.src == s && path_target(term.path) == t,
            "Quiver: relation terms must be parallel");
    }
  }
}

int Quiver::arrow_index(const std::string& name) const {
  for (int i = 0; i < (int)arrows_.size(); ++i)
    if (arrows_[i].name == name) return i;
  return -1;
}

int Quiver::path_target(const Path& p) const {
  int v = p.src;
  for (int a : p.arrows) {
    check(a >= 0 && a < (int)arrows_.size() && arrows_[a].src == v, "Quiver: broken path");
    v = arrows_[a].dst;
  }
  return v;
}

bool Quiver::is_tree() const {
  if (arrow_count() != nv_ - 1) return false;
  for (const Arrow& a : arrows_)
    if (a.src == a.dst) return false;
  // connectivity of the underlying graph
  std::vector<int> comp(nv_);
  for (int i = 0; i < nv_; ++i) comp[i] = i;
  std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  for (const Arrow& a : arrows_) comp[find(a.src)] = find(a.dst);
  for (int i = 0; i < nv_; ++i)
    if (find(i) != find(0)) return false;
  // no parallel/multi edges
  for (int i = 0; i < arrow_count(); ++i)
    for (int j = 0; j < i; ++j) {
      auto norm = [](const Arrow& a) {
        return std::pair<int, int>(std::min(a.src, a.dst), std::max(a.src, a.dst));
      };
      if (norm(arrows_[i]) == norm(arrows_[j])) return false;
    }
  return true;
}

std::vector<Path> Quiver::paths_between(int i, int j) const {
  std::vector<Path> out;
  std::vector<bool> used(arrows_.size(), false);
  Path cur{i, {}};
  std::function<void(int)> dfs = [&](int v) {
    if (v == j) out.push_back(cur);
    for (int a = 0; a < (int)arrows_.size(); ++a) {
      if (used[a] || arrows_[a].src != v) continue;
      used[a] = true;
      cur.arrows.push_back(a);
      dfs(arrows_[a].dst);
      cur.arrows.pop_back();
      used[a] = false;
    }
  };
  dfs(i);
  return out;
}

QuiverPtr make_a2() {
  return std::make_shared<Quiver>("a2", 2, std::vector<Arrow>{{"alpha", 0, 1}});
}

QuiverPtr make_a3() {
  return std::make_shared<Quiver>("a3", 3, std::vector<Arrow>{{"alpha", 0, 1}, {"beta", 1, 2}});
}

QuiverPtr make_e6() {
  // Vertex labels 1..6 of the bipartite picture map to indices 0..5.
  return std::make_shared<Quiver>(
      "e6", 6,
      std::vector<Arrow>{
          {"alpha", 0, 1}, {"beta", 2, 1}, {"gamma", 2, 3}, {"delta", 2, 4}, {"epsilon", 5, 4}});
}

QuiverPtr make_point() { return std::make_shared<Quiver>("point", 1, std::vector<Arrow>{}); }

static Path loop_power(int arrow, int n) {
  Path p{0, {}};
  for (int i = 0; i < n; ++i) p.arrows.push_back(arrow);
  return p;
}

QuiverPtr make_nilpotent(int n) {
  check(n >= 1, "make_nilpotent: n >= 1");
  Relation tn{{{1, loop_power(0, n)}}};
  return std::make_shared<Quiver>("nilp:" + std::to_string(n), 1,
                                  std::vector<Arrow>{{"t", 0, 0}}, std::vector<Relation>{tn});
}

QuiverPtr make_subspace_pair(int n) {
  check(n >= 1, "make_subspace_pair: n >= 1");
  std::vector<Arrow> arrows{{"tu", 0, 0}, {"tv", 1, 1}, {"a", 0, 1}};
  std::vector<Relation> rels;
  rels.push_back({{{1, loop_power(0, n)}}});
  {
    Path tvn{1, {}};
    for (int i = 0; i < n; ++i) tvn.arrows.push_back(1);
    rels.push_back({{{1, tvn}}});
  }
  // (tu a) - (a tv): the square U -> V commutes with T.
  Path tua{0, {0, 2}};
  Path atv{0, {2, 1}};
  rels.push_back({{{1, tua}, {-1, atv}}});
  return std::make_shared<Quiver>("sub:" + std::to_string(n), 2, std::move(arrows),
                                  std::move(rels));
}

Path parse_path(const Quiver& q, const std::string& text) {
  if (text.empty()) throw Error(Errc::BadPath, "empty path");
  if (text[0] == 'e') {
    // lazy path at a vertex, 1-based as in the pictures
    try {
      int v = std::stoi(text.substr(1));
      if (v < 1 || v > q.vertex_count()) throw Error(Errc::BadPath, "vertex out of range: " + text);
      return Path{v - 1, {}};
    } catch (const std::invalid_argument&) {
      // fall through: an arrow could legitimately be named "e..."
    }
  }
  Path p;
  std::vector<int> arrows;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t dot = text.find('.', pos);
    std::string part = text.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    int idx = q.arrow_index(part);
    if (idx < 0) throw Error(Errc::BadPath, "unknown arrow: " + part);
    arrows.push_back(idx);
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  p.src = q.arrow(arrows[0]).src;
  p.arrows = arrows;
  q.path_target(p);  // validates composability
  return p;
}

}  // namespace arh
