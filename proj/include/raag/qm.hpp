#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "raag/word.hpp"

namespace raag {

// Wall of QM_ell(Gamma), identified by its generator and the canonical
// minimal representative of the coset rep<star(gen)>.
struct Hyperplane {
  int gen = 0;
  NormalForm rep;
  bool operator==(const Hyperplane& other) const {
    return gen == other.gen && rep == other.rep;
  }
  bool operator!=(const Hyperplane& other) const { return !(*this == other); }
};

// (rep length, rep canonical order, generator)
bool hyperplane_less(const Hyperplane& a, const Hyperplane& b);

// "rep|gen" with an empty rep printed as "1", e.g. "b|e", "1|a".
std::string to_string(const Hyperplane& h);
// File-format-safe vertex name for crossing-graph export.
std::string hyperplane_vertex_name(const Hyperplane& h);

Hyperplane canonical_hyperplane(const Word& g, int u);

bool transverse(const Hyperplane& h1, const Hyperplane& h2);

// Elements of canonical length <= radius, grouped by length, each level in
// canonical order. Requires a modular exponent domain.
class Ball {
 public:
  Ball(Group group, int radius, std::vector<std::vector<NormalForm>> levels)
      : group_(std::move(group)), radius_(radius), levels_(std::move(levels)) {}
  const Group& group() const { return group_; }
  int radius() const { return radius_; }
  const std::vector<std::vector<NormalForm>>& levels() const { return levels_; }
  std::size_t size() const;
  std::vector<NormalForm> all() const;  // level by level

 private:
  Group group_;
  int radius_;
  std::vector<std::vector<NormalForm>> levels_;
};

Ball ball(const Group& group, int radius);

// Hyperplanes with an edge incident to the ball, canonically ordered.
std::vector<Hyperplane> hyperplanes_of_ball(const Ball& b);

// Crossing graph: vertices are hyperplanes, edges are transversality.
struct CrossingGraph {
  std::vector<Hyperplane> hyperplanes;
  Graph graph;                       // vertex i <-> hyperplanes[i]
  std::vector<std::string> labels;   // pretty serializations
};

CrossingGraph crossing_graph(const std::vector<Hyperplane>& hs, int threads = 1);

// Geometric hyperplane structure of a ball, built from the wall equivalence
// (clique and prism closure) without the algebraic coset model. Test oracle.
class HyperplaneEdgeIndex {
 public:
  HyperplaneEdgeIndex(const Group& group, int radius);
  const Ball& ball() const { return ball_; }
  // id of the wall through the clique element * <gen>; element must lie in
  // the ball
  int wall_class(const NormalForm& element, int gen) const;
  bool transverse_geometric(const Hyperplane& h1, const Hyperplane& h2) const;

 private:
  int find(int x) const;
  Ball ball_;
  std::vector<NormalForm> elements_;
  std::unordered_map<std::string, int> element_id_;
  mutable std::vector<int> uf_;
  // all (wall class at u, wall class at v) corners, per adjacent (u, v)
  std::vector<std::vector<std::unordered_set<std::uint64_t>>> corners_;
};

// Prism witness search within the ball of `search_radius`; test oracle for
// transverse().
bool geometric_transverse_oracle(const Hyperplane& h1, const Hyperplane& h2, int search_radius);

}  // namespace raag
