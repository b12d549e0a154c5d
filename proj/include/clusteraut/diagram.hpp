#pragma once
//
// Weighted diagrams of skew-symmetrizable matrices: a directed edge i -> j
// carries squared weight |b_ij * b_ji|. Rank-3 diagram mutation is
// implemented directly on weights (and cross-checked against matrix mutation
// in the tests); general rank goes through a realizing witness matrix.
//
#include "clusteraut/matrix.hpp"
#include "clusteraut/surd.hpp"

#include <map>
#include <utility>

namespace clusteraut {

class Diagram {
  public:
    Diagram() = default;
    explicit Diagram(int n) : n_(n) {}

    int n() const { return n_; }

    void set_edge(int i, int j, const Int& w2);  // oriented i -> j, squared weight w2 > 0
    void clear_edge(int i, int j);
    Int weight2(int i, int j) const;   // squared weight in either direction, 0 if absent
    bool has_arrow(int i, int j) const;

    bool operator==(const Diagram& o) const = default;

    // (i, j) -> squared weight, oriented i -> j
    const std::map<std::pair<int, int>, Int>& edges() const { return edges_; }

    std::string str() const;

  private:
    int n_ = 0;
    std::map<std::pair<int, int>, Int> edges_;
};

Diagram diagram_of(const ExchangeMatrix& b);

bool is_acyclic(const Diagram& g);
bool is_connected(const Diagram& g);

// Sum of sqrt(squared weight) over all edges.
SurdSum weight_sum(const Diagram& g);

// Growth-dominance test at vertex i of an oriented 3-cycle, decided on
// squared weights: with {j, k} the other two vertices and w_v the squared
// weight of the edge opposite v, either w_i >= max(w_j, w_k) and
// min(w_j, w_k) > 4, or w_i > max(w_j, w_k) and min(w_j, w_k) >= 4. False
// whenever the diagram is not a 3-vertex oriented cycle.
bool has_property_M(const Diagram& g, int i);

// Direct rank-3 mutation: reverses edges at k and replaces the third edge
// via the signed relation (old contribution) + (new contribution) = product
// of the two-path weights, with contributions signed by cyclic orientation
// before/after. Requires the product of squared weights along the two-path
// times the old squared weight to be a perfect square (matrix-realizable
// data); throws input_error otherwise.
Diagram mutate_diagram(const Diagram& g, int k);

// General-rank mutation through a realizing matrix.
Diagram mutate_diagram_via_matrix(const ExchangeMatrix& witness, int k);

}  // namespace clusteraut
