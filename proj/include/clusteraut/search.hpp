#pragma once
//
// Exploration of the rank-3 exchange tree rooted at a seed matrix: weighted
// path bookkeeping, enumeration of first-return paths (paths whose endpoint
// matrix is equivalent to +/- the root with no equivalent interior vertex),
// location of a diamond vertex for stratification, and the strata themselves.
//
#include "clusteraut/diagram.hpp"
#include "clusteraut/seed.hpp"

#include <optional>
#include <vector>

namespace clusteraut {

struct SearchConfig {
    int max_depth = 14;
    // Cut extensions of a vertex whose diagram is an oriented triangle with
    // growth dominance at the just-mutated vertex: every further mutation
    // strictly grows the weight sum, so no return can follow. Sound when the
    // root weight sum is minimal in its class (checked; otherwise the prune
    // is disabled automatically).
    bool prune_property_M = true;
    // In a mutation-cyclic class, a non-minimal diagram has exactly one
    // non-increasing direction (back toward the minimum), so any strict
    // weight-sum increase is permanent along a non-backtracking path; cut
    // there. Only applies when the root is a weight-sum-minimal member of a
    // mutation-cyclic class.
    bool prune_weight_growth = true;
    // Equivalence of vertices uses the symmetrizer-respecting canonical key.
    bool symmetrizer_match_in_equivalence = true;
};

// Number of vertices on the path from the root to the endpoint of w
// (endpoints included) whose matrix is equivalent to +/- reference.
int path_weight(const SymmetrizedMatrix& root, const Word& w, const SymmetrizedMatrix& reference,
                const SearchConfig& cfg = {});

struct FoundPath {
    Word word;
    std::vector<SignedPerm> perms;  // all (sigma, eps) with eps*sigma(B_root) = B_endpoint
};

struct EnumerationResult {
    std::vector<FoundPath> paths;   // lexicographic word order
    bool complete = false;          // true iff no branch was cut by the depth cap
    long frontier_pruned = 0;       // branches cut by a sound prune
    long depth_cut = 0;             // branches cut by the depth cap
};

EnumerationResult enumerate_P1(const SymmetrizedMatrix& root, const SearchConfig& cfg = {});

struct DiamondVertex {
    Word word;
    SymmetrizedMatrix matrix;
};

// Breadth-first (depth, then lexicographic) search for a vertex t with:
// matrix not equivalent to +/- root; both connecting-path weights equal to 1
// (no interior vertex equivalent to +/- root, and no path vertex other than
// t equivalent to +/- B_t); and no off-path neighbor of t equivalent to
// +/- root. Returns nothing when no such vertex exists within the depth cap.
std::optional<DiamondVertex> find_t_diamond(const SymmetrizedMatrix& root, const SearchConfig& cfg = {});

struct StratifiedP1 {
    EnumerationResult all;
    std::vector<FoundPath> p10;      // weight 0 at the diamond vertex
    std::vector<FoundPath> p11;      // weight 1
    std::vector<FoundPath> p12;      // weight 2
    std::vector<FoundPath> heavier;  // weight > 2 (reported; not generating)
    std::vector<FoundPath> k1_sources;    // weight-2 paths passing through the diamond vertex
    std::vector<FoundPath> k1_collapsed;  // one representative per collapse key
};

// Collapse key for a weight-2 path through the diamond vertex: its longest
// prefix ending at a vertex equivalent to +/- the diamond matrix. One
// representative (lexicographically least word) is kept per key.
StratifiedP1 enumerate_P1_stratified(const SymmetrizedMatrix& root, const DiamondVertex& td,
                                     const SearchConfig& cfg = {});

// True when no single mutation strictly decreases the weight sum; at rank 3
// a local minimum is a global minimum of its mutation class.
bool weight_sum_locally_minimal(const SymmetrizedMatrix& m);

}  // namespace clusteraut
