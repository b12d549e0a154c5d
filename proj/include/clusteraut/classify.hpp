#pragma once
//
// Classification of rank-3 indecomposable exchange matrices: a canonical
// minimal representative found by exact weight-sum descent, a total lookup
// table mapping canonical forms to named automorphism groups with generator
// data, and a structural cross-check that validates a table row against
// independently computed evidence (fixing subgroup, first-return generators,
// order probes, closure sizes, membership).
//
#include "clusteraut/aut.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace clusteraut {

enum class NamedGroup {
    trivial,
    z2,
    z2xz2,
    z,
    s3,
    d4,      // dihedral of order 8
    d6,      // dihedral of order 12
    dinf,    // infinite dihedral
    dinfxz2, // infinite dihedral extended by a commuting involution
    nfree,   // free product Z2 * Z2 * Z2
    nxz2,    // nfree extended by an involution swapping two factors
    nxs3,    // nfree extended by an S3 permuting the factors
};

std::string named_group_str(NamedGroup g);
std::string named_group_presentation(NamedGroup g);
std::optional<int> named_group_order(NamedGroup g);  // nullopt = infinite

// Canonical labeled shape at the weight-sum minimum. Squared edge weights
// (a2, b2, c2) use the opposite-vertex labeling: a2 on edge {2,3}, b2 on
// {1,2}, c2 on {1,3}, with a2 <= b2 <= c2. Cyclic representatives carry
// arrows 2->1, 1->3, 3->2 and satisfy a2*b2 >= 4*c2; acyclic ones carry
// arrows 2->1, 1->3 and, when a2 > 0, 2->3.
struct CanonicalForm {
    bool cyclic = false;
    std::array<Int, 3> w2{};
    std::vector<Int> d;          // symmetrizer at the representative
    std::vector<int> d_pattern;  // first-occurrence encoding of d, e.g. (0,0,1)
    SymmetrizedMatrix representative;
    Word descent_word;      // input vertex -> chosen minimal vertex
    SignedPerm relabeling;  // applied to that vertex's matrix to reach the representative
};

// Exact descent to the weight-sum minimum, exploration of the equal-sum
// plateau, and a deterministic least canonical labeling. input_error unless
// the matrix is rank 3 and indecomposable (connected).
CanonicalForm minimal_representative(const SymmetrizedMatrix& m);

bool is_mutation_cyclic(const SymmetrizedMatrix& m);

// Order of the vertex-fixing subgroup predicted combinatorially from the
// canonical weights and symmetrizer pattern.
int expected_G0_order(const CanonicalForm& cf);

struct GeneratorSpec {
    std::string label;
    Word word;
    Perm sigma;
    int sign = +1;
};

struct TableRow {
    NamedGroup group = NamedGroup::trivial;
    std::string descriptor;  // matched condition, human readable
    std::vector<GeneratorSpec> generators;
};

// Total over canonical forms; the returned generators are given at the
// canonical representative's labeling.
TableRow lookup_aut_group(const CanonicalForm& cf);

// All symmetrizable integer matrices realizing the given squared weights in
// the canonical labeled shape (every entry factorization of every edge,
// filtered for consistency), deduplicated exactly.
std::vector<SymmetrizedMatrix> enumerate_rank3_realizations(bool cyclic, const Int& a2,
                                                            const Int& b2, const Int& c2);

struct CrossCheckReport {
    CanonicalForm form;
    TableRow row;
    bool ok = true;
    std::vector<std::string> checks;
    std::vector<std::string> failures;
};

// Independent structural validation of the looked-up row at the canonical
// representative: generator validity, fixing-subgroup order, enumeration
// completeness, order probes, finite closure orders, infinite-group witness
// relations, and membership of all computed evidence in the generated group.
CrossCheckReport cross_check(const SymmetrizedMatrix& m, const SearchConfig& cfg = {});

}  // namespace clusteraut
