#pragma once
//
// Exchange-tree automorphisms over a fixed root, represented as validated
// triples (mutation word, vertex permutation sigma, sign eps) with
// sigma(B_root) = eps * B_endpoint. Provides exact composition, inversion,
// identity testing through denominator vectors, order probing with an
// infinite-order certificate, the vertex-fixing subgroup, generator
// computation from first-return paths (stratified when a diamond vertex
// exists), factorization, and relation scanning.
//
#include "clusteraut/search.hpp"

#include <optional>
#include <string>
#include <vector>

namespace clusteraut {

struct Automorphism {
    Word word;  // path order, reduced
    Perm sigma;
    int sign = +1;
    bool operator==(const Automorphism& o) const = default;
};

struct OrderProbeResult {
    enum class Kind { finite, infinite_certified, unknown };
    Kind kind = Kind::unknown;
    int order = 0;      // set for finite
    int max_power = 0;  // bound the probe ran with
    std::string str() const;
};

struct RelationWitness {
    std::string kind;  // "involution" | "commutation" | "dihedral" | "coincidence"
    std::string lhs;
    std::string rhs;
};

struct GeneratorEntry {
    Automorphism f;
    Word source_path;
    std::string stratum;  // "H1" | "H1,0" | "H1,1" | "K1"
    OrderProbeResult probe;
};

struct StrataSummary {
    bool stratified = false;
    int p10 = 0, p11 = 0, p12 = 0, heavier = 0;
    int k1_sources = 0, k1_kept = 0;
};

struct GroupEvidence {
    std::vector<Automorphism> g0;  // vertex-fixing subgroup, identity first
    std::vector<GeneratorEntry> generators;
    std::optional<DiamondVertex> t_diamond;
    StrataSummary strata;
    bool enumeration_complete = false;
    std::vector<RelationWitness> relations;
};

class AutContext {
  public:
    explicit AutContext(SymmetrizedMatrix root, SearchConfig cfg = {});

    const SymmetrizedMatrix& root() const { return root_; }
    const SearchConfig& config() const { return cfg_; }

    // Validates the defining matrix identity; input_error on failure.
    Automorphism make(Word word, Perm sigma, int sign) const;
    Automorphism identity() const;

    // g after f (f applied first): word = reduce(word_g, sigma_g(word_f)),
    // sigma = sigma_g o sigma_f, sign = sign_g * sign_f.
    Automorphism compose(const Automorphism& g, const Automorphism& f) const;
    Automorphism inverse(const Automorphism& f) const;
    Automorphism power(const Automorphism& f, int k) const;

    // Exact: f is the identity iff every image variable is the matching
    // initial variable, tested through denominator vectors.
    bool is_identity(const Automorphism& f) const;
    bool equal(const Automorphism& f, const Automorphism& g) const;

    // path weight of the word against the root, minus one
    int grade(const Automorphism& f) const;

    OrderProbeResult order_probe(const Automorphism& f, int max_power = 12) const;

    std::vector<Automorphism> compute_G0() const;
    GroupEvidence compute_generators() const;

    // h with g∘h = f; the recovered triple is verified to recompose exactly.
    Automorphism factorize(const Automorphism& f, const Automorphism& g) const;

    std::vector<RelationWitness> relation_scan(const std::vector<Automorphism>& gens,
                                               int max_len = 6) const;

    struct ClosureResult {
        std::vector<Automorphism> elements;  // identity included
        bool closed = false;                 // stabilized below the caps
    };
    ClosureResult generated_closure(const std::vector<Automorphism>& gens, int max_len,
                                    std::size_t max_elements) const;
    bool in_closure(const Automorphism& f, const ClosureResult& c) const;

    // "g[2,1,3](perm=(1 2 3); sign=+)"
    std::string describe(const Automorphism& f) const;

    // Map-determined exact data (sign and image denominator vectors); equal
    // automorphisms always share a signature, so it serves as a dedup bucket
    // key (confirmed by equal()).
    std::string signature(const Automorphism& f) const;

  private:
    SymmetrizedMatrix root_;
    SearchConfig cfg_;
    DVectorState init_dv_;
};

}  // namespace clusteraut
