#pragma once
//
// Labeled seeds (exchange matrix + exact Laurent cluster variables),
// denominator-vector states, mutation words, and exchange-relation mutation.
// Words are kept in path order: [i1, i2, ...] mutates i1 first. Letters are
// 0-based in code and printed 1-based.
//
#include "clusteraut/laurent.hpp"
#include "clusteraut/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace clusteraut {

using Word = std::vector<int>;

// Cancels equal adjacent letters until none remain, e.g. [1,2,2,1,3] -> [3]
// (1-based letters in the example).
Word reduce_word(Word w);
std::string word_str(const Word& w);                      // "[2,1,3]", 1-based
Word parse_word(const std::string& text, int n);          // comma/space separated, 1-based
Word apply_perm_word(const Perm& sigma, const Word& w);   // letterwise sigma

struct Seed {
    SymmetrizedMatrix m;
    std::vector<LaurentPoly> x;  // Laurent in the initial cluster
    bool operator==(const Seed& o) const = default;
};

Seed initial_seed(const SymmetrizedMatrix& m);

// Exchange relation at k: the new variable is
// (prod_j x_j^[b_jk]+ + prod_j x_j^[-b_jk]+) / x_k, an exact Laurent
// division; failure is an internal invariant violation.
Seed mutate_seed(const Seed& s, int k);

// Denominator-vector state: d[j] is the exponent vector of the denominator
// of x_{j;t}, with initial value -e_j.
struct DVectorState {
    ExchangeMatrix b;
    std::vector<std::vector<Int>> d;
    bool operator==(const DVectorState& o) const = default;
};

DVectorState initial_dvectors(const ExchangeMatrix& b);
DVectorState mutate_dvectors(const DVectorState& s, int k);

// -(componentwise lowest degrees); the denominator vector of a cluster
// variable presented as a Laurent polynomial.
std::vector<Int> dvector_of_variable(const LaurentPoly& p);

// Index i with d = -e_i, if any: the exact test for "this variable is the
// i-th initial variable".
std::optional<int> initial_variable_index(const std::vector<Int>& d);

Seed apply_word(Seed s, const Word& w);
DVectorState apply_word(DVectorState s, const Word& w);
ExchangeMatrix apply_word(ExchangeMatrix b, const Word& w);
SymmetrizedMatrix apply_word(SymmetrizedMatrix m, const Word& w);

// Deterministic cluster dump, one variable per line.
std::string seed_str(const Seed& s);

}  // namespace clusteraut
