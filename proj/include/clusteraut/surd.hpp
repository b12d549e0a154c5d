#pragma once
//
// Exact arithmetic on integer linear combinations of square roots:
// values sum_i c_i * sqrt(r_i) with pairwise distinct squarefree radicands
// r_i and nonzero integer coefficients c_i. Square roots of distinct
// squarefree integers are linearly independent over Q, so the normal form is
// unique and a sum is zero exactly when it has no terms; nonzero signs are
// decided by refining rational enclosures of each sqrt.
//
// Diagram edge weights are stored squared (always integers); their sums and
// comparisons go through this type.
//
#include "clusteraut/numeric.hpp"

#include <map>
#include <string>

namespace clusteraut {

// sqrt(m) = coeff * sqrt(radicand) with radicand squarefree.
// surd_normalize(8) = 2*sqrt(2), surd_normalize(9) = 3*sqrt(1).
struct Surd {
    Int coeff;
    Int radicand;
};
Surd surd_normalize(const Int& m);

enum class Cmp { less, equal, greater };

class SurdSum {
  public:
    SurdSum() = default;

    static SurdSum of_int(const Int& n);
    static SurdSum of_sqrt(const Int& m);

    SurdSum& add_int(const Int& n);
    SurdSum& add_sqrt(const Int& m);            // += sqrt(m)
    SurdSum& add_multiple_sqrt(const Int& c, const Int& m);  // += c*sqrt(m)
    SurdSum& add(const SurdSum& o);
    SurdSum& sub(const SurdSum& o);

    bool is_zero() const { return terms_.empty(); }
    int sign() const;  // exact: -1, 0, +1

    bool operator==(const SurdSum& o) const = default;

    // radicand -> coefficient, radicands squarefree, coefficients nonzero
    const std::map<Int, Int>& terms() const { return terms_; }

    std::string str() const;

  private:
    std::map<Int, Int> terms_;
};

SurdSum operator+(SurdSum a, const SurdSum& b);
SurdSum operator-(SurdSum a, const SurdSum& b);

Cmp surdsum_compare(const SurdSum& a, const SurdSum& b);

}  // namespace clusteraut
