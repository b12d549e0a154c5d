#pragma once
//
// Exact multivariate Laurent polynomials over Z: a map from integer exponent
// vectors to nonzero GMP coefficients. Supports the arithmetic needed for
// exchange-relation mutation: add/subtract/multiply, exact division with a
// proof of non-divisibility when it fails, powers, and per-variable lowest
// degrees (which encode denominator vectors).
//
#include "clusteraut/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace clusteraut {

// Raised by laurent_exact_div on a zero divisor or a non-exact division.
struct laurent_division_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class LaurentPoly {
  public:
    using Exps = std::vector<long>;  // one (possibly negative) exponent per variable

    LaurentPoly() = default;
    explicit LaurentPoly(int nvars) : nvars_(nvars) {}

    static LaurentPoly zero(int nvars) { return LaurentPoly(nvars); }
    static LaurentPoly constant(int nvars, const Int& c);
    static LaurentPoly variable(int nvars, int i);  // x_{i+1}, 0-based index
    static LaurentPoly monomial(int nvars, const Exps& e, const Int& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Exps& e, const Int& c);  // += c * x^e

    LaurentPoly pow(unsigned long k) const;

    bool operator==(const LaurentPoly& o) const = default;

    // exponent vector -> nonzero coefficient; key order is lexicographic
    const std::map<Exps, Int>& terms() const { return terms_; }

    // Deterministic dump: terms sorted by total degree, then
    // lexicographically by exponent vector; explicit signs between terms.
    std::string str(const std::vector<std::string>& names = {}) const;

  private:
    int nvars_ = 0;
    std::map<Exps, Int> terms_;
};

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);

// p / q. Throws laurent_division_error when q == 0 or when q does not divide
// p exactly. Termination on non-divisible input is guaranteed by confining
// candidate quotient terms to the box forced by degree additivity: for every
// variable v, minexp_v(p/q) = minexp_v(p) - minexp_v(q) and likewise for max.
LaurentPoly laurent_exact_div(const LaurentPoly& p, const LaurentPoly& q);

// Lowest exponent of variable v (0-based) over the terms of p; error if p = 0.
long laurent_lowest_degree(const LaurentPoly& p, int v);

}  // namespace clusteraut
