#pragma once
//
// Exact integer scalar layer: GMP-backed arbitrary-precision integers and
// rationals plus the few number-theoretic helpers the engine needs
// (integer square roots, perfect-square tests, squarefree factor splits).
//
#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace clusteraut {

using Int = mpz_class;
using Rat = mpq_class;

// Raised on malformed user input (bad matrix, invalid word, unrealizable
// request). CLI maps this to exit code 1.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an internal invariant breaks (exact division failing where the
// theory guarantees success, a lookup falling off the classification table,
// ...). CLI maps this to exit code 2.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// floor(sqrt(n)); requires n >= 0
Int isqrt(const Int& n);

bool is_perfect_square(const Int& n);

// n = coeff^2 * radicand with radicand squarefree (n >= 0).
// squarefree_split(0) = {0, 1}.
struct SquarefreeSplit {
    Int coeff;
    Int radicand;
};
SquarefreeSplit squarefree_split(const Int& n);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

}  // namespace clusteraut
