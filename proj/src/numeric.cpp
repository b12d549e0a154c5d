#include "clusteraut/numeric.hpp"

namespace clusteraut {

Int isqrt(const Int& n) {
    if (n < 0) throw input_error("isqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

SquarefreeSplit squarefree_split(const Int& n) {
    if (n < 0) throw input_error("squarefree_split: negative argument");
    if (n == 0) return {0, 1};
    Int m = n, coeff = 1, rad = 1;
    for (Int p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) coeff *= p;
        if (e % 2 != 0) rad *= p;
    }
    rad *= m;  // leftover m is 1 or a prime with exponent 1
    return {coeff, rad};
}

Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace clusteraut
