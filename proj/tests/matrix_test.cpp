#include "clusteraut/matrix.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace clusteraut;

namespace {

SymmetrizedMatrix sm3(std::vector<long> e, std::vector<long> dv = {}) {
    std::vector<Int> ee(e.begin(), e.end());
    std::optional<std::vector<Int>> d;
    if (!dv.empty()) d = std::vector<Int>(dv.begin(), dv.end());
    return validate_or_derive_skew_symmetrizer(ExchangeMatrix(3, std::move(ee)), d);
}

}  // namespace

TEST_CASE("permutations") {
    const Perm id = Perm::identity(3);
    const Perm t12 = Perm::transposition(3, 0, 1);
    CHECK(id.is_identity());
    CHECK_FALSE(t12.is_identity());
    CHECK(t12.after(t12) == id);
    CHECK(t12.inverse() == t12);
    CHECK(Perm::all(3).size() == 6);
    CHECK(Perm::all(3).front() == id);
    CHECK(t12.one_line() == "(2 1 3)");
    CHECK(SignedPerm{t12, -1}.str() == "(2 1 3)-");
    // + sorts before - at equal permutation
    CHECK(SignedPerm{t12, +1} < SignedPerm{t12, -1});
}

TEST_CASE("symmetrizer derivation and validation") {
    // acyclic (0,1,sqrt2): derived symmetrizer (2,2,1)
    const SymmetrizedMatrix m = sm3({0, -1, 1, 1, 0, 0, -2, 0, 0});
    CHECK(m.d == std::vector<Int>{2, 2, 1});

    // skew-symmetric matrices get the scalar symmetrizer
    CHECK(sm3({0, 2, -2, -2, 0, 2, 2, -2, 0}).d == std::vector<Int>{1, 1, 1});

    // sign-pattern violation: b12 > 0 with b21 > 0
    CHECK_THROWS_AS(sm3({0, 1, 0, 1, 0, 0, 0, 0, 0}), input_error);
    // b12 != 0 with b21 == 0
    CHECK_THROWS_AS(sm3({0, 1, 0, 0, 0, 0, 0, 0, 0}), input_error);
    // inconsistent explicit symmetrizer
    CHECK_THROWS_AS(sm3({0, -1, 1, 1, 0, 0, -2, 0, 0}, {1, 1, 1}), input_error);
    // non-positive symmetrizer entry
    CHECK_THROWS_AS(sm3({0, -1, 0, 1, 0, 0, 0, 0, 0}, {1, 1, 0}), input_error);
}

TEST_CASE("matrix mutation oracle") {
    // middle mutation of the linear rank-3 path, computed by hand
    const ExchangeMatrix b(3, {0, 1, 0, -1, 0, 1, 0, -1, 0});
    const ExchangeMatrix want(3, {0, -1, 1, 1, 0, -1, -1, 1, 0});
    CHECK(mutate_matrix(b, 1) == want);
    CHECK(mutate_matrix(want, 1) == b);

    // mutation at a source only flips incident signs
    const ExchangeMatrix c(3, {0, 1, 0, -1, 0, 1, 0, -1, 0});
    const ExchangeMatrix c0 = mutate_matrix(c, 0);
    CHECK(c0.at(0, 1) == -1);
    CHECK(c0.at(1, 0) == 1);
    CHECK(c0.at(1, 2) == 1);
}

TEST_CASE("mutation preserves the symmetrizer") {
    std::mt19937 rng(11u);
    std::uniform_int_distribution<int> pick(0, 2);
    SymmetrizedMatrix m = sm3({0, -2, 5, 10, 0, -5, -5, 1, 0}, {5, 1, 5});
    for (int i = 0; i < 50; ++i) {
        m.b = mutate_matrix(m.b, pick(rng));
        CHECK_NOTHROW(validate_or_derive_skew_symmetrizer(m.b, m.d));
    }
}

TEST_CASE("signed permutation action") {
    const SymmetrizedMatrix m = sm3({0, -1, 1, 1, 0, 0, -2, 0, 0});
    const Perm t23 = Perm::transposition(3, 1, 2);
    const SymmetrizedMatrix p = apply_signed_perm(m, SignedPerm{t23, -1});
    // (sigma B)_ij = sign * B_{sigma^-1(i), sigma^-1(j)}
    CHECK(p.b.at(0, 1) == -1);  // -B_02
    CHECK(p.b.at(0, 2) == 1);   // -B_01
    CHECK(p.b.at(1, 0) == 2);   // -B_20
    CHECK(p.b.at(2, 0) == -1);  // -B_10
    CHECK(p.d == std::vector<Int>{2, 1, 2});

    // the action is a group action: (sigma tau) B = sigma (tau B)
    const Perm t12 = Perm::transposition(3, 0, 1);
    const SignedPerm a{t12, -1}, b{t23, +1};
    const SignedPerm ab{t12.after(t23), -1};
    CHECK(apply_perm_matrix(apply_perm_matrix(m.b, b), a) == apply_perm_matrix(m.b, ab));
}

TEST_CASE("signed permutation equivalences") {
    // the fully symmetric cyclic matrix admits all six permutations
    const SymmetrizedMatrix markov = sm3({0, 2, -2, -2, 0, 2, 2, -2, 0});
    CHECK(signed_perm_equivalences(markov, markov, true).size() == 6);
    // identity is always present and listed first
    auto eqs = signed_perm_equivalences(markov, markov, true);
    CHECK(eqs.front().sigma.is_identity());
    CHECK(eqs.front().sign == +1);

    // equivalence between a matrix and its negated relabeling
    const SymmetrizedMatrix m = sm3({0, -1, 1, 1, 0, 0, -2, 0, 0});
    const SignedPerm sp{Perm::transposition(3, 0, 1), -1};
    const SymmetrizedMatrix p = apply_signed_perm(m, sp);
    auto cross = signed_perm_equivalences(m, p, true);
    CHECK(!cross.empty());
    bool found = false;
    for (const auto& e : cross) found = found || (e == sp);
    CHECK(found);

    // asymmetric weights leave only the identity
    const SymmetrizedMatrix b3 = sm3({0, -1, 1, 1, 0, 0, -2, 0, 0});
    auto self = signed_perm_equivalences(b3, b3, true);
    REQUIRE(self.size() == 1);
    CHECK(self.front().sigma.is_identity());
    CHECK(self.front().sign == +1);

    // equal weights on both arms admit the arm swap with a sign flip
    const SymmetrizedMatrix a22 = sm3({0, -2, 2, 2, 0, 0, -2, 0, 0});
    bool arm_swap = false;
    for (const auto& e : signed_perm_equivalences(a22, a22, true))
        arm_swap = arm_swap || (e.sigma == Perm::transposition(3, 1, 2) && e.sign == -1);
    CHECK(arm_swap);
}

TEST_CASE("canonical keys identify the signed relabeling orbit") {
    std::mt19937 rng(3u);
    std::uniform_int_distribution<std::size_t> ppick(0, 5);
    std::uniform_int_distribution<int> spick(0, 1);
    const auto all = Perm::all(3);
    const SymmetrizedMatrix m = sm3({0, -8, 12, 4, 0, -4, -3, 2, 0}, {1, 2, 4});
    const std::string key = canonical_key(m, true);
    std::set<std::string> keys{key};
    for (int i = 0; i < 20; ++i) {
        SignedPerm sp{all[ppick(rng)], spick(rng) ? 1 : -1};
        keys.insert(canonical_key(apply_signed_perm(m, sp), true));
    }
    CHECK(keys.size() == 1);

    // a genuinely different matrix gets a different key
    CHECK(canonical_key(sm3({0, -1, 1, 1, 0, 0, -1, 0, 0}), true) != key);
}

TEST_CASE("connectivity and acyclicity") {
    CHECK(is_connected_matrix(sm3({0, -1, 1, 1, 0, 0, -1, 0, 0}).b));
    CHECK_FALSE(is_connected_matrix(sm3({0, 1, 0, -1, 0, 0, 0, 0, 0}).b));
    CHECK(is_acyclic_matrix(sm3({0, -1, 1, 1, 0, 0, -1, 0, 0}).b));
    CHECK_FALSE(is_acyclic_matrix(sm3({0, 2, -2, -2, 0, 2, 2, -2, 0}).b));
}

TEST_CASE("matrix text round trip") {
    const SymmetrizedMatrix m = sm3({0, -2, 5, 10, 0, -5, -5, 1, 0}, {5, 1, 5});
    CHECK(parse_matrix_text(matrix_text(m)) == m);
    CHECK(parse_matrix_text("3 0 -1 1 1 0 0 -2 0 0") == sm3({0, -1, 1, 1, 0, 0, -2, 0, 0}));
    // commas and semicolons are token separators
    CHECK(parse_matrix_text("3; 0,-1,1; 1,0,0; -2,0,0") ==
          sm3({0, -1, 1, 1, 0, 0, -2, 0, 0}));
    CHECK_THROWS_AS(parse_matrix_text(""), input_error);
    CHECK_THROWS_AS(parse_matrix_text("3 0 -1 1 1 0 0 -2 0"), input_error);
    CHECK_THROWS_AS(parse_matrix_text("3 0 -1 1 1 0 0 -2 0 0 7"), input_error);
    CHECK_THROWS_AS(parse_matrix_text("2 0 x -1 0"), input_error);
}
