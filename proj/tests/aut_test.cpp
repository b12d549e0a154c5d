#include "clusteraut/aut.hpp"

#include <doctest.h>

using namespace clusteraut;

namespace {

SymmetrizedMatrix sm3(std::vector<long> e, std::vector<long> dv = {}) {
    std::vector<Int> ee(e.begin(), e.end());
    std::optional<std::vector<Int>> d;
    if (!dv.empty()) d = std::vector<Int>(dv.begin(), dv.end());
    return validate_or_derive_skew_symmetrizer(ExchangeMatrix(3, std::move(ee)), d);
}

const Perm kId = Perm::identity(3);
const Perm kT23 = Perm::transposition(3, 1, 2);

}  // namespace

TEST_CASE("construction validates the defining identity") {
    // equal arm weights admit the arm swap composed with the sign flip
    AutContext sym(sm3({0, -2, 2, 2, 0, 0, -2, 0, 0}));
    const Automorphism psi = sym.make({}, kT23, -1);
    CHECK(psi.word.empty());
    CHECK_FALSE(sym.is_identity(psi));
    CHECK(sym.grade(psi) == 0);

    // unequal arm weights reject the swap for either sign
    AutContext asym(sm3({0, -1, 1, 1, 0, 0, -2, 0, 0}));
    CHECK_THROWS_AS(asym.make({}, kT23, -1), input_error);
    CHECK_THROWS_AS(asym.make({}, kT23, +1), input_error);
    // a word whose endpoint is not +/- sigma of the root is rejected too
    CHECK_THROWS_AS(asym.make({0}, kId, +1), input_error);

    CHECK(asym.is_identity(asym.identity()));
    CHECK(asym.grade(asym.identity()) == 0);
}

TEST_CASE("composition, inversion, and syntactic reduction") {
    AutContext ctx(sm3({0, -1, 1, 1, 0, 0, -1, 0, 0}));
    const Automorphism g312 = ctx.make({1, 0, 2}, kId, +1);
    const Automorphism g213 = ctx.make({2, 0, 1}, kId, +1);
    const Automorphism g212 = ctx.make({1, 0, 1}, kId, -1);
    const Automorphism g32 = ctx.make({1, 2}, kId, -1);

    CHECK(ctx.grade(g312) == 1);

    // words concatenate through the left factor's permutation, then cancel
    const Automorphism prod = ctx.compose(g212, g312);
    CHECK(prod.word == Word({1, 2}));
    CHECK(prod.sign == -1);
    CHECK(prod == g32);
    CHECK(ctx.equal(prod, g32));

    CHECK(ctx.inverse(g312) == g213);
    CHECK(ctx.is_identity(ctx.compose(g312, g213)));
    CHECK(ctx.is_identity(ctx.compose(g213, g312)));

    const Automorphism sq = ctx.compose(g212, g212);
    CHECK(sq.word.empty());
    CHECK(sq.sign == +1);
    CHECK(ctx.is_identity(sq));

    // powers: the weight-2 element has order 6 here
    CHECK(ctx.is_identity(ctx.power(g312, 6)));
    CHECK_FALSE(ctx.is_identity(ctx.power(g312, 3)));
    CHECK(ctx.equal(ctx.power(g312, -1), g213));

    // factorization recovers the right factor of a composition
    const Automorphism h = ctx.factorize(prod, g212);
    CHECK(ctx.equal(h, g312));

    CHECK(ctx.describe(g312) == "g[2,1,3](perm=(1 2 3); sign=+)");
    CHECK(ctx.signature(g312) == ctx.signature(ctx.compose(g312, ctx.identity())));
    CHECK(ctx.signature(g312) != ctx.signature(g213));
}

TEST_CASE("order probes") {
    AutContext fin(sm3({0, -1, 1, 1, 0, 0, -1, 0, 0}));
    const auto p6 = fin.order_probe(fin.make({1, 0, 2}, kId, +1));
    CHECK(p6.kind == OrderProbeResult::Kind::finite);
    CHECK(p6.order == 6);
    const auto p2 = fin.order_probe(fin.make({1, 0, 1}, kId, -1));
    CHECK(p2.kind == OrderProbeResult::Kind::finite);
    CHECK(p2.order == 2);

    AutContext inf(sm3({0, -2, 2, 2, 0, 0, -2, 0, 0}));
    const auto pi = inf.order_probe(inf.make({1, 0, 2}, kId, +1));
    CHECK(pi.kind == OrderProbeResult::Kind::infinite_certified);
}

TEST_CASE("vertex-fixing subgroup") {
    AutContext markov(sm3({0, 2, -2, -2, 0, 2, 2, -2, 0}));
    const auto g0m = markov.compute_G0();
    CHECK(g0m.size() == 6);
    CHECK(markov.is_identity(g0m.front()));
    for (const auto& f : g0m) CHECK(f.word.empty());

    AutContext sym(sm3({0, -2, 2, 2, 0, 0, -2, 0, 0}));
    CHECK(sym.compute_G0().size() == 2);

    AutContext asym(sm3({0, -1, 1, 1, 0, 0, -2, 0, 0}));
    CHECK(asym.compute_G0().size() == 1);
}

TEST_CASE("generated closures of the finite groups") {
    // unit weights: dihedral of order 12
    AutContext a3(sm3({0, -1, 1, 1, 0, 0, -1, 0, 0}));
    const std::vector<Automorphism> gens_a3 = {a3.make({1, 0, 2}, kId, +1),
                                               a3.make({1, 0, 1}, kId, -1)};
    const auto c12 = a3.generated_closure(gens_a3, 12, 4096);
    CHECK(c12.closed);
    CHECK(c12.elements.size() == 12);
    // the arm swap is not a generator but lies in the group
    CHECK(a3.in_closure(a3.make({}, kT23, -1), c12));

    // doubled arm: dihedral of order 8
    AutContext b3(sm3({0, -1, 1, 1, 0, 0, -2, 0, 0}));
    const std::vector<Automorphism> gens_b3 = {b3.make({1, 0, 2}, kId, +1),
                                               b3.make({1, 0, 1}, kId, -1)};
    const auto c8 = b3.generated_closure(gens_b3, 12, 4096);
    CHECK(c8.closed);
    CHECK(c8.elements.size() == 8);
}

TEST_CASE("relation scan reports involutions") {
    AutContext ctx(sm3({0, -1, 1, 1, 0, 0, -1, 0, 0}));
    const std::vector<Automorphism> gens = {ctx.make({1, 0, 2}, kId, +1),
                                            ctx.make({1, 0, 1}, kId, -1)};
    const auto rels = ctx.relation_scan(gens);
    CHECK(!rels.empty());
    bool involution = false;
    for (const auto& r : rels) involution = involution || (r.kind == "involution");
    CHECK(involution);
}

TEST_CASE("generator computation at an infinite two-arm root") {
    AutContext ctx(sm3({0, -2, 2, 2, 0, 0, -2, 0, 0}));
    const GroupEvidence ev = ctx.compute_generators();
    CHECK(ev.enumeration_complete);
    REQUIRE(ev.t_diamond.has_value());
    CHECK(ev.t_diamond->word == Word({0}));
    CHECK(ev.strata.stratified);
    CHECK(ev.strata.p10 == 6);
    CHECK(ev.strata.p12 == 0);
    CHECK(ev.generators.size() >= 2);
    for (const auto& e : ev.generators) {
        CHECK_NOTHROW(ctx.make(e.f.word, e.f.sigma, e.f.sign));
        CHECK(!e.stratum.empty());
    }
    // the fixing subgroup appears in the evidence with the identity first
    REQUIRE(!ev.g0.empty());
    CHECK(ctx.is_identity(ev.g0.front()));
}
