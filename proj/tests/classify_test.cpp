#include "clusteraut/classify.hpp"

#include <doctest.h>

#include <random>

using namespace clusteraut;

namespace {

SymmetrizedMatrix sm3(std::vector<long> e, std::vector<long> dv = {}) {
    std::vector<Int> ee(e.begin(), e.end());
    std::optional<std::vector<Int>> d;
    if (!dv.empty()) d = std::vector<Int>(dv.begin(), dv.end());
    return validate_or_derive_skew_symmetrizer(ExchangeMatrix(3, std::move(ee)), d);
}

const SymmetrizedMatrix kMarkov = sm3({0, 2, -2, -2, 0, 2, 2, -2, 0});

}  // namespace

TEST_CASE("named groups") {
    CHECK(named_group_str(NamedGroup::trivial) == "1");
    CHECK(named_group_str(NamedGroup::z2) == "Z2");
    CHECK(named_group_str(NamedGroup::d6) == "D6");
    CHECK(named_group_str(NamedGroup::dinf) == "D∞");
    CHECK(named_group_str(NamedGroup::nxs3) == "N⋊S3");
    CHECK(named_group_order(NamedGroup::trivial) == 1);
    CHECK(named_group_order(NamedGroup::z2) == 2);
    CHECK(named_group_order(NamedGroup::z2xz2) == 4);
    CHECK(named_group_order(NamedGroup::s3) == 6);
    CHECK(named_group_order(NamedGroup::d4) == 8);
    CHECK(named_group_order(NamedGroup::d6) == 12);
    CHECK_FALSE(named_group_order(NamedGroup::z).has_value());
    CHECK_FALSE(named_group_order(NamedGroup::dinf).has_value());
    CHECK_FALSE(named_group_order(NamedGroup::nxs3).has_value());
    for (NamedGroup g :
         {NamedGroup::trivial, NamedGroup::z2, NamedGroup::z2xz2, NamedGroup::z, NamedGroup::s3,
          NamedGroup::d4, NamedGroup::d6, NamedGroup::dinf, NamedGroup::dinfxz2, NamedGroup::nfree,
          NamedGroup::nxz2, NamedGroup::nxs3}) {
        CHECK(!named_group_str(g).empty());
        CHECK(!named_group_presentation(g).empty());
    }
}

TEST_CASE("minimal representative of the symmetric cyclic class") {
    const CanonicalForm cf = minimal_representative(apply_word(kMarkov, {0, 1}));
    CHECK(cf.cyclic);
    CHECK(cf.w2 == std::array<Int, 3>{4, 4, 4});
    CHECK(cf.d == std::vector<Int>{1, 1, 1});
    CHECK(cf.d_pattern == std::vector<int>{0, 0, 0});
    CHECK(cf.representative == sm3({0, -2, 2, 2, 0, -2, -2, 2, 0}));
    // the recorded word and relabeling reproduce the representative
    const SymmetrizedMatrix input = apply_word(kMarkov, {0, 1});
    CHECK(apply_signed_perm(apply_word(input, cf.descent_word), cf.relabeling) ==
          cf.representative);
}

TEST_CASE("descent leaves a non-minimal cyclic shape") {
    // the unit oriented triangle mutates down to the three-vertex path
    const SymmetrizedMatrix tri = sm3({0, 1, -1, -1, 0, 1, 1, -1, 0});
    const CanonicalForm cf = minimal_representative(tri);
    CHECK_FALSE(cf.cyclic);
    CHECK(cf.w2 == std::array<Int, 3>{0, 1, 1});
    CHECK(cf.representative == sm3({0, -1, 1, 1, 0, 0, -1, 0, 0}));
    CHECK(cf.descent_word.size() == 1);
    CHECK(apply_signed_perm(apply_word(tri, cf.descent_word), cf.relabeling) == cf.representative);
}

TEST_CASE("acyclic representative is already canonical") {
    const SymmetrizedMatrix b3 = sm3({0, -1, 1, 1, 0, 0, -2, 0, 0});
    const CanonicalForm cf = minimal_representative(b3);
    CHECK_FALSE(cf.cyclic);
    CHECK(cf.w2 == std::array<Int, 3>{0, 1, 2});
    CHECK(cf.d_pattern == std::vector<int>{0, 0, 1});
    CHECK(cf.representative == b3);
    CHECK(cf.descent_word.empty());
    CHECK(cf.relabeling.sigma.is_identity());
    CHECK(cf.relabeling.sign == +1);

    // one step along the belt lands on the same representative
    CHECK(minimal_representative(apply_word(b3, {1})).representative == b3);
}

TEST_CASE("canonical form is a mutation invariant") {
    std::mt19937 rng(5u);
    std::uniform_int_distribution<int> pick(0, 2), len(1, 6);
    const std::vector<SymmetrizedMatrix> roots = {
        kMarkov,
        sm3({0, -1, 1, 1, 0, 0, -2, 0, 0}),
        sm3({0, -2, 2, 2, 0, 0, -2, 0, 0}),
        sm3({0, -2, 5, 10, 0, -5, -5, 1, 0}, {5, 1, 5}),
    };
    for (const auto& root : roots) {
        const std::string key = canonical_key(minimal_representative(root).representative, true);
        for (int trial = 0; trial < 5; ++trial) {
            Word w;
            for (int i = 0, m = len(rng); i < m; ++i) w.push_back(pick(rng));
            const CanonicalForm cf = minimal_representative(apply_word(root, w));
            CHECK(canonical_key(cf.representative, true) == key);
        }
    }
}

TEST_CASE("input validation of the classifier") {
    // disconnected
    CHECK_THROWS_AS(minimal_representative(sm3({0, 1, 0, -1, 0, 0, 0, 0, 0})), input_error);
    // wrong rank
    CHECK_THROWS_AS(
        minimal_representative(validate_or_derive_skew_symmetrizer(
            ExchangeMatrix(2, std::vector<Int>{0, 1, -1, 0}), std::nullopt)),
        input_error);
}

TEST_CASE("mutation-cyclic recognition") {
    CHECK(is_mutation_cyclic(kMarkov));
    CHECK(is_mutation_cyclic(sm3({0, 3, -3, -3, 0, 3, 3, -3, 0})));
    // boundary case: the weight inequality holds with equality
    CHECK(is_mutation_cyclic(sm3({0, -2, 5, 10, 0, -5, -5, 1, 0}, {5, 1, 5})));
    // cyclically oriented but mutation-acyclic
    CHECK_FALSE(is_mutation_cyclic(sm3({0, 1, -1, -1, 0, 1, 1, -1, 0})));
    CHECK_FALSE(is_mutation_cyclic(sm3({0, -1, 1, 1, 0, 0, -2, 0, 0})));
    CHECK_FALSE(is_mutation_cyclic(sm3({0, -2, 2, 2, 0, 0, -2, 0, 0})));
}

TEST_CASE("fixing-subgroup order prediction") {
    CHECK(expected_G0_order(minimal_representative(kMarkov)) == 6);
    CHECK(expected_G0_order(minimal_representative(sm3({0, -2, 2, 2, 0, 0, -2, 0, 0}))) == 2);
    CHECK(expected_G0_order(minimal_representative(sm3({0, -1, 1, 1, 0, 0, -2, 0, 0}))) == 1);
    CHECK(expected_G0_order(minimal_representative(
              sm3({0, -3, 9, 3, 0, -9, -1, 1, 0}, {1, 1, 9}))) == 2);
    CHECK(expected_G0_order(minimal_representative(
              sm3({0, -8, 12, 4, 0, -4, -3, 2, 0}, {1, 2, 4}))) == 1);
}

TEST_CASE("group lookup on landmark classes") {
    const TableRow markov = lookup_aut_group(minimal_representative(kMarkov));
    CHECK(markov.group == NamedGroup::nxs3);
    CHECK(markov.generators.size() == 5);

    CHECK(lookup_aut_group(minimal_representative(sm3({0, 1, 0, -1, 0, 1, 0, -1, 0}))).group ==
          NamedGroup::d6);
    CHECK(lookup_aut_group(minimal_representative(sm3({0, -1, 1, 1, 0, 0, -2, 0, 0}))).group ==
          NamedGroup::d4);
    CHECK(lookup_aut_group(minimal_representative(sm3({0, -2, 2, 2, 0, 0, -2, 0, 0}))).group ==
          NamedGroup::dinfxz2);
    CHECK(lookup_aut_group(minimal_representative(sm3({0, -1, 1, 1, 0, 0, -3, 0, 0}))).group ==
          NamedGroup::dinf);
    CHECK(lookup_aut_group(minimal_representative(
              sm3({0, -8, 12, 4, 0, -4, -3, 2, 0}, {1, 2, 4}))).group == NamedGroup::trivial);
    // every generator in a row must carry a nonempty label
    for (const auto& g : markov.generators) CHECK(!g.label.empty());
}

TEST_CASE("realization enumeration") {
    CHECK(enumerate_rank3_realizations(false, 0, 1, 1).size() == 1);
    CHECK(enumerate_rank3_realizations(false, 0, 2, 2).size() == 4);
    // entry ratios around a cycle must multiply to one
    CHECK(enumerate_rank3_realizations(true, 2, 2, 2).empty());
    CHECK(enumerate_rank3_realizations(true, 4, 4, 4).size() == 7);
    CHECK_THROWS_AS(enumerate_rank3_realizations(true, 0, 1, 1), input_error);
    CHECK_THROWS_AS(enumerate_rank3_realizations(false, 0, 0, 1), input_error);
    // every returned matrix validates and realizes the requested weights
    for (const auto& m : enumerate_rank3_realizations(true, 4, 4, 16)) {
        CHECK_NOTHROW(validate_or_derive_skew_symmetrizer(m.b, m.d));
        CHECK(m.b.at(2, 1) * m.b.at(1, 2) * Int(-1) == 4);
    }
}

TEST_CASE("cross-checks on landmark classes") {
    const CrossCheckReport cm = cross_check(kMarkov);
    CHECK(cm.ok);
    CHECK(cm.row.group == NamedGroup::nxs3);
    CHECK(cm.failures.empty());
    CHECK(!cm.checks.empty());

    const CrossCheckReport ca = cross_check(sm3({0, 1, 0, -1, 0, 1, 0, -1, 0}));
    CHECK(ca.ok);
    CHECK(ca.row.group == NamedGroup::d6);

    const CrossCheckReport ci = cross_check(sm3({0, -2, 2, 2, 0, 0, -2, 0, 0}));
    CHECK(ci.ok);
    CHECK(ci.row.group == NamedGroup::dinfxz2);
}
