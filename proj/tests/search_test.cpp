#include "clusteraut/search.hpp"

#include <doctest.h>

#include <algorithm>

using namespace clusteraut;

namespace {

SymmetrizedMatrix sm3(std::vector<long> e, std::vector<long> dv = {}) {
    std::vector<Int> ee(e.begin(), e.end());
    std::optional<std::vector<Int>> d;
    if (!dv.empty()) d = std::vector<Int>(dv.begin(), dv.end());
    return validate_or_derive_skew_symmetrizer(ExchangeMatrix(3, std::move(ee)), d);
}

std::vector<Word> words_of(const std::vector<FoundPath>& paths) {
    std::vector<Word> w;
    for (const auto& p : paths) w.push_back(p.word);
    return w;
}

}  // namespace

TEST_CASE("path weights count equivalent vertices") {
    const SymmetrizedMatrix root = sm3({0, -2, 2, 2, 0, 0, -2, 0, 0});
    CHECK(path_weight(root, {}, root) == 1);
    CHECK(path_weight(root, {0}, root) == 1);      // the far vertex is a triangle
    CHECK(path_weight(root, {1, 2}, root) == 2);   // endpoint is minus the root
    CHECK(path_weight(root, {1, 0, 2}, root) == 2);
    // against an off-class reference nothing matches
    const SymmetrizedMatrix other = sm3({0, 2, -2, -2, 0, 2, 2, -2, 0});
    CHECK(path_weight(root, {1, 2}, other) == 0);
}

TEST_CASE("first returns at a two-arm root with equal weights") {
    const SymmetrizedMatrix root = sm3({0, -2, 2, 2, 0, 0, -2, 0, 0});
    const EnumerationResult r = enumerate_P1(root);
    CHECK(r.complete);
    CHECK(r.depth_cut == 0);
    const std::vector<Word> want = {
        {1, 0, 1}, {1, 0, 2}, {1, 2}, {2, 0, 1}, {2, 0, 2}, {2, 1}};
    CHECK(words_of(r.paths) == want);
    // equal arm weights give a two-element relabeling coset at every endpoint
    for (const auto& p : r.paths) CHECK(p.perms.size() == 2);
    // the cyclic excursion was cut by a sound prune, not the depth cap
    CHECK(r.frontier_pruned > 0);
}

TEST_CASE("first returns at the fully cyclic symmetric root") {
    const SymmetrizedMatrix markov = sm3({0, 2, -2, -2, 0, 2, 2, -2, 0});
    const EnumerationResult r = enumerate_P1(markov);
    CHECK(r.complete);
    const std::vector<Word> want = {{0}, {1}, {2}};
    CHECK(words_of(r.paths) == want);
    for (const auto& p : r.paths) CHECK(p.perms.size() == 6);
    // every neighbor is equivalent to minus the root, so no diamond vertex exists
    CHECK_FALSE(find_t_diamond(markov).has_value());
}

TEST_CASE("finite classes enumerate completely") {
    // three-vertex path with unit weights
    const SymmetrizedMatrix a3 = sm3({0, 1, 0, -1, 0, 1, 0, -1, 0});
    const EnumerationResult ra = enumerate_P1(a3);
    CHECK(ra.complete);
    CHECK(!ra.paths.empty());

    // doubled arrow on one arm
    const SymmetrizedMatrix b3 = sm3({0, -1, 1, 1, 0, 0, -2, 0, 0});
    const EnumerationResult rb = enumerate_P1(b3);
    CHECK(rb.complete);
    const std::vector<Word> standard = {
        {1, 0, 1}, {1, 0, 2}, {1, 2}, {2, 0, 1}, {2, 0, 2}, {2, 1}};
    const std::vector<Word> got = words_of(rb.paths);
    for (const auto& w : standard)
        CHECK(std::find(got.begin(), got.end(), w) != got.end());
    // finite classes have no diamond vertex
    CHECK_FALSE(find_t_diamond(b3).has_value());
}

TEST_CASE("diamond vertex and strata at the affine two-arm root") {
    const SymmetrizedMatrix root = sm3({0, -1, 1, 1, 0, 0, -3, 0, 0});
    const auto td = find_t_diamond(root);
    REQUIRE(td.has_value());
    CHECK(td->word == Word({0, 2}));

    // The class is infinite and no prune applies, so the enumeration is
    // depth-capped; the weight-<=2 strata are complete and exact, while
    // heavier (redundant) returns keep appearing at every depth.
    const StratifiedP1 s = enumerate_P1_stratified(root, *td);
    CHECK_FALSE(s.all.complete);
    CHECK(s.p10.size() == 7);
    CHECK(s.p11.size() == 0);
    CHECK(s.p12.size() == 4);
    CHECK(!s.heavier.empty());
    CHECK(s.p10.size() + s.p11.size() + s.p12.size() + s.heavier.size() == s.all.paths.size());

    std::vector<Word> collapsed = words_of(s.k1_collapsed);
    std::sort(collapsed.begin(), collapsed.end());
    const std::vector<Word> want = {{0, 2, 0, 2, 0}, {0, 2, 1, 2, 0}};
    CHECK(collapsed == want);
    CHECK(s.k1_sources.size() >= s.k1_collapsed.size());
}

TEST_CASE("weight-sum local minimality") {
    CHECK(weight_sum_locally_minimal(sm3({0, 2, -2, -2, 0, 2, 2, -2, 0})));
    CHECK(weight_sum_locally_minimal(sm3({0, -2, 2, 2, 0, 0, -2, 0, 0})));
    CHECK(weight_sum_locally_minimal(sm3({0, -1, 1, 1, 0, 0, -2, 0, 0})));
    // one step off the two-arm minimum: an oriented triangle that can shrink back
    const SymmetrizedMatrix off = apply_word(sm3({0, -2, 2, 2, 0, 0, -2, 0, 0}), {0});
    CHECK_FALSE(weight_sum_locally_minimal(off));
}
