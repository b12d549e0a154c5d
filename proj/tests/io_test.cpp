#include "clusteraut/io.hpp"

#include <doctest.h>

using namespace clusteraut;

TEST_CASE("integer list and word parsing") {
    CHECK(parse_int_list("1,2,4") == std::vector<Int>{1, 2, 4});
    CHECK(parse_int_list("1 2 4") == std::vector<Int>{1, 2, 4});
    CHECK_THROWS_AS(parse_int_list(""), input_error);
    CHECK_THROWS_AS(parse_int_list("1,x"), input_error);

    // path order by default, composition order behind the flag
    CHECK(parse_word_opt("2,1,3", 3, false) == Word({1, 0, 2}));
    CHECK(parse_word_opt("2,1,3", 3, true) == Word({2, 0, 1}));
    CHECK(word_str_opt({1, 0, 2}, false) == "[2,1,3]");
    CHECK(word_str_opt({1, 0, 2}, true) == "[3,1,2]");
    // the two conventions round-trip through each other
    const Word w{0, 2, 1, 2};
    CHECK(parse_word_opt(word_str_opt(w, true).substr(1, 7), 3, true) == w);
}

TEST_CASE("matrix input") {
    const SymmetrizedMatrix m =
        read_matrix_input("", "3 0 -1 1 1 0 0 -2 0 0", "");
    CHECK(m.d == std::vector<Int>{2, 2, 1});

    // an explicit symmetrizer must be consistent
    const SymmetrizedMatrix scaled =
        read_matrix_input("", "3 0 -1 1 1 0 0 -2 0 0", "4,4,2");
    CHECK(scaled.d == std::vector<Int>{4, 4, 2});
    CHECK_THROWS_AS(read_matrix_input("", "3 0 -1 1 1 0 0 -2 0 0", "1,1,1"), input_error);

    // exactly one source must be given
    CHECK_THROWS_AS(read_matrix_input("", "", ""), input_error);
    CHECK_THROWS_AS(read_matrix_input("/tmp/x", "3 0 0 0 0 0 0 0 0 0", ""), input_error);
    // missing file
    CHECK_THROWS_AS(read_matrix_input("/nonexistent/matrix.txt", "", ""), input_error);

    // inline D section round trip
    const SymmetrizedMatrix heavy =
        read_matrix_input("", "3 0 -2 5 10 0 -5 -5 1 0 D: 5 1 5", "");
    CHECK(heavy.d == std::vector<Int>{5, 1, 5});
    CHECK(read_matrix_input("", matrix_text(heavy), "") == heavy);
}

TEST_CASE("rendering is deterministic") {
    const SymmetrizedMatrix m = read_matrix_input("", "3 0 -1 1 1 0 0 -1 0 0", "");
    RunOptions opt;
    CHECK(render_mutate(m, {1, 0, 2}, opt) == render_mutate(m, {1, 0, 2}, opt));
    CHECK(render_classify(m, false, opt) == render_classify(m, false, opt));
    CHECK(render_aut(m, opt) == render_aut(m, opt));
    CHECK(render_explore(m, opt) == render_explore(m, opt));
}

TEST_CASE("text reports carry the headline facts") {
    const SymmetrizedMatrix m = read_matrix_input("", "3 0 -1 1 1 0 0 -1 0 0", "");
    RunOptions opt;

    const std::string mut = render_mutate(m, {1, 0, 2}, opt);
    CHECK(mut.find("[2,1,3]") != std::string::npos);
    CHECK(mut.find("x1") != std::string::npos);

    const std::string cls = render_classify(m, true, opt);
    CHECK(cls.find("group: D6") != std::string::npos);
    CHECK(cls.find("order: 12") != std::string::npos);
    CHECK(cls.find("cross-check: PASS") != std::string::npos);

    const std::string aut = render_aut(m, opt);
    CHECK(aut.find("fixing") != std::string::npos);

    const std::string exp = render_explore(m, opt);
    CHECK(exp.find("complete") != std::string::npos);
}

TEST_CASE("structured reports parse and carry the schema version") {
    const SymmetrizedMatrix m = read_matrix_input("", "3 0 -1 1 1 0 0 -1 0 0", "");
    RunOptions opt;
    opt.format = OutputFormat::structured;

    const auto mut = nlohmann::json::parse(render_mutate(m, {1, 0, 2}, opt));
    CHECK(mut.at("schema_version") == 1);
    CHECK(mut.at("kind") == "mutate");
    CHECK(mut.at("word") == nlohmann::json::array({2, 1, 3}));

    const auto cls = nlohmann::json::parse(render_classify(m, true, opt));
    CHECK(cls.at("kind") == "classify");
    CHECK(cls.at("group").at("name") == "D6");
    CHECK(cls.at("group").at("order") == 12);
    CHECK(cls.at("check").at("ok") == true);
    CHECK(!cls.at("generators").empty());

    const auto aut = nlohmann::json::parse(render_aut(m, opt));
    CHECK(aut.at("kind") == "aut");
    CHECK(aut.at("schema_version") == 1);

    const auto exp = nlohmann::json::parse(render_explore(m, opt));
    CHECK(exp.at("kind") == "explore");
    CHECK(exp.at("complete") == true);

    // exact integers serialize as decimal strings
    const auto jm = json_of(m);
    CHECK(jm.at("n") == 3);
    CHECK(jm.at("b").at(0).at(1) == "-1");
    CHECK(jm.at("d").at(0) == "1");
}

TEST_CASE("markov exploration lists the three unit returns") {
    const SymmetrizedMatrix markov = read_matrix_input("", "3 0 2 -2 -2 0 2 2 -2 0", "");
    RunOptions opt;
    opt.format = OutputFormat::structured;
    const auto exp = nlohmann::json::parse(render_explore(markov, opt));
    CHECK(exp.at("paths").size() == 3);
    CHECK(exp.at("paths").at(0).at("word") == nlohmann::json::array({1}));
    CHECK(exp.at("complete") == true);
}
