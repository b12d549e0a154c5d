#pragma once
//
// Input parsing and report rendering for the command-line tool: matrix,
// symmetrizer and word parsing, plus deterministic text and JSON renderings
// of mutation, classification, automorphism-evidence and exploration runs.
// JSON documents carry "schema_version": 1; all exact integers are encoded
// as decimal strings so arbitrarily large entries survive serialization.
//
#include "clusteraut/classify.hpp"

#include <json.hpp>

#include <string>

namespace clusteraut {

enum class OutputFormat { text, structured };

struct RunOptions {
    OutputFormat format = OutputFormat::text;
    // Parse and print mutation words rightmost-letter-first (composition
    // order) instead of the default path order.
    bool reversed_words = false;
    int max_power = 12;  // order-probe bound
    SearchConfig search;
};

// Comma/space separated integers, e.g. "1,2,4".
std::vector<Int> parse_int_list(const std::string& text);

// Word helpers honoring the reversed-words convention (1-based text letters).
Word parse_word_opt(const std::string& text, int n, bool reversed);
std::string word_str_opt(Word w, bool reversed);

// Loads the exchange matrix from exactly one of a file path or inline text
// (format: "n  entries...  [D: d1 .. dn]"); a nonempty symmetrizer_text
// overrides/validates the symmetrizer.
SymmetrizedMatrix read_matrix_input(const std::string& path, const std::string& inline_text,
                                    const std::string& symmetrizer_text);

// JSON building blocks (exact integers as decimal strings).
nlohmann::json json_of(const SymmetrizedMatrix& m);
nlohmann::json json_of(const GeneratorSpec& g, const RunOptions& opt);
nlohmann::json json_of(const Automorphism& f, const RunOptions& opt);

// One rendered report per tool verb; returns the complete output document.
std::string render_mutate(const SymmetrizedMatrix& m, const Word& w, const RunOptions& opt);
std::string render_classify(const SymmetrizedMatrix& m, bool check, const RunOptions& opt);
std::string render_aut(const SymmetrizedMatrix& m, const RunOptions& opt);
std::string render_explore(const SymmetrizedMatrix& m, const RunOptions& opt);

}  // namespace clusteraut
