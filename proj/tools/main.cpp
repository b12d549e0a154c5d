#include "clusteraut/io.hpp"
#include "clusteraut/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace clusteraut;

int main(int argc, char** argv) {
    CLI::App app{"exact mutation engine and automorphism-group classifier for rank-3 seeds"};
    app.require_subcommand(1);

    std::string input_path, inline_matrix, symmetrizer, word_text, format = "text";
    bool reversed = false;
    bool check = false;
    int depth = 14, max_power = 12, criterion = 0;

    auto add_common = [&](CLI::App* sub, bool needs_matrix) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "structured"}));
        sub->add_flag("--reversed-words", reversed,
                      "read and print mutation words rightmost-letter-first");
        if (needs_matrix) {
            sub->add_option("--input", input_path, "file holding the matrix text");
            sub->add_option("--matrix", inline_matrix,
                            "inline matrix text: n, n*n entries, optional 'D:' symmetrizer");
            sub->add_option("--symmetrizer", symmetrizer,
                            "symmetrizer entries to validate, e.g. '1,2,4'");
        }
    };

    CLI::App* cmd_mutate = app.add_subcommand("mutate", "apply a mutation word to the initial seed");
    add_common(cmd_mutate, true);
    cmd_mutate->add_option("--word", word_text, "mutation word, 1-based letters")->required();

    CLI::App* cmd_classify =
        app.add_subcommand("classify", "canonical form and automorphism group");
    add_common(cmd_classify, true);
    cmd_classify->add_flag("--check", check, "run the structural cross-check");

    CLI::App* cmd_aut = app.add_subcommand("aut", "automorphism generators and evidence");
    add_common(cmd_aut, true);
    cmd_aut->add_option("--depth", depth, "first-return search depth cap");
    cmd_aut->add_option("--max-power", max_power, "order-probe power bound");

    CLI::App* cmd_explore = app.add_subcommand("explore", "enumerate first-return paths");
    add_common(cmd_explore, true);
    cmd_explore->add_option("--depth", depth, "first-return search depth cap");

    CLI::App* cmd_verify = app.add_subcommand("verify", "run the self-verification criteria");
    cmd_verify->add_option("--criterion", criterion, "criterion id 1..10 (default: all)");

    CLI11_PARSE(app, argc, argv);

    try {
        RunOptions opt;
        opt.format = (format == "structured") ? OutputFormat::structured : OutputFormat::text;
        opt.reversed_words = reversed;
        opt.max_power = max_power;
        opt.search.max_depth = depth;

        if (app.got_subcommand(cmd_verify)) {
            std::vector<int> ids;
            if (criterion != 0) ids.push_back(criterion);
            bool all_pass = true;
            for (const CriterionResult& r : run_criteria(ids)) {
                std::cout << criterion_line(r) << "\n";
                all_pass = all_pass && r.pass;
            }
            return all_pass ? 0 : 3;
        }

        const SymmetrizedMatrix m = read_matrix_input(input_path, inline_matrix, symmetrizer);
        if (app.got_subcommand(cmd_mutate)) {
            const Word w = parse_word_opt(word_text, m.b.n(), opt.reversed_words);
            std::cout << render_mutate(m, w, opt);
        } else if (app.got_subcommand(cmd_classify)) {
            std::cout << render_classify(m, check, opt);
        } else if (app.got_subcommand(cmd_aut)) {
            std::cout << render_aut(m, opt);
        } else if (app.got_subcommand(cmd_explore)) {
            std::cout << render_explore(m, opt);
        }
        return 0;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
