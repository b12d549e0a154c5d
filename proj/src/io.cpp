#include "clusteraut/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace clusteraut {
namespace {

using nlohmann::json;

std::string int_tuple_str(const std::vector<Int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].get_str();
    }
    return out + ")";
}

json json_int_list(const std::vector<Int>& v) {
    json arr = json::array();
    for (const Int& x : v) arr.push_back(x.get_str());
    return arr;
}

json json_word(const Word& w, const RunOptions& opt) {
    Word v = w;
    if (opt.reversed_words) std::reverse(v.begin(), v.end());
    json arr = json::array();
    for (int k : v) arr.push_back(k + 1);
    return arr;
}

std::vector<std::string> variable_names(int n) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    return names;
}

std::string spec_line(const GeneratorSpec& g, const RunOptions& opt) {
    return g.label + ": word=" + word_str_opt(g.word, opt.reversed_words) +
           " perm=" + g.sigma.one_line() + " sign=" + (g.sign > 0 ? "+" : "-");
}

std::string perm_list_str(const std::vector<SignedPerm>& ps) {
    std::string out;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) out += " ";
        out += ps[i].str();
    }
    return out;
}

}  // namespace

std::vector<Int> parse_int_list(const std::string& text) {
    std::string norm = text;
    for (char& c : norm)
        if (c == ',' || c == ';') c = ' ';
    std::istringstream in(norm);
    std::vector<Int> out;
    std::string tok;
    while (in >> tok) {
        try {
            out.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw input_error("'" + tok + "' is not an integer");
        }
    }
    if (out.empty()) throw input_error("empty integer list");
    return out;
}

Word parse_word_opt(const std::string& text, int n, bool reversed) {
    Word w = parse_word(text, n);
    if (reversed) std::reverse(w.begin(), w.end());
    return w;
}

std::string word_str_opt(Word w, bool reversed) {
    if (reversed) std::reverse(w.begin(), w.end());
    return word_str(w);
}

SymmetrizedMatrix read_matrix_input(const std::string& path, const std::string& inline_text,
                                    const std::string& symmetrizer_text) {
    if (path.empty() == inline_text.empty())
        throw input_error("provide exactly one of an input file or an inline matrix");
    std::string text;
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw input_error("cannot open input file: " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        text = inline_text;
    }
    SymmetrizedMatrix m = parse_matrix_text(text);
    if (!symmetrizer_text.empty())
        m = validate_or_derive_skew_symmetrizer(m.b, parse_int_list(symmetrizer_text));
    return m;
}

json json_of(const SymmetrizedMatrix& m) {
    json jb = json::array();
    for (int i = 0; i < m.b.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.b.n(); ++j) row.push_back(m.b.at(i, j).get_str());
        jb.push_back(std::move(row));
    }
    return json{{"n", m.b.n()}, {"b", jb}, {"d", json_int_list(m.d)}};
}

json json_of(const GeneratorSpec& g, const RunOptions& opt) {
    return json{{"label", g.label},
                {"word", json_word(g.word, opt)},
                {"perm", g.sigma.one_line()},
                {"sign", g.sign}};
}

json json_of(const Automorphism& f, const RunOptions& opt) {
    return json{{"word", json_word(f.word, opt)},
                {"perm", f.sigma.one_line()},
                {"sign", f.sign}};
}

std::string render_mutate(const SymmetrizedMatrix& m, const Word& w, const RunOptions& opt) {
    const Seed s = apply_word(initial_seed(m), w);
    const DVectorState dv = apply_word(initial_dvectors(m.b), w);
    const auto names = variable_names(m.b.n());

    if (opt.format == OutputFormat::structured) {
        json vars = json::array();
        for (const LaurentPoly& p : s.x) vars.push_back(p.str(names));
        json dvs = json::array();
        for (const auto& v : dv.d) dvs.push_back(json_int_list(v));
        json doc{{"schema_version", 1},
                 {"kind", "mutate"},
                 {"word", json_word(w, opt)},
                 {"matrix", json_of(s.m)},
                 {"variables", vars},
                 {"denominator_vectors", dvs}};
        return doc.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "word: " << word_str_opt(w, opt.reversed_words) << "\n";
    out << "exchange matrix:\n" << matrix_text(s.m);
    out << "cluster variables:\n";
    for (std::size_t i = 0; i < s.x.size(); ++i)
        out << "  " << names[i] << " = " << s.x[i].str(names) << "\n";
    out << "denominator vectors:\n";
    for (std::size_t i = 0; i < dv.d.size(); ++i)
        out << "  " << names[i] << ": " << int_tuple_str(dv.d[i]) << "\n";
    return out.str();
}

std::string render_classify(const SymmetrizedMatrix& m, bool check, const RunOptions& opt) {
    const CanonicalForm cf = minimal_representative(m);
    const TableRow row = lookup_aut_group(cf);
    std::optional<CrossCheckReport> rep;
    if (check) rep = cross_check(m, opt.search);
    const auto order = named_group_order(row.group);

    if (opt.format == OutputFormat::structured) {
        json w2 = json::array();
        for (const Int& x : cf.w2) w2.push_back(x.get_str());
        json gens = json::array();
        for (const GeneratorSpec& g : row.generators) gens.push_back(json_of(g, opt));
        json doc{{"schema_version", 1},
                 {"kind", "classify"},
                 {"canonical",
                  json{{"cyclic", cf.cyclic},
                       {"w2", w2},
                       {"d", json_int_list(cf.d)},
                       {"d_pattern", cf.d_pattern},
                       {"representative", json_of(cf.representative)},
                       {"descent_word", json_word(cf.descent_word, opt)},
                       {"relabeling", cf.relabeling.str()}}},
                 {"group",
                  json{{"name", named_group_str(row.group)},
                       {"order", order ? json(*order) : json(nullptr)},
                       {"presentation", named_group_presentation(row.group)},
                       {"descriptor", row.descriptor}}},
                 {"generators", gens}};
        if (rep) {
            doc["check"] =
                json{{"ok", rep->ok}, {"checks", rep->checks}, {"failures", rep->failures}};
        }
        return doc.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "canonical form: " << row.descriptor << "\n";
    out << "representative:\n" << matrix_text(cf.representative);
    out << "descent word: " << word_str_opt(cf.descent_word, opt.reversed_words) << "\n";
    out << "relabeling: " << cf.relabeling.str() << "\n";
    out << "group: " << named_group_str(row.group) << "\n";
    out << "order: " << (order ? std::to_string(*order) : std::string("infinite")) << "\n";
    out << "presentation: " << named_group_presentation(row.group) << "\n";
    out << "generators:\n";
    for (const GeneratorSpec& g : row.generators) out << "  " << spec_line(g, opt) << "\n";
    if (rep) {
        out << "cross-check: " << (rep->ok ? "PASS" : "FAIL") << "\n";
        for (const std::string& c : rep->checks) out << "  ok: " << c << "\n";
        for (const std::string& f : rep->failures) out << "  FAIL: " << f << "\n";
    }
    return out.str();
}

std::string render_aut(const SymmetrizedMatrix& m, const RunOptions& opt) {
    AutContext ctx(m, opt.search);
    const GroupEvidence ev = ctx.compute_generators();

    if (opt.format == OutputFormat::structured) {
        json g0 = json::array();
        for (const Automorphism& f : ev.g0) g0.push_back(json_of(f, opt));
        json gens = json::array();
        for (const GeneratorEntry& e : ev.generators) {
            json jg = json_of(e.f, opt);
            jg["stratum"] = e.stratum;
            jg["source_path"] = json_word(e.source_path, opt);
            jg["order"] = e.probe.str();
            gens.push_back(std::move(jg));
        }
        json rels = json::array();
        for (const RelationWitness& r : ev.relations)
            rels.push_back(json{{"kind", r.kind}, {"lhs", r.lhs}, {"rhs", r.rhs}});
        json doc{{"schema_version", 1},
                 {"kind", "aut"},
                 {"root", json_of(m)},
                 {"fixing_subgroup", g0},
                 {"diamond_vertex",
                  ev.t_diamond ? json_word(ev.t_diamond->word, opt) : json(nullptr)},
                 {"strata",
                  json{{"stratified", ev.strata.stratified},
                       {"p10", ev.strata.p10},
                       {"p11", ev.strata.p11},
                       {"p12", ev.strata.p12},
                       {"heavier", ev.strata.heavier},
                       {"k1_sources", ev.strata.k1_sources},
                       {"k1_kept", ev.strata.k1_kept}}},
                 {"generators", gens},
                 {"relations", rels},
                 {"enumeration_complete", ev.enumeration_complete}};
        return doc.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "root:\n" << matrix_text(m);
    out << "fixing subgroup (order " << ev.g0.size() << "):\n";
    for (const Automorphism& f : ev.g0) out << "  " << ctx.describe(f) << "\n";
    if (ev.t_diamond) {
        out << "diamond vertex: " << word_str_opt(ev.t_diamond->word, opt.reversed_words) << "\n";
        out << "strata: P(1,0)=" << ev.strata.p10 << " P(1,1)=" << ev.strata.p11
            << " P(1,2)=" << ev.strata.p12 << " heavier=" << ev.strata.heavier
            << " K1=" << ev.strata.k1_sources << " kept=" << ev.strata.k1_kept << "\n";
    } else {
        out << "diamond vertex: none\n";
    }
    out << "generators (" << ev.generators.size() << "):\n";
    for (const GeneratorEntry& e : ev.generators) {
        out << "  [" << e.stratum << "] " << ctx.describe(e.f) << " order=" << e.probe.str()
            << "\n";
    }
    out << "relations (" << ev.relations.size() << "):\n";
    for (const RelationWitness& r : ev.relations)
        out << "  " << r.kind << ": " << r.lhs << " = " << r.rhs << "\n";
    out << "enumeration: " << (ev.enumeration_complete ? "complete" : "depth-capped") << "\n";
    return out.str();
}

std::string render_explore(const SymmetrizedMatrix& m, const RunOptions& opt) {
    const EnumerationResult res = enumerate_P1(m, opt.search);

    if (opt.format == OutputFormat::structured) {
        json paths = json::array();
        for (const FoundPath& p : res.paths) {
            json perms = json::array();
            for (const SignedPerm& sp : p.perms) perms.push_back(sp.str());
            paths.push_back(json{{"word", json_word(p.word, opt)}, {"perms", perms}});
        }
        json doc{{"schema_version", 1},
                 {"kind", "explore"},
                 {"root", json_of(m)},
                 {"max_depth", opt.search.max_depth},
                 {"paths", paths},
                 {"complete", res.complete},
                 {"frontier_pruned", res.frontier_pruned},
                 {"depth_cut", res.depth_cut}};
        return doc.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "root:\n" << matrix_text(m);
    out << "first-return paths (depth <= " << opt.search.max_depth << "): " << res.paths.size()
        << "\n";
    for (const FoundPath& p : res.paths) {
        out << "  " << word_str_opt(p.word, opt.reversed_words) << " perms: "
            << perm_list_str(p.perms) << "\n";
    }
    out << "complete: " << (res.complete ? "yes" : "no") << " (pruned: " << res.frontier_pruned
        << ", depth-cut: " << res.depth_cut << ")\n";
    return out.str();
}

}  // namespace clusteraut
