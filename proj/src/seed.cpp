#include "clusteraut/seed.hpp"

#include <sstream>

namespace clusteraut {

Word reduce_word(Word w) {
    Word out;
    for (int letter : w) {
        if (!out.empty() && out.back() == letter)
            out.pop_back();
        else
            out.push_back(letter);
    }
    return out;
}

std::string word_str(const Word& w) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out << ",";
        out << w[i] + 1;
    }
    out << "]";
    return out.str();
}

Word parse_word(const std::string& text, int n) {
    std::string norm = text;
    for (char& c : norm)
        if (c == ',' || c == '[' || c == ']') c = ' ';
    std::istringstream in(norm);
    Word w;
    long v;
    while (in >> v) {
        if (v < 1 || v > n) throw input_error("word: letter out of range");
        w.push_back(static_cast<int>(v - 1));
    }
    if (!in.eof()) throw input_error("word: malformed letter");
    return w;
}

Word apply_perm_word(const Perm& sigma, const Word& w) {
    Word out;
    out.reserve(w.size());
    for (int letter : w) out.push_back(sigma(letter));
    return out;
}

Seed initial_seed(const SymmetrizedMatrix& m) {
    Seed s;
    s.m = m;
    const int n = m.b.n();
    s.x.reserve(n);
    for (int i = 0; i < n; ++i) s.x.push_back(LaurentPoly::variable(n, i));
    return s;
}

namespace {

unsigned long to_ulong_exponent(const Int& v) {
    if (v < 0 || !v.fits_ulong_p()) throw internal_error("exchange exponent out of range");
    return v.get_ui();
}

}  // namespace

Seed mutate_seed(const Seed& s, int k) {
    const int n = s.m.b.n();
    if (k < 0 || k >= n) throw input_error("mutate_seed: direction out of range");
    LaurentPoly pos = LaurentPoly::constant(n, 1);
    LaurentPoly neg = LaurentPoly::constant(n, 1);
    for (int j = 0; j < n; ++j) {
        const Int& bjk = s.m.b.at(j, k);
        if (bjk > 0)
            pos = pos * s.x[j].pow(to_ulong_exponent(bjk));
        else if (bjk < 0)
            neg = neg * s.x[j].pow(to_ulong_exponent(Int(-bjk)));
    }
    Seed r = s;
    r.m.b = mutate_matrix(s.m.b, k);
    try {
        r.x[k] = laurent_exact_div(pos + neg, s.x[k]);
    } catch (const laurent_division_error& e) {
        throw internal_error(std::string("mutate_seed: exchange division failed: ") + e.what());
    }
    return r;
}

DVectorState initial_dvectors(const ExchangeMatrix& b) {
    DVectorState s;
    s.b = b;
    const int n = b.n();
    s.d.assign(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) s.d[i][i] = -1;
    return s;
}

DVectorState mutate_dvectors(const DVectorState& s, int k) {
    const int n = s.b.n();
    if (k < 0 || k >= n) throw input_error("mutate_dvectors: direction out of range");
    std::vector<Int> pos(n, 0), neg(n, 0);
    for (int j = 0; j < n; ++j) {
        const Int& bjk = s.b.at(j, k);
        if (bjk > 0)
            for (int v = 0; v < n; ++v) pos[v] += bjk * s.d[j][v];
        else if (bjk < 0)
            for (int v = 0; v < n; ++v) neg[v] += -bjk * s.d[j][v];
    }
    DVectorState r = s;
    r.b = mutate_matrix(s.b, k);
    for (int v = 0; v < n; ++v) r.d[k][v] = -s.d[k][v] + (pos[v] > neg[v] ? pos[v] : neg[v]);
    return r;
}

std::vector<Int> dvector_of_variable(const LaurentPoly& p) {
    std::vector<Int> d(p.nvars());
    for (int v = 0; v < p.nvars(); ++v) d[v] = -Int(laurent_lowest_degree(p, v));
    return d;
}

std::optional<int> initial_variable_index(const std::vector<Int>& d) {
    int idx = -1;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == -1) {
            if (idx != -1) return std::nullopt;
            idx = static_cast<int>(i);
        } else if (d[i] != 0) {
            return std::nullopt;
        }
    }
    if (idx == -1) return std::nullopt;
    return idx;
}

Seed apply_word(Seed s, const Word& w) {
    for (int k : w) s = mutate_seed(s, k);
    return s;
}

DVectorState apply_word(DVectorState s, const Word& w) {
    for (int k : w) s = mutate_dvectors(s, k);
    return s;
}

ExchangeMatrix apply_word(ExchangeMatrix b, const Word& w) {
    for (int k : w) b = mutate_matrix(b, k);
    return b;
}

SymmetrizedMatrix apply_word(SymmetrizedMatrix m, const Word& w) {
    m.b = apply_word(m.b, w);
    return m;
}

std::string seed_str(const Seed& s) {
    std::ostringstream out;
    for (std::size_t i = 0; i < s.x.size(); ++i)
        out << "x" << (i + 1) << " = " << s.x[i].str() << "\n";
    out << matrix_text(s.m);
    return out.str();
}

}  // namespace clusteraut
