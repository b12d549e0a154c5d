#include "clusteraut/matrix.hpp"

#include <queue>
#include <sstream>

namespace clusteraut {

ExchangeMatrix::ExchangeMatrix(int n, std::vector<Int> entries) : n_(n), e_(std::move(entries)) {
    if (n_ < 0 || e_.size() != static_cast<std::size_t>(n_) * n_)
        throw input_error("ExchangeMatrix: entry count does not match size");
}

bool ExchangeMatrix::operator<(const ExchangeMatrix& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return e_ < o.e_;
}

std::string ExchangeMatrix::str() const {
    std::ostringstream out;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (j) out << " ";
            out << at(i, j).get_str();
        }
        if (i + 1 < n_) out << "\n";
    }
    return out.str();
}

SymmetrizedMatrix validate_or_derive_skew_symmetrizer(const ExchangeMatrix& b,
                                                      const std::optional<std::vector<Int>>& d) {
    const int n = b.n();
    for (int i = 0; i < n; ++i) {
        if (b.at(i, i) != 0) throw input_error("matrix: nonzero diagonal entry");
        for (int j = i + 1; j < n; ++j) {
            const Int& x = b.at(i, j);
            const Int& y = b.at(j, i);
            if ((x == 0) != (y == 0))
                throw input_error("matrix: sign pattern violated (entry zero opposite nonzero)");
            if (x != 0 && sgn(x) == sgn(y))
                throw input_error("matrix: sign pattern violated (opposite entries share a sign)");
        }
    }

    if (d) {
        if (static_cast<int>(d->size()) != n) throw input_error("symmetrizer: wrong length");
        for (const Int& di : *d)
            if (di <= 0) throw input_error("symmetrizer: entries must be positive");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if ((*d)[i] * b.at(i, j) != -(*d)[j] * b.at(j, i))
                    throw input_error("symmetrizer: D*B is not skew-symmetric");
        return {b, *d};
    }

    // Derive D: propagate ratios d_j = d_i * |b_ij| / |b_ji| across edges of
    // each connected component, verify consistency, then scale the component
    // to positive integers with gcd 1.
    std::vector<Rat> ratio(n);
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int root = 0; root < n; ++root) {
        if (comp[root] != -1) continue;
        comp[root] = ncomp;
        ratio[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int i = q.front();
            q.pop();
            for (int j = 0; j < n; ++j) {
                if (b.at(i, j) == 0) continue;
                Rat rj = ratio[i] * Rat(abs(b.at(i, j))) / Rat(abs(b.at(j, i)));
                rj.canonicalize();
                if (comp[j] == -1) {
                    comp[j] = ncomp;
                    ratio[j] = rj;
                    q.push(j);
                } else if (ratio[j] != rj) {
                    throw input_error("matrix: not skew-symmetrizable (inconsistent ratio cycle)");
                }
            }
        }
        ++ncomp;
    }
    std::vector<Int> out(n, 1);
    for (int c = 0; c < ncomp; ++c) {
        Int denlcm = 1;
        for (int i = 0; i < n; ++i)
            if (comp[i] == c) denlcm = lcm(denlcm, ratio[i].get_den());
        Int g = 0;
        for (int i = 0; i < n; ++i)
            if (comp[i] == c) g = gcd(g, Int(ratio[i].get_num() * (denlcm / ratio[i].get_den())));
        for (int i = 0; i < n; ++i)
            if (comp[i] == c) out[i] = ratio[i].get_num() * (denlcm / ratio[i].get_den()) / g;
    }
    // Cross-check the derived symmetrizer exactly.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (out[i] * b.at(i, j) != -out[j] * b.at(j, i))
                throw input_error("matrix: not skew-symmetrizable");
    return {b, out};
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k) {
    const int n = b.n();
    if (k < 0 || k >= n) throw input_error("mutate_matrix: direction out of range");
    ExchangeMatrix r = b;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == k || j == k) {
                r.at(i, j) = -b.at(i, j);
            } else {
                const Int& bik = b.at(i, k);
                const Int& bkj = b.at(k, j);
                Int pos_ik = bik > 0 ? bik : Int(0);
                Int neg_ik = bik < 0 ? Int(-bik) : Int(0);
                Int pos_kj = bkj > 0 ? bkj : Int(0);
                Int neg_kj = bkj < 0 ? Int(-bkj) : Int(0);
                r.at(i, j) = b.at(i, j) + pos_ik * pos_kj - neg_ik * neg_kj;
            }
        }
    }
    return r;
}

ExchangeMatrix apply_perm_matrix(const ExchangeMatrix& b, const SignedPerm& sp) {
    const int n = b.n();
    Perm inv = sp.sigma.inverse();
    ExchangeMatrix r = b;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = Int(sp.sign) * b.at(inv(i), inv(j));
    return r;
}

std::vector<Int> apply_perm_symmetrizer(const std::vector<Int>& d, const Perm& sigma) {
    Perm inv = sigma.inverse();
    std::vector<Int> r(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) r[i] = d[inv(static_cast<int>(i))];
    return r;
}

SymmetrizedMatrix apply_signed_perm(const SymmetrizedMatrix& m, const SignedPerm& sp) {
    return {apply_perm_matrix(m.b, sp), apply_perm_symmetrizer(m.d, sp.sigma)};
}

std::vector<SignedPerm> signed_perm_equivalences(const SymmetrizedMatrix& b1,
                                                 const SymmetrizedMatrix& b2,
                                                 bool require_symmetrizer_match) {
    if (b1.b.n() != b2.b.n()) return {};
    std::vector<SignedPerm> out;
    for (const Perm& sigma : Perm::all(b1.b.n())) {
        for (int sign : {+1, -1}) {
            SignedPerm sp{sigma, sign};
            if (apply_perm_matrix(b1.b, sp) != b2.b) continue;
            if (require_symmetrizer_match && apply_perm_symmetrizer(b1.d, sigma) != b2.d) continue;
            out.push_back(sp);
        }
    }
    return out;
}

bool is_connected_matrix(const ExchangeMatrix& b) {
    const int n = b.n();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int count = 1;
    while (!q.empty()) {
        int i = q.front();
        q.pop();
        for (int j = 0; j < n; ++j) {
            if (!seen[j] && b.at(i, j) != 0) {
                seen[j] = true;
                ++count;
                q.push(j);
            }
        }
    }
    return count == n;
}

bool is_acyclic_matrix(const ExchangeMatrix& b) {
    const int n = b.n();
    // Kahn peeling on arrows i -> j whenever b_ij > 0.
    std::vector<int> indeg(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (b.at(i, j) > 0) ++indeg[j];
    std::queue<int> q;
    std::vector<bool> removed(n, false);
    for (int i = 0; i < n; ++i)
        if (indeg[i] == 0) q.push(i);
    int peeled = 0;
    while (!q.empty()) {
        int i = q.front();
        q.pop();
        removed[i] = true;
        ++peeled;
        for (int j = 0; j < n; ++j) {
            if (!removed[j] && b.at(i, j) > 0 && --indeg[j] == 0) q.push(j);
        }
    }
    return peeled == n;
}

std::vector<Int> canonical_orbit_min(const SymmetrizedMatrix& m, bool include_symmetrizer) {
    std::vector<Int> best;
    bool first = true;
    for (const Perm& sigma : Perm::all(m.b.n())) {
        for (int sign : {+1, -1}) {
            SignedPerm sp{sigma, sign};
            ExchangeMatrix v = apply_perm_matrix(m.b, sp);
            std::vector<Int> ser = v.row_major();
            if (include_symmetrizer) {
                std::vector<Int> dd = apply_perm_symmetrizer(m.d, sigma);
                ser.insert(ser.end(), dd.begin(), dd.end());
            }
            if (first || ser < best) {
                best = std::move(ser);
                first = false;
            }
        }
    }
    return best;
}

std::string canonical_key(const SymmetrizedMatrix& m, bool include_symmetrizer) {
    std::vector<Int> v = canonical_orbit_min(m, include_symmetrizer);
    std::ostringstream out;
    for (const Int& x : v) out << x.get_str() << ",";
    return out.str();
}

SymmetrizedMatrix parse_matrix_text(const std::string& text) {
    std::string norm = text;
    for (char& c : norm)
        if (c == ';' || c == ',') c = ' ';
    std::istringstream in(norm);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    if (tokens.empty()) throw input_error("matrix text: empty input");

    std::size_t pos = 0;
    auto next_int = [&](const char* what) -> Int {
        if (pos >= tokens.size()) throw input_error(std::string("matrix text: missing ") + what);
        try {
            return Int(tokens[pos++]);
        } catch (const std::invalid_argument&) {
            throw input_error("matrix text: '" + tokens[pos - 1] + "' is not an integer");
        }
    };

    Int nn = next_int("size");
    if (nn < 1 || nn > 64) throw input_error("matrix text: unsupported size");
    int n = static_cast<int>(nn.get_si());
    std::vector<Int> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n * n; ++i) entries.push_back(next_int("matrix entry"));

    std::optional<std::vector<Int>> d;
    if (pos < tokens.size()) {
        if (tokens[pos] != "D:" && tokens[pos] != "D")
            throw input_error("matrix text: unexpected trailing token '" + tokens[pos] + "'");
        ++pos;
        if (pos < tokens.size() && tokens[pos] == ":") ++pos;
        std::vector<Int> dd;
        for (int i = 0; i < n; ++i) dd.push_back(next_int("symmetrizer entry"));
        d = std::move(dd);
    }
    if (pos != tokens.size()) throw input_error("matrix text: trailing garbage");
    return validate_or_derive_skew_symmetrizer(ExchangeMatrix(n, std::move(entries)), d);
}

std::string matrix_text(const SymmetrizedMatrix& m) {
    std::ostringstream out;
    out << m.b.n() << "\n" << m.b.str() << "\nD:";
    for (const Int& di : m.d) out << " " << di.get_str();
    out << "\n";
    return out.str();
}

}  // namespace clusteraut
