#include "clusteraut/aut.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace clusteraut {
namespace {

// Mutation in direction k rewrites only d_k, so under a period word the
// vectors of untouched vertices are frozen at -e_j, which vanishes on the
// touched coordinates. The touched block is therefore a self-contained
// subsystem and the growth certificate may be evaluated on it alone.

// Every touched vector is >= 0 on the touched coordinates.
bool dstate_nonneg(const DVectorState& s, const std::vector<int>& touched) {
    for (int j : touched)
        for (int c : touched)
            if (s.d[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] < 0) return false;
    return true;
}

// a dominates b on the touched block: entrywise >=, and strictly larger
// somewhere in every touched vector.
bool dstate_dominates(const DVectorState& a, const DVectorState& b,
                      const std::vector<int>& touched) {
    for (int j : touched) {
        bool strict = false;
        const auto& av = a.d[static_cast<std::size_t>(j)];
        const auto& bv = b.d[static_cast<std::size_t>(j)];
        for (int c : touched) {
            const auto ci = static_cast<std::size_t>(c);
            if (av[ci] < bv[ci]) return false;
            if (av[ci] > bv[ci]) strict = true;
        }
        if (!strict) return false;
    }
    return true;
}

}  // namespace

std::string OrderProbeResult::str() const {
    switch (kind) {
        case Kind::finite:
            return std::to_string(order);
        case Kind::infinite_certified:
            return "infinite(certified)";
        case Kind::unknown:
            return "unknown(>" + std::to_string(max_power) + ")";
    }
    return "unknown";
}

AutContext::AutContext(SymmetrizedMatrix root, SearchConfig cfg)
    : root_(std::move(root)), cfg_(cfg), init_dv_(initial_dvectors(root_.b)) {
    if (!is_connected_matrix(root_.b))
        throw input_error("automorphism context requires a connected exchange matrix");
}

Automorphism AutContext::make(Word word, Perm sigma, int sign) const {
    if (sign != 1 && sign != -1) throw input_error("sign must be +1 or -1");
    if (sigma.n() != root_.b.n()) throw input_error("permutation size does not match matrix rank");
    word = reduce_word(std::move(word));
    ExchangeMatrix endpoint = apply_word(root_.b, word);
    ExchangeMatrix lhs = apply_perm_matrix(root_.b, SignedPerm{sigma, sign});
    if (lhs != endpoint)
        throw input_error("invalid automorphism data: sign * sigma(B_root) != B_endpoint for " +
                          word_str(word));
    if (cfg_.symmetrizer_match_in_equivalence &&
        apply_perm_symmetrizer(root_.d, sigma) != root_.d)
        throw input_error("invalid automorphism data: sigma does not preserve the symmetrizer");
    return Automorphism{std::move(word), std::move(sigma), sign};
}

Automorphism AutContext::identity() const {
    return Automorphism{{}, Perm::identity(root_.b.n()), +1};
}

Automorphism AutContext::compose(const Automorphism& g, const Automorphism& f) const {
    Word w = g.word;
    Word shifted = apply_perm_word(g.sigma, f.word);
    w.insert(w.end(), shifted.begin(), shifted.end());
    return Automorphism{reduce_word(std::move(w)), g.sigma.after(f.sigma), g.sign * f.sign};
}

Automorphism AutContext::inverse(const Automorphism& f) const {
    Word w(f.word.rbegin(), f.word.rend());
    return Automorphism{apply_perm_word(f.sigma.inverse(), w), f.sigma.inverse(), f.sign};
}

Automorphism AutContext::power(const Automorphism& f, int k) const {
    Automorphism base = k < 0 ? inverse(f) : f;
    int reps = k < 0 ? -k : k;
    Automorphism acc = identity();
    for (int i = 0; i < reps; ++i) acc = compose(base, acc);
    return acc;
}

bool AutContext::is_identity(const Automorphism& f) const {
    const int n = root_.b.n();
    DVectorState st = apply_word(init_dv_, f.word);
    for (int i = 0; i < n; ++i) {
        const auto& vec = st.d[static_cast<std::size_t>(f.sigma(i))];
        for (int c = 0; c < n; ++c) {
            if (vec[static_cast<std::size_t>(c)] != (c == i ? -1 : 0)) return false;
        }
    }
    // An identity map forces the plus sign on a nonzero connected matrix.
    if (f.sign != +1)
        throw internal_error("identity-acting automorphism carries a minus sign");
    return true;
}

bool AutContext::equal(const Automorphism& f, const Automorphism& g) const {
    if (f == g) return true;
    if (f.sign != g.sign) return false;
    return is_identity(compose(inverse(g), f));
}

int AutContext::grade(const Automorphism& f) const {
    return path_weight(root_, f.word, root_, cfg_) - 1;
}

OrderProbeResult AutContext::order_probe(const Automorphism& f, int max_power) const {
    OrderProbeResult r;
    r.max_power = max_power;
    Automorphism h = f;
    for (int m = 1; m <= max_power; ++m) {
        if (is_identity(h)) {
            r.kind = OrderProbeResult::Kind::finite;
            r.order = m;
            return r;
        }
        h = compose(f, h);
    }
    // Pass to the smallest power with trivial permutation and plus sign; for
    // rank 3 that power is at most 6.
    Automorphism g = identity();
    int span = 0;
    for (int m = 1; m <= 6; ++m) {
        g = compose(f, g);
        if (g.sigma.is_identity() && g.sign == +1) {
            span = m;
            break;
        }
    }
    if (span == 0 || g.word.empty()) return r;  // defensive; finite scan covers these
    std::vector<int> touched;
    for (int k : g.word)
        if (std::find(touched.begin(), touched.end(), k) == touched.end()) touched.push_back(k);
    // Certify escape: some iterate is nonnegative on the touched block with
    // two consecutive strict increases there under the period word.
    DVectorState s1 = apply_word(init_dv_, g.word);
    DVectorState s2 = apply_word(s1, g.word);
    DVectorState s3 = apply_word(s2, g.word);
    const int scans = std::max(max_power, 8);
    for (int n = 0; n < scans; ++n) {
        if (dstate_nonneg(s1, touched) && dstate_dominates(s2, s1, touched) &&
            dstate_dominates(s3, s2, touched)) {
            r.kind = OrderProbeResult::Kind::infinite_certified;
            return r;
        }
        s1 = std::move(s2);
        s2 = std::move(s3);
        s3 = apply_word(s2, g.word);
    }
    return r;
}

std::vector<Automorphism> AutContext::compute_G0() const {
    std::vector<SignedPerm> sps =
        signed_perm_equivalences(root_, root_, cfg_.symmetrizer_match_in_equivalence);
    std::sort(sps.begin(), sps.end());
    std::vector<Automorphism> out;
    out.reserve(sps.size());
    for (const auto& sp : sps) out.push_back(make({}, sp.sigma, sp.sign));
    return out;
}

GroupEvidence AutContext::compute_generators() const {
    GroupEvidence ev;
    ev.g0 = compute_G0();

    auto add_entry = [&](const FoundPath& p, const std::string& stratum) {
        if (p.perms.empty())
            throw internal_error("first-return path without a realizing signed permutation");
        SignedPerm sp = *std::min_element(p.perms.begin(), p.perms.end());
        GeneratorEntry e;
        e.f = make(p.word, sp.sigma, sp.sign);
        e.source_path = p.word;
        e.stratum = stratum;
        e.probe = order_probe(e.f);
        ev.generators.push_back(std::move(e));
    };

    ev.t_diamond = find_t_diamond(root_, cfg_);
    if (ev.t_diamond) {
        StratifiedP1 st = enumerate_P1_stratified(root_, *ev.t_diamond, cfg_);
        ev.enumeration_complete = st.all.complete;
        ev.strata.stratified = true;
        ev.strata.p10 = static_cast<int>(st.p10.size());
        ev.strata.p11 = static_cast<int>(st.p11.size());
        ev.strata.p12 = static_cast<int>(st.p12.size());
        ev.strata.heavier = static_cast<int>(st.heavier.size());
        ev.strata.k1_sources = static_cast<int>(st.k1_sources.size());
        ev.strata.k1_kept = static_cast<int>(st.k1_collapsed.size());
        for (const auto& p : st.p10) add_entry(p, "H1,0");
        for (const auto& p : st.p11) add_entry(p, "H1,1");
        for (const auto& p : st.k1_collapsed) add_entry(p, "K1");
    } else {
        EnumerationResult res = enumerate_P1(root_, cfg_);
        ev.enumeration_complete = res.complete;
        for (const auto& p : res.paths) add_entry(p, "H1");
    }

    std::vector<Automorphism> scan_gens;
    for (std::size_t i = 1; i < ev.g0.size(); ++i) scan_gens.push_back(ev.g0[i]);
    for (const auto& e : ev.generators) scan_gens.push_back(e.f);
    ev.relations = relation_scan(scan_gens);
    return ev;
}

Automorphism AutContext::factorize(const Automorphism& f, const Automorphism& g) const {
    Automorphism h = compose(inverse(g), f);
    if (!(compose(g, h) == f))
        throw internal_error("factorization failed to recompose exactly");
    return h;
}

std::vector<RelationWitness> AutContext::relation_scan(const std::vector<Automorphism>& gens,
                                                       int max_len) const {
    std::vector<RelationWitness> out;
    const Automorphism e = identity();
    std::vector<bool> involution(gens.size(), false);
    auto gname = [](std::size_t i) { return "g" + std::to_string(i + 1); };

    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (is_identity(gens[i])) continue;
        if (is_identity(compose(gens[i], gens[i]))) {
            involution[i] = true;
            out.push_back({"involution", gname(i) + "*" + gname(i), "1"});
        }
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (equal(compose(gens[i], gens[j]), compose(gens[j], gens[i])))
                out.push_back({"commutation", gname(i) + "*" + gname(j), gname(j) + "*" + gname(i)});
        }
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (involution[i] || is_identity(gens[i])) continue;
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (i == j) continue;
            Automorphism conj = compose(gens[j], compose(gens[i], inverse(gens[j])));
            if (equal(conj, inverse(gens[i])))
                out.push_back({"dihedral", gname(j) + "*" + gname(i) + "*" + gname(j) + "^-1",
                               gname(i) + "^-1"});
        }
    }

    // Breadth-first coincidence scan over short products, bucketed by the
    // exact map signature.
    struct Entry {
        Automorphism f;
        std::string expr;
        int len;
    };
    std::map<std::string, std::vector<std::size_t>> buckets;
    std::vector<Entry> elems;
    auto lookup = [&](const Automorphism& f) -> const Entry* {
        auto it = buckets.find(signature(f));
        if (it == buckets.end()) return nullptr;
        for (std::size_t idx : it->second)
            if (equal(elems[idx].f, f)) return &elems[idx];
        return nullptr;
    };
    auto insert = [&](Automorphism f, std::string expr, int len) {
        buckets[signature(f)].push_back(elems.size());
        elems.push_back(Entry{std::move(f), std::move(expr), len});
    };
    insert(e, "1", 0);
    std::size_t lo = 0;
    constexpr std::size_t kElementCap = 400;
    constexpr std::size_t kWitnessCap = 24;
    std::size_t coincidences = 0;
    for (int len = 1; len <= max_len && elems.size() < kElementCap; ++len) {
        const std::size_t hi = elems.size();
        for (std::size_t idx = lo; idx < hi && elems.size() < kElementCap; ++idx) {
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                Automorphism f = compose(gens[gi], elems[idx].f);
                std::string expr =
                    elems[idx].len == 0 ? gname(gi) : gname(gi) + "*" + elems[idx].expr;
                if (const Entry* hit = lookup(f)) {
                    // Length-2 coincidences are the involutions/commutations
                    // already reported above; keep only genuinely shorter hits.
                    const int newlen = elems[idx].len + 1;
                    if (newlen >= 3 && hit->len <= newlen - 2 && coincidences < kWitnessCap) {
                        out.push_back({"coincidence", expr, hit->expr});
                        ++coincidences;
                    }
                    continue;
                }
                insert(std::move(f), std::move(expr), elems[idx].len + 1);
            }
        }
        lo = hi;
    }
    return out;
}

AutContext::ClosureResult AutContext::generated_closure(const std::vector<Automorphism>& gens,
                                                        int max_len,
                                                        std::size_t max_elements) const {
    ClosureResult res;
    std::map<std::string, std::vector<std::size_t>> buckets;
    auto find_idx = [&](const Automorphism& f) -> bool {
        auto it = buckets.find(signature(f));
        if (it == buckets.end()) return false;
        for (std::size_t idx : it->second)
            if (equal(res.elements[idx], f)) return true;
        return false;
    };
    auto insert = [&](Automorphism f) {
        buckets[signature(f)].push_back(res.elements.size());
        res.elements.push_back(std::move(f));
    };
    std::vector<Automorphism> step = gens;
    for (const auto& g : gens) step.push_back(inverse(g));
    insert(identity());
    std::size_t lo = 0;
    for (int len = 1; len <= max_len; ++len) {
        const std::size_t hi = res.elements.size();
        for (std::size_t idx = lo; idx < hi; ++idx) {
            for (const auto& g : step) {
                if (res.elements.size() >= max_elements) return res;  // closed stays false
                Automorphism f = compose(g, res.elements[idx]);
                if (!find_idx(f)) insert(std::move(f));
            }
        }
        if (res.elements.size() == hi) {
            res.closed = true;
            return res;
        }
        lo = hi;
    }
    return res;
}

bool AutContext::in_closure(const Automorphism& f, const ClosureResult& c) const {
    for (const auto& g : c.elements)
        if (equal(f, g)) return true;
    return false;
}

std::string AutContext::describe(const Automorphism& f) const {
    std::ostringstream os;
    os << "g" << word_str(f.word) << "(perm=" << f.sigma.one_line()
       << "; sign=" << (f.sign > 0 ? "+" : "-") << ")";
    return os.str();
}

std::string AutContext::signature(const Automorphism& f) const {
    DVectorState st = apply_word(init_dv_, f.word);
    std::ostringstream os;
    os << (f.sign > 0 ? "+" : "-");
    const int n = root_.b.n();
    for (int i = 0; i < n; ++i) {
        os << "|";
        const auto& vec = st.d[static_cast<std::size_t>(f.sigma(i))];
        for (const auto& c : vec) os << c.get_str() << ",";
    }
    return os.str();
}

}  // namespace clusteraut
