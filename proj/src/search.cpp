#include "clusteraut/search.hpp"

#include <algorithm>
#include <deque>

namespace clusteraut {

namespace {

void require_rank3_connected(const SymmetrizedMatrix& m, const char* who) {
    if (m.b.n() != 3) throw input_error(std::string(who) + ": rank-3 input required");
    if (!is_connected_matrix(m.b))
        throw input_error(std::string(who) + ": indecomposable (connected) matrix required");
}

}  // namespace

bool weight_sum_locally_minimal(const SymmetrizedMatrix& m) {
    SurdSum s0 = weight_sum(diagram_of(m.b));
    for (int k = 0; k < m.b.n(); ++k) {
        SurdSum sk = weight_sum(diagram_of(mutate_matrix(m.b, k)));
        if (surdsum_compare(sk, s0) == Cmp::less) return false;
    }
    return true;
}

int path_weight(const SymmetrizedMatrix& root, const Word& w, const SymmetrizedMatrix& reference,
                const SearchConfig& cfg) {
    const bool sym = cfg.symmetrizer_match_in_equivalence;
    const std::vector<Int> refkey = canonical_orbit_min(reference, sym);
    SymmetrizedMatrix cur = root;
    int count = (canonical_orbit_min(cur, sym) == refkey) ? 1 : 0;
    for (int k : w) {
        cur.b = mutate_matrix(cur.b, k);
        if (canonical_orbit_min(cur, sym) == refkey) ++count;
    }
    return count;
}

EnumerationResult enumerate_P1(const SymmetrizedMatrix& root, const SearchConfig& cfg) {
    require_rank3_connected(root, "enumerate_P1");

    const bool sym = cfg.symmetrizer_match_in_equivalence;
    const std::vector<Int> rootkey = canonical_orbit_min(root, sym);
    const SurdSum s_root = weight_sum(diagram_of(root.b));

    // Prune soundness requires the root to be weight-sum minimal in its
    // class; both prunes are disabled otherwise.
    const bool root_minimal = weight_sum_locally_minimal(root);
    const bool use_M = cfg.prune_property_M && root_minimal;
    const Diagram g0 = diagram_of(root.b);
    const bool root_mutation_cyclic = !is_acyclic(g0) && g0.edges().size() == 3 && root_minimal;
    const bool use_growth = cfg.prune_weight_growth && root_mutation_cyclic;

    EnumerationResult result;

    struct Frame {
        SymmetrizedMatrix m;
        Word word;
        int last = -1;
    };
    std::vector<Frame> stack;
    stack.push_back({root, {}, -1});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        // children in descending k so the explicit stack pops ascending k
        for (int k = 2; k >= 0; --k) {
            if (k == f.last) continue;
            Frame child;
            child.m = f.m;
            child.m.b = mutate_matrix(f.m.b, k);
            child.word = f.word;
            child.word.push_back(k);
            child.last = k;
            if (canonical_orbit_min(child.m, sym) == rootkey) {
                result.paths.push_back(
                    {child.word, signed_perm_equivalences(root, child.m, sym)});
                continue;  // a first-return endpoint; extensions have heavier interiors
            }
            bool pruned = false;
            Diagram dg = diagram_of(child.m.b);
            if (use_M && has_property_M(dg, k)) pruned = true;
            if (!pruned && use_growth &&
                surdsum_compare(weight_sum(dg), s_root) == Cmp::greater)
                pruned = true;
            if (pruned) {
                ++result.frontier_pruned;
                continue;
            }
            if (static_cast<int>(child.word.size()) >= cfg.max_depth) {
                ++result.depth_cut;
                continue;
            }
            stack.push_back(std::move(child));
        }
    }
    std::sort(result.paths.begin(), result.paths.end(),
              [](const FoundPath& a, const FoundPath& b) { return a.word < b.word; });
    result.complete = (result.depth_cut == 0);
    return result;
}

std::optional<DiamondVertex> find_t_diamond(const SymmetrizedMatrix& root, const SearchConfig& cfg) {
    require_rank3_connected(root, "find_t_diamond");

    const bool sym = cfg.symmetrizer_match_in_equivalence;
    const std::vector<Int> rootkey = canonical_orbit_min(root, sym);

    struct Node {
        SymmetrizedMatrix m;
        Word word;
        // canonical keys of all strictly earlier path vertices (root first)
        std::vector<std::vector<Int>> prefix_keys;
    };
    std::deque<Node> queue;
    queue.push_back({root, {}, {}});
    while (!queue.empty()) {
        Node cur = std::move(queue.front());
        queue.pop_front();
        std::vector<Int> curkey = canonical_orbit_min(cur.m, sym);
        if (!cur.word.empty()) {
            bool candidate = curkey != rootkey;
            if (candidate) {
                // no earlier path vertex equivalent to +/- B_t
                for (const auto& pk : cur.prefix_keys)
                    if (pk == curkey) {
                        candidate = false;
                        break;
                    }
            }
            if (candidate) {
                // off-path neighbors must not be equivalent to +/- root
                for (int k = 0; k < 3; ++k) {
                    if (k == cur.word.back()) continue;
                    SymmetrizedMatrix nb = cur.m;
                    nb.b = mutate_matrix(cur.m.b, k);
                    if (canonical_orbit_min(nb, sym) == rootkey) {
                        candidate = false;
                        break;
                    }
                }
            }
            if (candidate) return DiamondVertex{cur.word, cur.m};
        }
        if (static_cast<int>(cur.word.size()) >= cfg.max_depth) continue;
        // do not extend through vertices equivalent to +/- root: they cannot
        // be interior to a weight-1 connecting path
        if (!cur.word.empty() && curkey == rootkey) continue;
        for (int k = 0; k < 3; ++k) {
            if (!cur.word.empty() && k == cur.word.back()) continue;
            Node child;
            child.m = cur.m;
            child.m.b = mutate_matrix(cur.m.b, k);
            child.word = cur.word;
            child.word.push_back(k);
            child.prefix_keys = cur.prefix_keys;
            child.prefix_keys.push_back(curkey);
            queue.push_back(std::move(child));
        }
    }
    return std::nullopt;
}

StratifiedP1 enumerate_P1_stratified(const SymmetrizedMatrix& root, const DiamondVertex& td,
                                     const SearchConfig& cfg) {
    StratifiedP1 out;
    out.all = enumerate_P1(root, cfg);

    struct Keyed {
        FoundPath path;
        Word collapse_key;
    };
    std::vector<Keyed> k1;
    for (const FoundPath& p : out.all.paths) {
        int w = path_weight(root, p.word, td.matrix, cfg);
        if (w == 0) {
            out.p10.push_back(p);
        } else if (w == 1) {
            out.p11.push_back(p);
        } else if (w == 2) {
            out.p12.push_back(p);
            bool through_td =
                p.word.size() >= td.word.size() &&
                std::equal(td.word.begin(), td.word.end(), p.word.begin());
            if (through_td) {
                out.k1_sources.push_back(p);
                // longest prefix ending at a vertex equivalent to +/- B_td
                const bool sym = cfg.symmetrizer_match_in_equivalence;
                const std::vector<Int> tdkey = canonical_orbit_min(td.matrix, sym);
                SymmetrizedMatrix cur = root;
                Word key;
                for (std::size_t i = 0; i < p.word.size(); ++i) {
                    cur.b = mutate_matrix(cur.b, p.word[i]);
                    if (canonical_orbit_min(cur, sym) == tdkey)
                        key = Word(p.word.begin(), p.word.begin() + i + 1);
                }
                k1.push_back({p, key});
            }
        } else {
            out.heavier.push_back(p);
        }
    }
    std::sort(k1.begin(), k1.end(), [](const Keyed& a, const Keyed& b) {
        if (a.collapse_key != b.collapse_key) return a.collapse_key < b.collapse_key;
        return a.path.word < b.path.word;
    });
    for (std::size_t i = 0; i < k1.size(); ++i) {
        if (i == 0 || k1[i].collapse_key != k1[i - 1].collapse_key)
            out.k1_collapsed.push_back(k1[i].path);
    }
    return out;
}

}  // namespace clusteraut
