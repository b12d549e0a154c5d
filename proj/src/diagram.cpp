#include "clusteraut/diagram.hpp"

#include <queue>
#include <sstream>

namespace clusteraut {

void Diagram::set_edge(int i, int j, const Int& w2) {
    if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_)
        throw input_error("Diagram::set_edge: bad endpoints");
    if (w2 <= 0) throw input_error("Diagram::set_edge: squared weight must be positive");
    edges_.erase({j, i});
    edges_[{i, j}] = w2;
}

void Diagram::clear_edge(int i, int j) {
    edges_.erase({i, j});
    edges_.erase({j, i});
}

Int Diagram::weight2(int i, int j) const {
    auto it = edges_.find({i, j});
    if (it != edges_.end()) return it->second;
    it = edges_.find({j, i});
    if (it != edges_.end()) return it->second;
    return 0;
}

bool Diagram::has_arrow(int i, int j) const { return edges_.count({i, j}) != 0; }

std::string Diagram::str() const {
    std::ostringstream out;
    out << n_ << " vertices;";
    for (const auto& [e, w2] : edges_)
        out << " " << (e.first + 1) << "->" << (e.second + 1) << " w2=" << w2.get_str();
    return out.str();
}

Diagram diagram_of(const ExchangeMatrix& b) {
    Diagram g(b.n());
    for (int i = 0; i < b.n(); ++i)
        for (int j = 0; j < b.n(); ++j)
            if (b.at(i, j) > 0) g.set_edge(i, j, Int(b.at(i, j) * -b.at(j, i)));
    return g;
}

bool is_acyclic(const Diagram& g) {
    const int n = g.n();
    std::vector<int> indeg(n, 0);
    for (const auto& [e, w2] : g.edges()) {
        (void)w2;
        ++indeg[e.second];
    }
    std::queue<int> q;
    for (int i = 0; i < n; ++i)
        if (indeg[i] == 0) q.push(i);
    int peeled = 0;
    while (!q.empty()) {
        int i = q.front();
        q.pop();
        ++peeled;
        for (const auto& [e, w2] : g.edges()) {
            (void)w2;
            if (e.first == i && --indeg[e.second] == 0) q.push(e.second);
        }
    }
    return peeled == n;
}

bool is_connected(const Diagram& g) {
    const int n = g.n();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int count = 1;
    while (!q.empty()) {
        int i = q.front();
        q.pop();
        for (const auto& [e, w2] : g.edges()) {
            (void)w2;
            int other = -1;
            if (e.first == i) other = e.second;
            if (e.second == i) other = e.first;
            if (other >= 0 && !seen[other]) {
                seen[other] = true;
                ++count;
                q.push(other);
            }
        }
    }
    return count == n;
}

SurdSum weight_sum(const Diagram& g) {
    SurdSum s;
    for (const auto& [e, w2] : g.edges()) {
        (void)e;
        s.add_sqrt(w2);
    }
    return s;
}

namespace {

// For a 3-vertex oriented cycle, squared weight of the edge opposite v.
bool oriented_triangle(const Diagram& g, Int w2_opp[3]) {
    if (g.n() != 3 || g.edges().size() != 3) return false;
    for (int v = 0; v < 3; ++v) {
        int a = (v + 1) % 3, b = (v + 2) % 3;
        Int w = g.weight2(a, b);
        if (w == 0) return false;
        w2_opp[v] = w;
    }
    // cyclically oriented <=> no vertex is a source of both its edges
    for (int v = 0; v < 3; ++v) {
        int a = (v + 1) % 3, b = (v + 2) % 3;
        if (g.has_arrow(v, a) && g.has_arrow(v, b)) return false;
    }
    return true;
}

}  // namespace

bool has_property_M(const Diagram& g, int i) {
    Int w2[3];
    if (i < 0 || i >= 3) return false;
    if (!oriented_triangle(g, w2)) return false;
    Int wi = w2[i];
    Int hi = w2[(i + 1) % 3], lo = w2[(i + 2) % 3];
    if (hi < lo) std::swap(hi, lo);
    // condition (strong tail): wi >= hi >= lo > 4 on squares
    if (wi >= hi && lo > 4) return true;
    // condition (strict head): wi > hi and lo >= 4 on squares
    if (wi > hi && lo >= 4) return true;
    return false;
}

Diagram mutate_diagram(const Diagram& g, int k) {
    if (g.n() != 3)
        throw input_error("mutate_diagram: direct rule is rank 3 only (use a witness matrix)");
    if (k < 0 || k >= 3) throw input_error("mutate_diagram: direction out of range");
    const int i = (k + 1) % 3, j = (k + 2) % 3;

    Diagram r(3);
    // reverse edges incident to k
    for (int v : {i, j}) {
        if (g.has_arrow(v, k)) r.set_edge(k, v, g.weight2(v, k));
        if (g.has_arrow(k, v)) r.set_edge(v, k, g.weight2(k, v));
    }

    // two-path through k: u -> k -> v with {u, v} = {i, j}
    int u = -1, v = -1;
    if (g.has_arrow(i, k) && g.has_arrow(k, j)) {
        u = i;
        v = j;
    } else if (g.has_arrow(j, k) && g.has_arrow(k, i)) {
        u = j;
        v = i;
    }
    Int a2 = g.weight2(i, j);
    if (u < 0) {
        // no two-path: the third edge is unchanged
        if (a2 != 0) {
            if (g.has_arrow(i, j))
                r.set_edge(i, j, a2);
            else
                r.set_edge(j, i, a2);
        }
        return r;
    }

    const Int b2 = g.weight2(u, k);
    const Int c2 = g.weight2(k, v);
    // signed relation on the u-v edge: s_old * a + s_new * a' = b*c, where a
    // contributes positively iff (u,k,v) is cyclically oriented before the
    // mutation (edge v -> u), and a' positively iff after (edge u -> v).
    int s_old = 0;
    if (a2 != 0) s_old = g.has_arrow(v, u) ? +1 : -1;
    Int prod2 = b2 * c2;
    Int new2;
    int s_val;  // sign of b*c - s_old*a
    if (s_old == 0) {
        new2 = prod2;
        s_val = +1;
    } else {
        Int m = a2 * prod2;
        if (!is_perfect_square(m))
            throw input_error(
                "mutate_diagram: weight data not matrix-realizable (non-integer edge weight "
                "would arise)");
        Int cross = isqrt(m);  // a * b * c
        new2 = prod2 + a2 - 2 * s_old * cross;
        if (s_old < 0) {
            s_val = +1;  // b*c + a > 0
        } else {
            // sign of b*c - a: compare squares
            if (prod2 > a2)
                s_val = +1;
            else if (prod2 < a2)
                s_val = -1;
            else
                s_val = 0;
        }
    }
    if (s_val == 0 || new2 == 0) return r;  // edge vanishes
    if (s_val > 0)
        r.set_edge(u, v, new2);
    else
        r.set_edge(v, u, new2);
    return r;
}

Diagram mutate_diagram_via_matrix(const ExchangeMatrix& witness, int k) {
    return diagram_of(mutate_matrix(witness, k));
}

}  // namespace clusteraut
