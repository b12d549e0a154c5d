#include "clusteraut/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace clusteraut {

LaurentPoly LaurentPoly::constant(int nvars, const Int& c) {
    LaurentPoly p(nvars);
    p.add_term(Exps(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw input_error("LaurentPoly::variable: index out of range");
    Exps e(nvars, 0);
    e[i] = 1;
    return monomial(nvars, e, 1);
}

LaurentPoly LaurentPoly::monomial(int nvars, const Exps& e, const Int& c) {
    LaurentPoly p(nvars);
    p.add_term(e, c);
    return p;
}

void LaurentPoly::add_term(const Exps& e, const Int& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw internal_error("LaurentPoly::add_term: exponent arity mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::pow(unsigned long k) const {
    LaurentPoly result = constant(nvars_, 1);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1ul) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars() != b.nvars()) throw internal_error("LaurentPoly+: arity mismatch");
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms()) r.add_term(e, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars() != b.nvars()) throw internal_error("LaurentPoly-: arity mismatch");
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms()) r.add_term(e, Int(-c));
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars() != b.nvars()) throw internal_error("LaurentPoly*: arity mismatch");
    LaurentPoly r(a.nvars());
    LaurentPoly::Exps e(a.nvars());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (int v = 0; v < a.nvars(); ++v) e[v] = ea[v] + eb[v];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

namespace {

// per-variable min/max exponents of a nonzero polynomial
void exponent_box(const LaurentPoly& p, LaurentPoly::Exps& lo, LaurentPoly::Exps& hi) {
    lo.assign(p.nvars(), 0);
    hi.assign(p.nvars(), 0);
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        (void)c;
        if (first) {
            lo = e;
            hi = e;
            first = false;
            continue;
        }
        for (int v = 0; v < p.nvars(); ++v) {
            lo[v] = std::min(lo[v], e[v]);
            hi[v] = std::max(hi[v], e[v]);
        }
    }
}

}  // namespace

LaurentPoly laurent_exact_div(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.nvars() != q.nvars()) throw internal_error("laurent_exact_div: arity mismatch");
    if (q.is_zero()) throw laurent_division_error("laurent_exact_div: division by zero");
    const int n = p.nvars();
    if (p.is_zero()) return LaurentPoly::zero(n);

    LaurentPoly::Exps plo, phi, qlo, qhi;
    exponent_box(p, plo, phi);
    exponent_box(q, qlo, qhi);
    // If q | p then every quotient term lies in this box.
    LaurentPoly::Exps boxlo(n), boxhi(n);
    for (int v = 0; v < n; ++v) {
        boxlo[v] = plo[v] - qlo[v];
        boxhi[v] = phi[v] - qhi[v];
        if (boxlo[v] > boxhi[v])
            throw laurent_division_error("laurent_exact_div: not divisible (degree box empty)");
    }

    const auto& qlead = *q.terms().rbegin();  // max in lex order
    LaurentPoly quot(n);
    LaurentPoly rem = p;
    LaurentPoly::Exps te(n);
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        for (int v = 0; v < n; ++v) {
            te[v] = rlead.first[v] - qlead.first[v];
            if (te[v] < boxlo[v] || te[v] > boxhi[v])
                throw laurent_division_error("laurent_exact_div: not divisible (term escapes degree box)");
        }
        Int tc = rlead.second / qlead.second;
        if (tc * qlead.second != rlead.second)
            throw laurent_division_error("laurent_exact_div: not divisible (leading coefficient)");
        LaurentPoly t = LaurentPoly::monomial(n, te, tc);
        quot = quot + t;
        rem = rem - t * q;
    }
    return quot;
}

long laurent_lowest_degree(const LaurentPoly& p, int v) {
    if (p.is_zero()) throw input_error("laurent_lowest_degree: zero polynomial");
    if (v < 0 || v >= p.nvars()) throw input_error("laurent_lowest_degree: variable out of range");
    bool first = true;
    long lo = 0;
    for (const auto& [e, c] : p.terms()) {
        (void)c;
        if (first || e[v] < lo) lo = e[v];
        first = false;
    }
    return lo;
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Exps, Int>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    auto total = [](const Exps& e) {
        long s = 0;
        for (long x : e) s += x;
        return s;
    };
    std::sort(order.begin(), order.end(), [&](const auto* a, const auto* b) {
        long ta = total(a->first), tb = total(b->first);
        if (ta != tb) return ta < tb;
        return a->first < b->first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto* t : order) {
        const Int& c = t->second;
        Int a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::ostringstream mono;
        bool any = false;
        for (int v = 0; v < nvars_; ++v) {
            long e = t->first[v];
            if (e == 0) continue;
            if (any) mono << " ";
            if (static_cast<std::size_t>(v) < names.size())
                mono << names[v];
            else
                mono << "x" << (v + 1);
            if (e != 1) mono << "^" << e;
            any = true;
        }
        if (!any) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << " ";
            out << mono.str();
        }
    }
    return out.str();
}

}  // namespace clusteraut
