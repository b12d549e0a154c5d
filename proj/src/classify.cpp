#include "clusteraut/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace clusteraut {
namespace {

std::vector<int> pattern_of(const std::vector<Int>& d) {
    std::vector<int> out(d.size(), 0);
    int next = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        bool found = false;
        for (std::size_t j = 0; j < i && !found; ++j) {
            if (d[j] == d[i]) {
                out[i] = out[j];
                found = true;
            }
        }
        if (!found) out[i] = next++;
    }
    return out;
}

struct Fit {
    std::vector<Int> key;
    bool cyclic = false;
    SymmetrizedMatrix rep;
};

// Matches v against the canonical labeled shape (arrows 2->1 and 1->3; third
// edge 3->2 for cyclic, 2->3 or absent for acyclic; a2 <= b2 <= c2).
std::optional<Fit> try_fit(const SymmetrizedMatrix& v) {
    const ExchangeMatrix& b = v.b;
    if (!(b.at(1, 0) > 0 && b.at(0, 2) > 0)) return std::nullopt;
    const Int bsq = b.at(1, 0) * (-b.at(0, 1));
    const Int csq = b.at(0, 2) * (-b.at(2, 0));
    Int asq;
    bool cyclic;
    if (b.at(2, 1) > 0) {
        cyclic = true;
        asq = b.at(2, 1) * (-b.at(1, 2));
    } else if (b.at(1, 2) > 0) {
        cyclic = false;
        asq = b.at(1, 2) * (-b.at(2, 1));
    } else if (b.at(1, 2) == 0 && b.at(2, 1) == 0) {
        cyclic = false;
        asq = 0;
    } else {
        return std::nullopt;
    }
    if (!(asq <= bsq && bsq <= csq)) return std::nullopt;
    if (cyclic && asq * bsq < 4 * csq) return std::nullopt;
    Fit f;
    f.cyclic = cyclic;
    f.rep = v;
    f.key.reserve(18);
    f.key.push_back(asq);
    f.key.push_back(bsq);
    f.key.push_back(csq);
    for (int p : pattern_of(v.d)) f.key.push_back(p);
    for (const Int& e : b.row_major()) f.key.push_back(e);
    for (const Int& e : v.d) f.key.push_back(e);
    return f;
}

SurdSum weight_sum_of(const ExchangeMatrix& b) { return weight_sum(diagram_of(b)); }

}  // namespace

std::string named_group_str(NamedGroup g) {
    switch (g) {
        case NamedGroup::trivial: return "1";
        case NamedGroup::z2: return "Z2";
        case NamedGroup::z2xz2: return "Z2⊕Z2";
        case NamedGroup::z: return "Z";
        case NamedGroup::s3: return "S3";
        case NamedGroup::d4: return "D4";
        case NamedGroup::d6: return "D6";
        case NamedGroup::dinf: return "D∞";
        case NamedGroup::dinfxz2: return "D∞⋊Z2";
        case NamedGroup::nfree: return "N";
        case NamedGroup::nxz2: return "N⋊Z2";
        case NamedGroup::nxs3: return "N⋊S3";
    }
    return "?";
}

std::string named_group_presentation(NamedGroup g) {
    switch (g) {
        case NamedGroup::trivial: return "< | >";
        case NamedGroup::z2: return "< r | r^2 >";
        case NamedGroup::z2xz2: return "< r, s | r^2, s^2, (r s)^2 >";
        case NamedGroup::z: return "< x | >";
        case NamedGroup::s3: return "< r, s | r^2, s^2, (r s)^3 >";
        case NamedGroup::d4: return "< x, y | x^4, y^2, (x y)^2 >";
        case NamedGroup::d6: return "< x, y | x^6, y^2, (x y)^2 >";
        case NamedGroup::dinf: return "< x, y | y^2, y x y = x^-1 >";
        case NamedGroup::dinfxz2:
            return "< x, y, z | y^2, z^2, y x y = x^-1, z x z = x^-1, z y = y z >";
        case NamedGroup::nfree: return "< r, s, t | r^2, s^2, t^2 >";
        case NamedGroup::nxz2:
            return "< r, s, t, u | r^2, s^2, t^2, u^2, u r u = s, u t u = t >";
        case NamedGroup::nxs3:
            return "< r, s, t, u, v | r^2, s^2, t^2, u^2, v^2, (u v)^3, u r u = s, u t u = t, "
                   "v s v = t, v r v = r >";
    }
    return "?";
}

std::optional<int> named_group_order(NamedGroup g) {
    switch (g) {
        case NamedGroup::trivial: return 1;
        case NamedGroup::z2: return 2;
        case NamedGroup::z2xz2: return 4;
        case NamedGroup::s3: return 6;
        case NamedGroup::d4: return 8;
        case NamedGroup::d6: return 12;
        default: return std::nullopt;
    }
}

CanonicalForm minimal_representative(const SymmetrizedMatrix& m) {
    if (m.b.n() != 3) throw input_error("classification requires a rank-3 exchange matrix");
    if (!is_connected_matrix(m.b))
        throw input_error("classification requires an indecomposable (connected) exchange matrix");

    // Greedy exact descent of the weight sum; a local minimum at rank 3 is a
    // global minimum of the mutation class.
    SymmetrizedMatrix cur = m;
    Word descent;
    SurdSum s = weight_sum_of(cur.b);
    for (int steps = 0;; ++steps) {
        if (steps > 4096) throw internal_error("weight-sum descent failed to terminate");
        bool moved = false;
        for (int k = 0; k < 3 && !moved; ++k) {
            ExchangeMatrix nb = mutate_matrix(cur.b, k);
            SurdSum ns = weight_sum_of(nb);
            if (surdsum_compare(ns, s) == Cmp::less) {
                cur = SymmetrizedMatrix{std::move(nb), cur.d};
                s = std::move(ns);
                descent.push_back(k);
                moved = true;
            }
        }
        if (!moved) break;
    }

    // Collect the connected plateau of equal-weight-sum vertices, one
    // representative per equivalence class.
    struct Member {
        SymmetrizedMatrix m;
        Word word;
    };
    std::vector<Member> members{{cur, descent}};
    std::set<std::string> seen{canonical_key(cur, true)};
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members.size() > 256) throw internal_error("weight-sum plateau unexpectedly large");
        for (int k = 0; k < 3; ++k) {
            ExchangeMatrix nb = mutate_matrix(members[i].m.b, k);
            if (surdsum_compare(weight_sum_of(nb), s) != Cmp::equal) continue;
            SymmetrizedMatrix nxt{std::move(nb), members[i].m.d};
            if (!seen.insert(canonical_key(nxt, true)).second) continue;
            Word w = members[i].word;
            w.push_back(k);
            members.push_back({std::move(nxt), std::move(w)});
        }
    }

    // Deterministic least canonical labeling across all members and all
    // signed relabelings.
    std::optional<Fit> best;
    Word best_word;
    SignedPerm best_sp;
    bool saw_cyclic = false, saw_acyclic = false;
    for (const auto& mem : members) {
        for (const Perm& sg : Perm::all(3)) {
            for (int e : {+1, -1}) {
                SignedPerm sp{sg, e};
                auto f = try_fit(apply_signed_perm(mem.m, sp));
                if (!f) continue;
                (f->cyclic ? saw_cyclic : saw_acyclic) = true;
                if (!best || f->key < best->key) {
                    best = std::move(f);
                    best_word = mem.word;
                    best_sp = sp;
                }
            }
        }
    }
    if (!best) throw internal_error("no minimal vertex fits a canonical labeling");
    if (saw_cyclic && saw_acyclic)
        throw internal_error("minimal plateau mixes cyclic and acyclic labelings");

    CanonicalForm cf;
    cf.cyclic = best->cyclic;
    cf.w2 = {best->key[0], best->key[1], best->key[2]};
    cf.representative = best->rep;
    cf.d = best->rep.d;
    cf.d_pattern = pattern_of(cf.d);
    cf.descent_word = std::move(best_word);
    cf.relabeling = best_sp;
    return cf;
}

bool is_mutation_cyclic(const SymmetrizedMatrix& m) { return minimal_representative(m).cyclic; }

int expected_G0_order(const CanonicalForm& cf) {
    const bool d12 = cf.d_pattern[0] == cf.d_pattern[1];
    const bool d13 = cf.d_pattern[0] == cf.d_pattern[2];
    const bool d23 = cf.d_pattern[1] == cf.d_pattern[2];
    const Int &a2 = cf.w2[0], &b2 = cf.w2[1], &c2 = cf.w2[2];
    int n = 1;
    if (cf.cyclic) {
        if (a2 == c2 && d12) ++n;
        if (a2 == b2 && d13) ++n;
        if (b2 == c2 && d23) ++n;
        if (a2 == b2 && b2 == c2 && d12 && d23) n += 2;
    } else {
        if (b2 == c2 && d23) ++n;
    }
    return n;
}

namespace {

Word w1b(std::initializer_list<int> letters_one_based) {
    Word w;
    for (int k : letters_one_based) w.push_back(k - 1);
    return w;
}

GeneratorSpec spec(std::string label, Word word, Perm sigma, int sign) {
    return GeneratorSpec{std::move(label), std::move(word), std::move(sigma), sign};
}

}  // namespace

TableRow lookup_aut_group(const CanonicalForm& cf) {
    const Int &a2 = cf.w2[0], &b2 = cf.w2[1], &c2 = cf.w2[2];
    const bool d12 = cf.d_pattern[0] == cf.d_pattern[1];
    const bool d13 = cf.d_pattern[0] == cf.d_pattern[2];
    const bool d23 = cf.d_pattern[1] == cf.d_pattern[2];
    const bool dscalar = d12 && d23;

    const Perm id3 = Perm::identity(3);
    const Perm t12 = Perm::transposition(3, 0, 1);
    const Perm t13 = Perm::transposition(3, 0, 2);
    const Perm t23 = Perm::transposition(3, 1, 2);

    const auto g1 = spec("g1", w1b({1}), id3, -1);
    const auto g2 = spec("g2", w1b({2}), id3, -1);
    const auto g3 = spec("g3", w1b({3}), id3, -1);
    const auto g2s = spec("g2", w1b({2}), t13, -1);   // reflection swapping 1,3
    const auto g3s = spec("g3", w1b({3}), t12, -1);   // reflection swapping 1,2
    const auto g312 = spec("g312", w1b({2, 1, 3}), id3, +1);
    const auto g213 = spec("g213", w1b({3, 1, 2}), id3, +1);
    const auto g32 = spec("g32", w1b({2, 3}), id3, -1);
    const auto g23 = spec("g23", w1b({3, 2}), id3, -1);
    const auto g212 = spec("g212", w1b({2, 1, 2}), id3, -1);
    const auto g313 = spec("g313", w1b({3, 1, 3}), id3, -1);
    const auto g21 = spec("g21", w1b({1, 2}), t12, -1);
    const auto g13 = spec("g13", w1b({3, 1}), t13, -1);
    const auto g12 = spec("g12", w1b({2, 1}), t12, -1);
    const auto psi12 = spec("psi12", {}, t12, -1);
    const auto psi13 = spec("psi13", {}, t13, -1);
    const auto psi23 = spec("psi23", {}, t23, -1);

    TableRow row;
    std::ostringstream ds;
    ds << (cf.cyclic ? "cyclic" : "acyclic") << ", (a^2,b^2,c^2)=(" << a2.get_str() << ","
       << b2.get_str() << "," << c2.get_str() << ")";
    auto add = [&](const GeneratorSpec& g) { row.generators.push_back(g); };

    if (cf.cyclic) {
        if (a2 == 4 && b2 == 4 && c2 == 4) {
            add(g1);
            add(g2);
            add(g3);
            if (dscalar) {
                row.group = NamedGroup::nxs3;
                add(psi12);
                add(psi23);
                ds << ", scalar symmetrizer";
            } else if (d12 || d13 || d23) {
                row.group = NamedGroup::nxz2;
                add(d12 ? psi12 : (d13 ? psi13 : psi23));
                ds << ", two symmetrizer entries equal";
            } else {
                row.group = NamedGroup::nfree;
                ds << ", distinct symmetrizer entries";
            }
        } else if (a2 == 4) {
            // a=2 forces b=c at the minimum
            row.group = NamedGroup::dinf;
            add(g2);
            add(g3);
            if (d23) {
                add(psi23);
                ds << ", 2=a<b=c, d2=d3";
            } else {
                ds << ", 2=a<b=c";
            }
        } else if (a2 * b2 == 4 * c2) {
            if (a2 == b2 && d13) {
                row.group = NamedGroup::z2xz2;
                add(g2);
                add(psi13);
                ds << ", 2<a=b, ab=2c, d1=d3";
            } else {
                row.group = NamedGroup::z2;
                add(g2);
                ds << ", 2<a, ab=2c";
            }
        } else {
            ds << ", ab>2c";
            if (a2 == b2 && b2 == c2) {
                if (dscalar) {
                    row.group = NamedGroup::s3;
                    add(psi12);
                    add(psi23);
                    ds << ", a=b=c, scalar symmetrizer";
                } else if (d12 || d13 || d23) {
                    row.group = NamedGroup::z2;
                    add(d12 ? psi12 : (d13 ? psi13 : psi23));
                    ds << ", a=b=c, two symmetrizer entries equal";
                } else {
                    row.group = NamedGroup::trivial;
                    ds << ", a=b=c, distinct symmetrizer entries";
                }
            } else if (a2 == b2 && d13) {
                row.group = NamedGroup::z2;
                add(psi13);
                ds << ", a=b<c, d1=d3";
            } else if (b2 == c2 && d23) {
                row.group = NamedGroup::z2;
                add(psi23);
                ds << ", a<b=c, d2=d3";
            } else {
                row.group = NamedGroup::trivial;
                ds << ", no symmetry";
            }
        }
    } else {
        if (a2 == 0) {
            if (b2 == 1 && c2 == 1) {
                row.group = NamedGroup::d6;
                add(g312);
                add(g212);
                ds << ", finite";
            } else if (b2 == 1 && c2 == 2) {
                row.group = NamedGroup::d4;
                add(g312);
                add(g212);
                ds << ", finite";
            } else {
                add(g312);
                add(g213);
                add(g32);
                add(g23);
                add(g212);
                add(g313);
                if (b2 == 1) add(g21);
                if (b2 == c2 && d23) {
                    row.group = NamedGroup::dinfxz2;
                    add(psi23);
                    ds << ", a=0, b=c, d2=d3";
                } else {
                    row.group = NamedGroup::dinf;
                    ds << ", a=0";
                }
            }
        } else if (a2 == 1) {
            if (b2 == 1) {
                row.group = NamedGroup::dinf;
                add(g2s);
                add(g13);
                if (c2 == 1) add(psi23);
                ds << ", a=b=1";
            } else if (b2 == c2) {
                row.group = NamedGroup::dinf;
                add(g312);
                add(psi23);
                ds << ", a=1<b=c";
            } else {
                row.group = NamedGroup::z;
                add(g312);
                add(g213);
                ds << ", a=1<b<c";
            }
        } else if (a2 == 2 || a2 == 3) {
            if (a2 == b2 && d13) {
                row.group = NamedGroup::dinf;
                add(g2s);
                add(g13);
                ds << ", a=b irrational, d1=d3";
            } else {
                row.group = NamedGroup::z;
                add(g312);
                add(g213);
                ds << ", a irrational";
            }
        } else {  // a2 >= 4
            if (a2 == b2 && b2 == c2) {
                if (dscalar) {
                    row.group = NamedGroup::dinf;
                    add(psi23);
                    add(g2s);
                    add(g3s);
                    ds << ", a=b=c>=2, scalar symmetrizer";
                } else if (d12) {
                    row.group = NamedGroup::dinf;
                    add(g3s);
                    add(g12);
                    ds << ", a=b=c>=2, d1=d2";
                } else if (d13) {
                    row.group = NamedGroup::dinf;
                    add(g2s);
                    add(g13);
                    ds << ", a=b=c>=2, d1=d3";
                } else if (d23) {
                    row.group = NamedGroup::dinf;
                    add(psi23);
                    add(g312);
                    add(g213);
                    ds << ", a=b=c>=2, d2=d3";
                } else {
                    row.group = NamedGroup::z;
                    add(g312);
                    add(g213);
                    ds << ", a=b=c>=2, distinct symmetrizer entries";
                }
            } else if (a2 == b2 && d13) {
                row.group = NamedGroup::dinf;
                add(g2s);
                add(g13);
                ds << ", 2<=a=b<c, d1=d3";
            } else if (b2 == c2 && d23) {
                row.group = NamedGroup::dinf;
                add(psi23);
                add(g312);
                add(g213);
                ds << ", 2<=a<b=c, d2=d3";
            } else {
                row.group = NamedGroup::z;
                add(g312);
                add(g213);
                ds << ", a>=2, no symmetry";
            }
        }
    }
    row.descriptor = ds.str();
    return row;
}

std::vector<SymmetrizedMatrix> enumerate_rank3_realizations(bool cyclic, const Int& a2,
                                                            const Int& b2, const Int& c2) {
    if (b2 <= 0 || c2 <= 0 || a2 < 0)
        throw input_error("edge weights b,c must be positive and a nonnegative");
    if (cyclic && a2 == 0) throw input_error("a cyclic shape requires three edges");

    auto fpairs = [](const Int& w2) {
        std::vector<std::pair<Int, Int>> out;
        if (w2 == 0) {
            out.emplace_back(0, 0);
            return out;
        }
        for (Int p = 1; p * p <= w2; ++p) {
            if (w2 % p != 0) continue;
            Int q = w2 / p;
            out.emplace_back(p, q);
            if (p != q) out.emplace_back(q, p);
        }
        return out;
    };

    std::vector<SymmetrizedMatrix> out;
    std::set<std::string> seen;
    for (const auto& [pb, qb] : fpairs(b2)) {
        for (const auto& [pc, qc] : fpairs(c2)) {
            for (const auto& [pa, qa] : fpairs(a2)) {
                ExchangeMatrix b(3, std::vector<Int>(9, 0));
                b.at(1, 0) = pb;
                b.at(0, 1) = -qb;
                b.at(0, 2) = pc;
                b.at(2, 0) = -qc;
                if (a2 != 0) {
                    if (cyclic) {
                        b.at(2, 1) = pa;
                        b.at(1, 2) = -qa;
                    } else {
                        b.at(1, 2) = pa;
                        b.at(2, 1) = -qa;
                    }
                }
                try {
                    SymmetrizedMatrix sm = validate_or_derive_skew_symmetrizer(b);
                    if (seen.insert(matrix_text(sm)).second) out.push_back(std::move(sm));
                } catch (const input_error&) {
                    // inconsistent entry factorization; skip
                }
            }
        }
    }
    return out;
}

CrossCheckReport cross_check(const SymmetrizedMatrix& m, const SearchConfig& cfg) {
    CrossCheckReport rep;
    rep.form = minimal_representative(m);
    rep.row = lookup_aut_group(rep.form);
    AutContext ctx(rep.form.representative, cfg);

    auto pass = [&](std::string s) { rep.checks.push_back(std::move(s)); };
    auto fail = [&](std::string s) {
        rep.failures.push_back(std::move(s));
        rep.ok = false;
    };

    // Table generators must be valid automorphism data at the representative.
    std::vector<Automorphism> gens;
    std::vector<std::string> labels;
    bool gens_ok = true;
    for (const auto& g : rep.row.generators) {
        try {
            gens.push_back(ctx.make(g.word, g.sigma, g.sign));
            labels.push_back(g.label);
        } catch (const input_error& e) {
            gens_ok = false;
            fail("generator " + g.label + " rejected: " + std::string(e.what()));
        }
    }
    if (gens_ok)
        pass("all " + std::to_string(gens.size()) + " table generators validate");

    // Vertex-fixing subgroup order against the combinatorial prediction.
    const auto g0 = ctx.compute_G0();
    const int expect_g0 = expected_G0_order(rep.form);
    if (static_cast<int>(g0.size()) == expect_g0)
        pass("fixing subgroup order " + std::to_string(g0.size()));
    else
        fail("fixing subgroup order " + std::to_string(g0.size()) + ", expected " +
             std::to_string(expect_g0));

    // Independently computed generator evidence. Thin infinite classes admit
    // no sound prune, so their enumeration is depth-capped; the membership
    // checks below then cover every first-return path that was found.
    GroupEvidence ev = ctx.compute_generators();
    pass(ev.enumeration_complete ? "first-return enumeration complete"
                                 : "first-return enumeration depth-capped");

    // Order probes on the table generators.
    std::vector<int> orders(gens.size(), -1);  // -1 unknown, 0 infinite
    bool any_unknown = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        OrderProbeResult p = ctx.order_probe(gens[i]);
        if (p.kind == OrderProbeResult::Kind::finite) orders[i] = p.order;
        if (p.kind == OrderProbeResult::Kind::infinite_certified) orders[i] = 0;
        if (p.kind == OrderProbeResult::Kind::unknown) any_unknown = true;
        pass("order(" + labels[i] + ")=" + p.str());
    }

    const auto finite_order = named_group_order(rep.row.group);
    const auto closure = ctx.generated_closure(gens, 12, 4096);

    if (finite_order) {
        if (any_unknown) fail("order probe inconclusive on a finite-group generator");
        if (closure.closed && static_cast<int>(closure.elements.size()) == *finite_order)
            pass("generated closure has order " + std::to_string(closure.elements.size()));
        else
            fail("generated closure order " + std::to_string(closure.elements.size()) +
                 (closure.closed ? " (closed)" : " (capped)") + ", expected " +
                 std::to_string(*finite_order));
    } else {
        // An infinite row needs a certified infinite-order element.
        std::optional<Automorphism> x;
        std::string xexpr;
        for (std::size_t i = 0; i < gens.size() && !x; ++i) {
            if (orders[i] == 0) {
                x = gens[i];
                xexpr = labels[i];
            }
        }
        for (std::size_t i = 0; i < gens.size() && !x; ++i) {
            for (std::size_t j = 0; j < gens.size() && !x; ++j) {
                if (i == j) continue;
                Automorphism prod = ctx.compose(gens[i], gens[j]);
                if (ctx.order_probe(prod).kind == OrderProbeResult::Kind::infinite_certified) {
                    x = prod;
                    xexpr = labels[i] + "*" + labels[j];
                }
            }
        }
        if (!x) {
            fail("no infinite-order element certified among generators and their products");
        } else {
            pass("infinite order certified for " + xexpr);
            switch (rep.row.group) {
                case NamedGroup::dinf:
                case NamedGroup::dinfxz2: {
                    std::vector<std::size_t> refl;
                    for (std::size_t i = 0; i < gens.size(); ++i) {
                        if (orders[i] == 2 &&
                            ctx.equal(ctx.compose(gens[i], ctx.compose(*x, gens[i])),
                                      ctx.inverse(*x)))
                            refl.push_back(i);
                    }
                    if (refl.empty())
                        fail("no involution inverting the infinite-order element");
                    else
                        pass("dihedral relation " + labels[refl[0]] + " " + xexpr + " " +
                             labels[refl[0]] + " = (" + xexpr + ")^-1");
                    if (rep.row.group == NamedGroup::dinfxz2) {
                        // A second inverting involution outside the dihedral core
                        // that commutes with the first.
                        bool found = false;
                        if (refl.size() >= 2) {
                            auto core = ctx.generated_closure({*x, gens[refl[0]]}, 10, 256);
                            for (std::size_t t = 1; t < refl.size() && !found; ++t) {
                                const auto& z = gens[refl[t]];
                                if (ctx.equal(ctx.compose(z, gens[refl[0]]),
                                              ctx.compose(gens[refl[0]], z)) &&
                                    !ctx.in_closure(z, core))
                                    found = true;
                            }
                        }
                        if (found)
                            pass("independent commuting involution found");
                        else
                            fail("no independent commuting involution for the extension");
                    }
                    break;
                }
                case NamedGroup::z: {
                    if (gens.size() == 2) {
                        if (ctx.is_identity(ctx.compose(gens[0], gens[1])))
                            pass("generators are mutually inverse");
                        else
                            fail("expected a mutually inverse generator pair");
                    }
                    break;
                }
                case NamedGroup::nfree:
                case NamedGroup::nxz2:
                case NamedGroup::nxs3: {
                    std::vector<std::size_t> refl, psis;
                    for (std::size_t i = 0; i < gens.size(); ++i) {
                        if (!gens[i].word.empty())
                            refl.push_back(i);
                        else
                            psis.push_back(i);
                    }
                    bool base_ok = refl.size() == 3;
                    for (std::size_t i : refl)
                        if (orders[i] != 2) base_ok = false;
                    if (base_ok) {
                        for (std::size_t i = 0; i < refl.size() && base_ok; ++i) {
                            for (std::size_t j = i + 1; j < refl.size() && base_ok; ++j) {
                                Automorphism prod =
                                    ctx.compose(gens[refl[i]], gens[refl[j]]);
                                if (ctx.order_probe(prod).kind !=
                                    OrderProbeResult::Kind::infinite_certified)
                                    base_ok = false;
                            }
                        }
                    }
                    if (base_ok)
                        pass("three involutions with pairwise infinite products");
                    else
                        fail("free-product base structure not witnessed");
                    // Conjugation action of the empty-word involutions.
                    for (std::size_t p : psis) {
                        int moved = 0, fixed = 0;
                        for (std::size_t i : refl) {
                            Automorphism conj =
                                ctx.compose(gens[p], ctx.compose(gens[i], gens[p]));
                            bool hit = false;
                            for (std::size_t j : refl) {
                                if (ctx.equal(conj, gens[j])) {
                                    hit = true;
                                    (i == j ? fixed : moved)++;
                                }
                            }
                            if (!hit) moved = -100;  // conjugate escaped the base set
                        }
                        if (moved == 2 && fixed == 1)
                            pass("conjugation by " + labels[p] + " acts as a transposition");
                        else
                            fail("conjugation by " + labels[p] +
                                 " does not permute the base involutions as a transposition");
                    }
                    if (rep.row.group == NamedGroup::nxs3) {
                        if (psis.size() == 2) {
                            OrderProbeResult p =
                                ctx.order_probe(ctx.compose(gens[psis[0]], gens[psis[1]]));
                            if (p.kind == OrderProbeResult::Kind::finite && p.order == 3)
                                pass("extension involutions compose to order 3");
                            else
                                fail("extension involutions do not compose to order 3");
                        } else {
                            fail("expected two extension involutions");
                        }
                    }
                    break;
                }
                default:
                    break;
            }
        }
    }

    // Everything independently computed must lie in the generated group.
    for (const auto& g : g0) {
        if (!ctx.in_closure(g, closure)) {
            fail("fixing-subgroup element " + ctx.describe(g) + " outside the generated closure");
        }
    }
    for (const auto& e : ev.generators) {
        if (!ctx.in_closure(e.f, closure)) {
            fail("evidence generator " + ctx.describe(e.f) + " [" + e.stratum +
                 "] outside the generated closure");
        }
    }
    if (rep.ok)
        pass("all evidence generators lie in the generated group");
    return rep;
}

}  // namespace clusteraut
