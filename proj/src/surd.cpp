#include "clusteraut/surd.hpp"

#include <sstream>

namespace clusteraut {

Surd surd_normalize(const Int& m) {
    if (m < 0) throw input_error("surd_normalize: negative radicand");
    auto s = squarefree_split(m);
    return {s.coeff, s.radicand};
}

SurdSum SurdSum::of_int(const Int& n) {
    SurdSum s;
    s.add_int(n);
    return s;
}

SurdSum SurdSum::of_sqrt(const Int& m) {
    SurdSum s;
    s.add_sqrt(m);
    return s;
}

SurdSum& SurdSum::add_int(const Int& n) { return add_multiple_sqrt(n, 1); }

SurdSum& SurdSum::add_sqrt(const Int& m) { return add_multiple_sqrt(1, m); }

SurdSum& SurdSum::add_multiple_sqrt(const Int& c, const Int& m) {
    if (c == 0) return *this;
    Surd s = surd_normalize(m);
    if (s.coeff == 0) return *this;  // sqrt(0)
    Int& slot = terms_[s.radicand];
    slot += c * s.coeff;
    if (slot == 0) terms_.erase(s.radicand);
    return *this;
}

SurdSum& SurdSum::add(const SurdSum& o) {
    for (const auto& [rad, c] : o.terms_) {
        Int& slot = terms_[rad];
        slot += c;
        if (slot == 0) terms_.erase(rad);
    }
    return *this;
}

SurdSum& SurdSum::sub(const SurdSum& o) {
    for (const auto& [rad, c] : o.terms_) {
        Int& slot = terms_[rad];
        slot -= c;
        if (slot == 0) terms_.erase(rad);
    }
    return *this;
}

int SurdSum::sign() const {
    if (terms_.empty()) return 0;
    bool any_pos = false, any_neg = false;
    for (const auto& [rad, c] : terms_) {
        (void)rad;
        (c > 0 ? any_pos : any_neg) = true;
    }
    if (!any_neg) return +1;
    if (!any_pos) return -1;
    // Mixed signs: refine rational enclosures. sqrt(r) lies in
    // [s, s+1] / 2^k where s = isqrt(r * 4^k); sum the interval endpoints.
    // The value is nonzero (independence of distinct squarefree roots), so
    // some precision separates the enclosure from zero.
    for (unsigned long k = 16; k <= (1ul << 20); k *= 2) {
        Int lo = 0, hi = 0;  // numerators over 2^k
        for (const auto& [rad, c] : terms_) {
            Int scaled;
            mpz_mul_2exp(scaled.get_mpz_t(), rad.get_mpz_t(), 2 * k);
            Int s = isqrt(scaled);
            if (c > 0) {
                lo += c * s;
                hi += c * (s + 1);
            } else {
                lo += c * (s + 1);
                hi += c * s;
            }
        }
        if (lo > 0) return +1;
        if (hi < 0) return -1;
    }
    throw internal_error("SurdSum::sign: enclosure refinement exhausted");
}

std::string SurdSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [rad, c] : terms_) {
        Int a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (rad == 1) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << "sqrt(" << rad.get_str() << ")";
        }
    }
    return out.str();
}

SurdSum operator+(SurdSum a, const SurdSum& b) {
    a.add(b);
    return a;
}

SurdSum operator-(SurdSum a, const SurdSum& b) {
    a.sub(b);
    return a;
}

Cmp surdsum_compare(const SurdSum& a, const SurdSum& b) {
    SurdSum d = a;
    d.sub(b);
    switch (d.sign()) {
        case -1: return Cmp::less;
        case 0: return Cmp::equal;
        default: return Cmp::greater;
    }
}

}  // namespace clusteraut
