#pragma once
//
// Small permutations in one-line notation (0-based internally, printed
// 1-based) and signed permutations (sigma, epsilon) acting on matrices,
// symmetrizers and seeds.
//
#include "clusteraut/numeric.hpp"

#include <string>
#include <vector>

namespace clusteraut {

class Perm {
  public:
    Perm() = default;
    explicit Perm(std::vector<int> images);
    static Perm identity(int n);
    static Perm transposition(int n, int a, int b);
    static std::vector<Perm> all(int n);  // S_n, lexicographic one-line order

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }

    Perm inverse() const;
    // composition: (this ∘ f)(i) = this(f(i))
    Perm after(const Perm& f) const;
    bool is_identity() const;

    bool operator==(const Perm& o) const = default;
    auto operator<=>(const Perm& o) const = default;  // lexicographic one-line

    std::string one_line() const;  // e.g. "(2 1 3)", 1-based

  private:
    std::vector<int> img_;
};

struct SignedPerm {
    Perm sigma;
    int sign = +1;  // epsilon in {+1, -1}

    bool operator==(const SignedPerm& o) const = default;
    // order: sigma one-line lexicographic, then sign with + before -
    bool operator<(const SignedPerm& o) const {
        if (sigma != o.sigma) return sigma < o.sigma;
        return sign > o.sign;
    }
    std::string str() const { return sigma.one_line() + (sign > 0 ? "+" : "-"); }
};

}  // namespace clusteraut
