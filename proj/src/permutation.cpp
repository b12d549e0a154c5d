#include "clusteraut/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace clusteraut {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= n() || seen[v]) throw input_error("Perm: not a permutation");
        seen[v] = true;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
}

Perm Perm::transposition(int n, int a, int b) {
    Perm p = identity(n);
    std::swap(p.img_[a], p.img_[b]);
    return p;
}

std::vector<Perm> Perm::all(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(Perm(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

Perm Perm::inverse() const {
    std::vector<int> img(img_.size());
    for (int i = 0; i < n(); ++i) img[img_[i]] = i;
    return Perm(std::move(img));
}

Perm Perm::after(const Perm& f) const {
    if (n() != f.n()) throw internal_error("Perm::after: size mismatch");
    std::vector<int> img(img_.size());
    for (int i = 0; i < n(); ++i) img[i] = img_[f.img_[i]];
    return Perm(std::move(img));
}

bool Perm::is_identity() const {
    for (int i = 0; i < n(); ++i)
        if (img_[i] != i) return false;
    return true;
}

std::string Perm::one_line() const {
    std::ostringstream out;
    out << "(";
    for (int i = 0; i < n(); ++i) {
        if (i) out << " ";
        out << img_[i] + 1;
    }
    out << ")";
    return out.str();
}

}  // namespace clusteraut
