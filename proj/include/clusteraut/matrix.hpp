#pragma once
//
// Skew-symmetrizable integer exchange matrices: validation, symmetrizer
// derivation, mutation, signed-permutation action, exhaustive equivalence
// search, and a canonical key that identifies matrices up to simultaneous
// relabeling and global sign flip.
//
#include "clusteraut/numeric.hpp"
#include "clusteraut/permutation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace clusteraut {

class ExchangeMatrix {
  public:
    ExchangeMatrix() = default;
    ExchangeMatrix(int n, std::vector<Int> entries);  // row-major

    int n() const { return n_; }
    const Int& at(int i, int j) const { return e_[i * n_ + j]; }
    Int& at(int i, int j) { return e_[i * n_ + j]; }

    bool operator==(const ExchangeMatrix& o) const = default;
    bool operator<(const ExchangeMatrix& o) const;  // row-major lexicographic

    const std::vector<Int>& row_major() const { return e_; }
    std::string str() const;  // rows on lines, space-separated

  private:
    int n_ = 0;
    std::vector<Int> e_;
};

// Exchange matrix together with a positive integer symmetrizer D
// (d_i * b_ij = -d_j * b_ji for all i, j).
struct SymmetrizedMatrix {
    ExchangeMatrix b;
    std::vector<Int> d;
    bool operator==(const SymmetrizedMatrix& o) const = default;
};

// Checks the sign pattern and skew-symmetrizability of b. When d is absent,
// derives the unique positive symmetrizer scaled to gcd 1 on each connected
// component; when present, validates it. Throws input_error with a specific
// message on sign-pattern violations or inconsistent ratios.
SymmetrizedMatrix validate_or_derive_skew_symmetrizer(
    const ExchangeMatrix& b, const std::optional<std::vector<Int>>& d = std::nullopt);

// Matrix mutation in direction k (0-based). Involutive; the symmetrizer of
// the class is unchanged.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k);

// (sigma B)_{ij} = B_{sigma^-1(i), sigma^-1(j)}, multiplied by the sign.
ExchangeMatrix apply_perm_matrix(const ExchangeMatrix& b, const SignedPerm& sp);
std::vector<Int> apply_perm_symmetrizer(const std::vector<Int>& d, const Perm& sigma);
SymmetrizedMatrix apply_signed_perm(const SymmetrizedMatrix& m, const SignedPerm& sp);

// All (sigma, epsilon) with epsilon * sigma(b1) = b2, by exhaustive search
// over S_n x {+1,-1} (intended for n <= 8). With require_symmetrizer_match,
// also requires sigma(d1) = d2.
std::vector<SignedPerm> signed_perm_equivalences(const SymmetrizedMatrix& b1,
                                                 const SymmetrizedMatrix& b2,
                                                 bool require_symmetrizer_match);

bool is_connected_matrix(const ExchangeMatrix& b);
bool is_acyclic_matrix(const ExchangeMatrix& b);  // no directed cycle among positive entries

// Lexicographically least row-major serialization over the orbit
// { epsilon * sigma(B) }; equal keys <=> matrices agree up to simultaneous
// relabeling and global sign. With include_symmetrizer, sigma(D) is appended
// to the serialization before minimizing, so keys also respect D.
std::vector<Int> canonical_orbit_min(const SymmetrizedMatrix& m, bool include_symmetrizer);
std::string canonical_key(const SymmetrizedMatrix& m, bool include_symmetrizer);

// Text format: first line n, then n rows of integers; optional trailing line
// "D: d1 d2 ... dn". Rows may also be separated by ';' (single-line form).
SymmetrizedMatrix parse_matrix_text(const std::string& text);
std::string matrix_text(const SymmetrizedMatrix& m);

}  // namespace clusteraut
