#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "indep/error.hpp"

namespace indep {

inline constexpr int kMaxPrime = 251;

bool is_prime(int p);
/// Multiplicative inverse of a (mod p), a ≢ 0.
int inverse_mod(int a, int p);

/// A vector in F_p^k with canonical coordinates in [0, p).
class FpVector {
 public:
  FpVector() = default;
  /// Reduces coordinates mod p. Throws Error unless p is a prime in [2, 251].
  FpVector(int p, std::vector<int> coords);

  static FpVector zero(int p, int k);
  /// The i-th standard basis vector (0-based).
  static FpVector unit(int p, int k, int i);

  int p() const { return p_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<std::uint8_t>& coords() const { return coords_; }
  bool is_zero() const;

  FpVector operator+(const FpVector& o) const;
  FpVector operator-(const FpVector& o) const;
  FpVector scaled(int c) const;

  /// "(1,0,2)".
  std::string to_string() const;

  friend bool operator==(const FpVector&, const FpVector&) = default;
  friend auto operator<=>(const FpVector&, const FpVector&) = default;

 private:
  int p_ = 2;
  std::vector<std::uint8_t> coords_;
};

/// A subspace of F_p^k, held as its reduced row echelon basis (the canonical form, so
/// subspace equality is basis equality).
class FpSubspace {
 public:
  static FpSubspace zero(int p, int k);
  static FpSubspace full(int p, int k);
  /// Throws MismatchError if a vector's p or k differs from the arguments.
  static FpSubspace span(int p, int k, std::span<const FpVector> vectors);

  int p() const { return p_; }
  int ambient_dim() const { return k_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<FpVector>& basis() const { return basis_; }

  bool contains(const FpVector& v) const;
  bool subspace_of(const FpSubspace& other) const;

  std::string to_string() const;

  friend bool operator==(const FpSubspace&, const FpSubspace&) = default;

 private:
  int p_ = 2;
  int k_ = 0;
  std::vector<FpVector> basis_;
};

/// span of a non-empty list (p, k taken from the first vector).
FpSubspace span(std::span<const FpVector> vectors);
FpSubspace span(std::initializer_list<FpVector> vectors);
FpSubspace sum(const FpSubspace& u, const FpSubspace& v);
/// Zassenhaus: reduce rows (u|u) and (v|0); rows with zero left half span U ∩ V.
FpSubspace intersect(const FpSubspace& u, const FpSubspace& v);
bool contains(const FpSubspace& u, const FpVector& v);
/// dim(Σ parts) == Σ dim(parts).
bool is_direct_sum(std::span<const FpSubspace> parts);

/// {λ ∈ F_p^N : Σ λ_i rows_i = 0} for N = rows.size(), in canonical form.
FpSubspace left_kernel(int p, int k, std::span<const FpVector> rows);

/// Permutes coordinates: out[perm[i]] = v[i].
FpVector permute(const FpVector& v, std::span<const int> perm);
FpSubspace permute(const FpSubspace& u, std::span<const int> perm);

}  // namespace indep
