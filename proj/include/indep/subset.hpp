#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>

namespace indep {

/// Hard limit on the ground-set size of a site.
inline constexpr int kMaxGroundSize = 16;

/// A subset of the ground set {0, ..., n-1}, encoded as a bitmask.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

  static constexpr Subset singleton(int x) { return Subset(std::uint32_t{1} << x); }
  static constexpr Subset full(int n) { return Subset((std::uint32_t{1} << n) - 1); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int x) const { return (bits_ >> x) & 1U; }
  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  constexpr Subset& operator|=(Subset o) {
    bits_ |= o.bits_;
    return *this;
  }

  friend constexpr auto operator<=>(Subset, Subset) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Renders as "{0,2}".
std::string to_string(Subset s);

/// Calls f(s) for every subset s of `of`, in ascending bitmask order.
template <typename F>
void for_each_subset(Subset of, F&& f) {
  const std::uint32_t mask = of.bits();
  std::uint32_t s = 0;
  while (true) {
    f(Subset(s));
    if (s == mask) break;
    s = (s - mask) & mask;
  }
}

/// Calls f(d) for every d with lo ⊆ d ⊆ hi, in ascending order. Nothing if lo ⊄ hi.
template <typename F>
void for_each_between(Subset lo, Subset hi, F&& f) {
  if (!lo.subset_of(hi)) return;
  for_each_subset(hi - lo, [&](Subset s) { f(lo | s); });
}

/// Like for_each_between but stops as soon as f returns false. Returns false iff stopped.
template <typename F>
bool all_between(Subset lo, Subset hi, F&& f) {
  if (!lo.subset_of(hi)) return true;
  const std::uint32_t mask = (hi - lo).bits();
  std::uint32_t s = 0;
  while (true) {
    if (!f(lo | Subset(s))) return false;
    if (s == mask) break;
    s = (s - mask) & mask;
  }
  return true;
}

/// An ordered (A, C, B) triple: "A independent from B over C".
struct Triple {
  Subset a;
  Subset c;
  Subset b;
  friend constexpr auto operator<=>(const Triple&, const Triple&) = default;
};

std::string to_string(const Triple& t);

}  // namespace indep
