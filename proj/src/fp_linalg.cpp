#include "indep/fp_linalg.hpp"

#include <algorithm>
#include <utility>

namespace indep {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int inverse_mod(int a, int p) {
  int t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
  if (new_r == 0) throw Error("zero has no inverse");
  while (new_r != 0) {
    const int q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return ((t % p) + p) % p;
}

namespace {

void check_prime(int p) {
  if (p > kMaxPrime || !is_prime(p))
    throw Error("p must be a prime in [2, " + std::to_string(kMaxPrime) + "], got " +
                std::to_string(p));
}

using Row = std::vector<int>;

// In-place reduced row echelon form over F_p; zero rows are dropped.
void rref(int p, std::vector<Row>& rows) {
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const int inv = inverse_mod(rows[rank][col], p);
    for (auto& x : rows[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const int f = rows[r][col];
      for (std::size_t c = col; c < width; ++c)
        rows[r][c] = ((rows[r][c] - f * rows[rank][c]) % p + p) % p;
    }
    ++rank;
  }
  rows.resize(rank);
}

Row to_row(const FpVector& v) { return Row(v.coords().begin(), v.coords().end()); }

void check_same(const FpSubspace& u, const FpSubspace& v) {
  if (u.p() != v.p() || u.ambient_dim() != v.ambient_dim())
    throw MismatchError("subspaces live in different ambient spaces");
}

}  // namespace

// ------------------------------------------------------------------- FpVector

FpVector::FpVector(int p, std::vector<int> coords) : p_(p) {
  check_prime(p);
  coords_.reserve(coords.size());
  for (int x : coords) coords_.push_back(static_cast<std::uint8_t>(((x % p) + p) % p));
}

FpVector FpVector::zero(int p, int k) { return FpVector(p, std::vector<int>(static_cast<std::size_t>(k), 0)); }

FpVector FpVector::unit(int p, int k, int i) {
  std::vector<int> c(static_cast<std::size_t>(k), 0);
  c.at(static_cast<std::size_t>(i)) = 1;
  return FpVector(p, std::move(c));
}

bool FpVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto x) { return x == 0; });
}

FpVector FpVector::operator+(const FpVector& o) const {
  if (p_ != o.p_ || dim() != o.dim()) throw MismatchError("vector shape mismatch");
  FpVector out = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    out.coords_[i] = static_cast<std::uint8_t>((coords_[i] + o.coords_[i]) % p_);
  return out;
}

FpVector FpVector::operator-(const FpVector& o) const { return *this + o.scaled(p_ - 1); }

FpVector FpVector::scaled(int c) const {
  c = ((c % p_) + p_) % p_;
  FpVector out = *this;
  for (auto& x : out.coords_) x = static_cast<std::uint8_t>(x * c % p_);
  return out;
}

std::string FpVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i)
    out += (i ? "," : "") + std::to_string(coords_[i]);
  return out + ")";
}

// ----------------------------------------------------------------- FpSubspace

FpSubspace FpSubspace::zero(int p, int k) {
  check_prime(p);
  FpSubspace s;
  s.p_ = p;
  s.k_ = k;
  return s;
}

FpSubspace FpSubspace::full(int p, int k) {
  std::vector<FpVector> units;
  for (int i = 0; i < k; ++i) units.push_back(FpVector::unit(p, k, i));
  return span(p, k, units);
}

FpSubspace FpSubspace::span(int p, int k, std::span<const FpVector> vectors) {
  FpSubspace s = zero(p, k);
  std::vector<Row> rows;
  for (const auto& v : vectors) {
    if (v.p() != p || v.dim() != k) throw MismatchError("vector shape mismatch in span");
    rows.push_back(to_row(v));
  }
  rref(p, rows);
  for (auto& r : rows) s.basis_.emplace_back(p, std::move(r));
  return s;
}

bool FpSubspace::contains(const FpVector& v) const {
  if (v.p() != p_ || v.dim() != k_) throw MismatchError("vector shape mismatch in contains");
  // Reduce against the echelon basis; v is inside iff the remainder vanishes.
  Row r = to_row(v);
  for (const auto& b : basis_) {
    std::size_t lead = 0;
    while (b[static_cast<int>(lead)] == 0) ++lead;
    const int f = r[lead];
    if (f == 0) continue;
    for (std::size_t c = lead; c < r.size(); ++c)
      r[c] = ((r[c] - f * b[static_cast<int>(c)]) % p_ + p_) % p_;
  }
  return std::all_of(r.begin(), r.end(), [](int x) { return x == 0; });
}

bool FpSubspace::subspace_of(const FpSubspace& other) const {
  check_same(*this, other);
  return std::all_of(basis_.begin(), basis_.end(), [&](const FpVector& b) { return other.contains(b); });
}

std::string FpSubspace::to_string() const {
  std::string out = "span{";
  for (std::size_t i = 0; i < basis_.size(); ++i) out += (i ? ", " : "") + basis_[i].to_string();
  return out + "}";
}

FpSubspace span(std::span<const FpVector> vectors) {
  if (vectors.empty()) throw Error("span of an empty list needs explicit p and k");
  return FpSubspace::span(vectors.front().p(), vectors.front().dim(), vectors);
}

FpSubspace span(std::initializer_list<FpVector> vectors) {
  return span(std::span<const FpVector>(vectors.begin(), vectors.size()));
}

FpSubspace sum(const FpSubspace& u, const FpSubspace& v) {
  check_same(u, v);
  std::vector<FpVector> all = u.basis();
  all.insert(all.end(), v.basis().begin(), v.basis().end());
  return FpSubspace::span(u.p(), u.ambient_dim(), all);
}

FpSubspace intersect(const FpSubspace& u, const FpSubspace& v) {
  check_same(u, v);
  const int p = u.p();
  const int k = u.ambient_dim();
  std::vector<Row> rows;
  for (const auto& b : u.basis()) {
    Row r = to_row(b);
    r.insert(r.end(), b.coords().begin(), b.coords().end());
    rows.push_back(std::move(r));
  }
  for (const auto& b : v.basis()) {
    Row r = to_row(b);
    r.resize(static_cast<std::size_t>(2 * k), 0);
    rows.push_back(std::move(r));
  }
  rref(p, rows);
  std::vector<FpVector> meet;
  for (const auto& r : rows) {
    if (std::any_of(r.begin(), r.begin() + k, [](int x) { return x != 0; })) continue;
    meet.emplace_back(p, Row(r.begin() + k, r.end()));
  }
  return FpSubspace::span(p, k, meet);
}

bool contains(const FpSubspace& u, const FpVector& v) { return u.contains(v); }

bool is_direct_sum(std::span<const FpSubspace> parts) {
  if (parts.empty()) return true;
  FpSubspace total = FpSubspace::zero(parts.front().p(), parts.front().ambient_dim());
  int dims = 0;
  for (const auto& part : parts) {
    total = sum(total, part);
    dims += part.dim();
  }
  return total.dim() == dims;
}

FpSubspace left_kernel(int p, int k, std::span<const FpVector> rows) {
  check_prime(p);
  const int n = static_cast<int>(rows.size());
  std::vector<Row> aug;
  for (int i = 0; i < n; ++i) {
    const auto& v = rows[static_cast<std::size_t>(i)];
    if (v.p() != p || v.dim() != k) throw MismatchError("vector shape mismatch in kernel");
    Row r = to_row(v);
    r.resize(static_cast<std::size_t>(k + n), 0);
    r[static_cast<std::size_t>(k + i)] = 1;
    aug.push_back(std::move(r));
  }
  rref(p, aug);
  std::vector<FpVector> kernel;
  for (const auto& r : aug) {
    if (std::any_of(r.begin(), r.begin() + k, [](int x) { return x != 0; })) continue;
    kernel.emplace_back(p, Row(r.begin() + k, r.end()));
  }
  return FpSubspace::span(p, n, kernel);
}

FpVector permute(const FpVector& v, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != v.dim()) throw MismatchError("permutation size mismatch");
  std::vector<int> out(static_cast<std::size_t>(v.dim()), 0);
  for (int i = 0; i < v.dim(); ++i) out.at(static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])) = v[i];
  return FpVector(v.p(), std::move(out));
}

FpSubspace permute(const FpSubspace& u, std::span<const int> perm) {
  std::vector<FpVector> moved;
  for (const auto& b : u.basis()) moved.push_back(permute(b, perm));
  return FpSubspace::span(u.p(), u.ambient_dim(), moved);
}

}  // namespace indep
