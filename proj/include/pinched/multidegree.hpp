#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace pinched {

/// Exponent vector in N^n. The total degree is kept in sync with the
/// coordinates by every mutating path.
class Multidegree {
 public:
  Multidegree() = default;
  explicit Multidegree(std::vector<int> coords);
  Multidegree(std::initializer_list<int> coords);

  static Multidegree zero(int n) { return Multidegree(std::vector<int>(n, 0)); }

  int size() const { return static_cast<int>(coords_.size()); }
  int total() const { return total_; }
  int operator[](int i) const { return coords_[i]; }
  const std::vector<int>& coords() const { return coords_; }
  int max() const;

  Multidegree& operator+=(const Multidegree& other);
  friend Multidegree operator+(Multidegree a, const Multidegree& b) { return a += b; }

  /// a - b, or nothing when some coordinate would go negative.
  friend std::optional<Multidegree> subtract(const Multidegree& a, const Multidegree& b);

  Multidegree scaled(int k) const;
  Multidegree permuted(const std::vector<int>& perm) const;

  /// Lexicographic comparison on coordinates; sizes compare first.
  friend std::strong_ordering operator<=>(const Multidegree& a, const Multidegree& b);
  friend bool operator==(const Multidegree& a, const Multidegree& b) {
    return a.coords_ == b.coords_;
  }

  /// "a,b,c"
  std::string str() const;
  static Multidegree parse(const std::string& text);

 private:
  std::vector<int> coords_;
  int total_ = 0;
};

struct MultidegreeHash {
  std::size_t operator()(const Multidegree& m) const noexcept;
};

/// All compositions of `total` into `parts` non-negative parts, in
/// descending lexicographic order: (total,0,..,0) first, (0,..,0,total) last.
std::vector<Multidegree> compositions(int parts, int total);

/// binom(n, k) for small arguments; throws on 64-bit overflow.
std::int64_t binomial(int n, int k);

}  // namespace pinched
