#include "pinched/sparse_rank.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <utility>

namespace pinched {

namespace {

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t r = 1;
  base %= p;
  while (exp) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

using ModColumn = std::vector<std::pair<int, std::uint32_t>>;

// a - factor * b, both sorted by row, result drops zeros.
ModColumn axpy_mod(const ModColumn& a, std::uint32_t factor, const ModColumn& b,
                   std::uint32_t p) {
  ModColumn out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      const std::uint64_t v = (p - static_cast<std::uint64_t>(factor) * b[j].second % p) % p;
      if (v) out.emplace_back(b[j].first, static_cast<std::uint32_t>(v));
      ++j;
    } else {
      const std::uint64_t sub = static_cast<std::uint64_t>(factor) * b[j].second % p;
      const std::uint64_t v = (a[i].second + p - sub) % p;
      if (v) out.emplace_back(a[i].first, static_cast<std::uint32_t>(v));
      ++i;
      ++j;
    }
  }
  return out;
}

using IntColumn = std::vector<std::pair<int, mpz_class>>;

// pivot_b * a - a_low * b, divided by content.
IntColumn eliminate_int(const IntColumn& a, const IntColumn& b) {
  const mpz_class& ca = a.back().second;
  const mpz_class& cb = b.back().second;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  const mpz_class fa = cb / g;
  const mpz_class fb = ca / g;

  IntColumn out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.emplace_back(a[i].first, fa * a[i].second);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -fb * b[j].second);
      ++j;
    } else {
      mpz_class v = fa * a[i].second - fb * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  mpz_class content = 0;
  for (const auto& [row, v] : out) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    if (content == 1) break;
  }
  if (content > 1) {
    for (auto& e : out) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), content.get_mpz_t());
  }
  return out;
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

int rank_mod_p(const SparseMatrix& m, std::uint32_t p) {
  if (p < 2 || p >= (1u << 31) || !is_prime(p)) throw std::invalid_argument("modulus must be prime");
  std::vector<int> pivot_of_row(m.rows, -1);
  std::vector<ModColumn> reduced(m.columns.size());
  int rank = 0;
  for (std::size_t c = 0; c < m.columns.size(); ++c) {
    ModColumn col;
    col.reserve(m.columns[c].size());
    for (const auto& e : m.columns[c]) {
      const std::int64_t r = e.value % static_cast<std::int64_t>(p);
      const auto v = static_cast<std::uint32_t>(r < 0 ? r + p : r);
      if (v) col.emplace_back(e.row, v);
    }
    while (!col.empty()) {
      const int low = col.back().first;
      const int pc = pivot_of_row[low];
      if (pc < 0) break;
      const ModColumn& piv = reduced[pc];
      const std::uint64_t inv = pow_mod(piv.back().second, p - 2, p);
      const auto factor = static_cast<std::uint32_t>(col.back().second * inv % p);
      col = axpy_mod(col, factor, piv, p);
    }
    if (!col.empty()) {
      pivot_of_row[col.back().first] = static_cast<int>(c);
      reduced[c] = std::move(col);
      ++rank;
    }
  }
  return rank;
}

int rank_rational(const SparseMatrix& m) {
  std::vector<int> pivot_of_row(m.rows, -1);
  std::vector<IntColumn> reduced(m.columns.size());
  int rank = 0;
  for (std::size_t c = 0; c < m.columns.size(); ++c) {
    IntColumn col;
    col.reserve(m.columns[c].size());
    for (const auto& e : m.columns[c]) {
      if (e.value != 0) col.emplace_back(e.row, mpz_class(static_cast<long>(e.value)));
    }
    while (!col.empty()) {
      const int pc = pivot_of_row[col.back().first];
      if (pc < 0) break;
      col = eliminate_int(col, reduced[pc]);
    }
    if (!col.empty()) {
      pivot_of_row[col.back().first] = static_cast<int>(c);
      reduced[c] = std::move(col);
      ++rank;
    }
  }
  return rank;
}

}  // namespace pinched
