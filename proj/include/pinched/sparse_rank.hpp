#pragma once

#include <cstdint>
#include <vector>

namespace pinched {

/// Column-major sparse integer matrix. Each column is a list of
/// (row, value) pairs sorted by row with no zero values.
struct SparseMatrix {
  struct Entry {
    int row;
    std::int64_t value;
  };
  int rows = 0;
  std::vector<std::vector<Entry>> columns;

  int cols() const { return static_cast<int>(columns.size()); }
};

/// Rank over GF(p) by pivot-on-lowest-row column reduction. p must be prime
/// and below 2^31.
int rank_mod_p(const SparseMatrix& m, std::uint32_t p);

/// Rank over Q by fraction-free column reduction: every reduced column is
/// an integer combination divided by its content, using GMP integers.
int rank_rational(const SparseMatrix& m);

bool is_prime(std::uint64_t p);

}  // namespace pinched
