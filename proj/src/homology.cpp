#include "pinched/homology.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace pinched {

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw std::invalid_argument("field characteristic must be a prime below 2^31");
  }
  return FieldSpec(Kind::PrimeField, p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  std::string t;
  for (char ch : text) t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  if (t == "QQ" || t == "Q" || t == "RATIONALS" || t == "0") return rationals();
  if (t.rfind("GF(", 0) == 0 && t.back() == ')') t = t.substr(3, t.size() - 4);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(c); })) {
    throw std::invalid_argument("unknown field '" + text + "'");
  }
  return prime(static_cast<std::uint32_t>(std::stoul(t)));
}

std::string FieldSpec::str() const {
  return kind_ == Kind::Rationals ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

HomologyProfile::HomologyProfile(std::vector<std::int64_t> dims) : dims_(std::move(dims)) {
  for (auto v : dims_) {
    if (v < 0) throw std::invalid_argument("homology dimensions are non-negative");
  }
  while (!dims_.empty() && dims_.back() == 0) dims_.pop_back();
}

std::int64_t HomologyProfile::dim(int k) const {
  const int idx = k + 1;
  return idx < 0 || idx >= static_cast<int>(dims_.size()) ? 0 : dims_[idx];
}

std::int64_t HomologyProfile::euler_characteristic() const {
  std::int64_t chi = 0;
  for (int k = -1; k <= top(); ++k) chi += (k % 2 == 0 ? 1 : -1) * dim(k);
  return chi;
}

SparseMatrix boundary_matrix(const SimplicialComplex& c, int k) {
  const auto rows = c.faces_of_dim(k - 1);
  const auto cols = c.faces_of_dim(k);
  std::unordered_map<Face, int> row_index;
  row_index.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], static_cast<int>(r));

  SparseMatrix m;
  m.rows = static_cast<int>(rows.size());
  m.columns.resize(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto& col = m.columns[j];
    int position = 0;
    for (Face rest = cols[j]; rest; rest &= rest - 1, ++position) {
      const Face facet = cols[j] & ~(rest & -rest);
      col.push_back({row_index.at(facet), position % 2 == 0 ? 1 : -1});
    }
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.row < b.row; });
  }
  return m;
}

namespace {

int rank_over(const SparseMatrix& m, const FieldSpec& field) {
  if (m.cols() == 0 || m.rows == 0) return 0;
  return field.kind() == FieldSpec::Kind::Rationals ? rank_rational(m)
                                                    : rank_mod_p(m, field.characteristic());
}

}  // namespace

HomologyProfile reduced_homology(const SimplicialComplex& c, const FieldSpec& field) {
  if (c.is_void()) return HomologyProfile();
  const int top = c.dimension();
  // rank[k + 1] = rank ∂_k for k = -1..top+1; ∂_{-1} and ∂_{top+1} vanish.
  std::vector<int> rank(top + 3, 0);
  for (int k = 0; k <= top; ++k) rank[k + 1] = rank_over(boundary_matrix(c, k), field);
  std::vector<std::int64_t> dims(top + 2, 0);
  for (int k = -1; k <= top; ++k) {
    dims[k + 1] = c.count_of_dim(k) - rank[k + 1] - rank[k + 2];
  }
  return HomologyProfile(std::move(dims));
}

bool boundary_squares_to_zero(const SimplicialComplex& c) {
  for (int k = 0; k < c.dimension(); ++k) {
    const SparseMatrix outer = boundary_matrix(c, k);
    const SparseMatrix inner = boundary_matrix(c, k + 1);
    for (const auto& col : inner.columns) {
      std::map<int, std::int64_t> acc;
      for (const auto& e : col) {
        for (const auto& f : outer.columns[e.row]) acc[f.row] += e.value * f.value;
      }
      for (const auto& [row, v] : acc) {
        if (v != 0) return false;
      }
    }
  }
  return true;
}

std::int64_t reduced_euler_characteristic(const SimplicialComplex& c) {
  std::int64_t chi = 0;
  for (Face f : c.faces()) chi += face_dim(f) % 2 == 0 ? 1 : -1;
  return chi;
}

bool alexander_duality_holds(const SimplicialComplex& c, const FieldSpec& field) {
  const int v = std::popcount(c.vertex_set());
  if (v == 0) return true;
  const HomologyProfile primal = reduced_homology(c, field);
  const HomologyProfile dual = reduced_homology(alexander_dual(c), field);
  // Both sides vanish outside -1 <= index <= v - 1.
  for (int i = -1; i <= v + 2; ++i) {
    if (dual.dim(i - 2) != primal.dim(v - i - 1)) return false;
  }
  return true;
}

}  // namespace pinched
