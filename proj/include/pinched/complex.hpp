#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "pinched/multidegree.hpp"
#include "pinched/semigroup.hpp"

namespace pinched {

/// A face as a bitmask over vertex indices 0..63. Iterating set bits from the
/// low end gives the sorted vertex list used for orientation.
using Face = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline int face_size(Face f) { return std::popcount(f); }
inline int face_dim(Face f) { return std::popcount(f) - 1; }
std::vector<int> face_vertices(Face f);
Face face_of(std::initializer_list<int> vertices);

/// Finite abstract simplicial complex on vertices 0..ground_size-1.
///
/// A complex with no faces is the void complex; {∅} is the complex whose
/// only face is empty. `vertex_set` is the ground set V used by Alexander
/// duality. It defaults to the vertex support; a dual inherits V from its
/// primal so that dualizing twice returns the original.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Faces need not be sorted or closed; throws std::invalid_argument if the
  /// family is not downward closed or refers to a vertex >= ground_size.
  SimplicialComplex(int ground_size, std::vector<Face> faces);
  SimplicialComplex(int ground_size, std::vector<Face> faces, Face vertex_set);

  static SimplicialComplex void_complex(int ground_size) { return {ground_size, {}}; }
  static SimplicialComplex simplex(int ground_size, Face vertices);
  static SimplicialComplex simplex_boundary(int ground_size, Face vertices);

  int ground_size() const { return ground_size_; }
  Face vertex_set() const { return vertex_set_; }
  Face support() const;

  bool is_void() const { return faces_.empty(); }
  bool contains(Face f) const;
  int dimension() const;  // -1 for {∅}; -2 for the void complex

  /// Sorted by (cardinality, mask).
  const std::vector<Face>& faces() const { return faces_; }
  std::vector<Face> faces_of_dim(int k) const;
  std::int64_t count_of_dim(int k) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.ground_size_ == b.ground_size_ && a.faces_ == b.faces_;
  }

 private:
  int ground_size_ = 0;
  std::vector<Face> faces_;
  Face vertex_set_ = 0;
};

/// Δ_h over the generators of a pinched Veronese ring.
struct SquarefreeDivisorComplex {
  Multidegree degree;
  SimplicialComplex complex;
};

using MembershipTest = std::function<bool(const Multidegree&)>;

/// Faces F ⊆ vertices with h - ΣF in the semigroup described by `member`.
/// Enumerated by extending faces with larger vertex indices only, so each
/// face is tested once and non-faces are never extended.
SimplicialComplex build_complex(const Multidegree& h, const std::vector<Multidegree>& vertices,
                                const MembershipTest& member);

/// Void when h is not in H.
SquarefreeDivisorComplex build_divisor_complex(const Multidegree& h, const PinchConfig& config);
SquarefreeDivisorComplex build_divisor_complex(const Multidegree& h, const PinchConfig& config,
                                               const GeneratorSet& gens);

/// {V \ F : F ⊆ V, F not a face}, V = c.vertex_set(). Throws on the void
/// complex and when #V exceeds `max_vertices` (the dual enumerates 2^#V sets).
SimplicialComplex alexander_dual(const SimplicialComplex& c, int max_vertices = 26);

/// Faces F contained in some face G with v in G, i.e. {F : F ∪ {v} ∈ c}.
/// Throws std::out_of_range if v is outside the ground set.
SimplicialComplex link(const SimplicialComplex& c, int v);

/// Splitting of the full Veronese divisor complex at an interior pinch m_i =
/// (i, d - i), n = 2: checks that it is the union of the pinched complex and
/// the link of m_i, and, when |h| = i*d, that their intersection has no face
/// of dimension >= i - 2. Throws std::invalid_argument on bad input.
bool decomposition_check(const Multidegree& h, int d, int i);

}  // namespace pinched
