#include "pinched/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace pinched {

namespace {

bool face_less(Face a, Face b) {
  const int ca = std::popcount(a), cb = std::popcount(b);
  return ca != cb ? ca < cb : a < b;
}

Face low_bits(int count) { return count >= 64 ? ~Face{0} : (Face{1} << count) - 1; }

}  // namespace

std::vector<int> face_vertices(Face f) {
  std::vector<int> out;
  out.reserve(std::popcount(f));
  while (f) {
    out.push_back(std::countr_zero(f));
    f &= f - 1;
  }
  return out;
}

Face face_of(std::initializer_list<int> vertices) {
  Face f = 0;
  for (int v : vertices) f |= Face{1} << v;
  return f;
}

SimplicialComplex::SimplicialComplex(int ground_size, std::vector<Face> faces)
    : ground_size_(ground_size), faces_(std::move(faces)) {
  if (ground_size < 0 || ground_size > kMaxVertices) {
    throw std::invalid_argument("ground set must have at most 64 vertices");
  }
  std::sort(faces_.begin(), faces_.end(), face_less);
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
  const Face allowed = low_bits(ground_size);
  for (Face f : faces_) {
    if (f & ~allowed) throw std::invalid_argument("face uses a vertex outside the ground set");
    for (Face rest = f; rest; rest &= rest - 1) {
      const Face facet = f & ~(rest & -rest);
      if (!contains(facet)) throw std::invalid_argument("face family is not downward closed");
    }
  }
  vertex_set_ = support();
}

SimplicialComplex::SimplicialComplex(int ground_size, std::vector<Face> faces, Face vertex_set)
    : SimplicialComplex(ground_size, std::move(faces)) {
  if ((support() & ~vertex_set) != 0) {
    throw std::invalid_argument("vertex set must contain the support");
  }
  vertex_set_ = vertex_set;
}

SimplicialComplex SimplicialComplex::simplex(int ground_size, Face vertices) {
  std::vector<Face> faces;
  for (Face sub = vertices;; sub = (sub - 1) & vertices) {
    faces.push_back(sub);
    if (sub == 0) break;
  }
  return {ground_size, std::move(faces)};
}

SimplicialComplex SimplicialComplex::simplex_boundary(int ground_size, Face vertices) {
  std::vector<Face> faces;
  for (Face sub = vertices;; sub = (sub - 1) & vertices) {
    if (sub != vertices) faces.push_back(sub);
    if (sub == 0) break;
  }
  return {ground_size, std::move(faces), vertices};
}

Face SimplicialComplex::support() const {
  Face s = 0;
  for (Face f : faces_) s |= f;
  return s;
}

bool SimplicialComplex::contains(Face f) const {
  return std::binary_search(faces_.begin(), faces_.end(), f, face_less);
}

int SimplicialComplex::dimension() const {
  return faces_.empty() ? -2 : face_dim(faces_.back());
}

std::vector<Face> SimplicialComplex::faces_of_dim(int k) const {
  std::vector<Face> out;
  for (Face f : faces_) {
    if (face_dim(f) == k) out.push_back(f);
  }
  return out;
}

std::int64_t SimplicialComplex::count_of_dim(int k) const {
  return std::count_if(faces_.begin(), faces_.end(), [k](Face f) { return face_dim(f) == k; });
}

SimplicialComplex build_complex(const Multidegree& h, const std::vector<Multidegree>& vertices,
                                const MembershipTest& member) {
  const int count = static_cast<int>(vertices.size());
  if (count > kMaxVertices) throw std::invalid_argument("more than 64 generators");
  std::vector<Face> faces;
  if (!member(h)) return SimplicialComplex(count, {});

  struct Frame {
    Face face;
    Multidegree rest;
    int next;
  };
  std::vector<Frame> stack;
  stack.push_back({0, h, 0});
  faces.push_back(0);
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next >= count) {
      stack.pop_back();
      continue;
    }
    const int v = top.next++;
    auto rest = subtract(top.rest, vertices[v]);
    if (!rest || !member(*rest)) continue;
    const Face f = top.face | (Face{1} << v);
    faces.push_back(f);
    stack.push_back({f, std::move(*rest), v + 1});
  }
  return SimplicialComplex(count, std::move(faces));
}

SquarefreeDivisorComplex build_divisor_complex(const Multidegree& h, const PinchConfig& config,
                                               const GeneratorSet& gens) {
  auto member = [&config](const Multidegree& x) { return is_member_closed(x, config); };
  return {h, build_complex(h, gens.gens, member)};
}

SquarefreeDivisorComplex build_divisor_complex(const Multidegree& h, const PinchConfig& config) {
  return build_divisor_complex(h, config, generate_generators(config));
}

SimplicialComplex alexander_dual(const SimplicialComplex& c, int max_vertices) {
  if (c.is_void()) throw std::invalid_argument("the void complex has no Alexander dual");
  const Face ground = c.vertex_set();
  if (std::popcount(ground) > max_vertices) {
    throw std::length_error("Alexander dual: vertex set too large to enumerate");
  }
  std::vector<Face> dual;
  for (Face sub = ground;; sub = (sub - 1) & ground) {
    if (!c.contains(sub)) dual.push_back(ground & ~sub);
    if (sub == 0) break;
  }
  return SimplicialComplex(c.ground_size(), std::move(dual), ground);
}

SimplicialComplex link(const SimplicialComplex& c, int v) {
  if (v < 0 || v >= c.ground_size()) throw std::out_of_range("link vertex outside ground set");
  const Face bit = Face{1} << v;
  std::vector<Face> out;
  for (Face f : c.faces()) {
    if ((f & bit) || c.contains(f | bit)) out.push_back(f);
  }
  return SimplicialComplex(c.ground_size(), std::move(out));
}

bool decomposition_check(const Multidegree& h, int d, int i) {
  if (h.size() != 2) throw std::invalid_argument("decomposition check needs n = 2");
  if (i < 0 || i > d || std::max(i, d - i) >= d - 1) {
    throw std::invalid_argument("decomposition check needs an interior pinch");
  }
  if (h.total() % d != 0) throw std::invalid_argument("h must lie in the Veronese semigroup");

  const auto all = veronese_generators(2, d);
  auto veronese_member = [d](const Multidegree& x) { return x.total() % d == 0; };
  const SimplicialComplex full = build_complex(h, all, veronese_member);

  const PinchConfig config = PinchConfig::from_pinch_index(d, i);
  const GeneratorSet gens = generate_generators(config);
  const SimplicialComplex pinched = build_divisor_complex(h, config, gens).complex;

  // Re-index pinched faces into A_{2,d} numbering. A_{2,d} is descending lex,
  // so (a, d - a) sits at position d - a.
  std::vector<int> to_full(gens.size());
  for (int k = 0; k < gens.size(); ++k) to_full[k] = d - gens[k][0];
  std::unordered_set<Face> pinched_faces;
  for (Face f : pinched.faces()) {
    Face g = 0;
    for (int v : face_vertices(f)) g |= Face{1} << to_full[v];
    pinched_faces.insert(g);
  }

  const int pinch_vertex = d - i;
  const SimplicialComplex star = link(full, pinch_vertex);

  std::unordered_set<Face> united(pinched_faces);
  united.insert(star.faces().begin(), star.faces().end());
  if (united.size() != full.faces().size()) return false;
  for (Face f : full.faces()) {
    if (!united.count(f)) return false;
  }

  if (h.total() == i * d) {
    for (Face f : star.faces()) {
      if (pinched_faces.count(f) && face_dim(f) >= i - 2) return false;
    }
  }
  return true;
}

}  // namespace pinched
