#include "pinched/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pinched {

std::string to_string(PinchClass c) {
  switch (c) {
    case PinchClass::MaxD: return "max_m_eq_d";
    case PinchClass::MaxDMinus1: return "max_m_eq_d_minus_1";
    case PinchClass::Interior: return "interior";
  }
  return "?";
}

PinchConfig::PinchConfig(int n, int d, Multidegree m) : n_(n), d_(d), m_(std::move(m)) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (d < 2) throw std::invalid_argument("d must be at least 2");
  if (m_.size() != n) throw std::invalid_argument("pinched generator must have length n");
  if (m_.total() != d) throw std::invalid_argument("pinched generator must have total degree d");

  const int top = m_.max();
  peak_ = static_cast<int>(std::find(m_.coords().begin(), m_.coords().end(), top) -
                           m_.coords().begin());
  if (top == d) {
    class_ = PinchClass::MaxD;
  } else if (top == d - 1) {
    if (d == 2) {
      throw std::invalid_argument(
          "d = 2 with max m = 1 is degenerate: both nonzero coordinates equal d - 1");
    }
    class_ = PinchClass::MaxDMinus1;
    for (int i = 0; i < n; ++i) {
      if (m_[i] == 1) tail_ = i;
    }
  } else {
    class_ = PinchClass::Interior;
  }

  big_n_ = static_cast<int>(binomial(n + d - 1, d));

  perm_.resize(n);
  std::iota(perm_.begin(), perm_.end(), 0);
  std::stable_sort(perm_.begin(), perm_.end(), [&](int a, int b) { return m_[a] > m_[b]; });
}

PinchConfig PinchConfig::from_pinch_index(int d, int i) {
  if (i < 0 || i > d) throw std::invalid_argument("pinch index must lie in [0, d]");
  return PinchConfig(2, d, Multidegree{i, d - i});
}

std::string PinchConfig::str() const {
  std::ostringstream os;
  os << "n=" << n_ << " d=" << d_ << " m=(" << m_.str() << ")";
  return os.str();
}

int GeneratorSet::index_of(const Multidegree& g) const {
  // gens is sorted descending.
  auto it = std::lower_bound(gens.begin(), gens.end(), g,
                             [](const Multidegree& a, const Multidegree& b) { return a > b; });
  if (it != gens.end() && *it == g) return static_cast<int>(it - gens.begin());
  return -1;
}

std::vector<Multidegree> veronese_generators(int n, int d) { return compositions(n, d); }

GeneratorSet generate_generators(const PinchConfig& config) {
  GeneratorSet out;
  out.big_n = config.big_n();
  for (auto& a : compositions(config.n(), config.d())) {
    if (a != config.m()) out.gens.push_back(std::move(a));
  }
  return out;
}

bool is_member_closed(const Multidegree& h, const PinchConfig& config) {
  if (h.size() != config.n()) throw std::invalid_argument("multidegree dimension mismatch");
  const int d = config.d();
  if (h.total() == 0) return true;
  if (h.total() % d != 0) return false;
  const int t = h.total() / d;

  switch (config.pinch_class()) {
    case PinchClass::MaxD:
      // Missing: (td - q, q-vector) with q < t, q counted off the peak axis.
      return h.total() - h[config.peak()] >= t;
    case PinchClass::MaxDMinus1: {
      // Missing: exactly (td - 1) e_peak + e_tail.
      if (h[config.peak()] != h.total() - 1) return true;
      return h[config.tail()] != 1;
    }
    case PinchClass::Interior:
      return h != config.m();
  }
  return false;
}

BruteForceMembership::BruteForceMembership(const PinchConfig& config, int degree_bound)
    : config_(config), gens_(generate_generators(config)), degree_bound_(degree_bound) {}

bool BruteForceMembership::contains(const Multidegree& h) {
  if (h.size() != config_.n()) throw std::invalid_argument("multidegree dimension mismatch");
  if (h.total() > degree_bound_) throw std::out_of_range("brute-force degree bound exceeded");
  if (h.total() % config_.d() != 0) return false;
  return search(h);
}

bool BruteForceMembership::search(const Multidegree& h) {
  if (h.total() == 0) return true;
  if (auto it = memo_.find(h); it != memo_.end()) return it->second;
  bool found = false;
  for (const auto& g : gens_.gens) {
    if (auto rest = subtract(h, g); rest && search(*rest)) {
      found = true;
      break;
    }
  }
  memo_.emplace(h, found);
  return found;
}

bool is_member_bruteforce(const Multidegree& h, const PinchConfig& config, int degree_bound) {
  BruteForceMembership oracle(config, degree_bound);
  return oracle.contains(h);
}

std::vector<Multidegree> enumerate_degree(const PinchConfig& config, int t) {
  if (t < 0) throw std::invalid_argument("degree multiple must be non-negative");
  std::vector<Multidegree> out;
  for (auto& h : compositions(config.n(), t * config.d())) {
    if (is_member_closed(h, config)) out.push_back(std::move(h));
  }
  return out;
}

std::optional<NormalityWitness> normality_probe(const PinchConfig& config, int degree_bound,
                                                int multiplier_bound) {
  if (degree_bound <= 0 || multiplier_bound <= 0) {
    throw std::invalid_argument("normality probe bounds must be positive");
  }
  for (int t = 1; t <= degree_bound; ++t) {
    for (const auto& z : compositions(config.n(), t * config.d())) {
      if (is_member_closed(z, config)) continue;
      for (int k = 2; k <= multiplier_bound; ++k) {
        if (is_member_closed(z.scaled(k), config)) return NormalityWitness{z, k};
      }
    }
  }
  return std::nullopt;
}

}  // namespace pinched
