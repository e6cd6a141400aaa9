#include "pinched/multidegree.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pinched {

Multidegree::Multidegree(std::vector<int> coords) : coords_(std::move(coords)) {
  for (int c : coords_) {
    if (c < 0) throw std::invalid_argument("multidegree coordinates must be non-negative");
  }
  total_ = std::accumulate(coords_.begin(), coords_.end(), 0);
}

Multidegree::Multidegree(std::initializer_list<int> coords)
    : Multidegree(std::vector<int>(coords)) {}

int Multidegree::max() const {
  return coords_.empty() ? 0 : *std::max_element(coords_.begin(), coords_.end());
}

Multidegree& Multidegree::operator+=(const Multidegree& other) {
  if (other.size() != size()) throw std::invalid_argument("multidegree dimension mismatch");
  for (int i = 0; i < size(); ++i) coords_[i] += other.coords_[i];
  total_ += other.total_;
  return *this;
}

std::optional<Multidegree> subtract(const Multidegree& a, const Multidegree& b) {
  if (a.size() != b.size()) throw std::invalid_argument("multidegree dimension mismatch");
  Multidegree out = a;
  for (int i = 0; i < a.size(); ++i) {
    out.coords_[i] -= b.coords_[i];
    if (out.coords_[i] < 0) return std::nullopt;
  }
  out.total_ -= b.total_;
  return out;
}

Multidegree Multidegree::scaled(int k) const {
  Multidegree out = *this;
  for (int& c : out.coords_) c *= k;
  out.total_ *= k;
  return out;
}

Multidegree Multidegree::permuted(const std::vector<int>& perm) const {
  // out[j] = coords[perm[j]]
  std::vector<int> out(coords_.size());
  for (std::size_t j = 0; j < perm.size(); ++j) out[j] = coords_.at(perm[j]);
  return Multidegree(std::move(out));
}

std::strong_ordering operator<=>(const Multidegree& a, const Multidegree& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.coords_ <=> b.coords_;
}

std::string Multidegree::str() const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  return os.str();
}

Multidegree Multidegree::parse(const std::string& text) {
  std::vector<int> coords;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad multidegree '" + text + "'");
    }
    while (used < item.size() && item[used] == ' ') ++used;
    if (used != item.size()) throw std::invalid_argument("bad multidegree '" + text + "'");
    coords.push_back(v);
  }
  if (coords.empty()) throw std::invalid_argument("empty multidegree");
  return Multidegree(std::move(coords));
}

std::size_t MultidegreeHash::operator()(const Multidegree& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int c : m.coords()) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

void compositions_rec(int parts, int remaining, std::vector<int>& prefix,
                      std::vector<Multidegree>& out) {
  if (parts == 1) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int a = remaining; a >= 0; --a) {
    prefix.push_back(a);
    compositions_rec(parts - 1, remaining - a, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Multidegree> compositions(int parts, int total) {
  if (parts < 1 || total < 0) throw std::invalid_argument("compositions: bad arguments");
  std::vector<Multidegree> out;
  std::vector<int> prefix;
  prefix.reserve(parts);
  compositions_rec(parts, total, prefix, out);
  return out;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > INT64_MAX) throw std::overflow_error("binomial overflow");
  }
  return static_cast<std::int64_t>(r);
}

}  // namespace pinched
