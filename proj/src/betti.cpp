#include "pinched/betti.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

namespace pinched {

BettiTable::BettiTable(PinchConfig config, FieldSpec field, ScanRange range)
    : config_(std::move(config)), field_(field), range_(range) {
  if (range.i_max < 0 || range.s_max < 0) throw std::invalid_argument("negative scan range");
  for (int i = 0; i <= range.i_max; ++i) {
    for (int s = 0; s <= range.s_max; ++s) entries_[{i, s}] = 0;
  }
}

std::int64_t BettiTable::at(int i, int s) const {
  auto it = entries_.find({i, s});
  if (it == entries_.end()) throw std::out_of_range("cell outside the scanned range");
  return it->second;
}

void BettiTable::add(int i, int s, std::int64_t value) {
  auto it = entries_.find({i, s});
  if (it == entries_.end()) throw std::out_of_range("cell outside the scanned range");
  it->second += value;
}

std::int64_t BettiTable::total(int i) const {
  std::int64_t sum = 0;
  for (int s = 0; s <= range_.s_max; ++s) {
    if (auto it = entries_.find({i, s}); it != entries_.end()) sum += it->second;
  }
  return sum;
}

bool BettiTable::guard_column_zero() const {
  for (int i = 0; i <= range_.i_max; ++i) {
    if (at(i, range_.s_max) != 0) return false;
  }
  return true;
}

double estimate_cost(const PinchConfig& config, int s_max) {
  const int vertices = config.big_n() - 1;
  double total = 0;
  for (int s = 0; s <= s_max; ++s) {
    const double points = static_cast<double>(binomial(config.n() + s * config.d() - 1, config.n() - 1));
    double subsets = 0;
    for (int k = 0; k <= std::min(s, vertices); ++k) {
      subsets += std::exp(std::lgamma(vertices + 1.0) - std::lgamma(k + 1.0) -
                          std::lgamma(vertices - k + 1.0));
    }
    total += points * subsets;
  }
  return total;
}

std::optional<int> default_s_max(const PinchConfig& config, int i_max) {
  if (config.n() == 2) return i_max + 3;
  return std::nullopt;
}

namespace {

struct Job {
  Multidegree h;
  int s;
  std::optional<HomologyProfile> profile;
  std::optional<SquarefreeDivisorComplex> complex;
  bool fresh = false;
};

// Fills every job's profile: cache lookups and stores happen on the calling
// thread, fresh computations are spread across workers.
void compute_profiles(std::vector<Job>& jobs, const PinchConfig& config, const FieldSpec& field,
                      const EngineOptions& options) {
  if (static_cast<std::int64_t>(jobs.size()) > options.max_complexes) {
    throw ResourceRefusal("too many divisor complexes: " + std::to_string(jobs.size()),
                          static_cast<double>(jobs.size()));
  }
  if (options.cache) {
    for (auto& job : jobs) job.profile = options.cache->lookup(config.normalize(job.h));
  }

  const GeneratorSet gens = generate_generators(config);
  const bool keep = static_cast<bool>(options.observer);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      Job& job = jobs[k];
      if (job.profile) continue;
      auto built = build_divisor_complex(job.h, config, gens);
      job.profile = reduced_homology(built.complex, field);
      job.fresh = true;
      if (keep) job.complex = std::move(built);
    }
  };
  const int width = std::max(1, options.threads);
  if (width == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < width; ++t) pool.emplace_back(worker);
  }

  for (auto& job : jobs) {
    if (!job.fresh) continue;
    if (options.cache) options.cache->store(config.normalize(job.h), *job.profile);
    if (keep) options.observer(*job.complex, *job.profile);
    job.complex.reset();
  }
}

}  // namespace

BettiTable graded_betti(const PinchConfig& config, const FieldSpec& field, int i_max, int s_max,
                        const EngineOptions& options) {
  if (i_max < 0 || i_max > config.big_n() - 2) {
    throw std::invalid_argument("i_max must lie in [0, N - 2]");
  }
  if (s_max < i_max + 1) throw std::invalid_argument("s_max must be at least i_max + 1");
  const double cost = estimate_cost(config, s_max);
  if (cost > options.subset_budget) {
    throw ResourceRefusal("estimated work exceeds the subset budget", cost);
  }

  std::vector<Job> jobs;
  for (int s = 0; s <= s_max; ++s) {
    for (auto& h : enumerate_degree(config, s)) jobs.push_back({std::move(h), s, {}, {}});
  }
  compute_profiles(jobs, config, field, options);

  BettiTable table(config, field, {i_max, s_max});
  for (const auto& job : jobs) {
    for (int i = 0; i <= i_max; ++i) {
      if (auto v = job.profile->dim(i - 1)) table.add(i, job.s, v);
    }
  }
  return table;
}

std::map<Multidegree, std::int64_t> multigraded_betti(const PinchConfig& config,
                                                      const FieldSpec& field, int i, int t,
                                                      const EngineOptions& options) {
  if (i < 0 || i > config.big_n() - 2) throw std::invalid_argument("i must lie in [0, N - 2]");
  if (t < 0) throw std::invalid_argument("t must be non-negative");
  std::vector<Job> jobs;
  for (auto& h : enumerate_degree(config, t)) jobs.push_back({std::move(h), t, {}, {}});
  compute_profiles(jobs, config, field, options);
  std::map<Multidegree, std::int64_t> out;
  for (const auto& job : jobs) {
    if (auto v = job.profile->dim(i - 1)) out.emplace(job.h, v);
  }
  return out;
}

ClassificationReport classify(const BettiTable& table) {
  const PinchConfig& config = table.config();
  const int n_minus_1 = config.big_n() - 1;
  if (table.range().i_max < config.big_n() - 2) {
    throw InsufficientScan("scan must cover homological degrees up to N - 2");
  }
  if (!table.guard_column_zero()) {
    throw InsufficientScan("guard column s = " + std::to_string(table.range().s_max) +
                           " is nonzero; extend s_max");
  }

  ClassificationReport r;
  r.krull_dim = config.n();
  for (const auto& [cell, v] : table.entries()) {
    if (v == 0) continue;
    r.pdim = std::max(r.pdim, cell.first);
    r.observed_regularity = std::max(r.observed_regularity, cell.second - cell.first);
  }
  r.depth = n_minus_1 - r.pdim;
  r.is_cm = r.depth == r.krull_dim;

  bool symmetric = true;
  for (int i = 0; i <= r.pdim; ++i) symmetric &= table.total(i) == table.total(r.pdim - i);
  r.is_gorenstein = r.is_cm && table.total(r.pdim) == 1 && symmetric;

  r.linearity_index = 0;
  for (int p = 1; p <= r.pdim; ++p) {
    bool linear = true;
    for (int s = 0; s <= table.range().s_max; ++s) {
      if (s != p + 1 && table.at(p, s) != 0) linear = false;
    }
    if (!linear) break;
    r.linearity_index = p;
  }
  return r;
}

NonCmWitness witness_non_cm(const PinchConfig& config, const FieldSpec& field) {
  const int n = config.n(), d = config.d(), big_n = config.big_n();
  const auto all = veronese_generators(n, d);
  Multidegree h = Multidegree::zero(n);
  int i = 0;
  switch (config.pinch_class()) {
    case PinchClass::MaxD:
      throw std::invalid_argument("max m = d: the ring is Cohen-Macaulay");
    case PinchClass::MaxDMinus1: {
      if (n == 2) throw std::invalid_argument("n = 2, max m = d - 1: the ring is Cohen-Macaulay");
      std::vector<int> corner(n, 0);
      corner[config.peak()] = d;
      const Multidegree pure(corner);
      h = config.m();
      int taken = 0;
      for (const auto& a : all) {
        if (taken == big_n - n + 1) break;
        if (a == config.m() || a == pure) continue;
        h += a;
        ++taken;
      }
      i = big_n - n;
      break;
    }
    case PinchClass::Interior:
      for (const auto& a : all) h += a;
      i = big_n - 2;
      break;
  }
  const auto built = build_divisor_complex(h, config);
  const auto profile = reduced_homology(built.complex, field);
  return {h, i, profile.dim(i - 1), static_cast<std::int64_t>(built.complex.faces().size())};
}

}  // namespace pinched
