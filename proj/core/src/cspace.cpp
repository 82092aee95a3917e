#include "cspacevis/cspace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>

#include "cspacevis/errors.hpp"
#include "cspacevis/rng.hpp"

namespace cspacevis {

namespace {

// Row-major m x n matrix of bin indices.
std::vector<int> bin_matrix(const Dataset& ds, int n_d) {
  std::vector<int> bins(ds.size() * ds.n_joints);
  for (std::size_t k = 0; k < ds.size(); ++k) {
    for (std::size_t i = 0; i < ds.n_joints; ++i) {
      bins[k * ds.n_joints + i] = discretize(ds.samples[k][i], n_d);
    }
  }
  return bins;
}

}  // namespace

std::size_t ConditionalTree::total_children() const {
  std::size_t total = 0;
  for (const auto& [bin, kids] : children) total += kids.size();
  return total;
}

void validate(const DiscretizationSpec& spec) {
  if (spec.n_d < 1) throw InputError("n_d must be at least 1");
}

int discretize(double theta, int n_d) {
  if (n_d < 1) throw InputError("n_d must be at least 1");
  if (!(theta >= -kPi && theta <= kPi)) {
    throw InputError("angle " + std::to_string(theta) + " outside [-pi, pi]");
  }
  int bin = static_cast<int>(std::floor((theta + kPi) * n_d / (2.0 * kPi)));
  bin = std::clamp(bin, 0, n_d - 1);
  // Rounding in the product can land a value that sits on a bin edge in the
  // neighbouring bin; keep |center - theta| <= half a bin.
  const double half = kPi / n_d;
  const double center = bin_center(bin, n_d);
  if (theta - center > half && bin + 1 < n_d) {
    ++bin;
  } else if (center - theta > half && bin > 0) {
    --bin;
  }
  return bin;
}

double bin_center(int bin, int n_d) {
  if (n_d < 1) throw InputError("n_d must be at least 1");
  if (bin < 0 || bin >= n_d) {
    throw InputError("bin " + std::to_string(bin) + " outside [0, " + std::to_string(n_d) + ")");
  }
  return -kPi + (bin + 0.5) * (2.0 * kPi / n_d);
}

BinnedState bin_state(const Configuration& q, std::size_t sample_index, int n_d) {
  BinnedState s;
  s.sample_index = sample_index;
  s.bins.reserve(q.size());
  for (double a : q.angles) s.bins.push_back(discretize(a, n_d));
  return s;
}

ConditionalTree build_tree(const Dataset& ds, std::size_t i, const DiscretizationSpec& spec) {
  validate(spec);
  if (ds.empty()) throw InputError("cannot build a tree from an empty dataset");
  if (ds.n_joints < 2 || i + 1 >= ds.n_joints) {
    throw InputError("joint pair index " + std::to_string(i) + " out of range for " +
                     std::to_string(ds.n_joints) + " joints");
  }
  ConditionalTree tree;
  tree.joint_index = i;
  for (std::size_t k = 0; k < ds.size(); ++k) {
    const auto& q = ds.samples[k];
    tree.children[discretize(q[i], spec.n_d)].push_back(TreeChild{q[i + 1], k});
  }
  return tree;
}

std::vector<std::size_t> duplicate_ranks(const Dataset& ds, const DiscretizationSpec& spec) {
  validate(spec);
  std::vector<std::size_t> rank(ds.size(), 0);
  if (ds.n_joints < 2 || ds.empty()) return rank;

  const auto bins = bin_matrix(ds, spec.n_d);
  const std::size_t n = ds.n_joints;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    struct Group {
      std::vector<std::size_t> members;
      int first_parent = 0;
      bool mixed = false;
    };
    std::unordered_map<int, Group> groups;
    for (std::size_t k = 0; k < ds.size(); ++k) {
      const int parent = bins[k * n + i];
      auto [it, inserted] = groups.try_emplace(bins[k * n + i + 1]);
      Group& g = it->second;
      if (inserted) {
        g.first_parent = parent;
      } else if (parent != g.first_parent) {
        g.mixed = true;
      }
      g.members.push_back(k);
    }
    for (const auto& [child_bin, g] : groups) {
      if (!g.mixed) continue;
      for (std::size_t d = 0; d < g.members.size(); ++d) {
        rank[g.members[d]] = std::max(rank[g.members[d]], d);
      }
    }
  }
  return rank;
}

Dataset apply_epsilon(const Dataset& ds, const DiscretizationSpec& spec,
                      const PerturbationSpec& pert) {
  validate(spec);
  if (!(pert.epsilon_max >= 0.0) || !(pert.epsilon_max < kPi / spec.n_d)) {
    throw InputError("epsilon_max must lie in [0, pi / n_d)");
  }
  Dataset out = ds;
  if (pert.epsilon_max == 0.0) return out;

  const auto rank = duplicate_ranks(ds, spec);
  const std::size_t max_dup = rank.empty() ? 0 : *std::max_element(rank.begin(), rank.end());
  if (max_dup == 0) return out;
  const double delta = pert.epsilon_max / static_cast<double>(max_dup);

  for (std::size_t k = 0; k < out.size(); ++k) {
    if (rank[k] == 0) continue;
    const double shift = std::min(static_cast<double>(rank[k]) * delta, pert.epsilon_max);
    for (double& a : out.samples[k].angles) {
      const int bin = discretize(a, spec.n_d);
      double moved = a + shift;
      if (moved > kPi || discretize(moved, spec.n_d) != bin) {
        moved = a - shift;
        if (moved < -kPi || discretize(moved, spec.n_d) != bin) moved = a;
      }
      while (std::fabs(moved - a) > pert.epsilon_max) moved = std::nextafter(moved, a);
      if (discretize(moved, spec.n_d) != bin) moved = a;
      a = moved;
    }
  }
  return out;
}

std::vector<std::size_t> choose_indices(std::size_t m, std::size_t k, std::uint64_t seed) {
  if (k > m) throw InputError("cannot choose more indices than available");
  std::vector<std::size_t> pool(m);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  Rng rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(m - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

Dataset subsample(const Dataset& ds, double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw InputError("subsample fraction must lie in (0, 1]");
  }
  const auto k = static_cast<std::size_t>(std::floor(fraction * ds.size() + 1e-9));
  Dataset out;
  out.n_joints = ds.n_joints;
  out.workspace_id = ds.workspace_id;
  out.seed = ds.seed;
  if (k == ds.size()) {
    out.samples = ds.samples;
    out.labels = ds.labels;
    return out;
  }
  const auto picked = choose_indices(ds.size(), k, seed);
  out.samples.reserve(k);
  out.labels.reserve(k);
  for (std::size_t idx : picked) {
    out.samples.push_back(ds.samples[idx]);
    out.labels.push_back(ds.labels[idx]);
  }
  return out;
}

}  // namespace cspacevis
