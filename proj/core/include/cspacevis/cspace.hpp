#pragma once

// Discrete C-space structures: uniform binning of joint angles, the
// per-joint-pair conditional trees (children of each parent bin), and the
// bounded perturbation that separates children shared by several parents.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "cspacevis/dataset.hpp"

namespace cspacevis {

// n_d uniform bins over [-pi, pi], each 2*pi/n_d wide.
struct DiscretizationSpec {
  int n_d = 500;

  double bin_width() const { return 2.0 * kPi / n_d; }
};

// Per-joint bin indices of one sample.
struct BinnedState {
  std::vector<int> bins;
  std::size_t sample_index = 0;
};

struct TreeChild {
  double angle = 0.0;  // theta_{i+1} of the sample, radians
  std::size_t sample_index = 0;

  friend bool operator==(const TreeChild&, const TreeChild&) = default;
};

// theta_{i+1} | theta_i: parent bin of joint i -> children in sample order.
struct ConditionalTree {
  std::size_t joint_index = 0;
  std::map<int, std::vector<TreeChild>> children;

  std::size_t total_children() const;
};

// Upper bound on the per-coordinate shift. Must stay below half a bin.
struct PerturbationSpec {
  double epsilon_max = 0.0;
};

void validate(const DiscretizationSpec& spec);

// floor((theta + pi) * n_d / (2 pi)), with theta = pi folded into the last
// bin. Throws InputError for theta outside [-pi, pi] or n_d < 1.
int discretize(double theta, int n_d);

// Bin representative -pi + (bin + 0.5) * 2 pi / n_d.
double bin_center(int bin, int n_d);

BinnedState bin_state(const Configuration& q, std::size_t sample_index, int n_d);

// Groups samples by the bin of theta_i; child lists keep sample order.
ConditionalTree build_tree(const Dataset& ds, std::size_t i, const DiscretizationSpec& spec);

// Shifts samples whose child bin coincides with samples under a different
// parent bin, so they stay visually distinct. The d-th member of such a
// group (sample order) is shifted by d * delta with
// delta = epsilon_max / max_duplicate_count; the shift is applied to every
// coordinate in the +1 direction, reversed per coordinate when +shift would
// leave the coordinate's bin. No coordinate ever changes bin and no
// coordinate moves by more than epsilon_max.
Dataset apply_epsilon(const Dataset& ds, const DiscretizationSpec& spec,
                      const PerturbationSpec& pert);

// Duplicate rank used by apply_epsilon, exposed for diagnostics: for each
// sample, the largest rank it holds in any shared-child group.
std::vector<std::size_t> duplicate_ranks(const Dataset& ds, const DiscretizationSpec& spec);

// floor(fraction * m) samples without replacement, original order kept.
Dataset subsample(const Dataset& ds, double fraction, std::uint64_t seed);

// Indices of a seeded uniform k-subset of [0, m), ascending.
std::vector<std::size_t> choose_indices(std::size_t m, std::size_t k, std::uint64_t seed);

}  // namespace cspacevis
