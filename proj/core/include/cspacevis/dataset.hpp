#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cspacevis {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

enum class Label : std::uint8_t { Free = 0, Collision = 1 };

// One point of the C-space: n joint angles in [-pi, pi].
struct Configuration {
  std::vector<double> angles;

  std::size_t size() const { return angles.size(); }
  double operator[](std::size_t i) const { return angles[i]; }
  double& operator[](std::size_t i) { return angles[i]; }

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

// m labeled configurations plus provenance.
struct Dataset {
  std::size_t n_joints = 0;
  std::vector<Configuration> samples;
  std::vector<Label> labels;
  std::string workspace_id;
  std::uint64_t seed = 0;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

// Throws InputError unless |samples| == |labels|, every configuration has
// n_joints angles and every angle lies in [-pi, pi].
void validate(const Dataset& ds);

std::size_t count_label(const Dataset& ds, Label label);

}  // namespace cspacevis
