#include "cspacevis/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cspacevis/errors.hpp"

namespace cspacevis {

void validate(const Dataset& ds) {
  if (ds.samples.size() != ds.labels.size()) {
    throw InputError("dataset has " + std::to_string(ds.samples.size()) + " samples but " +
                     std::to_string(ds.labels.size()) + " labels");
  }
  for (std::size_t k = 0; k < ds.samples.size(); ++k) {
    const auto& q = ds.samples[k];
    if (q.size() != ds.n_joints) {
      throw InputError("sample " + std::to_string(k) + " has " + std::to_string(q.size()) +
                       " angles, expected " + std::to_string(ds.n_joints));
    }
    for (double a : q.angles) {
      if (!(a >= -kPi && a <= kPi)) {
        throw InputError("sample " + std::to_string(k) + " has an angle outside [-pi, pi]");
      }
    }
    const auto l = static_cast<unsigned>(ds.labels[k]);
    if (l > 1) throw InputError("sample " + std::to_string(k) + " has an invalid label");
  }
}

std::size_t count_label(const Dataset& ds, Label label) {
  return static_cast<std::size_t>(std::count(ds.labels.begin(), ds.labels.end(), label));
}

}  // namespace cspacevis
