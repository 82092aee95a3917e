#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>

#include "cspacevis/errors.hpp"

namespace cspacevis {

enum class StatsErrc {
  LengthMismatch,
  TooFewSamples,
  ZeroVariance,
  OutOfDomain,
  Empty,
};

const char* to_string(StatsErrc code);

class StatsError : public InputError {
 public:
  StatsError(StatsErrc code, const std::string& what) : InputError(what), code_(code) {}
  StatsErrc code() const { return code_; }

 private:
  StatsErrc code_;
};

// Sample Pearson correlation. Needs at least 3 paired values and
// non-constant series; a constant series is an error rather than r = 0.
double pearson(std::span<const double> xs, std::span<const double> ys);

struct CorrelationSummary {
  double r_mean = 0.0;
  double se = 0.0;
  std::size_t n_groups = 0;
};

// Averages correlations in Fisher-z space: z_i = atanh(r_i),
// r_mean = tanh(mean z), se = tanh(mean z + s_z / sqrt(N)) - r_mean with s_z
// the sample standard deviation of the z_i (0 for a single value).
CorrelationSummary fisher_z_mean(std::span<const double> rs);

// Sample mean and (n-1) standard deviation; sd is 0 for fewer than 2 values.
struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;
};
MeanSd mean_sd(std::span<const double> xs);

}  // namespace cspacevis
