#include "cspacevis/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace cspacevis {

const char* to_string(StatsErrc code) {
  switch (code) {
    case StatsErrc::LengthMismatch: return "length_mismatch";
    case StatsErrc::TooFewSamples: return "too_few_samples";
    case StatsErrc::ZeroVariance: return "zero_variance";
    case StatsErrc::OutOfDomain: return "out_of_domain";
    case StatsErrc::Empty: return "empty";
  }
  return "unknown";
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw StatsError(StatsErrc::LengthMismatch, "pearson: series lengths differ");
  }
  if (xs.size() < 3) throw StatsError(StatsErrc::TooFewSamples, "pearson: need at least 3 pairs");

  const double n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    mx += xs[k];
    my += ys[k];
  }
  mx /= n;
  my /= n;

  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double dx = xs[k] - mx;
    const double dy = ys[k] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw StatsError(StatsErrc::ZeroVariance, "pearson: a series is constant");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

CorrelationSummary fisher_z_mean(std::span<const double> rs) {
  if (rs.empty()) throw StatsError(StatsErrc::Empty, "fisher_z_mean: no correlations");
  std::vector<double> zs;
  zs.reserve(rs.size());
  for (double r : rs) {
    if (!(std::abs(r) < 1.0)) {
      throw StatsError(StatsErrc::OutOfDomain, "fisher_z_mean: |r| must be below 1");
    }
    zs.push_back(std::atanh(r));
  }
  const auto [z_bar, s_z] = mean_sd(zs);
  const auto [lo, hi] = std::minmax_element(rs.begin(), rs.end());

  CorrelationSummary out;
  out.n_groups = rs.size();
  // tanh(atanh(r)) can be off by an ulp; keep r_mean inside [min r, max r].
  out.r_mean = std::clamp(std::tanh(z_bar), *lo, *hi);
  out.se = rs.size() < 2 || s_z == 0.0
               ? 0.0
                         : std::tanh(z_bar + s_z / std::sqrt(static_cast<double>(rs.size()))) -
                               out.r_mean;
  if (out.se < 0.0) out.se = 0.0;
  return out;
}

MeanSd mean_sd(std::span<const double> xs) {
  MeanSd out;
  if (xs.empty()) return out;
  for (double x : xs) out.mean += x;
  out.mean /= static_cast<double>(xs.size());
  if (xs.size() < 2) return out;
  double ss = 0.0;
  for (double x : xs) ss += (x - out.mean) * (x - out.mean);
  out.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  return out;
}

}  // namespace cspacevis
