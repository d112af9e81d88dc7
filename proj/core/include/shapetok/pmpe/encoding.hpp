#pragma once

#include <functional>
#include <vector>

#include "shapetok/common.hpp"

namespace shapetok::pmpe {

// Positional-encoding configuration. `L` is the channel count per coordinate,
// `beta` controls how fast the phase offsets of the modulated encoding vary
// across channels.
struct PEConfig {
  int L = 20;
  double beta = 0.125;

  void validate() const;
};

// L channels per config are appended to `out`.
void gamma(double p, const PEConfig& cfg, std::vector<double>& out);
void gamma_prime(double p, const PEConfig& cfg, std::vector<double>& out);

std::vector<double> gamma(double p, const PEConfig& cfg);
std::vector<double> gamma_prime(double p, const PEConfig& cfg);

// Channel-wise gamma + gamma_prime per coordinate, concatenated over x,y,z.
// Result has 3L entries.
std::vector<double> gamma_pm(const Vec3& p, const PEConfig& cfg);

// Largest even L with 3L + 3 raw channels <= width, so the embedded point
// fits a single linear layer. Width 64 gives L = 20.
int channels_for_width(int width);

struct SimilarityProfile {
  double spearman = 0.0;  // rank correlation of pairwise dot products vs -|p-q|
  bool degenerate = false;
};

using Encoder1D = std::function<std::vector<double>(double)>;

// Evaluates `encoder` on a uniform grid_n-point grid over [-1,1] and
// correlates pairwise dot-product similarity against spatial proximity.
SimilarityProfile similarity_profile(const Encoder1D& encoder, int grid_n);

// Spearman rank correlation with average ranks for ties; exposed for tests.
double spearman(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace shapetok::pmpe
