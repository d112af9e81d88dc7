#include "shapetok/pmpe/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace shapetok::pmpe {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void PEConfig::validate() const {
  if (L < 2 || L % 2 != 0) throw Error("PEConfig: L must be even and >= 2");
  if (beta <= 0.0) throw Error("PEConfig: beta must be positive");
  if (beta * L <= 1.0) throw Error("PEConfig: beta*L must exceed 1");
}

void gamma(double p, const PEConfig& cfg, std::vector<double>& out) {
  for (int i = 1; i <= cfg.L; ++i) {
    double omega = std::ldexp(kPi, i / 2);  // 2^floor(i/2) * pi
    double phase = (kPi / 2.0) * (i % 2);
    out.push_back(std::sin(omega * p + phase));
  }
}

void gamma_prime(double p, const PEConfig& cfg, std::vector<double>& out) {
  double bl = cfg.beta * cfg.L;
  for (int i = 1; i <= cfg.L; ++i) {
    double t = static_cast<double>(i) / cfg.L;
    double phase = 2.0 * kPi * (std::pow(bl, 1.0 - t) + t);
    out.push_back(std::sin((kPi / 2.0) * p + phase));
  }
}

std::vector<double> gamma(double p, const PEConfig& cfg) {
  std::vector<double> out;
  out.reserve(cfg.L);
  gamma(p, cfg, out);
  return out;
}

std::vector<double> gamma_prime(double p, const PEConfig& cfg) {
  std::vector<double> out;
  out.reserve(cfg.L);
  gamma_prime(p, cfg, out);
  return out;
}

std::vector<double> gamma_pm(const Vec3& p, const PEConfig& cfg) {
  std::vector<double> out;
  out.reserve(3 * cfg.L);
  for (int c = 0; c < 3; ++c) {
    size_t base = out.size();
    gamma(p[c], cfg, out);
    std::vector<double> gp = gamma_prime(p[c], cfg);
    for (int i = 0; i < cfg.L; ++i) out[base + i] += gp[i];
  }
  return out;
}

int channels_for_width(int width) {
  int L = (width - 3) / 3;
  if (L % 2 != 0) --L;
  return std::max(L, 2);
}

namespace {

std::vector<double> ranks(const std::vector<double>& v) {
  size_t n = v.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return v[a] < v[b]; });
  std::vector<double> r(n);
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
    double avg = 0.5 * (i + j) + 1.0;  // average rank of the tie group
    for (size_t k = i; k <= j; ++k) r[order[k]] = avg;
    i = j + 1;
  }
  return r;
}

}  // namespace

double spearman(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size() || a.empty())
    throw Error("spearman: size mismatch or empty input");
  std::vector<double> ra = ranks(a), rb = ranks(b);
  double ma = 0, mb = 0;
  for (size_t i = 0; i < ra.size(); ++i) {
    ma += ra[i];
    mb += rb[i];
  }
  ma /= ra.size();
  mb /= rb.size();
  double num = 0, da = 0, db = 0;
  for (size_t i = 0; i < ra.size(); ++i) {
    num += (ra[i] - ma) * (rb[i] - mb);
    da += (ra[i] - ma) * (ra[i] - ma);
    db += (rb[i] - mb) * (rb[i] - mb);
  }
  if (da == 0.0 || db == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return num / std::sqrt(da * db);
}

SimilarityProfile similarity_profile(const Encoder1D& encoder, int grid_n) {
  if (grid_n < 16) throw Error("similarity_profile: grid_n must be >= 16");
  std::vector<std::vector<double>> enc(grid_n);
  std::vector<double> pos(grid_n);
  for (int i = 0; i < grid_n; ++i) {
    pos[i] = -1.0 + 2.0 * i / (grid_n - 1);
    enc[i] = encoder(pos[i]);
  }
  std::vector<double> dots, negdist;
  dots.reserve(grid_n * (grid_n - 1) / 2);
  negdist.reserve(dots.capacity());
  for (int i = 0; i < grid_n; ++i) {
    for (int j = i + 1; j < grid_n; ++j) {
      double d = 0;
      for (size_t k = 0; k < enc[i].size(); ++k) d += enc[i][k] * enc[j][k];
      dots.push_back(d);
      negdist.push_back(-std::abs(pos[i] - pos[j]));
    }
  }
  double rho = spearman(dots, negdist);
  if (std::isnan(rho)) return {0.0, true};
  return {rho, false};
}

}  // namespace shapetok::pmpe
