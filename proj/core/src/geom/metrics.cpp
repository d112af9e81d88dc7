#include "shapetok/geom/metrics.hpp"

#include <algorithm>

namespace shapetok::geom {

OccupancyFn spec_occupancy(const ShapeSpec& spec) {
  return [spec](std::span<const Vec3> pts) {
    std::vector<uint8_t> occ(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) occ[i] = sdf(spec, pts[i]) <= 0.0;
    return occ;
  };
}

double occupancy_iou(std::span<const uint8_t> a, std::span<const uint8_t> b) {
  if (a.size() != b.size()) throw Error("occupancy_iou: size mismatch");
  int64_t inter = 0, uni = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    inter += (a[i] && b[i]);
    uni += (a[i] || b[i]);
  }
  if (uni == 0) return 1.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

double v_iou(const OccupancyFn& pred, const ShapeSpec& gt, int64_t n,
             uint64_t seed) {
  if (n < 1) throw Error("v_iou: n must be >= 1");
  Rng rng = Rng::derive(seed, /*stream=*/0x10f0ull);
  std::vector<Vec3> pts(n);
  for (auto& p : pts)
    p = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
  auto pv = pred(pts);
  auto gv = spec_occupancy(gt)(pts);
  return occupancy_iou(pv, gv);
}

double s_iou(const OccupancyFn& pred, const ShapeSpec& gt, int64_t n,
             uint64_t seed, double sigma_near) {
  if (n < 1) throw Error("s_iou: n must be >= 1");
  Rng rng = Rng::derive(seed, /*stream=*/0x510ull);
  auto surf = sample_spec_surface(gt, n, seed ^ 0x51aull);
  std::vector<Vec3> pts(n);
  for (int64_t i = 0; i < n; ++i) {
    Vec3 p = surf[i] + rng.normal3() * sigma_near;
    pts[i] = {std::clamp(p.x, -1.0, 1.0), std::clamp(p.y, -1.0, 1.0),
              std::clamp(p.z, -1.0, 1.0)};
  }
  auto pv = pred(pts);
  auto gv = spec_occupancy(gt)(pts);
  return occupancy_iou(pv, gv);
}

}  // namespace shapetok::geom
