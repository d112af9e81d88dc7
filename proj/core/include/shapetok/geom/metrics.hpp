#pragma once

#include <functional>
#include <span>
#include <vector>

#include "shapetok/geom/shape_spec.hpp"

namespace shapetok::geom {

// Batched occupancy predicate for a predicted field.
using OccupancyFn =
    std::function<std::vector<uint8_t>(std::span<const Vec3>)>;

OccupancyFn spec_occupancy(const ShapeSpec& spec);

// IoU of predicted vs ground-truth occupancy at n uniform sample points in
// [-1,1]^3. Returns 1.0 when both sets are empty.
double v_iou(const OccupancyFn& pred, const ShapeSpec& gt, int64_t n,
             uint64_t seed);

// Same, at near-surface sample points of the ground-truth shape.
double s_iou(const OccupancyFn& pred, const ShapeSpec& gt, int64_t n,
             uint64_t seed, double sigma_near = 0.05);

// Shared helper: IoU over parallel boolean vectors.
double occupancy_iou(std::span<const uint8_t> a, std::span<const uint8_t> b);

}  // namespace shapetok::geom
