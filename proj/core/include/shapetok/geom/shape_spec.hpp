#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "shapetok/common.hpp"

namespace shapetok::geom {

enum class PrimitiveKind : int {
  kSphere = 0,
  kBox,
  kTorus,
  kCapsule,
  kUnion,      // sphere + box
  kDifference  // box minus sphere
};

const char* kind_name(PrimitiveKind k);
PrimitiveKind kind_from_name(const std::string& name);

// Procedural shape description. Parameter layout by kind:
//   sphere:     cx cy cz r
//   box:        cx cy cz hx hy hz
//   torus:      cx cy cz R r          (ring around local Y)
//   capsule:    cx cy cz h r          (segment half-length h along Y)
//   union:      sphere(cx cy cz r) + box(cx cy cz hx hy hz)
//   difference: box(cx cy cz hx hy hz) - sphere(cx cy cz r)
struct ShapeSpec {
  PrimitiveKind kind = PrimitiveKind::kSphere;
  std::vector<double> params;
  int class_label = 0;
  uint64_t seed = 0;

  void validate() const;
};

// Signed distance, negative inside. CSG kinds use the min/max composition;
// the sign (and therefore occupancy) is exact everywhere.
double sdf(const ShapeSpec& spec, const Vec3& p);

// Axis-aligned bounds of the shape (analytic, not sampled).
struct SpecBounds {
  Vec3 lo, hi;
};
SpecBounds spec_bounds(const ShapeSpec& spec);

// n points uniform per unit area on the shape surface; CSG kinds sample the
// component surfaces with rejection against the partner SDF.
std::vector<Vec3> sample_spec_surface(const ShapeSpec& spec, int64_t n,
                                      uint64_t seed);

// Query points with ground-truth occupancy/TSDF labels.
struct FieldBatch {
  enum class Source : uint8_t { kUniform = 0, kNearSurface, kOnSurface };
  std::vector<Vec3> points;
  std::vector<uint8_t> occupancy;
  std::vector<double> tsdf;
  std::vector<Source> source;

  size_t size() const { return points.size(); }
};

// Uniform points in [-1,1]^3 plus near-surface points (surface + isotropic
// Gaussian offset, std sigma_near); labels from the analytic SDF with the
// TSDF clamped to +-tau.
FieldBatch sample_field(const ShapeSpec& spec, int64_t n_uniform,
                        int64_t n_near, double sigma_near, double tau,
                        uint64_t seed);

// One dataset entry as stored in the JSON-lines manifest.
struct DatasetEntry {
  int64_t id = 0;
  ShapeSpec spec;
};

// Procedural dataset: the six primitive families round-robin with
// seed-derived parameter jitter, every shape inside [-1,1]^3.
std::vector<DatasetEntry> make_dataset(int64_t count, uint64_t seed);

void write_manifest(const std::vector<DatasetEntry>& entries,
                    std::ostream& out);
std::vector<DatasetEntry> read_manifest(std::istream& in);
void write_manifest_file(const std::vector<DatasetEntry>& entries,
                         const std::string& path);
std::vector<DatasetEntry> read_manifest_file(const std::string& path);

}  // namespace shapetok::geom
