#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "shapetok/common.hpp"

namespace shapetok::geom {

// Indexed triangle mesh in normalized coordinates.
struct TriMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int32_t, 3>> triangles;

  bool empty() const { return vertices.empty() || triangles.empty(); }
  // Index range, no degenerate index triples, finite coordinates.
  void validate() const;
};

struct Aabb {
  Vec3 lo, hi;
  Vec3 extent() const { return hi - lo; }
  Vec3 center() const { return (lo + hi) * 0.5; }
};

Aabb bounding_box(const TriMesh& mesh);

double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c);
double surface_area(const TriMesh& mesh);

// Center at origin, scale uniformly so the longest axis spans exactly [-1,1].
// Throws on empty or zero-extent meshes.
TriMesh normalize(const TriMesh& mesh);

// n points on the surface, triangle choice area-weighted, deterministic per
// seed. Throws if the mesh has zero total area.
std::vector<Vec3> sample_surface(const TriMesh& mesh, int64_t n, uint64_t seed);

// Undirected edges bordering fewer or more than two triangles.
std::vector<std::array<int32_t, 2>> boundary_edges(const TriMesh& mesh);
bool is_watertight(const TriMesh& mesh);

// Inside/outside by ray-crossing parity, majority vote over the three axis
// rays. Throws (listing open edges) if the mesh is not watertight.
std::vector<uint8_t> mesh_occupancy(const TriMesh& mesh,
                                    std::span<const Vec3> points);

// ASCII OBJ subset: "v x y z" and "f i j k" lines, 1-based indices,
// triangles only.
TriMesh load_obj(std::istream& in);
TriMesh load_obj_file(const std::string& path);
void save_obj(const TriMesh& mesh, std::ostream& out);
void save_obj_file(const TriMesh& mesh, const std::string& path);

// Test/dataset helpers.
TriMesh make_box_mesh(const Vec3& half_extent, const Vec3& center = {});
TriMesh make_icosphere(int subdivisions, double radius,
                       const Vec3& center = {});

}  // namespace shapetok::geom
