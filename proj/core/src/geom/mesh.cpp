#include "shapetok/geom/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace shapetok::geom {

void TriMesh::validate() const {
  const auto n = static_cast<int32_t>(vertices.size());
  for (const auto& v : vertices)
    if (!v.finite()) throw Error("TriMesh: non-finite vertex coordinate");
  for (const auto& t : triangles) {
    for (int k = 0; k < 3; ++k)
      if (t[k] < 0 || t[k] >= n) throw Error("TriMesh: vertex index out of range");
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
      throw Error("TriMesh: triangle repeats a vertex index");
  }
}

Aabb bounding_box(const TriMesh& mesh) {
  if (mesh.vertices.empty()) throw Error("bounding_box: empty mesh");
  Aabb box{mesh.vertices[0], mesh.vertices[0]};
  for (const auto& v : mesh.vertices) {
    box.lo = min(box.lo, v);
    box.hi = max(box.hi, v);
  }
  return box;
}

double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c) {
  return 0.5 * (b - a).cross(c - a).norm();
}

double surface_area(const TriMesh& mesh) {
  double area = 0;
  for (const auto& t : mesh.triangles)
    area += triangle_area(mesh.vertices[t[0]], mesh.vertices[t[1]],
                          mesh.vertices[t[2]]);
  return area;
}

TriMesh normalize(const TriMesh& mesh) {
  if (mesh.vertices.empty()) throw Error("normalize: empty mesh");
  Aabb box = bounding_box(mesh);
  Vec3 ext = box.extent();
  double longest = std::max({ext.x, ext.y, ext.z});
  if (longest <= 0.0) throw Error("normalize: degenerate (zero-extent) mesh");
  Vec3 c = box.center();
  double s = 2.0 / longest;
  TriMesh out = mesh;
  for (auto& v : out.vertices) v = (v - c) * s;
  return out;
}

std::vector<Vec3> sample_surface(const TriMesh& mesh, int64_t n,
                                 uint64_t seed) {
  if (n == 0) return {};
  if (n < 0) throw Error("sample_surface: negative count");
  std::vector<double> cdf(mesh.triangles.size());
  double total = 0;
  for (size_t i = 0; i < mesh.triangles.size(); ++i) {
    const auto& t = mesh.triangles[i];
    total += triangle_area(mesh.vertices[t[0]], mesh.vertices[t[1]],
                           mesh.vertices[t[2]]);
    cdf[i] = total;
  }
  if (total <= 0.0) throw Error("sample_surface: zero total surface area");

  Rng rng = Rng::derive(seed, /*stream=*/0x5f4faceull);
  std::vector<Vec3> pts;
  pts.reserve(n);
  for (int64_t i = 0; i < n; ++i) {
    double u = rng.uniform() * total;
    size_t tri =
        std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
    if (tri >= cdf.size()) tri = cdf.size() - 1;
    const auto& t = mesh.triangles[tri];
    double r1 = std::sqrt(rng.uniform());
    double r2 = rng.uniform();
    const Vec3 &a = mesh.vertices[t[0]], &b = mesh.vertices[t[1]],
               &c = mesh.vertices[t[2]];
    pts.push_back(a * (1.0 - r1) + b * (r1 * (1.0 - r2)) + c * (r1 * r2));
  }
  return pts;
}

std::vector<std::array<int32_t, 2>> boundary_edges(const TriMesh& mesh) {
  std::map<std::pair<int32_t, int32_t>, int> count;
  for (const auto& t : mesh.triangles) {
    for (int k = 0; k < 3; ++k) {
      int32_t a = t[k], b = t[(k + 1) % 3];
      if (a > b) std::swap(a, b);
      ++count[{a, b}];
    }
  }
  std::vector<std::array<int32_t, 2>> open;
  for (const auto& [e, c] : count)
    if (c != 2) open.push_back({e.first, e.second});
  return open;
}

bool is_watertight(const TriMesh& mesh) {
  return !mesh.empty() && boundary_edges(mesh).empty();
}

namespace {

// Moller-Trumbore; returns t of the hit with the given ray, or -1.
double ray_triangle(const Vec3& orig, const Vec3& dir, const Vec3& a,
                    const Vec3& b, const Vec3& c) {
  constexpr double kEps = 1e-12;
  Vec3 e1 = b - a, e2 = c - a;
  Vec3 p = dir.cross(e2);
  double det = e1.dot(p);
  if (std::abs(det) < kEps) return -1.0;
  double inv = 1.0 / det;
  Vec3 s = orig - a;
  double u = s.dot(p) * inv;
  if (u < 0.0 || u > 1.0) return -1.0;
  Vec3 q = s.cross(e1);
  double v = dir.dot(q) * inv;
  if (v < 0.0 || u + v > 1.0) return -1.0;
  double t = e2.dot(q) * inv;
  return t > kEps ? t : -1.0;
}

}  // namespace

std::vector<uint8_t> mesh_occupancy(const TriMesh& mesh,
                                    std::span<const Vec3> points) {
  auto open = boundary_edges(mesh);
  if (!open.empty()) {
    std::ostringstream msg;
    msg << "mesh_occupancy: mesh is not watertight; " << open.size()
        << " open edge(s), first: (" << open[0][0] << "," << open[0][1] << ")";
    throw Error(msg.str());
  }
  const Vec3 rays[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  std::vector<uint8_t> inside(points.size(), 0);
  for (size_t i = 0; i < points.size(); ++i) {
    int votes = 0;
    for (const auto& dir : rays) {
      int crossings = 0;
      for (const auto& t : mesh.triangles) {
        if (ray_triangle(points[i], dir, mesh.vertices[t[0]],
                         mesh.vertices[t[1]], mesh.vertices[t[2]]) > 0)
          ++crossings;
      }
      votes += crossings % 2;
    }
    inside[i] = votes >= 2 ? 1 : 0;
  }
  return inside;
}

TriMesh load_obj(std::istream& in) {
  TriMesh mesh;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "v") {
      Vec3 v;
      if (!(ls >> v.x >> v.y >> v.z))
        throw Error("load_obj: malformed vertex at line " +
                    std::to_string(lineno));
      mesh.vertices.push_back(v);
    } else if (tag == "f") {
      std::vector<int32_t> idx;
      std::string tok;
      while (ls >> tok) {
        // accept "i", "i/..", "i//.." forms; indices are 1-based
        size_t slash = tok.find('/');
        long v = std::stol(tok.substr(0, slash));
        if (v <= 0)
          throw Error("load_obj: non-positive face index at line " +
                      std::to_string(lineno));
        idx.push_back(static_cast<int32_t>(v - 1));
      }
      if (idx.size() != 3)
        throw Error("load_obj: only triangles supported (line " +
                    std::to_string(lineno) + ")");
      mesh.triangles.push_back({idx[0], idx[1], idx[2]});
    }
    // other line kinds (vn, vt, o, g, s, usemtl...) are ignored
  }
  mesh.validate();
  return mesh;
}

TriMesh load_obj_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("load_obj_file: cannot open " + path);
  return load_obj(f);
}

void save_obj(const TriMesh& mesh, std::ostream& out) {
  out.precision(17);
  for (const auto& v : mesh.vertices)
    out << "v " << v.x << " " << v.y << " " << v.z << "\n";
  for (const auto& t : mesh.triangles)
    out << "f " << t[0] + 1 << " " << t[1] + 1 << " " << t[2] + 1 << "\n";
}

void save_obj_file(const TriMesh& mesh, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Error("save_obj_file: cannot open " + path);
  save_obj(mesh, f);
}

TriMesh make_box_mesh(const Vec3& half_extent, const Vec3& center) {
  TriMesh m;
  const Vec3& h = half_extent;
  for (int i = 0; i < 8; ++i)
    m.vertices.push_back(center + Vec3{(i & 1) ? h.x : -h.x,
                                       (i & 2) ? h.y : -h.y,
                                       (i & 4) ? h.z : -h.z});
  // 12 triangles, outward-facing
  const int32_t f[12][3] = {{0, 2, 1}, {1, 2, 3}, {4, 5, 6}, {5, 7, 6},
                            {0, 1, 4}, {1, 5, 4}, {2, 6, 3}, {3, 6, 7},
                            {0, 4, 2}, {2, 4, 6}, {1, 3, 5}, {3, 7, 5}};
  for (auto& t : f) m.triangles.push_back({t[0], t[1], t[2]});
  return m;
}

TriMesh make_icosphere(int subdivisions, double radius, const Vec3& center) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> verts = {
      {-1, phi, 0}, {1, phi, 0},  {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi},  {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1},  {-phi, 0, -1}, {-phi, 0, 1}};
  std::vector<std::array<int32_t, 3>> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (auto& v : verts) v = v.normalized();

  for (int s = 0; s < subdivisions; ++s) {
    std::map<std::pair<int32_t, int32_t>, int32_t> midpoint;
    auto mid = [&](int32_t a, int32_t b) {
      auto key = std::minmax(a, b);
      auto it = midpoint.find({key.first, key.second});
      if (it != midpoint.end()) return it->second;
      Vec3 m = ((verts[a] + verts[b]) * 0.5).normalized();
      verts.push_back(m);
      int32_t id = static_cast<int32_t>(verts.size() - 1);
      midpoint[{key.first, key.second}] = id;
      return id;
    };
    std::vector<std::array<int32_t, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      int32_t ab = mid(f[0], f[1]), bc = mid(f[1], f[2]), ca = mid(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }

  TriMesh m;
  m.vertices.reserve(verts.size());
  for (const auto& v : verts) m.vertices.push_back(center + v * radius);
  m.triangles = std::move(faces);
  return m;
}

}  // namespace shapetok::geom
