#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "football/branched.hpp"
#include "football/geometry.hpp"
#include "football/kernels.hpp"

namespace football {

// Triangle mesh with 0-based indices.  Closed meshes built here are
// combinatorial spheres: V - E + F = 2 and every edge borders two triangles.
struct Mesh {
  std::vector<Point3> vertices;
  std::vector<std::array<std::uint32_t, 3>> triangles;
};

struct MeshConfig {
  int nu = 64;              // interior rings along u (>= 2)
  int ntheta = 128;         // samples around theta (>= 3)
  bool close_poles = true;  // cap both ends with apex fans
  double r_max = 10.0;      // outer cutoff of the branched chart (> 1)
};

struct MeshStats {
  std::size_t vertex_count = 0;
  std::size_t triangle_count = 0;
  std::size_t edge_count = 0;      // undirected edges
  long euler_characteristic = 0;   // V - E + F
  bool watertight = false;         // every edge shared by exactly two triangles
  bool oriented = false;           // no directed edge repeats
  bool all_finite = false;
};

// Tessellates the football immersion on nu interior rings u_i = pi*i/(nu+1)
// and ntheta equally spaced angles.  When closed, two apex vertices cap the
// poles, giving V = nu*ntheta + 2, F = 2*nu*ntheta, E = 3*nu*ntheta.
// For lambda >= 2 the emitted mesh traverses the self-overlapping image
// lambda times; the overlap is intentional and never deduplicated.
Mesh tessellate(const FootballParams& p, const MeshConfig& cfg, Exec exec = Exec::parallel);

// Tessellates the branched immersion over rings |z| = r_i on a geometric
// progression in [1/r_max, r_max], capped by the images of z = 0 and
// z = infinity.
Mesh tessellate_branched(const BranchParams& bp, const MeshConfig& cfg,
                         Exec exec = Exec::parallel);

// ASCII Wavefront OBJ: one "v x y z" per vertex (shortest round-trip float
// formatting), one "f i j k" per triangle with 1-based indices, LF newlines,
// nothing else.
void write_obj(const Mesh& m, std::ostream& out);

// ASCII PLY 1.0 with float x/y/z vertex properties and uchar-counted integer
// face lists.
void write_ply(const Mesh& m, std::ostream& out);

MeshStats mesh_stats(const Mesh& m);

// Sum of (unsigned) triangle areas.
double triangle_area_sum(const Mesh& m);

}  // namespace football
