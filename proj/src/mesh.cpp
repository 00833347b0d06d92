#include "football/mesh.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace football {

namespace {

void require_config(const MeshConfig& cfg, const char* where, bool branched) {
  if (cfg.nu < 2) throw std::domain_error(std::string(where) + ": need at least two rings");
  if (cfg.ntheta < 3)
    throw std::domain_error(std::string(where) + ": need at least three angular samples");
  if (branched && (!(cfg.r_max > 1.0) || !std::isfinite(cfg.r_max)))
    throw std::domain_error(std::string(where) + ": chart cutoff must exceed 1");
}

// Ring-major layout: ring i, angle j at slot i*ntheta + j; apexes (if any)
// occupy the last two slots.  Strip quads and cap fans wind so that every
// interior edge appears once in each direction.
void connect_rings(Mesh& m, int nu, int ntheta, bool closed) {
  const auto idx = [ntheta](int i, int j) {
    return static_cast<std::uint32_t>(i) * static_cast<std::uint32_t>(ntheta) +
           static_cast<std::uint32_t>(j % ntheta);
  };
  m.triangles.reserve(static_cast<std::size_t>(2 * (nu - 1) * ntheta) +
                      (closed ? static_cast<std::size_t>(2 * ntheta) : 0));
  for (int i = 0; i + 1 < nu; ++i)
    for (int j = 0; j < ntheta; ++j) {
      const std::uint32_t a = idx(i, j);
      const std::uint32_t b = idx(i, j + 1);
      const std::uint32_t c = idx(i + 1, j);
      const std::uint32_t d = idx(i + 1, j + 1);
      m.triangles.push_back({a, b, d});
      m.triangles.push_back({a, d, c});
    }
  if (closed) {
    const std::uint32_t south = static_cast<std::uint32_t>(nu) * static_cast<std::uint32_t>(ntheta);
    const std::uint32_t north = south + 1;
    for (int j = 0; j < ntheta; ++j) {
      m.triangles.push_back({south, idx(0, j + 1), idx(0, j)});
      m.triangles.push_back({north, idx(nu - 1, j), idx(nu - 1, j + 1)});
    }
  }
}

void append_number(std::string& s, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  s.append(buf, res.ptr);
}

void append_number(std::string& s, float v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  s.append(buf, res.ptr);
}

template <class Int>
void append_integer(std::string& s, Int v) {
  char buf[24];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  s.append(buf, res.ptr);
}

}  // namespace

Mesh tessellate(const FootballParams& p, const MeshConfig& cfg, Exec exec) {
  require_config(cfg, "tessellate", false);
  const int nu = cfg.nu;
  const int ntheta = cfg.ntheta;
  Mesh m;
  m.vertices.resize(static_cast<std::size_t>(nu) * static_cast<std::size_t>(ntheta) +
                    (cfg.close_poles ? 2 : 0));
  kernels::index_for(exec, nu, [&](std::int64_t i) {
    const double u = kPi * static_cast<double>(i + 1) / static_cast<double>(nu + 1);
    const std::size_t row = static_cast<std::size_t>(i) * static_cast<std::size_t>(ntheta);
    for (int j = 0; j < ntheta; ++j) {
      const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(ntheta);
      m.vertices[row + static_cast<std::size_t>(j)] = immerse_geodesic(p, GeodesicCoord(u, theta));
    }
  });
  if (cfg.close_poles) {
    const std::size_t base = static_cast<std::size_t>(nu) * static_cast<std::size_t>(ntheta);
    m.vertices[base] = immerse_geodesic(p, GeodesicCoord(0.0, 0.0));
    m.vertices[base + 1] = immerse_geodesic(p, GeodesicCoord(kPi, 0.0));
  }
  connect_rings(m, nu, ntheta, cfg.close_poles);
  return m;
}

Mesh tessellate_branched(const BranchParams& bp, const MeshConfig& cfg, Exec exec) {
  require_config(cfg, "tessellate_branched", true);
  const int nu = cfg.nu;
  const int ntheta = cfg.ntheta;
  const double log_r = std::log(cfg.r_max);
  Mesh m;
  m.vertices.resize(static_cast<std::size_t>(nu) * static_cast<std::size_t>(ntheta) +
                    (cfg.close_poles ? 2 : 0));
  kernels::index_for(exec, nu, [&](std::int64_t i) {
    // Geometric rings from 1/r_max to r_max; both truncated caps are
    // recovered by the apex fans.
    const double t = 2.0 * static_cast<double>(i) / static_cast<double>(nu - 1) - 1.0;
    const double r = std::exp(log_r * t);
    const std::size_t row = static_cast<std::size_t>(i) * static_cast<std::size_t>(ntheta);
    for (int j = 0; j < ntheta; ++j) {
      const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(ntheta);
      m.vertices[row + static_cast<std::size_t>(j)] = branched_immersion(std::polar(r, theta), bp);
    }
  });
  if (cfg.close_poles) {
    const std::size_t base = static_cast<std::size_t>(nu) * static_cast<std::size_t>(ntheta);
    m.vertices[base] = branched_immersion(Complex{0.0, 0.0}, bp);
    m.vertices[base + 1] = branched_immersion_at_infinity();
  }
  connect_rings(m, nu, ntheta, cfg.close_poles);
  return m;
}

void write_obj(const Mesh& m, std::ostream& out) {
  std::string buf;
  buf.reserve(32 * m.vertices.size() + 24 * m.triangles.size());
  for (const Point3& v : m.vertices) {
    buf += "v ";
    append_number(buf, v.x);
    buf += ' ';
    append_number(buf, v.y);
    buf += ' ';
    append_number(buf, v.z);
    buf += '\n';
  }
  for (const auto& t : m.triangles) {
    buf += "f ";
    append_integer(buf, t[0] + 1);
    buf += ' ';
    append_integer(buf, t[1] + 1);
    buf += ' ';
    append_integer(buf, t[2] + 1);
    buf += '\n';
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

void write_ply(const Mesh& m, std::ostream& out) {
  std::string buf;
  buf.reserve(128 + 32 * m.vertices.size() + 24 * m.triangles.size());
  buf += "ply\nformat ascii 1.0\nelement vertex ";
  append_integer(buf, m.vertices.size());
  buf += "\nproperty float x\nproperty float y\nproperty float z\nelement face ";
  append_integer(buf, m.triangles.size());
  buf += "\nproperty list uchar int vertex_indices\nend_header\n";
  for (const Point3& v : m.vertices) {
    append_number(buf, static_cast<float>(v.x));
    buf += ' ';
    append_number(buf, static_cast<float>(v.y));
    buf += ' ';
    append_number(buf, static_cast<float>(v.z));
    buf += '\n';
  }
  for (const auto& t : m.triangles) {
    buf += "3 ";
    append_integer(buf, t[0]);
    buf += ' ';
    append_integer(buf, t[1]);
    buf += ' ';
    append_integer(buf, t[2]);
    buf += '\n';
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

MeshStats mesh_stats(const Mesh& m) {
  MeshStats st;
  st.vertex_count = m.vertices.size();
  st.triangle_count = m.triangles.size();
  st.all_finite =
      std::all_of(m.vertices.begin(), m.vertices.end(), [](const Point3& v) { return finite(v); });

  bool well_formed = true;  // indices in range, no repeated corner
  std::vector<std::uint64_t> directed;
  directed.reserve(3 * m.triangles.size());
  const auto key = [](std::uint32_t a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  };
  for (const auto& t : m.triangles) {
    if (t[0] >= st.vertex_count || t[1] >= st.vertex_count || t[2] >= st.vertex_count ||
        t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      well_formed = false;
      continue;
    }
    directed.push_back(key(t[0], t[1]));
    directed.push_back(key(t[1], t[2]));
    directed.push_back(key(t[2], t[0]));
  }
  std::sort(directed.begin(), directed.end());
  st.oriented = well_formed &&
                std::adjacent_find(directed.begin(), directed.end()) == directed.end();

  std::vector<std::uint64_t> undirected(directed.size());
  std::transform(directed.begin(), directed.end(), undirected.begin(), [&key](std::uint64_t e) {
    const std::uint32_t a = static_cast<std::uint32_t>(e >> 32);
    const std::uint32_t b = static_cast<std::uint32_t>(e);
    return a < b ? key(a, b) : key(b, a);
  });
  std::sort(undirected.begin(), undirected.end());
  bool paired = well_formed && !undirected.empty();
  std::size_t edges = 0;
  for (std::size_t i = 0; i < undirected.size();) {
    std::size_t j = i + 1;
    while (j < undirected.size() && undirected[j] == undirected[i]) ++j;
    if (j - i != 2) paired = false;
    ++edges;
    i = j;
  }
  st.edge_count = edges;
  st.watertight = paired;
  st.euler_characteristic = static_cast<long>(st.vertex_count) - static_cast<long>(edges) +
                            static_cast<long>(st.triangle_count);
  return st;
}

double triangle_area_sum(const Mesh& m) {
  const std::int64_t n = static_cast<std::int64_t>(m.triangles.size());
  std::vector<double> area(m.triangles.size());
  kernels::index_for(Exec::parallel, n, [&](std::int64_t i) {
    const auto& t = m.triangles[static_cast<std::size_t>(i)];
    const Point3& a = m.vertices[t[0]];
    const Point3& b = m.vertices[t[1]];
    const Point3& c = m.vertices[t[2]];
    area[static_cast<std::size_t>(i)] = 0.5 * norm(cross(b - a, c - a));
  });
  return std::accumulate(area.begin(), area.end(), 0.0);
}

}  // namespace football
