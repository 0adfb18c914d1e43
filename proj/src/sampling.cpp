#include "germ/sampling.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace germ {

namespace {

double lerp(double a, double b, int i, int n) { return a + (b - a) * i / n; }

void check(const Box& range, const GridResolution& res) {
  if (res.nx < 1 || res.ny < 1) throw std::invalid_argument("grid resolution must be at least 1x1");
  for (double v : {range.xmin, range.xmax, range.ymin, range.ymax})
    if (!std::isfinite(v)) throw std::invalid_argument("sampling range must be finite");
}

}  // namespace

SurfaceMesh sample_surface(const MapGerm3& m, const Box& range, const GridResolution& res) {
  check(range, res);
  SurfaceMesh mesh;
  const int stride = res.nx + 1;
  mesh.vertices.reserve(static_cast<std::size_t>(stride) * (res.ny + 1));
  for (int j = 0; j <= res.ny; ++j) {
    const double y = lerp(range.ymin, range.ymax, j, res.ny);
    for (int i = 0; i <= res.nx; ++i) {
      const double x = lerp(range.xmin, range.xmax, i, res.nx);
      mesh.domain_coords.emplace_back(x, y);
      mesh.vertices.emplace_back(eval(m.c1(), x, y), eval(m.c2(), x, y), eval(m.c3(), x, y));
    }
  }
  for (int j = 0; j < res.ny; ++j)
    for (int i = 0; i < res.nx; ++i) {
      const int a = j * stride + i;
      mesh.faces.push_back({a, a + 1, a + 1 + stride, a + stride});
    }
  return mesh;
}

std::vector<Polyline> zero_contour(const Jet& f, const Box& range, const GridResolution& res) {
  check(range, res);
  const int stride = res.nx + 1;
  std::vector<double> value(static_cast<std::size_t>(stride) * (res.ny + 1));
  std::vector<Eigen::Vector2d> where(value.size());
  for (int j = 0; j <= res.ny; ++j)
    for (int i = 0; i <= res.nx; ++i) {
      const double x = lerp(range.xmin, range.xmax, i, res.nx);
      const double y = lerp(range.ymin, range.ymax, j, res.ny);
      where[j * stride + i] = {x, y};
      value[j * stride + i] = eval(f, x, y);
    }

  // Edge ids: 2 * vertex for the edge to the right, 2 * vertex + 1 upwards.
  auto crossing = [&](int a, int b) -> Eigen::Vector2d {
    const double t = value[a] / (value[a] - value[b]);
    return where[a] + t * (where[b] - where[a]);
  };
  std::map<long, Eigen::Vector2d> points;
  std::vector<std::array<long, 2>> segments;

  for (int j = 0; j < res.ny; ++j) {
    for (int i = 0; i < res.nx; ++i) {
      const int v0 = j * stride + i, v1 = v0 + 1, v2 = v0 + 1 + stride, v3 = v0 + stride;
      // Cell edges in counterclockwise order: bottom, right, top, left.
      const std::array<std::array<int, 2>, 4> ends{{{v0, v1}, {v1, v2}, {v3, v2}, {v0, v3}}};
      const std::array<long, 4> ids{2L * v0, 2L * v1 + 1, 2L * v3, 2L * v0 + 1};
      std::vector<int> crossed;
      for (int e = 0; e < 4; ++e) {
        const bool pa = value[ends[e][0]] >= 0.0, pb = value[ends[e][1]] >= 0.0;
        if (pa == pb) continue;
        crossed.push_back(e);
        points.try_emplace(ids[e], crossing(ends[e][0], ends[e][1]));
      }
      if (crossed.size() == 2) {
        segments.push_back({ids[crossed[0]], ids[crossed[1]]});
      } else if (crossed.size() == 4) {
        // Saddle: the cell-center average decides which corners connect.
        const double center = 0.25 * (value[v0] + value[v1] + value[v2] + value[v3]);
        const bool v0_positive = value[v0] >= 0.0;
        if ((center >= 0.0) == v0_positive) {
          segments.push_back({ids[0], ids[1]});
          segments.push_back({ids[2], ids[3]});
        } else {
          segments.push_back({ids[3], ids[0]});
          segments.push_back({ids[1], ids[2]});
        }
      }
    }
  }

  std::map<long, std::vector<int>> incident;
  for (int s = 0; s < static_cast<int>(segments.size()); ++s)
    for (long id : segments[s]) incident[id].push_back(s);

  std::vector<bool> used(segments.size(), false);
  std::vector<Polyline> lines;
  auto walk = [&](int start_seg, long start_id) {
    Polyline line;
    long id = start_id;
    int seg = start_seg;
    line.points.push_back(points[id]);
    while (seg >= 0 && !used[seg]) {
      used[seg] = true;
      id = segments[seg][0] == id ? segments[seg][1] : segments[seg][0];
      line.points.push_back(points[id]);
      seg = -1;
      for (int next : incident[id])
        if (!used[next]) { seg = next; break; }
    }
    line.closed = id == start_id && line.points.size() > 2;
    if (line.closed) line.points.pop_back();
    lines.push_back(std::move(line));
  };
  // Open chains start at edges touched by a single segment.
  for (const auto& [id, segs] : incident)
    if (segs.size() == 1 && !used[segs[0]]) walk(segs[0], id);
  for (int s = 0; s < static_cast<int>(segments.size()); ++s)
    if (!used[s]) walk(s, segments[s][0]);
  return lines;
}

SingularLocus singular_locus(const NormalizedLegendrianGerm& germ, const Box& range,
                             const GridResolution& res) {
  SingularLocus locus;
  locus.domain = zero_contour(d_dx(germ.phi2()), range, res);
  locus.empty = locus.domain.empty();
  for (const Polyline& d : locus.domain) {
    Polyline img;
    img.closed = d.closed;
    for (const auto& q : d.points) {
      Eigen::VectorXd v(3);
      v << eval(germ.phi1(), q[0], q[1]), eval(germ.phi2(), q[0], q[1]), q[1];
      img.points.push_back(std::move(v));
    }
    locus.image.push_back(std::move(img));
  }
  return locus;
}

SliceFront slice_front(const NormalizedLegendrianGerm& germ, double y0, double xmin, double xmax,
                       int samples) {
  if (samples < 2) throw std::invalid_argument("a slice front needs at least 2 samples");
  SliceFront front;
  front.y0 = y0;
  for (int k = 0; k < samples; ++k) {
    const double x = lerp(xmin, xmax, k, samples - 1);
    front.params.push_back(x);
    front.points.emplace_back(eval(germ.phi1(), x, y0), eval(germ.phi2(), x, y0));
    Eigen::Vector2d mu(1.0, -eval(germ.pedal_n(), x, y0));
    front.normals.push_back(mu.normalized());
  }
  return front;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void write_obj(std::ostream& out, const SurfaceMesh& mesh) {
  for (const auto& v : mesh.vertices)
    out << "v " << format_number(v.x()) << ' ' << format_number(v.y()) << ' '
        << format_number(v.z()) << '\n';
  for (const auto& f : mesh.faces)
    out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << ' ' << f[3] + 1 << '\n';
}

void write_csv(std::ostream& out, const std::vector<Polyline>& lines) {
  const bool three_d = !lines.empty() && !lines.front().points.empty() &&
                       lines.front().points.front().size() == 3;
  out << (three_d ? "x,y,z\n" : "x,y\n");
  for (std::size_t l = 0; l < lines.size(); ++l) {
    if (l > 0) out << '\n';
    for (const auto& p : lines[l].points) {
      for (Eigen::Index k = 0; k < p.size(); ++k) out << (k ? "," : "") << format_number(p[k]);
      out << '\n';
    }
  }
}

void write_csv(std::ostream& out, const SliceFront& front) {
  out << "x,y,nx,ny\n";
  for (std::size_t k = 0; k < front.points.size(); ++k)
    out << format_number(front.points[k].x()) << ',' << format_number(front.points[k].y()) << ','
        << format_number(front.normals[k].x()) << ',' << format_number(front.normals[k].y()) << '\n';
}

}  // namespace germ
