#pragma once

#include <Eigen/Core>
#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "germ/germs.hpp"

namespace germ {

struct Box {
  double xmin = -1.0, xmax = 1.0, ymin = -1.0, ymax = 1.0;
};

struct GridResolution {
  int nx = 40, ny = 40;
};

struct SurfaceMesh {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<std::array<int, 4>> faces;
  std::vector<Eigen::Vector2d> domain_coords;
};

struct Polyline {
  std::vector<Eigen::VectorXd> points;
  bool closed = false;
};

/// Vertex (i, j) sits at index j * (nx + 1) + i; faces are grid quads.
SurfaceMesh sample_surface(const MapGerm3& m, const Box& range, const GridResolution& res);

/// Marching squares on the sampled values of f, one linear interpolation per
/// crossed edge. Vertices with f >= 0 count as positive. Returns the chained
/// components of {f = 0} in the domain (2D points).
std::vector<Polyline> zero_contour(const Jet& f, const Box& range, const GridResolution& res);

struct SingularLocus {
  std::vector<Polyline> domain;  // points (x, y)
  std::vector<Polyline> image;   // points (X, Y, Z)
  bool empty = true;             // no sign change of LJ on the grid
};

/// Traces {lj_reduced = 0} and maps it through the germ.
SingularLocus singular_locus(const NormalizedLegendrianGerm& germ, const Box& range,
                             const GridResolution& res);

struct SliceFront {
  double y0 = 0.0;
  std::vector<Eigen::Vector2d> points;   // (phi1(x, y0), phi2(x, y0))
  std::vector<Eigen::Vector2d> normals;  // (1, -n(x, y0)) / |.|
  std::vector<double> params;            // the x of each sample
};

/// `samples` >= 2 evenly spaced x in [xmin, xmax].
SliceFront slice_front(const NormalizedLegendrianGerm& germ, double y0, double xmin, double xmax,
                       int samples);

/// "%.9g" formatting shared by all exporters.
std::string format_number(double v);

/// "v x y z" lines then "f a b c d" lines (1-based), LF endings.
void write_obj(std::ostream& out, const SurfaceMesh& mesh);
/// Header "x,y" or "x,y,z" by point dimension; polylines separated by a blank line.
void write_csv(std::ostream& out, const std::vector<Polyline>& lines);
/// Header "x,y,nx,ny".
void write_csv(std::ostream& out, const SliceFront& front);

}  // namespace germ
