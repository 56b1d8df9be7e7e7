#ifndef GEOLEX_HTM_HPP
#define GEOLEX_HTM_HPP

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "geolex/geo.hpp"

namespace geolex {

/// Hierarchical Triangular Mesh: a quad-tree on the sphere rooted at the
/// eight faces of the octahedron. Each trixel splits into four children by
/// connecting the normalized midpoints of its sides.
///
/// Trixel ids are packed 64-bit integers. The two leading bits mark the
/// root family (10 = southern, 11 = northern), the next two bits pick the
/// root face, and every subdivision step appends two bits (corner children
/// 0-2, center child 3). Root ids are therefore 8..15 and
/// level = (bit_length - 4) / 2.
using TrixelId = std::uint64_t;

/// A spherical triangle of the mesh. Vertices are unit vectors in
/// counterclockwise order viewed from outside the sphere, i.e.
/// (v0 x v1) . v2 > 0.
struct Trixel {
  TrixelId id = 0;
  std::array<Eigen::Vector3d, 3> vertex;
};

/// Deepest level accepted by locate(). Ids themselves stay valid up to
/// level 30 (4 + 2*30 = 64 bits).
inline constexpr int kMaxLocateLevel = 20;
inline constexpr int kMaxIdLevel = 30;

/// Earth surface area used as the default sphere for cell-area estimates.
inline constexpr double kEarthSurfaceKm2 = 5.101e8;

bool is_valid_trixel_id(TrixelId id) noexcept;

/// Subdivision depth encoded in the id; throws on an invalid id.
int trixel_level(TrixelId id);

/// Parent id (the id shifted right by one subdivision step). Throws on root
/// ids and invalid ids.
TrixelId trixel_parent(TrixelId id);

/// The eight root faces in ascending id order. Vertex ordering follows the
/// published HTM convention; see the table in htm.cpp.
const std::array<Trixel, 8>& root_faces();

/// The four children of a trixel: three corner children (bits 0-2, anchored
/// at vertex 0, 1, 2 of the parent) followed by the center child (bits 3).
/// Midpoints are chord midpoints projected back onto the sphere.
std::array<Trixel, 4> children(const Trixel& t);

/// Reconstructs the triangle for an id by descending from its root face.
Trixel trixel_from_id(TrixelId id);

/// Maps a point to the id of the containing trixel at the given level.
/// Containment at each step is the epsilon-free sign test
///   (a x b).p >= 0 and (b x c).p >= 0 and (c x a).p >= 0,
/// with boundary ties resolved by the first matching child in child order,
/// which makes the descent total and deterministic.
TrixelId locate(const GeoPoint& p, int level);
TrixelId locate(const Eigen::Vector3d& direction, int level);

/// Number of trixels at a level: 8 * 4^level. Throws once the count would
/// overflow 64 bits.
std::uint64_t trixel_count(int level);

/// Average cell area at a level, sphere_area / trixel_count(level).
double mean_cell_area(int level, double sphere_area_km2 = kEarthSurfaceKm2);

/// Closed counterclockwise ring tracing the three great-circle edges of a
/// trixel, each edge sampled with segments_per_edge arcs. The first point is
/// repeated at the end, so the ring has 3 * segments_per_edge + 1 points.
std::vector<GeoPoint> trixel_polygon(TrixelId id, int segments_per_edge);

}  // namespace geolex

#endif  // GEOLEX_HTM_HPP
