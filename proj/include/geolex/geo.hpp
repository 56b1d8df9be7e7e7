#ifndef GEOLEX_GEO_HPP
#define GEOLEX_GEO_HPP

#include <Eigen/Core>

namespace geolex {

/// Geographic coordinates in degrees. Latitude in [-90, 90], longitude
/// normalized into the half-open range [-180, 180).
struct GeoPoint {
  double lat = 0.0;
  double lon = 0.0;
};

/// Validates and normalizes raw coordinates. Longitude is wrapped into
/// [-180, 180); throws std::invalid_argument on non-finite values or a
/// latitude outside [-90, 90].
GeoPoint make_geo_point(double lat_deg, double lon_deg);

bool is_valid(const GeoPoint& p) noexcept;

/// Geographic to Cartesian on the unit sphere:
///   x = cos(lat) cos(lon), y = cos(lat) sin(lon), z = sin(lat).
/// Throws std::invalid_argument on an invalid point.
Eigen::Vector3d point_to_vector(const GeoPoint& p);

/// Inverse of point_to_vector for any nonzero vector; the input is
/// normalized first.
GeoPoint vector_to_point(const Eigen::Vector3d& v);

}  // namespace geolex

#endif  // GEOLEX_GEO_HPP
