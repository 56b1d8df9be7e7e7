#include "geolex/geo.hpp"

#include <cmath>
#include <stdexcept>

namespace geolex {

namespace {
constexpr double kDegToRad = M_PI / 180.0;
constexpr double kRadToDeg = 180.0 / M_PI;
}  // namespace

GeoPoint make_geo_point(double lat_deg, double lon_deg) {
  if (!std::isfinite(lat_deg) || !std::isfinite(lon_deg)) {
    throw std::invalid_argument("geo point: non-finite coordinates");
  }
  if (lat_deg < -90.0 || lat_deg > 90.0) {
    throw std::invalid_argument("geo point: latitude outside [-90, 90]");
  }
  double lon = std::fmod(lon_deg, 360.0);
  if (lon >= 180.0) lon -= 360.0;
  if (lon < -180.0) lon += 360.0;
  return GeoPoint{lat_deg, lon};
}

bool is_valid(const GeoPoint& p) noexcept {
  return std::isfinite(p.lat) && std::isfinite(p.lon) && p.lat >= -90.0 &&
         p.lat <= 90.0 && p.lon >= -180.0 && p.lon < 180.0;
}

Eigen::Vector3d point_to_vector(const GeoPoint& p) {
  if (!is_valid(p)) {
    throw std::invalid_argument("point_to_vector: invalid geo point");
  }
  const double lat = p.lat * kDegToRad;
  const double lon = p.lon * kDegToRad;
  const double c = std::cos(lat);
  return {c * std::cos(lon), c * std::sin(lon), std::sin(lat)};
}

GeoPoint vector_to_point(const Eigen::Vector3d& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("vector_to_point: zero or non-finite vector");
  }
  const Eigen::Vector3d u = v / n;
  const double lat = std::asin(std::clamp(u.z(), -1.0, 1.0)) * kRadToDeg;
  double lon = std::atan2(u.y(), u.x()) * kRadToDeg;
  if (lon >= 180.0) lon -= 360.0;
  return GeoPoint{std::clamp(lat, -90.0, 90.0), lon};
}

}  // namespace geolex
