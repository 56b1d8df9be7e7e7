#include "geolex/htm.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace geolex {

namespace {

// Octahedron vertices shared by the root faces.
const Eigen::Vector3d kOcta[6] = {
    {0.0, 0.0, 1.0},   // 0: north pole
    {1.0, 0.0, 0.0},   // 1
    {0.0, 1.0, 0.0},   // 2
    {-1.0, 0.0, 0.0},  // 3
    {0.0, -1.0, 0.0},  // 4
    {0.0, 0.0, -1.0},  // 5: south pole
};

// Published HTM root-face table in ascending id order:
//   id  face  vertices
//    8   S0   (v1, v5, v2)
//    9   S1   (v2, v5, v3)
//   10   S2   (v3, v5, v4)
//   11   S3   (v4, v5, v1)
//   12   N0   (v1, v0, v4)
//   13   N1   (v4, v0, v3)
//   14   N2   (v3, v0, v2)
//   15   N3   (v2, v0, v1)
// This ordering is frozen; cell ids depend on it.
constexpr int kRootVertex[8][3] = {
    {1, 5, 2}, {2, 5, 3}, {3, 5, 4}, {4, 5, 1},
    {1, 0, 4}, {4, 0, 3}, {3, 0, 2}, {2, 0, 1},
};

Eigen::Vector3d midpoint(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  return (a + b).normalized();
}

bool contains(const std::array<Eigen::Vector3d, 3>& v,
              const Eigen::Vector3d& p) {
  return v[0].cross(v[1]).dot(p) >= 0.0 && v[1].cross(v[2]).dot(p) >= 0.0 &&
         v[2].cross(v[0]).dot(p) >= 0.0;
}

int id_bit_length(TrixelId id) { return 64 - std::countl_zero(id); }

[[noreturn]] void throw_invalid_id(TrixelId id) {
  throw std::invalid_argument("invalid trixel id: " + std::to_string(id));
}

}  // namespace

bool is_valid_trixel_id(TrixelId id) noexcept {
  if (id < 8) return false;
  const int bits = id_bit_length(id);
  if (bits % 2 != 0) return false;
  const int level = (bits - 4) / 2;
  return level <= kMaxIdLevel;
}

int trixel_level(TrixelId id) {
  if (!is_valid_trixel_id(id)) throw_invalid_id(id);
  return (id_bit_length(id) - 4) / 2;
}

TrixelId trixel_parent(TrixelId id) {
  if (trixel_level(id) == 0) {
    throw std::invalid_argument("trixel_parent: root trixel has no parent");
  }
  return id >> 2;
}

const std::array<Trixel, 8>& root_faces() {
  static const std::array<Trixel, 8> faces = [] {
    std::array<Trixel, 8> f;
    for (int i = 0; i < 8; ++i) {
      f[i].id = static_cast<TrixelId>(8 + i);
      for (int k = 0; k < 3; ++k) f[i].vertex[k] = kOcta[kRootVertex[i][k]];
    }
    return f;
  }();
  return faces;
}

std::array<Trixel, 4> children(const Trixel& t) {
  const Eigen::Vector3d w0 = midpoint(t.vertex[1], t.vertex[2]);
  const Eigen::Vector3d w1 = midpoint(t.vertex[0], t.vertex[2]);
  const Eigen::Vector3d w2 = midpoint(t.vertex[0], t.vertex[1]);
  const TrixelId base = t.id << 2;
  return {
      Trixel{base | 0, {t.vertex[0], w2, w1}},
      Trixel{base | 1, {t.vertex[1], w0, w2}},
      Trixel{base | 2, {t.vertex[2], w1, w0}},
      Trixel{base | 3, {w0, w1, w2}},
  };
}

Trixel trixel_from_id(TrixelId id) {
  const int level = trixel_level(id);
  Trixel t = root_faces()[(id >> (2 * level)) - 8];
  for (int step = level - 1; step >= 0; --step) {
    t = children(t)[(id >> (2 * step)) & 3];
  }
  return t;
}

TrixelId locate(const Eigen::Vector3d& direction, int level) {
  if (level < 0 || level > kMaxLocateLevel) {
    throw std::invalid_argument("locate: level outside [0, " +
                                std::to_string(kMaxLocateLevel) + "]");
  }
  const double n = direction.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("locate: zero or non-finite direction");
  }
  const Eigen::Vector3d p = direction / n;

  // The root faces partition the sphere along exact coordinate planes, so
  // the scan always finds a face.
  int root = 0;
  for (int i = 0; i < 8; ++i) {
    if (contains(root_faces()[i].vertex, p)) {
      root = i;
      break;
    }
  }
  Trixel cur = root_faces()[root];

  for (int d = 0; d < level; ++d) {
    const auto kids = children(cur);
    // First match in child order; the center child absorbs the rare case
    // where rounding leaves the point outside all three corner tests.
    int pick = 3;
    for (int k = 0; k < 3; ++k) {
      if (contains(kids[k].vertex, p)) {
        pick = k;
        break;
      }
    }
    cur = kids[pick];
  }
  return cur.id;
}

TrixelId locate(const GeoPoint& p, int level) {
  return locate(point_to_vector(p), level);
}

std::uint64_t trixel_count(int level) {
  if (level < 0) throw std::invalid_argument("trixel_count: negative level");
  if (level > kMaxIdLevel) {
    throw std::overflow_error("trixel_count: level exceeds 64-bit id range");
  }
  return std::uint64_t{8} << (2 * level);
}

double mean_cell_area(int level, double sphere_area_km2) {
  return sphere_area_km2 / static_cast<double>(trixel_count(level));
}

std::vector<GeoPoint> trixel_polygon(TrixelId id, int segments_per_edge) {
  if (segments_per_edge < 1) {
    throw std::invalid_argument("trixel_polygon: segments_per_edge < 1");
  }
  const Trixel t = trixel_from_id(id);
  std::vector<GeoPoint> ring;
  ring.reserve(3 * segments_per_edge + 1);
  for (int e = 0; e < 3; ++e) {
    const Eigen::Vector3d& a = t.vertex[e];
    const Eigen::Vector3d& b = t.vertex[(e + 1) % 3];
    const double angle = std::acos(std::clamp(a.dot(b), -1.0, 1.0));
    for (int s = 0; s < segments_per_edge; ++s) {
      const double f = static_cast<double>(s) / segments_per_edge;
      // Great-circle interpolation between the edge endpoints.
      Eigen::Vector3d q;
      if (angle < 1e-12) {
        q = a;
      } else {
        q = (std::sin((1.0 - f) * angle) * a + std::sin(f * angle) * b) /
            std::sin(angle);
      }
      ring.push_back(vector_to_point(q));
    }
  }
  ring.push_back(ring.front());
  return ring;
}

}  // namespace geolex
