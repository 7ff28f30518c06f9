#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>

namespace rigkit {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

// Rigid (SE(3)) transform. All bone/pose transforms in the library are
// isometries; only blended skinning matrices leave the group.
using Rigid = Eigen::Isometry3d;

inline Rigid make_rigid(const Mat3& rotation, const Vec3& translation) {
  Rigid t = Rigid::Identity();
  t.linear() = rotation;
  t.translation() = translation;
  return t;
}

/// True when R is a proper rotation (orthonormal, det +1) within tol.
inline bool is_rotation(const Mat3& r, double tol = 1e-6) {
  return (r * r.transpose() - Mat3::Identity()).cwiseAbs().maxCoeff() <= tol &&
         std::abs(r.determinant() - 1.0) <= tol;
}

}  // namespace rigkit
