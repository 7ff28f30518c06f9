#pragma once

#include <vector>

#include "rigkit/error.hpp"
#include "rigkit/skeleton.hpp"
#include "rigkit/types.hpp"

namespace rigkit {

/// Per-bone local rigid transforms applied on top of the rest pose.
struct Pose {
  std::vector<Rigid> locals;

  static Pose identity(int bone_count) {
    Pose p;
    p.locals.assign(static_cast<std::size_t>(bone_count), Rigid::Identity());
    return p;
  }

  int size() const { return static_cast<int>(locals.size()); }
};

inline Rigid pose_transform(const Vec3& axis, double angle_rad,
                            const Vec3& translation) {
  Rigid t = Rigid::Identity();
  if (axis.norm() > 0.0)
    t.linear() = Eigen::AngleAxisd(angle_rad, axis.normalized())
                     .toRotationMatrix();
  t.translation() = translation;
  return t;
}

/// Bind-pose transforms derived purely from joint locations.
/// globals[b] maps the bone's local frame into world space: the local origin
/// lands on the head joint and local (0,0,L) on the tail joint. locals[b] is
/// the same transform expressed relative to the parent's frame (roots keep
/// their world transform), so globals[b] == globals[parent] * locals[b].
struct RestPose {
  std::vector<Rigid> globals;
  std::vector<Rigid> locals;

  int size() const { return static_cast<int>(globals.size()); }
};

namespace detail {

// Lookat-style frame for one bone: local +z points head->tail and local +x
// is horizontal in world space (world up = +y). Bones within 1e-6 of
// vertical use world +x as the reference instead, since the cross-product
// construction is singular there.
inline Mat3 bone_rest_rotation(const Vec3& head, const Vec3& tail) {
  const Vec3 dir = tail - head;
  const double len = dir.norm();
  if (len < kZeroLengthTol)
    throw ValidationError("rest_pose: zero-length bone");
  const Vec3 z = dir / len;
  const Vec3 up(0.0, 1.0, 0.0);
  const Vec3 ref = std::abs(z.dot(up)) > 1.0 - 1e-6 ? Vec3(1.0, 0.0, 0.0) : up;
  const Vec3 x = ref.cross(z).normalized();
  const Vec3 y = z.cross(x);
  Mat3 r;
  r.col(0) = x;
  r.col(1) = y;
  r.col(2) = z;
  return r;
}

}  // namespace detail

/// Derives the rest pose (bind transforms) from head/tail joint positions.
/// Throws on zero-length bones or broken parent structure.
inline RestPose rest_pose(const Skeleton& s) {
  const int bones = s.bone_count();
  RestPose rest;
  rest.globals.assign(static_cast<std::size_t>(bones), Rigid::Identity());
  rest.locals.assign(static_cast<std::size_t>(bones), Rigid::Identity());
  for (int b = 0; b < bones; ++b) {
    const Vec3 head = s.head_of(b);
    const Vec3 tail = s.tail_of(b);
    rest.globals[b] = make_rigid(detail::bone_rest_rotation(head, tail), head);
  }
  for (int b = 0; b < bones; ++b) {
    const auto& p = s.bones[b].parent;
    if (p) {
      if (*p < 0 || *p >= bones)
        throw ValidationError("rest_pose: parent index out of range");
      rest.locals[b] = rest.globals[*p].inverse() * rest.globals[b];
    } else {
      rest.locals[b] = rest.globals[b];
    }
  }
  return rest;
}

/// Composes local pose transforms down the kinematic forest:
///   G_root = restGlobal_root * pose_root
///   G_b    = G_parent * restLocal_b * pose_b
/// The identity pose reproduces the rest globals exactly.
inline std::vector<Rigid> forward_kinematics(const Skeleton& s,
                                             const RestPose& rest,
                                             const Pose& pose) {
  const int bones = s.bone_count();
  if (rest.size() != bones)
    throw ValidationError("forward_kinematics: rest pose has " +
                          std::to_string(rest.size()) + " transforms for " +
                          std::to_string(bones) + " bones");
  if (pose.size() != bones)
    throw ValidationError("forward_kinematics: pose has " +
                          std::to_string(pose.size()) + " transforms for " +
                          std::to_string(bones) + " bones");
  for (const Rigid& t : pose.locals)
    if (!is_rotation(t.linear()))
      throw ValidationError(
          "forward_kinematics: pose rotation is not a proper rotation");

  std::vector<Rigid> globals(static_cast<std::size_t>(bones),
                             Rigid::Identity());
  for (int b : topological_order(s)) {
    const auto& p = s.bones[b].parent;
    if (p)
      globals[b] = globals[*p] * rest.locals[b] * pose.locals[b];
    else
      globals[b] = rest.globals[b] * pose.locals[b];
  }
  return globals;
}

}  // namespace rigkit
