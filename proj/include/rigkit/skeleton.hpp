#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rigkit/error.hpp"
#include "rigkit/types.hpp"

namespace rigkit {

/// Oriented segment between two joints, with at most one parent bone.
/// A connected child's head joint is its parent's tail joint.
struct Bone {
  int head = -1;
  int tail = -1;
  std::optional<int> parent;
};

/// Kinematic forest: shared joint positions plus bones over them.
struct Skeleton {
  std::vector<Vec3> joints;
  std::vector<Bone> bones;

  int joint_count() const { return static_cast<int>(joints.size()); }
  int bone_count() const { return static_cast<int>(bones.size()); }

  double bone_length(int b) const {
    return (joints[bones[b].tail] - joints[bones[b].head]).norm();
  }
  Vec3 head_of(int b) const { return joints[bones[b].head]; }
  Vec3 tail_of(int b) const { return joints[bones[b].tail]; }
};

enum class ForestIssue {
  JointIndexOutOfRange,
  ParentIndexOutOfRange,
  ParentCycle,
  DetachedFromParent,  // head joint does not sit at the parent's tail
  ZeroLengthBone,
  DuplicateTailJoint,  // two bones ending at the same joint: no valid
                       // ground-truth connectivity column exists
};

struct ValidationIssue {
  ForestIssue code;
  int bone = -1;
  std::string message;
};

/// Result of validate_forest. The skeleton is usable iff ok().
struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }

  bool has(ForestIssue code) const {
    for (const auto& i : issues)
      if (i.code == code) return true;
    return false;
  }
};

namespace detail {
inline constexpr double kZeroLengthTol = 1e-12;
inline constexpr double kAttachTol = 1e-9;
}  // namespace detail

/// Structural validation of the kinematic forest: index ranges, acyclic
/// parent links, attachment (head == parent tail), nonzero bone lengths,
/// and tail-joint uniqueness. Never throws; returns the full issue list.
inline ValidationReport validate_forest(const Skeleton& s) {
  ValidationReport report;
  const int joints = s.joint_count();
  const int bones = s.bone_count();
  auto add = [&](ForestIssue code, int bone, std::string msg) {
    report.issues.push_back({code, bone, std::move(msg)});
  };

  std::vector<int> tail_owner(static_cast<std::size_t>(joints), -1);
  for (int b = 0; b < bones; ++b) {
    const Bone& bone = s.bones[b];
    const bool head_ok = bone.head >= 0 && bone.head < joints;
    const bool tail_ok = bone.tail >= 0 && bone.tail < joints;
    if (!head_ok || !tail_ok) {
      add(ForestIssue::JointIndexOutOfRange, b,
          "bone " + std::to_string(b) + ": joint index out of range");
      continue;
    }
    if (bone.parent && (*bone.parent < 0 || *bone.parent >= bones))
      add(ForestIssue::ParentIndexOutOfRange, b,
          "bone " + std::to_string(b) + ": parent index " +
              std::to_string(*bone.parent) + " out of range");
    if ((s.joints[bone.tail] - s.joints[bone.head]).norm() <
        detail::kZeroLengthTol)
      add(ForestIssue::ZeroLengthBone, b,
          "bone " + std::to_string(b) + ": head and tail coincide");
    if (tail_owner[bone.tail] >= 0)
      add(ForestIssue::DuplicateTailJoint, b,
          "bone " + std::to_string(b) + ": tail joint " +
              std::to_string(bone.tail) + " already ends bone " +
              std::to_string(tail_owner[bone.tail]));
    else
      tail_owner[bone.tail] = b;
  }

  // Cycle detection over parent links (three-color walk).
  std::vector<int> state(static_cast<std::size_t>(bones), 0);
  for (int b = 0; b < bones; ++b) {
    if (state[b] != 0) continue;
    std::vector<int> path;
    int cur = b;
    while (cur >= 0 && cur < bones && state[cur] == 0) {
      state[cur] = 1;
      path.push_back(cur);
      const auto& p = s.bones[cur].parent;
      cur = (p && *p >= 0 && *p < bones) ? *p : -1;
    }
    if (cur >= 0 && cur < bones && state[cur] == 1)
      add(ForestIssue::ParentCycle, cur,
          "parent links form a cycle through bone " + std::to_string(cur));
    for (int v : path) state[v] = 2;
  }

  if (!report.has(ForestIssue::ParentCycle)) {
    for (int b = 0; b < bones; ++b) {
      const Bone& bone = s.bones[b];
      if (!bone.parent || *bone.parent < 0 || *bone.parent >= bones) continue;
      const Bone& parent = s.bones[*bone.parent];
      if (bone.head < 0 || bone.head >= joints || parent.tail < 0 ||
          parent.tail >= joints)
        continue;
      if (bone.head != parent.tail &&
          (s.joints[bone.head] - s.joints[parent.tail]).norm() >
              detail::kAttachTol)
        add(ForestIssue::DetachedFromParent, b,
            "bone " + std::to_string(b) +
                ": head does not sit at the tail of parent bone " +
                std::to_string(*bone.parent));
    }
  }
  return report;
}

/// Bone indices ordered parents-before-children. Throws on cycles or bad
/// parent indices; run validate_forest first for a full report.
inline std::vector<int> topological_order(const Skeleton& s) {
  const int bones = s.bone_count();
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(bones));
  std::vector<int> state(static_cast<std::size_t>(bones), 0);
  for (int b = 0; b < bones; ++b) {
    std::vector<int> chain;
    int cur = b;
    while (cur >= 0 && state[cur] == 0) {
      state[cur] = 1;
      chain.push_back(cur);
      const auto& p = s.bones[cur].parent;
      if (p && (*p < 0 || *p >= bones))
        throw ValidationError("topological_order: parent index out of range");
      cur = p ? *p : -1;
    }
    if (cur >= 0 && state[cur] == 1)
      throw ValidationError("topological_order: parent links form a cycle");
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      state[*it] = 2;
      order.push_back(*it);
    }
  }
  return order;
}

}  // namespace rigkit
