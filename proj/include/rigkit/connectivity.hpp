#pragma once

#include <algorithm>
#include <vector>

#include "rigkit/error.hpp"
#include "rigkit/skeleton.hpp"

namespace rigkit {

/// K x K matrix of bone probabilities. Entry (i, j) is the probability that
/// joints i and j are connected by a bone with i as head and j as tail; a
/// root joint j is encoded on the diagonal, (j, j) = 1.
struct ConnectivityMatrix {
  Eigen::MatrixXd entries;

  ConnectivityMatrix() = default;
  explicit ConnectivityMatrix(Eigen::MatrixXd m) : entries(std::move(m)) {
    if (entries.rows() != entries.cols())
      throw ValidationError("connectivity matrix must be square");
    if (entries.size() > 0 &&
        (entries.minCoeff() < 0.0 || entries.maxCoeff() > 1.0))
      throw ValidationError("connectivity entries must lie in [0, 1]");
  }

  int size() const { return static_cast<int>(entries.rows()); }

  /// Ground-truth form: binary entries, every column sums to 0 or 1.
  bool is_ground_truth_form(double tol = 1e-9) const {
    const int k = size();
    for (int j = 0; j < k; ++j) {
      double sum = 0.0;
      for (int i = 0; i < k; ++i) {
        const double v = entries(i, j);
        if (std::abs(v) > tol && std::abs(v - 1.0) > tol) return false;
        sum += v;
      }
      if (std::abs(sum) > tol && std::abs(sum - 1.0) > tol) return false;
    }
    return true;
  }
};

/// Encodes an annotated skeleton as a binary connectivity matrix over its
/// joints: entry (head, tail) = 1 per bone, and (j, j) = 1 for every joint
/// that is no bone's tail (such joints are roots).
inline ConnectivityMatrix skeleton_to_connectivity(const Skeleton& s) {
  const int k = s.joint_count();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k, k);
  std::vector<bool> is_tail(static_cast<std::size_t>(k), false);
  for (const Bone& b : s.bones) {
    if (b.head < 0 || b.head >= k || b.tail < 0 || b.tail >= k)
      throw ValidationError("skeleton_to_connectivity: joint index out of range");
    if (is_tail[b.tail])
      throw ValidationError(
          "skeleton_to_connectivity: joint " + std::to_string(b.tail) +
          " is the tail of more than one bone");
    is_tail[b.tail] = true;
    m(b.head, b.tail) = 1.0;
  }
  for (int j = 0; j < k; ++j)
    if (!is_tail[j]) m(j, j) = 1.0;
  return ConnectivityMatrix(std::move(m));
}

/// Decodes a predicted connectivity matrix into a skeleton over the given
/// joints by taking the argmax of each column (ties -> lowest row index).
/// A diagonal argmax marks a root. Cycles produced by the argmaxes are
/// broken by deleting the lowest-probability edge on each cycle (ties ->
/// lowest column index) and promoting that column's joint to a root.
inline Skeleton decode_connectivity(const ConnectivityMatrix& matrix,
                                    const std::vector<Vec3>& joints) {
  const int k = matrix.size();
  if (k == 0) throw ValidationError("decode_connectivity: empty matrix");
  if (static_cast<int>(joints.size()) != k)
    throw ValidationError("decode_connectivity: joint count " +
                          std::to_string(joints.size()) +
                          " does not match matrix size " + std::to_string(k));

  // parent_joint[j] = argmax row of column j, or -1 for roots.
  std::vector<int> parent_joint(static_cast<std::size_t>(k), -1);
  for (int j = 0; j < k; ++j) {
    int best = 0;
    for (int i = 1; i < k; ++i)
      if (matrix.entries(i, j) > matrix.entries(best, j)) best = i;
    parent_joint[j] = best == j ? -1 : best;
  }

  // The parent map is a functional graph; every cycle is disjoint. Walk each
  // unvisited chain, and when it closes on itself cut the weakest edge.
  std::vector<int> state(static_cast<std::size_t>(k), 0);
  for (int start = 0; start < k; ++start) {
    if (state[start] != 0) continue;
    std::vector<int> path;
    int cur = start;
    while (cur != -1 && state[cur] == 0) {
      state[cur] = 1;
      path.push_back(cur);
      cur = parent_joint[cur];
    }
    if (cur != -1 && state[cur] == 1) {
      // Collect the cycle: the suffix of path starting at cur.
      std::size_t begin = 0;
      while (path[begin] != cur) ++begin;
      int cut = -1;
      double cut_prob = 0.0;
      for (std::size_t idx = begin; idx < path.size(); ++idx) {
        const int j = path[idx];
        const double prob = matrix.entries(parent_joint[j], j);
        if (cut == -1 || prob < cut_prob || (prob == cut_prob && j < cut)) {
          cut = j;
          cut_prob = prob;
        }
      }
      parent_joint[cut] = -1;
    }
    for (int v : path) state[v] = 2;
  }

  Skeleton out;
  out.joints = joints;
  // One bone per non-root joint, ordered by tail index; per-joint incoming
  // uniqueness makes this ordering canonical.
  std::vector<int> bone_of_tail(static_cast<std::size_t>(k), -1);
  for (int j = 0; j < k; ++j) {
    if (parent_joint[j] == -1) continue;
    Bone bone;
    bone.head = parent_joint[j];
    bone.tail = j;
    bone_of_tail[j] = static_cast<int>(out.bones.size());
    out.bones.push_back(bone);
  }
  for (Bone& bone : out.bones)
    if (bone_of_tail[bone.head] >= 0) bone.parent = bone_of_tail[bone.head];
  return out;
}

/// Directed (head, tail) joint pairs of a skeleton, with (r, r) self-pairs
/// for root joints, as compared by the connectivity metrics.
inline std::vector<std::pair<int, int>> connectivity_pairs(const Skeleton& s) {
  const int k = s.joint_count();
  std::vector<bool> is_tail(static_cast<std::size_t>(k), false);
  std::vector<std::pair<int, int>> pairs;
  for (const Bone& b : s.bones) {
    pairs.emplace_back(b.head, b.tail);
    if (b.tail >= 0 && b.tail < k) is_tail[b.tail] = true;
  }
  for (int j = 0; j < k; ++j)
    if (!is_tail[j]) pairs.emplace_back(j, j);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace rigkit
