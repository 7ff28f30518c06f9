#pragma once

#include <string>

#include "rigkit/mesh.hpp"
#include "rigkit/skeleton.hpp"
#include "rigkit/skin_matrix.hpp"

namespace rigkit {

/// The unit flowing through the pipeline: a mesh, its skeleton, and the
/// per-vertex skinning weights binding them together.
struct RigAsset {
  MeshAsset mesh;
  Skeleton skeleton;
  SkinMatrix skinning;
  std::string name;
};

/// Cross-checks the asset: valid mesh, valid forest with at least one bone,
/// and a skin matrix shaped (vertex count) x (bone count) with convex rows.
inline void validate_rig(const RigAsset& asset) {
  validate_mesh(asset.mesh);
  if (asset.skeleton.bone_count() < 1)
    throw ValidationError("rig '" + asset.name + "': skeleton has no bones");
  const ValidationReport report = validate_forest(asset.skeleton);
  if (!report.ok())
    throw ValidationError("rig '" + asset.name +
                          "': " + report.issues.front().message);
  if (asset.skinning.rows() != asset.mesh.vertex_count())
    throw ValidationError(
        "rig '" + asset.name + "': skinning has " +
        std::to_string(asset.skinning.rows()) + " rows for " +
        std::to_string(asset.mesh.vertex_count()) + " vertices");
  if (asset.skinning.cols() != asset.skeleton.bone_count())
    throw ValidationError(
        "rig '" + asset.name + "': skinning has " +
        std::to_string(asset.skinning.cols()) + " columns for " +
        std::to_string(asset.skeleton.bone_count()) + " bones");
  asset.skinning.validate();
}

}  // namespace rigkit
