#pragma once

#include <array>
#include <vector>

#include "rigkit/skin_matrix.hpp"
#include "rigkit/types.hpp"

namespace rigkit {

/// Surface points resampled from a rig, each carrying interpolated skinning
/// weights and its provenance on the source mesh (face + barycentrics).
struct SampledCloud {
  std::vector<Vec3> points;
  SkinMatrix weights;                           // P x B
  std::vector<int> source_face;                 // per point
  std::vector<std::array<double, 3>> barycentric;  // per point, sums to 1

  int size() const { return static_cast<int>(points.size()); }
};

}  // namespace rigkit
