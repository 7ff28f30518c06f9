#pragma once

#include <array>
#include <vector>

#include "rigkit/error.hpp"
#include "rigkit/types.hpp"

namespace rigkit {

/// Triangle mesh. Faces are triples of 0-based vertex indices; quads and
/// larger polygons are fan-triangulated at parse time.
struct MeshAsset {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int face_count() const { return static_cast<int>(faces.size()); }
};

/// Throws ValidationError unless every face references three distinct
/// in-range vertices.
inline void validate_mesh(const MeshAsset& mesh) {
  const int n = mesh.vertex_count();
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    const auto& face = mesh.faces[f];
    for (int idx : face) {
      if (idx < 0 || idx >= n)
        throw ValidationError("face " + std::to_string(f) +
                              ": vertex index " + std::to_string(idx) +
                              " out of range (vertex count " +
                              std::to_string(n) + ")");
    }
    if (face[0] == face[1] || face[1] == face[2] || face[0] == face[2])
      throw ValidationError("face " + std::to_string(f) +
                            ": degenerate (repeated vertex index)");
  }
}

}  // namespace rigkit
