#pragma once

#include <charconv>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "rigkit/error.hpp"
#include "rigkit/mesh.hpp"

namespace rigkit {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline double parse_double(std::string_view tok, int line) {
  double value = 0.0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(line, "expected a number, got '" + std::string(tok) + "'");
  return value;
}

// OBJ face vertex "v", "v/vt", "v/vt/vn", "v//vn": only the vertex index
// is consumed. Negative indices are relative to the current vertex count.
inline int parse_face_index(std::string_view tok, int line, int vertex_count) {
  const std::size_t slash = tok.find('/');
  std::string_view head = slash == std::string_view::npos
                              ? tok
                              : tok.substr(0, slash);
  int idx = 0;
  const char* end = head.data() + head.size();
  auto [ptr, ec] = std::from_chars(head.data(), end, idx);
  if (ec != std::errc{} || ptr != end || idx == 0)
    throw ParseError(line,
                     "bad face index '" + std::string(tok) + "'");
  if (idx < 0) idx = vertex_count + idx + 1;  // -1 is the last vertex
  if (idx < 1 || idx > vertex_count)
    throw ValidationError("line " + std::to_string(line) + ": face index " +
                          std::string(tok) + " out of range (vertex count " +
                          std::to_string(vertex_count) + ")");
  return idx - 1;
}

}  // namespace detail

/// Parses ASCII OBJ geometry. Only `v` and `f` records are consumed; faces
/// with more than three vertices are fan-triangulated. Vertex order is
/// preserved. Throws ParseError (malformed record, with line number) or
/// ValidationError (index out of range, degenerate face).
inline MeshAsset parse_mesh_obj(std::string_view bytes) {
  MeshAsset mesh;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= bytes.size()) {
    const std::size_t eol = bytes.find('\n', pos);
    std::string_view line = bytes.substr(
        pos, eol == std::string_view::npos ? bytes.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? bytes.size() + 1 : eol + 1;
    ++line_no;

    line = detail::trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto toks = detail::split_ws(line);
    if (toks[0] == "v") {
      if (toks.size() < 4)
        throw ParseError(line_no, "vertex record needs 3 coordinates");
      mesh.vertices.emplace_back(detail::parse_double(toks[1], line_no),
                                 detail::parse_double(toks[2], line_no),
                                 detail::parse_double(toks[3], line_no));
    } else if (toks[0] == "f") {
      if (toks.size() < 4)
        throw ParseError(line_no, "face record needs at least 3 vertices");
      std::vector<int> idx;
      idx.reserve(toks.size() - 1);
      for (std::size_t t = 1; t < toks.size(); ++t)
        idx.push_back(detail::parse_face_index(toks[t], line_no,
                                               mesh.vertex_count()));
      for (std::size_t t = 1; t + 1 < idx.size(); ++t)
        mesh.faces.push_back({idx[0], idx[t], idx[t + 1]});
    }
    // Every other record type (vn, vt, usemtl, o, g, s, mtllib, ...) is
    // ignored: only geometry and topology matter here.
  }
  validate_mesh(mesh);
  return mesh;
}

/// Writes `v`/`f` records with round-trip-exact float formatting.
inline std::string write_mesh_obj(const MeshAsset& mesh) {
  validate_mesh(mesh);
  std::string out;
  out.reserve(mesh.vertices.size() * 48 + mesh.faces.size() * 24);
  char buf[96];
  for (const Vec3& v : mesh.vertices) {
    std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v.x(), v.y(),
                  v.z());
    out += buf;
  }
  for (const auto& f : mesh.faces) {
    std::snprintf(buf, sizeof buf, "f %d %d %d\n", f[0] + 1, f[1] + 1,
                  f[2] + 1);
    out += buf;
  }
  return out;
}

}  // namespace rigkit
