#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "scenefit/geom/types.hpp"

namespace scenefit {

// OBJ: vertex/face lines only, 1-based indices. Faces with more than three
// vertices are fan-triangulated on read; v/vt/vn suffixes are stripped.
TriangleMesh read_obj(const std::filesystem::path& path);
void write_obj(const std::filesystem::path& path, const TriangleMesh& mesh);
// One `g <name>` group per mesh, shared 1-based vertex numbering.
void write_obj_groups(
    const std::filesystem::path& path,
    const std::vector<std::pair<std::string, TriangleMesh>>& groups);

// PLY: written binary little-endian with double vertex coordinates; reader
// accepts ascii and binary_little_endian, double or float properties.
TriangleMesh read_ply_mesh(const std::filesystem::path& path);
Points3d read_ply_cloud(const std::filesystem::path& path);
void write_ply_mesh(const std::filesystem::path& path, const TriangleMesh& mesh);
void write_ply_cloud(const std::filesystem::path& path, const Points3d& cloud);

// Dispatches on extension (.obj / .ply); `expect_faces` decides whether a
// faceless PLY is an error or a cloud.
TriangleMesh read_mesh_any(const std::filesystem::path& path);

}  // namespace scenefit
