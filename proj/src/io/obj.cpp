#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "scenefit/io/mesh_io.hpp"

namespace scenefit {

namespace {

int parse_face_index(const std::string& token, int vertex_count) {
    // OBJ faces may be v, v/vt, v//vn, v/vt/vn; only the vertex index matters.
    int v = 0;
    const auto* begin = token.data();
    const auto* end = token.data() + token.size();
    const auto slash = token.find('/');
    if (slash != std::string::npos) end = token.data() + slash;
    const auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc() || res.ptr != end)
        raise("ParseError", "bad face index '" + token + "'");
    if (v < 0) v = vertex_count + 1 + v;  // negative indices are relative
    if (v < 1 || v > vertex_count)
        raise("ParseError", "face index out of range: " + token);
    return v - 1;
}

}  // namespace

TriangleMesh read_obj(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) raise("IoFailure", "cannot open " + path.string());

    std::vector<Vec3d> verts;
    std::vector<Eigen::Vector3i> faces;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "v") {
            double x, y, z;
            if (!(ls >> x >> y >> z))
                raise("ParseError", "bad vertex line in " + path.string());
            verts.emplace_back(x, y, z);
        } else if (kw == "f") {
            std::vector<int> poly;
            std::string tok;
            while (ls >> tok)
                poly.push_back(parse_face_index(tok, static_cast<int>(verts.size())));
            if (poly.size() < 3)
                raise("ParseError", "face with fewer than 3 vertices in " + path.string());
            for (size_t i = 2; i < poly.size(); ++i)
                faces.emplace_back(poly[0], poly[i - 1], poly[i]);
        }
        // everything else (vn, vt, g, o, s, #, usemtl, ...) is ignored
    }

    TriangleMesh mesh;
    mesh.vertices.resize(3, static_cast<Eigen::Index>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        mesh.vertices.col(static_cast<Eigen::Index>(i)) = verts[i];
    mesh.faces.resize(3, static_cast<Eigen::Index>(faces.size()));
    for (size_t i = 0; i < faces.size(); ++i)
        mesh.faces.col(static_cast<Eigen::Index>(i)) = faces[i];
    return mesh;
}

namespace {

void write_vertices_faces(std::FILE* f, const TriangleMesh& mesh, int index_offset) {
    for (Eigen::Index i = 0; i < mesh.vertices.cols(); ++i)
        std::fprintf(f, "v %.17g %.17g %.17g\n", mesh.vertices(0, i),
                     mesh.vertices(1, i), mesh.vertices(2, i));
    for (Eigen::Index i = 0; i < mesh.faces.cols(); ++i)
        std::fprintf(f, "f %d %d %d\n", mesh.faces(0, i) + 1 + index_offset,
                     mesh.faces(1, i) + 1 + index_offset,
                     mesh.faces(2, i) + 1 + index_offset);
}

}  // namespace

void write_obj(const std::filesystem::path& path, const TriangleMesh& mesh) {
    std::FILE* f = std::fopen(path.string().c_str(), "wb");
    if (!f) raise("IoFailure", "cannot write " + path.string());
    write_vertices_faces(f, mesh, 0);
    std::fclose(f);
}

void write_obj_groups(
    const std::filesystem::path& path,
    const std::vector<std::pair<std::string, TriangleMesh>>& groups) {
    std::FILE* f = std::fopen(path.string().c_str(), "wb");
    if (!f) raise("IoFailure", "cannot write " + path.string());
    int offset = 0;
    for (const auto& [name, mesh] : groups) {
        std::fprintf(f, "g %s\n", name.c_str());
        write_vertices_faces(f, mesh, offset);
        offset += static_cast<int>(mesh.vertices.cols());
    }
    std::fclose(f);
}

}  // namespace scenefit
