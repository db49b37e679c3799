#include <cstdint>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>

#include "scenefit/io/mesh_io.hpp"

namespace scenefit {

namespace {

enum class PlyType { Char, UChar, Short, UShort, Int, UInt, Float, Double };

PlyType parse_type(const std::string& s) {
    static const std::map<std::string, PlyType> table = {
        {"char", PlyType::Char},     {"int8", PlyType::Char},
        {"uchar", PlyType::UChar},   {"uint8", PlyType::UChar},
        {"short", PlyType::Short},   {"int16", PlyType::Short},
        {"ushort", PlyType::UShort}, {"uint16", PlyType::UShort},
        {"int", PlyType::Int},       {"int32", PlyType::Int},
        {"uint", PlyType::UInt},     {"uint32", PlyType::UInt},
        {"float", PlyType::Float},   {"float32", PlyType::Float},
        {"double", PlyType::Double}, {"float64", PlyType::Double}};
    const auto it = table.find(s);
    if (it == table.end()) raise("ParseError", "unknown ply type " + s);
    return it->second;
}

size_t type_size(PlyType t) {
    switch (t) {
        case PlyType::Char:
        case PlyType::UChar: return 1;
        case PlyType::Short:
        case PlyType::UShort: return 2;
        case PlyType::Int:
        case PlyType::UInt:
        case PlyType::Float: return 4;
        case PlyType::Double: return 8;
    }
    return 0;
}

struct PlyProperty {
    std::string name;
    PlyType type = PlyType::Float;
    bool is_list = false;
    PlyType count_type = PlyType::UChar;
};

struct PlyElement {
    std::string name;
    long count = 0;
    std::vector<PlyProperty> properties;
};

struct PlyHeader {
    bool binary = false;
    std::vector<PlyElement> elements;
};

PlyHeader read_header(std::istream& in, const std::string& path) {
    std::string line;
    if (!std::getline(in, line)) raise("ParseError", "empty ply file " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "ply") raise("ParseError", path + " is not a ply file");

    PlyHeader h;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "comment" || kw == "obj_info") continue;
        if (kw == "format") {
            std::string fmt;
            ls >> fmt;
            if (fmt == "binary_little_endian") h.binary = true;
            else if (fmt == "ascii") h.binary = false;
            else raise("ParseError", "unsupported ply format " + fmt);
        } else if (kw == "element") {
            PlyElement e;
            ls >> e.name >> e.count;
            h.elements.push_back(e);
        } else if (kw == "property") {
            if (h.elements.empty()) raise("ParseError", "property before element");
            PlyProperty p;
            std::string t;
            ls >> t;
            if (t == "list") {
                p.is_list = true;
                std::string ct, vt;
                ls >> ct >> vt;
                p.count_type = parse_type(ct);
                p.type = parse_type(vt);
            } else {
                p.type = parse_type(t);
            }
            ls >> p.name;
            h.elements.back().properties.push_back(p);
        } else if (kw == "end_header") {
            return h;
        } else {
            raise("ParseError", "unexpected ply header line: " + line);
        }
    }
    raise("ParseError", "ply header not terminated in " + path);
}

double read_binary_scalar(std::istream& in, PlyType t) {
    unsigned char buf[8];
    in.read(reinterpret_cast<char*>(buf), static_cast<std::streamsize>(type_size(t)));
    if (!in) raise("ParseError", "truncated ply payload");
    switch (t) {
        case PlyType::Char: return static_cast<double>(static_cast<std::int8_t>(buf[0]));
        case PlyType::UChar: return static_cast<double>(buf[0]);
        case PlyType::Short: {
            std::int16_t v;
            std::memcpy(&v, buf, 2);
            return v;
        }
        case PlyType::UShort: {
            std::uint16_t v;
            std::memcpy(&v, buf, 2);
            return v;
        }
        case PlyType::Int: {
            std::int32_t v;
            std::memcpy(&v, buf, 4);
            return v;
        }
        case PlyType::UInt: {
            std::uint32_t v;
            std::memcpy(&v, buf, 4);
            return v;
        }
        case PlyType::Float: {
            float v;
            std::memcpy(&v, buf, 4);
            return v;
        }
        case PlyType::Double: {
            double v;
            std::memcpy(&v, buf, 8);
            return v;
        }
    }
    return 0;
}

double read_ascii_scalar(std::istream& in) {
    double v;
    if (!(in >> v)) raise("ParseError", "truncated ply payload");
    return v;
}

struct PlyData {
    Points3d vertices;
    std::vector<Eigen::Vector3i> faces;
};

PlyData read_ply(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise("IoFailure", "cannot open " + path.string());
    const PlyHeader h = read_header(in, path.string());

    PlyData data;
    for (const auto& elem : h.elements) {
        const bool is_vertex = elem.name == "vertex";
        const bool is_face = elem.name == "face";
        int xi = -1, yi = -1, zi = -1;
        if (is_vertex) {
            for (size_t i = 0; i < elem.properties.size(); ++i) {
                if (elem.properties[i].name == "x") xi = static_cast<int>(i);
                if (elem.properties[i].name == "y") yi = static_cast<int>(i);
                if (elem.properties[i].name == "z") zi = static_cast<int>(i);
            }
            if (xi < 0 || yi < 0 || zi < 0)
                raise("ParseError", "ply vertex element lacks x/y/z");
            data.vertices.resize(3, elem.count);
        }
        for (long row = 0; row < elem.count; ++row) {
            std::vector<double> list_values;
            for (size_t p = 0; p < elem.properties.size(); ++p) {
                const auto& prop = elem.properties[p];
                if (prop.is_list) {
                    const double cnt = h.binary
                                           ? read_binary_scalar(in, prop.count_type)
                                           : read_ascii_scalar(in);
                    const long c = static_cast<long>(cnt);
                    list_values.clear();
                    for (long k = 0; k < c; ++k)
                        list_values.push_back(h.binary ? read_binary_scalar(in, prop.type)
                                                       : read_ascii_scalar(in));
                    if (is_face && (prop.name == "vertex_indices" ||
                                    prop.name == "vertex_index")) {
                        if (list_values.size() < 3)
                            raise("ParseError", "ply face with fewer than 3 indices");
                        for (size_t k = 2; k < list_values.size(); ++k)
                            data.faces.emplace_back(static_cast<int>(list_values[0]),
                                                    static_cast<int>(list_values[k - 1]),
                                                    static_cast<int>(list_values[k]));
                    }
                } else {
                    const double v = h.binary ? read_binary_scalar(in, prop.type)
                                              : read_ascii_scalar(in);
                    if (is_vertex) {
                        if (static_cast<int>(p) == xi) data.vertices(0, row) = v;
                        if (static_cast<int>(p) == yi) data.vertices(1, row) = v;
                        if (static_cast<int>(p) == zi) data.vertices(2, row) = v;
                    }
                }
            }
        }
    }
    return data;
}

template <typename T>
void put(std::ostream& out, T v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

}  // namespace

TriangleMesh read_ply_mesh(const std::filesystem::path& path) {
    PlyData d = read_ply(path);
    TriangleMesh mesh;
    mesh.vertices = std::move(d.vertices);
    mesh.faces.resize(3, static_cast<Eigen::Index>(d.faces.size()));
    for (size_t i = 0; i < d.faces.size(); ++i)
        mesh.faces.col(static_cast<Eigen::Index>(i)) = d.faces[i];
    return mesh;
}

Points3d read_ply_cloud(const std::filesystem::path& path) {
    return read_ply(path).vertices;
}

namespace {

void write_ply(const std::filesystem::path& path, const Points3d& vertices,
               const TriangleMesh* mesh) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise("IoFailure", "cannot write " + path.string());
    out << "ply\nformat binary_little_endian 1.0\n";
    out << "element vertex " << vertices.cols() << "\n";
    out << "property double x\nproperty double y\nproperty double z\n";
    if (mesh) {
        out << "element face " << mesh->faces.cols() << "\n";
        out << "property list uchar int vertex_indices\n";
    }
    out << "end_header\n";
    for (Eigen::Index i = 0; i < vertices.cols(); ++i) {
        put(out, vertices(0, i));
        put(out, vertices(1, i));
        put(out, vertices(2, i));
    }
    if (mesh) {
        for (Eigen::Index i = 0; i < mesh->faces.cols(); ++i) {
            put<std::uint8_t>(out, 3);
            put<std::int32_t>(out, mesh->faces(0, i));
            put<std::int32_t>(out, mesh->faces(1, i));
            put<std::int32_t>(out, mesh->faces(2, i));
        }
    }
    if (!out) raise("IoFailure", "failed writing " + path.string());
}

}  // namespace

void write_ply_mesh(const std::filesystem::path& path, const TriangleMesh& mesh) {
    write_ply(path, mesh.vertices, &mesh);
}

void write_ply_cloud(const std::filesystem::path& path, const Points3d& cloud) {
    write_ply(path, cloud, nullptr);
}

TriangleMesh read_mesh_any(const std::filesystem::path& path) {
    const auto ext = path.extension().string();
    if (ext == ".obj" || ext == ".OBJ") return read_obj(path);
    if (ext == ".ply" || ext == ".PLY") return read_ply_mesh(path);
    raise("ParseError", "unsupported mesh format " + ext);
}

}  // namespace scenefit
