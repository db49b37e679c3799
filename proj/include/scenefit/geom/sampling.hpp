#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "scenefit/common/rng.hpp"
#include "scenefit/geom/types.hpp"

namespace scenefit {

inline double triangle_area(const Vec3d& a, const Vec3d& b, const Vec3d& c) {
    return 0.5 * (b - a).cross(c - a).norm();
}

inline double mesh_surface_area(const TriangleMesh& mesh) {
    double total = 0;
    for (Eigen::Index f = 0; f < mesh.faces.cols(); ++f)
        total += triangle_area(mesh.vertices.col(mesh.faces(0, f)),
                               mesh.vertices.col(mesh.faces(1, f)),
                               mesh.vertices.col(mesh.faces(2, f)));
    return total;
}

// Area-uniform surface sampling: faces chosen with probability proportional
// to area, barycentric-uniform within a face (sqrt trick). Deterministic for
// a fixed (mesh, n, seed).
inline Points3d sample_mesh(const TriangleMesh& mesh, int n, std::uint64_t seed) {
    const Eigen::Index nf = mesh.faces.cols();
    if (nf == 0) raise("EmptyMesh", "mesh has no faces");
    std::vector<double> cumulative(static_cast<size_t>(nf));
    double total = 0;
    for (Eigen::Index f = 0; f < nf; ++f) {
        total += triangle_area(mesh.vertices.col(mesh.faces(0, f)),
                               mesh.vertices.col(mesh.faces(1, f)),
                               mesh.vertices.col(mesh.faces(2, f)));
        cumulative[static_cast<size_t>(f)] = total;
    }
    if (!(total > 0)) raise("EmptyMesh", "mesh has zero surface area");

    Points3d out(3, n);
    Rng rng(seed);
    for (int i = 0; i < n; ++i) {
        const double pick = rng.uniform() * total;
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), pick);
        const auto f = static_cast<Eigen::Index>(
            std::min<std::ptrdiff_t>(it - cumulative.begin(), nf - 1));
        const Vec3d a = mesh.vertices.col(mesh.faces(0, f));
        const Vec3d b = mesh.vertices.col(mesh.faces(1, f));
        const Vec3d c = mesh.vertices.col(mesh.faces(2, f));
        const double s = std::sqrt(rng.uniform());
        const double t = rng.uniform();
        out.col(i) = (1.0 - s) * a + s * (1.0 - t) * b + s * t * c;
    }
    return out;
}

}  // namespace scenefit
