#pragma once

#include <Eigen/Core>

#include "scenefit/common/error.hpp"

namespace scenefit {

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Mat3 = Eigen::Matrix<Scalar, 3, 3>;

// Point clouds are dense blocks, one point per column.
template <typename Scalar>
using Points3 = Eigen::Matrix<Scalar, 3, Eigen::Dynamic>;
template <typename Scalar>
using Points2 = Eigen::Matrix<Scalar, 2, Eigen::Dynamic>;

using Vec3d = Vec3<double>;
using Vec2d = Vec2<double>;
using Mat3d = Mat3<double>;
using Points3d = Points3<double>;
using Points2d = Points2<double>;

// 7-DoF similarity transform: p' = scale * R(rotation) * p + translation.
// rotation is axis-angle (direction = axis, magnitude = angle in radians).
template <typename Scalar>
struct Pose7 {
    Vec3<Scalar> rotation = Vec3<Scalar>::Zero();
    Vec3<Scalar> translation = Vec3<Scalar>::Zero();
    Scalar scale = Scalar(1);
};

using Pose7d = Pose7<double>;

struct CameraIntrinsics {
    double fx = 0;
    double fy = 0;
    double cx = 0;
    double cy = 0;
    int width = 0;
    int height = 0;

    bool valid() const {
        return fx > 0 && fy > 0 && width >= 1 && height >= 1 && cx >= 0 &&
               cx < width && cy >= 0 && cy < height;
    }
};

struct TriangleMesh {
    Points3d vertices;                            // 3 x V
    Eigen::Matrix<int, 3, Eigen::Dynamic> faces;  // 3 x F, indices into vertices

    Eigen::Index vertex_count() const { return vertices.cols(); }
    Eigen::Index face_count() const { return faces.cols(); }
};

// Checks index bounds and rejects faces with repeated vertex indices.
inline void validate_mesh(const TriangleMesh& mesh) {
    const int nv = static_cast<int>(mesh.vertex_count());
    for (Eigen::Index f = 0; f < mesh.faces.cols(); ++f) {
        const auto col = mesh.faces.col(f);
        for (int i = 0; i < 3; ++i) {
            if (col[i] < 0 || col[i] >= nv)
                raise("InvalidMesh", "face index out of range");
        }
        if (col[0] == col[1] || col[1] == col[2] || col[0] == col[2])
            raise("InvalidMesh", "degenerate face with repeated indices");
    }
    if (!mesh.vertices.allFinite()) raise("InvalidMesh", "non-finite vertex");
}

}  // namespace scenefit
