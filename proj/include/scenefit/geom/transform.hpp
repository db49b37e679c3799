#pragma once

#include "scenefit/geom/rotation.hpp"
#include "scenefit/geom/types.hpp"

namespace scenefit {

// p' = scale * R * p + t. Scale acts about the object origin, so it interacts
// with neither rotation nor translation.
template <typename Scalar>
Points3<Scalar> apply_pose(const Pose7<Scalar>& pose, const Points3<Scalar>& cloud) {
    const Mat3<Scalar> r = rotation_matrix(pose.rotation);
    return ((pose.scale * (r * cloud)).colwise() + pose.translation).eval();
}

template <typename Scalar>
Vec3<Scalar> apply_pose_point(const Pose7<Scalar>& pose, const Vec3<Scalar>& p) {
    return pose.scale * (rotation_matrix(pose.rotation) * p) + pose.translation;
}

// Pinhole projection u = fx*x/z + cx, v = fy*y/z + cy.
// Throws NonPositiveDepth when a point lies on or behind the camera plane.
template <typename Scalar>
Points2<Scalar> project(const CameraIntrinsics& intr, const Points3<Scalar>& cloud) {
    Points2<Scalar> out(2, cloud.cols());
    for (Eigen::Index i = 0; i < cloud.cols(); ++i) {
        const Scalar z = cloud(2, i);
        if (!(z > Scalar(0)))
            raise("NonPositiveDepth", "point with z <= 0 cannot be projected");
        out(0, i) = Scalar(intr.fx) * cloud(0, i) / z + Scalar(intr.cx);
        out(1, i) = Scalar(intr.fy) * cloud(1, i) / z + Scalar(intr.cy);
    }
    return out;
}

}  // namespace scenefit
