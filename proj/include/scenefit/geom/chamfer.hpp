#pragma once

#include <cmath>

#include "scenefit/geom/kdtree.hpp"
#include "scenefit/geom/types.hpp"

namespace scenefit {

template <typename Scalar>
struct ChamferResult {
    Scalar forward = 0;   // mean distance a -> nearest in b
    Scalar backward = 0;  // mean distance b -> nearest in a
    Scalar symmetric = 0; // (forward + backward) / 2
};

// Mean Euclidean nearest-neighbor distance from each column of `from` to the
// indexed cloud. Distances are accumulated in column order so the result is
// reproducible and matches a brute-force scan bit for bit.
template <typename Scalar, int Dim>
Scalar mean_nn_distance(const Eigen::Matrix<Scalar, Dim, Eigen::Dynamic>& from,
                        const KdTree<Scalar, Dim>& to) {
    if (from.cols() == 0) raise("EmptyCloud", "chamfer over an empty cloud");
    Scalar sum = 0;
    for (Eigen::Index i = 0; i < from.cols(); ++i)
        sum += std::sqrt(to.nearest(from.col(i)).sq_dist);
    return sum / static_cast<Scalar>(from.cols());
}

// Symmetric Chamfer distance, mean-per-direction convention:
// forward = mean_a min_b |a-b|, backward = mean_b min_a |b-a|,
// symmetric = their average.
template <typename Scalar, int Dim>
ChamferResult<Scalar> chamfer(
    const Eigen::Matrix<Scalar, Dim, Eigen::Dynamic>& a,
    const Eigen::Matrix<Scalar, Dim, Eigen::Dynamic>& b) {
    if (a.cols() == 0 || b.cols() == 0)
        raise("EmptyCloud", "chamfer over an empty cloud");
    const KdTree<Scalar, Dim> ta(a);
    const KdTree<Scalar, Dim> tb(b);
    ChamferResult<Scalar> r;
    r.forward = mean_nn_distance(a, tb);
    r.backward = mean_nn_distance(b, ta);
    r.symmetric = (r.forward + r.backward) / Scalar(2);
    return r;
}

inline ChamferResult<double> chamfer3(const Points3d& a, const Points3d& b) {
    return chamfer<double, 3>(a, b);
}

inline ChamferResult<double> chamfer2(const Points2d& a, const Points2d& b) {
    return chamfer<double, 2>(a, b);
}

}  // namespace scenefit
