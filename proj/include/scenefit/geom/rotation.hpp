#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "scenefit/geom/types.hpp"

namespace scenefit {

template <typename Scalar>
Mat3<Scalar> skew(const Vec3<Scalar>& v) {
    Mat3<Scalar> m;
    m << Scalar(0), -v.z(), v.y(),
         v.z(), Scalar(0), -v.x(),
         -v.y(), v.x(), Scalar(0);
    return m;
}

// Rodrigues: R = I + sin(t)/t [w]x + (1-cos(t))/t^2 [w]x^2 with w the
// unnormalized axis-angle vector and t = |w|. Series expansion below the
// switch point keeps the map smooth through zero.
template <typename Scalar>
Mat3<Scalar> rotation_matrix(const Vec3<Scalar>& axis_angle) {
    const Scalar t2 = axis_angle.squaredNorm();
    Scalar a, b;  // sin(t)/t, (1-cos(t))/t^2
    if (t2 < Scalar(1e-12)) {
        a = Scalar(1) - t2 / Scalar(6);
        b = Scalar(0.5) - t2 / Scalar(24);
    } else {
        const Scalar t = std::sqrt(t2);
        a = std::sin(t) / t;
        b = (Scalar(1) - std::cos(t)) / t2;
    }
    const Mat3<Scalar> k = skew(axis_angle);
    return Mat3<Scalar>::Identity() + a * k + b * (k * k);
}

// Wraps the angle into [0, pi], flipping the axis when needed. Zero maps to
// the zero vector.
template <typename Scalar>
Vec3<Scalar> canonicalize_rotation(const Vec3<Scalar>& axis_angle) {
    Scalar theta = axis_angle.norm();
    if (theta == Scalar(0)) return Vec3<Scalar>::Zero();
    const Vec3<Scalar> axis = axis_angle / theta;
    const Scalar two_pi = Scalar(2) * Scalar(M_PI);
    theta = std::fmod(theta, two_pi);
    if (theta < Scalar(0)) theta += two_pi;
    if (theta > Scalar(M_PI)) return axis * (theta - two_pi);  // |t-2pi| <= pi, axis flip folded in
    return axis * theta;
}

// Axis-angle of a unit quaternion (w, xyz), canonical angle in [0, pi].
template <typename Scalar>
Vec3<Scalar> quaternion_to_axis_angle(Scalar w, const Vec3<Scalar>& xyz) {
    Scalar qw = w;
    Vec3<Scalar> qv = xyz;
    if (qw < Scalar(0)) {
        qw = -qw;
        qv = -qv;
    }
    const Scalar vn = qv.norm();
    if (vn < Scalar(1e-300)) return Vec3<Scalar>::Zero();
    const Scalar theta = Scalar(2) * std::atan2(vn, qw);
    return qv * (theta / vn);
}

// Geodesic angle between two rotations, in radians.
template <typename Scalar>
Scalar geodesic_angle(const Mat3<Scalar>& ra, const Mat3<Scalar>& rb) {
    const Scalar c = ((ra.transpose() * rb).trace() - Scalar(1)) / Scalar(2);
    return std::acos(std::clamp(c, Scalar(-1), Scalar(1)));
}

// d(R)/d(w_i) for the unnormalized axis-angle w (Gallego & Yezzi form):
//   dR/dw_i = (w_i [w]x + [w x ((I - R) e_i)]x) / |w|^2 * R
// with the first-order expansion near zero where the quotient cancels badly.
template <typename Scalar>
std::array<Mat3<Scalar>, 3> rotation_matrix_derivatives(const Vec3<Scalar>& axis_angle) {
    std::array<Mat3<Scalar>, 3> d;
    const Scalar t2 = axis_angle.squaredNorm();
    if (t2 < Scalar(1e-8)) {
        // R ~ I + [w]x + 1/2 [w]x^2  =>  dR/dw_i ~ [e_i]x + 1/2([e_i]x[w]x + [w]x[e_i]x)
        const Mat3<Scalar> kw = skew(axis_angle);
        for (int i = 0; i < 3; ++i) {
            const Mat3<Scalar> ke = skew(Vec3<Scalar>(Vec3<Scalar>::Unit(i)));
            d[i] = ke + Scalar(0.5) * (ke * kw + kw * ke);
        }
        return d;
    }
    const Mat3<Scalar> r = rotation_matrix(axis_angle);
    const Mat3<Scalar> kw = skew(axis_angle);
    const Mat3<Scalar> imr = Mat3<Scalar>::Identity() - r;
    for (int i = 0; i < 3; ++i) {
        const Vec3<Scalar> col = imr.col(i);  // (I - R) e_i
        const Mat3<Scalar> num = axis_angle[i] * kw + skew(Vec3<Scalar>(axis_angle.cross(col)));
        d[i] = (num / t2) * r;
    }
    return d;
}

}  // namespace scenefit
