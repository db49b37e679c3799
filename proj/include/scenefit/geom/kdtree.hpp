#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "scenefit/geom/types.hpp"

namespace scenefit {

// Exact nearest-neighbor index over a fixed point set. Median splits on the
// widest axis, points reordered into leaf-contiguous storage. Queries are
// exact: a subtree is pruned only when its splitting plane is at least as
// far as the current best, so the returned distance always equals the true
// minimum (ties may resolve to a different index than a linear scan).
// Immutable after construction; concurrent queries are safe.
template <typename Scalar, int Dim>
class KdTree {
public:
    using PointMatrix = Eigen::Matrix<Scalar, Dim, Eigen::Dynamic>;
    using Point = Eigen::Matrix<Scalar, Dim, 1>;

    struct Neighbor {
        int index = -1;     // column in the cloud the tree was built from
        Scalar sq_dist = std::numeric_limits<Scalar>::infinity();
    };

    KdTree() = default;
    explicit KdTree(const PointMatrix& points) { build(points); }

    void build(const PointMatrix& points) {
        const int n = static_cast<int>(points.cols());
        if (n == 0) raise("EmptyCloud", "cannot index an empty point cloud");
        order_.resize(n);
        std::iota(order_.begin(), order_.end(), 0);
        nodes_.clear();
        nodes_.reserve(2 * n / kLeafSize + 2);
        src_ = &points;
        build_range(0, n);
        // Reorder into leaf-contiguous storage for cache-friendly scans.
        pts_.resize(Dim, n);
        for (int i = 0; i < n; ++i) pts_.col(i) = points.col(order_[i]);
        src_ = nullptr;
    }

    int size() const { return static_cast<int>(pts_.cols()); }

    Neighbor nearest(const Point& q) const {
        Neighbor best;
        struct Entry {
            std::int32_t node;
            Scalar bound;  // squared distance lower bound for the subtree
        };
        Entry stack[64];
        int top = 0;
        std::int32_t node = 0;
        Scalar bound = 0;
        for (;;) {
            if (bound < best.sq_dist) {
                const Node& nd = nodes_[node];
                if (nd.axis >= 0) {
                    const Scalar d = q[nd.axis] - nd.split;
                    const Scalar far_bound = d * d;
                    std::int32_t near_child = node + 1, far_child = nd.right;
                    if (d >= 0) std::swap(near_child, far_child);
                    if (far_bound < best.sq_dist)
                        stack[top++] = {far_child, far_bound};
                    node = near_child;
                    continue;
                }
                for (std::int32_t i = nd.begin; i < nd.end; ++i) {
                    const Scalar sq = (pts_.col(i) - q).squaredNorm();
                    if (sq < best.sq_dist) {
                        best.sq_dist = sq;
                        best.index = order_[i];
                    }
                }
            }
            if (top == 0) break;
            --top;
            node = stack[top].node;
            bound = stack[top].bound;
        }
        return best;
    }

private:
    static constexpr int kLeafSize = 12;

    struct Node {
        Scalar split = 0;
        std::int32_t axis = -1;  // -1 marks a leaf
        std::int32_t right = -1;
        std::int32_t begin = 0;
        std::int32_t end = 0;
    };

    std::int32_t build_range(int begin, int end) {
        const std::int32_t id = static_cast<std::int32_t>(nodes_.size());
        nodes_.push_back(Node{});
        Point lo = src_->col(order_[begin]);
        Point hi = lo;
        for (int i = begin + 1; i < end; ++i) {
            lo = lo.cwiseMin(src_->col(order_[i]));
            hi = hi.cwiseMax(src_->col(order_[i]));
        }
        int axis = 0;
        (hi - lo).maxCoeff(&axis);
        if (end - begin <= kLeafSize || hi[axis] == lo[axis]) {
            nodes_[id].begin = begin;
            nodes_[id].end = end;
            return id;
        }
        const int mid = begin + (end - begin) / 2;
        std::nth_element(order_.begin() + begin, order_.begin() + mid,
                         order_.begin() + end, [&](int a, int b) {
                             return (*src_)(axis, a) < (*src_)(axis, b);
                         });
        const Scalar split = (*src_)(axis, order_[mid]);
        nodes_[id].axis = axis;
        nodes_[id].split = split;
        build_range(begin, mid);
        nodes_[id].right = build_range(mid, end);
        return id;
    }

    std::vector<Node> nodes_;
    std::vector<int> order_;   // storage position -> original column
    PointMatrix pts_;
    const PointMatrix* src_ = nullptr;  // only valid during build
};

using KdTree3d = KdTree<double, 3>;
using KdTree2d = KdTree<double, 2>;

}  // namespace scenefit
