// Scratch microbenchmark for the NN hot path (not registered with ctest).
#include <chrono>
#include <cstdio>

#include "scenefit/common/rng.hpp"
#include "scenefit/geom/chamfer.hpp"
#include "scenefit/geom/kdtree.hpp"

using namespace scenefit;

int main() {
    Rng rng(7);
    const int n = 1024, q = 1024, reps = 1000;
    Points3d cloud(3, n), queries(3, q);
    for (int i = 0; i < n; ++i)
        cloud.col(i) = Vec3d(rng.uniform(), rng.uniform(), rng.uniform());
    for (int i = 0; i < q; ++i)
        queries.col(i) = Vec3d(rng.uniform(), rng.uniform(), rng.uniform());

    KdTree3d tree(cloud);
    // correctness vs brute force
    for (int i = 0; i < q; ++i) {
        double best = 1e300;
        for (int j = 0; j < n; ++j)
            best = std::min(best, (cloud.col(j) - queries.col(i)).squaredNorm());
        auto nb = tree.nearest(queries.col(i));
        if (nb.sq_dist != best) {
            std::printf("MISMATCH at %d: %.17g vs %.17g\n", i, nb.sq_dist, best);
            return 1;
        }
    }
    std::puts("exactness ok");

    auto t0 = std::chrono::steady_clock::now();
    double sink = 0;
    for (int r = 0; r < reps; ++r)
        for (int i = 0; i < q; ++i) sink += tree.nearest(queries.col(i)).sq_dist;
    auto t1 = std::chrono::steady_clock::now();
    double sec = std::chrono::duration<double>(t1 - t0).count();
    std::printf("queries: %.1f ns each (%.3f s total, sink %.3f)\n",
                1e9 * sec / (reps * q), sec, sink);

    t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < 200; ++r) {
        KdTree3d t(cloud);
        sink += t.nearest(queries.col(0)).sq_dist;
    }
    t1 = std::chrono::steady_clock::now();
    sec = std::chrono::duration<double>(t1 - t0).count();
    std::printf("build 1024 pts: %.1f us each\n", 1e6 * sec / 200);
    return 0;
}
