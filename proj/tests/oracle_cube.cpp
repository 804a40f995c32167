#include "oracle_cube.hpp"

#include <stdexcept>

namespace idemsys::testing {

namespace {

int distance(long x, long y, int n, int q) {
    int d = 0;
    for (int c = 0; c < n; ++c) {
        if (x % q != y % q) ++d;
        x /= q;
        y /= q;
    }
    return d;
}

long power(int q, int n) {
    long p = 1;
    for (int i = 0; i < n; ++i) p *= q;
    return p;
}

}  // namespace

std::vector<std::vector<std::vector<long>>> cube_intersection_numbers(int n, int q) {
    const long verts = power(q, n);
    const int classes = n + 1;
    std::vector counts(classes, std::vector(classes, std::vector<long>(classes, -1)));
    for (long x = 0; x < verts; ++x) {
        for (long y = 0; y < verts; ++y) {
            const int h = distance(x, y, n, q);
            std::vector<std::vector<long>> c(classes, std::vector<long>(classes, 0));
            for (long z = 0; z < verts; ++z) {
                ++c[static_cast<std::size_t>(distance(x, z, n, q))]
                   [static_cast<std::size_t>(distance(z, y, n, q))];
            }
            for (int i = 0; i < classes; ++i) {
                for (int j = 0; j < classes; ++j) {
                    long& slot = counts[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)]
                                       [static_cast<std::size_t>(j)];
                    if (slot == -1) {
                        slot = c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    } else if (slot != c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                        throw std::logic_error("intersection count depends on the pair");
                    }
                }
            }
        }
    }
    return counts;
}

long cube_sphere_size(int n, int q, int i) {
    const long verts = power(q, n);
    long count = 0;
    for (long y = 0; y < verts; ++y) {
        if (distance(0, y, n, q) == i) ++count;
    }
    return count;
}

long cube_character_eigenvalue(int n, int i, int j) {
    const long verts = power(2, n);
    const long mask = (1L << i) - 1;  // weight-i representative
    long sum = 0;
    for (long z = 0; z < verts; ++z) {
        if (distance(0, z, n, 2) != j) continue;
        sum += __builtin_parityl(static_cast<unsigned long>(z & mask)) ? -1 : 1;
    }
    return sum;
}

}  // namespace idemsys::testing
