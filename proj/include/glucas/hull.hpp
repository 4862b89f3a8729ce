#ifndef GLUCAS_HULL_HPP
#define GLUCAS_HULL_HPP

#include <complex>
#include <vector>

#include "glucas/poly.hpp"

namespace glucas {

// Convex hull of a finite point set in C. Degenerate forms are kept:
// one vertex (point) or two vertices (segment).
struct Hull2D {
    std::vector<cplx> vertices; // counterclockwise, collinear vertices pruned

    bool is_point() const { return vertices.size() == 1; }
    bool is_segment() const { return vertices.size() == 2; }
};

Hull2D hull2d(const std::vector<cplx>& points);

// Distance from z to the hull; <= 0 means inside (interior distance is not
// tracked, inside simply reports 0).
double hull_distance(const Hull2D& hull, cplx z);

bool hull_contains(const Hull2D& hull, cplx z, double eps);

} // namespace glucas

#endif
