#include "glucas/hull.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace glucas {

namespace {

double cross(cplx o, cplx a, cplx b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
}

double segment_distance(cplx a, cplx b, cplx z) {
    cplx ab = b - a;
    double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(z - a);
    double t = ((z.real() - a.real()) * ab.real() + (z.imag() - a.imag()) * ab.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(z - (a + t * ab));
}

} // namespace

Hull2D hull2d(const std::vector<cplx>& points) {
    if (points.empty()) throw std::invalid_argument("hull2d: at least one point required");
    std::vector<cplx> pts = points;
    std::sort(pts.begin(), pts.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    Hull2D hull;
    if (pts.size() == 1) {
        hull.vertices = pts;
        return hull;
    }

    // Andrew monotone chain; strict turns only, so collinear points are pruned.
    std::vector<cplx> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    if (h.size() == 2 && h[0] == h[1]) h.resize(1);
    hull.vertices = std::move(h);
    return hull;
}

double hull_distance(const Hull2D& hull, cplx z) {
    const auto& v = hull.vertices;
    if (v.empty()) throw std::invalid_argument("hull_distance: empty hull");
    if (v.size() == 1) return std::abs(z - v[0]);
    if (v.size() == 2) return segment_distance(v[0], v[1], z);

    bool inside = true;
    double dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        cplx a = v[i], b = v[(i + 1) % v.size()];
        if (cross(a, b, z) < 0.0) inside = false;
        dist = std::min(dist, segment_distance(a, b, z));
    }
    return inside ? 0.0 : dist;
}

bool hull_contains(const Hull2D& hull, cplx z, double eps) {
    if (eps < 0.0) throw std::invalid_argument("hull_contains: eps >= 0 required");
    return hull_distance(hull, z) <= eps;
}

} // namespace glucas
