#ifndef GLUCAS_SEPHULL_HPP
#define GLUCAS_SEPHULL_HPP

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "glucas/hull.hpp"

namespace glucas {

// Point in C^M, stored as 2M reals (Re z_1, Im z_1, ..., Re z_M, Im z_M).
using MultiPoint = std::vector<double>;

inline MultiPoint to_multipoint(const std::vector<cplx>& zs) {
    MultiPoint p;
    p.reserve(2 * zs.size());
    for (cplx z : zs) {
        p.push_back(z.real());
        p.push_back(z.imag());
    }
    return p;
}

enum class Containment { Inside, Outside, Uncertain };

// Grid outer approximation of the separately convex hull H2 in C^M: the mask
// is grown by convexifying every 2D complex-coordinate slice until it is a
// fixed point of all section passes (or the pass cap is hit).
class SepHullGrid {
public:
    SepHullGrid(std::size_t m, std::vector<double> axis_lo, std::vector<double> axis_hi,
                std::size_t resolution);

    std::size_t vars() const { return m_; }
    std::size_t resolution() const { return res_; }
    bool converged() const { return converged_; }
    int passes_used() const { return passes_; }
    const std::vector<double>& axis_lo() const { return lo_; }
    const std::vector<double>& axis_hi() const { return hi_; }
    const std::vector<char>& mask() const { return mask_; }

    void add_point(const MultiPoint& p);
    // Iterate section convexification to a fixed point; returns converged flag.
    bool close(int pass_cap = 50);

    Containment contains(const MultiPoint& p) const;

    std::size_t occupied_count() const;
    std::vector<MultiPoint> occupied_centers() const;

    double cell_width(std::size_t axis) const { return (hi_[axis] - lo_[axis]) / res_; }
    double cell_diagonal() const;

    void write(std::ostream& os) const; // header + run-length encoded occupancy

private:
    std::size_t m_;
    std::vector<double> lo_, hi_;
    std::size_t res_;
    std::vector<char> mask_;
    bool converged_ = false;
    int passes_ = 0;

    std::size_t axes() const { return 2 * m_; }
    bool locate(const MultiPoint& p, std::vector<std::size_t>& cell) const;
    std::size_t flat(const std::vector<std::size_t>& cell) const;
    bool convexify_sections(std::size_t var); // one pass over coordinate var
};

SepHullGrid sep_hull_grid(const std::vector<MultiPoint>& points,
                          std::vector<double> axis_lo, std::vector<double> axis_hi,
                          std::size_t resolution, int pass_cap = 50);

// Exact Euclidean distance from x to the convex hull of `points` (Gilbert's
// iterative scheme; accurate to well below a grid cell for small point sets).
// `stop_below` allows an early exit once the current upper bound on the
// distance drops under the threshold the caller cares about.
double distance_to_convex_hull(const std::vector<MultiPoint>& points, const MultiPoint& x,
                               int iterations = 4000, double stop_below = 0.0);

} // namespace glucas

#endif
