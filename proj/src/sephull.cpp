#include "glucas/sephull.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace glucas {

SepHullGrid::SepHullGrid(std::size_t m, std::vector<double> axis_lo,
                         std::vector<double> axis_hi, std::size_t resolution)
    : m_(m), lo_(std::move(axis_lo)), hi_(std::move(axis_hi)), res_(resolution) {
    if (m_ < 1) throw std::invalid_argument("sep hull: M >= 1 required");
    if (res_ < 4) throw std::invalid_argument("sep hull: resolution >= 4 required");
    if (lo_.size() != axes() || hi_.size() != axes()) {
        throw std::invalid_argument("sep hull: bbox needs 2M axis bounds");
    }
    for (std::size_t a = 0; a < axes(); ++a) {
        if (!(lo_[a] < hi_[a])) throw std::invalid_argument("sep hull: empty bbox axis");
    }
    std::size_t cells = 1;
    for (std::size_t a = 0; a < axes(); ++a) cells *= res_;
    mask_.assign(cells, 0);
}

bool SepHullGrid::locate(const MultiPoint& p, std::vector<std::size_t>& cell) const {
    if (p.size() != axes()) throw std::invalid_argument("sep hull: point dimension mismatch");
    cell.resize(axes());
    for (std::size_t a = 0; a < axes(); ++a) {
        if (p[a] < lo_[a] || p[a] > hi_[a]) return false;
        double t = (p[a] - lo_[a]) / (hi_[a] - lo_[a]) * res_;
        std::size_t i = static_cast<std::size_t>(t);
        if (i >= res_) i = res_ - 1;
        cell[a] = i;
    }
    return true;
}

std::size_t SepHullGrid::flat(const std::vector<std::size_t>& cell) const {
    std::size_t idx = 0;
    for (std::size_t a = 0; a < axes(); ++a) idx = idx * res_ + cell[a];
    return idx;
}

void SepHullGrid::add_point(const MultiPoint& p) {
    std::vector<std::size_t> cell;
    if (!locate(p, cell)) throw std::invalid_argument("sep hull: point outside bbox");
    mask_[flat(cell)] = 1;
}

bool SepHullGrid::convexify_sections(std::size_t var) {
    const std::size_t ax = 2 * var, ay = 2 * var + 1;
    const double hx = cell_width(ax), hy = cell_width(ay);
    // Fill uses a tight tolerance: a half-diagonal margin here would feed its
    // own output back into the next pass and creep without bound. The
    // rasterization slack is accounted for once, in the containment queries.
    const double eps = 1e-9 * std::hypot(hx, hy);

    // Strides of each axis in the flat index.
    std::vector<std::size_t> stride(axes());
    std::size_t s = 1;
    for (std::size_t a = axes(); a-- > 0;) {
        stride[a] = s;
        s *= res_;
    }

    // Enumerate all fixed assignments of the other axes.
    std::vector<std::size_t> other_axes;
    for (std::size_t a = 0; a < axes(); ++a) {
        if (a != ax && a != ay) other_axes.push_back(a);
    }
    std::size_t slices = 1;
    for (std::size_t a : other_axes) {
        (void)a;
        slices *= res_;
    }

    bool changed = false;
    std::vector<cplx> occupied;
    for (std::size_t si = 0; si < slices; ++si) {
        std::size_t base = 0;
        std::size_t rem = si;
        for (std::size_t a = other_axes.size(); a-- > 0;) {
            base += (rem % res_) * stride[other_axes[a]];
            rem /= res_;
        }
        occupied.clear();
        for (std::size_t ix = 0; ix < res_; ++ix) {
            for (std::size_t iy = 0; iy < res_; ++iy) {
                if (mask_[base + ix * stride[ax] + iy * stride[ay]]) {
                    occupied.emplace_back(lo_[ax] + (ix + 0.5) * hx,
                                          lo_[ay] + (iy + 0.5) * hy);
                }
            }
        }
        if (occupied.size() < 2) continue;
        Hull2D hull = hull2d(occupied);
        for (std::size_t ix = 0; ix < res_; ++ix) {
            for (std::size_t iy = 0; iy < res_; ++iy) {
                std::size_t idx = base + ix * stride[ax] + iy * stride[ay];
                if (mask_[idx]) continue;
                cplx center(lo_[ax] + (ix + 0.5) * hx, lo_[ay] + (iy + 0.5) * hy);
                if (hull_distance(hull, center) <= eps) {
                    mask_[idx] = 1;
                    changed = true;
                }
            }
        }
    }
    return changed;
}

bool SepHullGrid::close(int pass_cap) {
    converged_ = false;
    for (passes_ = 0; passes_ < pass_cap; ++passes_) {
        bool changed = false;
        for (std::size_t var = 0; var < m_; ++var) {
            changed = convexify_sections(var) || changed;
        }
        if (!changed) {
            converged_ = true;
            ++passes_;
            break;
        }
    }
    return converged_;
}

Containment SepHullGrid::contains(const MultiPoint& p) const {
    std::vector<std::size_t> cell;
    if (!locate(p, cell)) return Containment::Uncertain;
    bool all_occupied = true, all_empty = true;
    auto probe = [&](const std::vector<std::size_t>& c) {
        bool occ = mask_[flat(c)] != 0;
        all_occupied = all_occupied && occ;
        all_empty = all_empty && !occ;
    };
    probe(cell);
    std::vector<std::size_t> nb = cell;
    for (std::size_t a = 0; a < axes(); ++a) {
        if (cell[a] > 0) {
            nb[a] = cell[a] - 1;
            probe(nb);
        } else {
            all_occupied = false; // off-grid neighbor counts as empty
        }
        if (cell[a] + 1 < res_) {
            nb[a] = cell[a] + 1;
            probe(nb);
        } else {
            all_occupied = false;
        }
        nb[a] = cell[a];
    }
    if (all_occupied) return Containment::Inside;
    if (all_empty) return Containment::Outside;
    return Containment::Uncertain;
}

std::size_t SepHullGrid::occupied_count() const {
    return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), 1));
}

std::vector<MultiPoint> SepHullGrid::occupied_centers() const {
    std::vector<MultiPoint> out;
    std::vector<std::size_t> cell(axes(), 0);
    for (std::size_t idx = 0; idx < mask_.size(); ++idx) {
        if (mask_[idx]) {
            std::size_t rem = idx;
            for (std::size_t a = axes(); a-- > 0;) {
                cell[a] = rem % res_;
                rem /= res_;
            }
            MultiPoint c(axes());
            for (std::size_t a = 0; a < axes(); ++a) {
                c[a] = lo_[a] + (cell[a] + 0.5) * cell_width(a);
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

double SepHullGrid::cell_diagonal() const {
    double s = 0.0;
    for (std::size_t a = 0; a < axes(); ++a) {
        double h = cell_width(a);
        s += h * h;
    }
    return std::sqrt(s);
}

void SepHullGrid::write(std::ostream& os) const {
    os << "sep-hull-mask M=" << m_ << " resolution=" << res_
       << " converged=" << (converged_ ? 1 : 0) << "\n";
    os << "bbox";
    for (std::size_t a = 0; a < axes(); ++a) os << " " << lo_[a] << " " << hi_[a];
    os << "\n";
    // run-length encoding over the flat index: value count value count ...
    std::size_t i = 0;
    bool first = true;
    while (i < mask_.size()) {
        std::size_t j = i;
        while (j < mask_.size() && mask_[j] == mask_[i]) ++j;
        os << (first ? "" : " ") << int(mask_[i]) << " " << (j - i);
        first = false;
        i = j;
    }
    os << "\n";
}

SepHullGrid sep_hull_grid(const std::vector<MultiPoint>& points,
                          std::vector<double> axis_lo, std::vector<double> axis_hi,
                          std::size_t resolution, int pass_cap) {
    if (points.empty()) throw std::invalid_argument("sep hull: at least one point required");
    std::size_t m = points.front().size() / 2;
    SepHullGrid grid(m, std::move(axis_lo), std::move(axis_hi), resolution);
    for (const auto& p : points) grid.add_point(p);
    grid.close(pass_cap);
    return grid;
}

double distance_to_convex_hull(const std::vector<MultiPoint>& points, const MultiPoint& x,
                               int iterations, double stop_below) {
    if (points.empty()) throw std::invalid_argument("hull distance: empty point set");
    const std::size_t d = x.size();
    auto dot = [d](const double* a, const double* b) {
        double s = 0.0;
        for (std::size_t k = 0; k < d; ++k) s += a[k] * b[k];
        return s;
    };
    // w = current feasible point, moved toward the support vertex (Frank-Wolfe).
    MultiPoint w = points.front();
    for (int it = 0; it < iterations; ++it) {
        MultiPoint grad(d);
        double dist2 = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
            grad[k] = w[k] - x[k];
            dist2 += grad[k] * grad[k];
        }
        if (stop_below > 0.0 && dist2 <= stop_below * stop_below) break;
        const MultiPoint* best = nullptr;
        double best_dot = 0.0;
        for (const auto& p : points) {
            double v = dot(grad.data(), p.data());
            if (!best || v < best_dot) {
                best = &p;
                best_dot = v;
            }
        }
        MultiPoint dir(d);
        double dir_norm2 = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
            dir[k] = (*best)[k] - w[k];
            dir_norm2 += dir[k] * dir[k];
        }
        if (dir_norm2 < 1e-30) break;
        // exact line search toward the support point
        double t = -dot(grad.data(), dir.data()) / dir_norm2;
        if (t <= 0.0) break;
        t = std::min(t, 1.0);
        for (std::size_t k = 0; k < d; ++k) w[k] += t * dir[k];
    }
    double s = 0.0;
    for (std::size_t k = 0; k < d; ++k) s += (w[k] - x[k]) * (w[k] - x[k]);
    return std::sqrt(s);
}

} // namespace glucas
