#include "glucas/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace glucas {

namespace {

constexpr double kTrailingTol = 0.0; // exact zero trim only

} // namespace

ComplexPoly::ComplexPoly(std::vector<cplx> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
    while (!coeffs_.empty() && std::abs(coeffs_.back()) <= kTrailingTol) {
        coeffs_.pop_back();
    }
}

ComplexPoly ComplexPoly::from_roots(const std::vector<cplx>& roots, cplx leading) {
    if (leading == cplx(0.0)) {
        throw std::invalid_argument("from_roots: leading coefficient must be non-zero");
    }
    std::vector<cplx> c{leading};
    for (const cplx& r : roots) {
        c.push_back(cplx(0.0));
        for (std::size_t k = c.size() - 1; k > 0; --k) {
            c[k] = c[k - 1] - r * c[k];
        }
        c[0] *= -r;
    }
    return ComplexPoly(std::move(c));
}

cplx ComplexPoly::eval(cplx z) const {
    cplx acc(0.0);
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        acc = acc * z + coeffs_[k];
    }
    return acc;
}

double ComplexPoly::eval_bound(cplx z) const {
    double az = std::abs(z);
    double acc = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        acc = acc * az + std::abs(coeffs_[k]);
    }
    return acc;
}

ComplexPoly ComplexPoly::derivative() const {
    if (coeffs_.size() <= 1) return ComplexPoly{};
    std::vector<cplx> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d[k - 1] = coeffs_[k] * static_cast<double>(k);
    }
    return ComplexPoly(std::move(d));
}

namespace {

double cauchy_bound(const std::vector<cplx>& c) {
    const double lead = std::abs(c.back());
    double m = 0.0;
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
        m = std::max(m, std::abs(c[k]));
    }
    return 1.0 + m / lead;
}

} // namespace

RootFindResult find_roots(const ComplexPoly& p, double tol, std::uint64_t seed) {
    if (p.degree() < 1) {
        throw std::invalid_argument("find_roots: degree >= 1 required");
    }
    const auto& c = p.coeffs();
    const int d = p.degree();
    const ComplexPoly dp = p.derivative();

    RootFindResult out;
    out.roots.resize(d);

    // Strip roots at the origin first; they are exact.
    int q0 = 0;
    while (q0 < d && c[q0] == cplx(0.0)) ++q0;
    std::vector<cplx> cr(c.begin() + q0, c.end());
    const int dr = d - q0;
    for (int k = 0; k < q0; ++k) out.roots[k] = cplx(0.0);

    if (dr > 0) {
        ComplexPoly pr{std::vector<cplx>(cr)};
        ComplexPoly dpr = pr.derivative();
        const double R = cauchy_bound(cr);
        const double base_angle =
            2.0 * M_PI * (static_cast<double>(seed % 360) / 360.0 + 0.123);
        std::vector<cplx> z(dr);
        for (int k = 0; k < dr; ++k) {
            double ang = base_angle + 2.0 * M_PI * (k + 0.5) / dr;
            double rad = R * (1.0 + 1e-3 * std::cos(3.7 * k + 1.0));
            z[k] = std::polar(rad, ang);
        }

        const int max_iters = 400;
        std::vector<bool> done(dr, false);
        int it = 0;
        for (; it < max_iters; ++it) {
            double max_step = 0.0;
            bool all_small = true;
            for (int k = 0; k < dr; ++k) {
                if (done[k]) continue;
                cplx pv = pr.eval(z[k]);
                double bound = pr.eval_bound(z[k]);
                if (std::abs(pv) <= 0.5 * tol * bound) {
                    done[k] = true;
                    continue;
                }
                all_small = false;
                cplx dv = dpr.eval(z[k]);
                cplx w = (dv != cplx(0.0)) ? pv / dv : cplx(1e-8);
                cplx s(0.0);
                for (int j = 0; j < dr; ++j) {
                    if (j != k) s += 1.0 / (z[k] - z[j]);
                }
                cplx denom = 1.0 - w * s;
                cplx step = (std::abs(denom) > 1e-300) ? w / denom : w;
                z[k] -= step;
                max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[k])));
            }
            if (all_small || max_step < 1e-15) break;
        }
        out.iterations = it;

        // Newton polish sharpens clustered iterates a little.
        for (int k = 0; k < dr; ++k) {
            for (int t = 0; t < 3; ++t) {
                cplx pv = pr.eval(z[k]);
                cplx dv = dpr.eval(z[k]);
                if (dv == cplx(0.0)) break;
                cplx step = pv / dv;
                if (std::abs(step) > 0.5 * (1.0 + std::abs(z[k]))) break;
                z[k] -= step;
            }
            out.roots[q0 + k] = z[k];
        }
    }

    std::sort(out.roots.begin(), out.roots.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    out.residuals.resize(d);
    out.converged = true;
    for (int k = 0; k < d; ++k) {
        double bound = p.eval_bound(out.roots[k]);
        double res = std::abs(p.eval(out.roots[k])) / (bound > 0.0 ? bound : 1.0);
        out.residuals[k] = res;
        if (res > tol) out.converged = false;
    }
    return out;
}

RootFindResult critical_points_from_roots(const std::vector<cplx>& roots, double tol,
                                          std::uint64_t seed) {
    if (roots.size() < 2) {
        throw std::invalid_argument("critical_points_from_roots: degree >= 2 required");
    }
    // Collapse exact duplicates into (support, multiplicity).
    std::vector<cplx> support;
    std::vector<double> mu;
    {
        std::vector<cplx> sorted = roots;
        std::sort(sorted.begin(), sorted.end(), [](cplx a, cplx b) {
            if (a.real() != b.real()) return a.real() < b.real();
            return a.imag() < b.imag();
        });
        for (cplx r : sorted) {
            if (!support.empty() && support.back() == r) {
                mu.back() += 1.0;
            } else {
                support.push_back(r);
                mu.push_back(1.0);
            }
        }
    }
    const std::size_t m = support.size();

    RootFindResult out;
    // A root of multiplicity mu is a critical point of multiplicity mu - 1.
    for (std::size_t i = 0; i < m; ++i) {
        for (double k = 1.0; k < mu[i]; k += 1.0) out.roots.push_back(support[i]);
    }

    auto s_and_ds = [&](cplx z, cplx& s, cplx& ds, double& scale) {
        s = ds = cplx(0.0);
        scale = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            cplx inv = 1.0 / (z - support[i]);
            s += mu[i] * inv;
            ds -= mu[i] * inv * inv;
            scale += mu[i] * std::abs(inv);
        }
    };

    if (m >= 2) {
        // Initial guesses at midpoints of consecutive supports (exact for
        // interlacing real configurations), with a small seed-rotated jitter
        // so iterates never start on a pole.
        const double base_angle = 2.0 * M_PI * (static_cast<double>(seed % 360) / 360.0);
        std::vector<cplx> z(m - 1);
        for (std::size_t k = 0; k + 1 < m; ++k) {
            cplx a = support[k], b = support[k + 1];
            double gap = std::abs(b - a);
            double jit = 1e-6 * (gap > 0.0 ? gap : 1.0);
            z[k] = 0.5 * (a + b) + jit * std::polar(1.0, base_angle + 0.7 * double(k));
        }

        const int max_iters = 400;
        std::vector<bool> done(z.size(), false);
        int it = 0;
        for (; it < max_iters; ++it) {
            bool all_small = true;
            double max_step = 0.0;
            for (std::size_t k = 0; k < z.size(); ++k) {
                if (done[k]) continue;
                cplx s, ds;
                double scale;
                s_and_ds(z[k], s, ds, scale);
                if (std::abs(s) <= 0.5 * tol * scale) {
                    done[k] = true;
                    continue;
                }
                all_small = false;
                cplx denom2 = s * s + ds; // p''/p at z, times p/p'
                cplx w = (denom2 != cplx(0.0)) ? s / denom2 : cplx(1e-8);
                cplx sum(0.0);
                for (std::size_t j = 0; j < z.size(); ++j) {
                    if (j != k) sum += 1.0 / (z[k] - z[j]);
                }
                cplx ab = 1.0 - w * sum;
                cplx step = (std::abs(ab) > 1e-300) ? w / ab : w;
                z[k] -= step;
                max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[k])));
            }
            if (all_small || max_step < 1e-15) break;
        }
        out.iterations = it;

        for (std::size_t k = 0; k < z.size(); ++k) {
            for (int t = 0; t < 3; ++t) { // Newton polish on S
                cplx s, ds;
                double scale;
                s_and_ds(z[k], s, ds, scale);
                if (ds == cplx(0.0)) break;
                cplx step = s / ds;
                if (std::abs(step) > 0.5 * (1.0 + std::abs(z[k]))) break;
                z[k] -= step;
            }
            out.roots.push_back(z[k]);
        }
    }

    std::sort(out.roots.begin(), out.roots.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    out.converged = true;
    out.residuals.resize(out.roots.size());
    for (std::size_t k = 0; k < out.roots.size(); ++k) {
        bool at_support = false;
        for (std::size_t i = 0; i < m; ++i) {
            if (out.roots[k] == support[i]) at_support = true;
        }
        if (at_support) {
            out.residuals[k] = 0.0; // exact multiple-root critical point
            continue;
        }
        cplx s, ds;
        double scale;
        s_and_ds(out.roots[k], s, ds, scale);
        double res = std::abs(s) / (scale > 0.0 ? scale : 1.0);
        out.residuals[k] = res;
        if (res > tol) out.converged = false;
    }
    return out;
}

} // namespace glucas
