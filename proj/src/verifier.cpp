#include "glucas/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace glucas {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        default: return "uncertain";
    }
}

Verdict VerificationReport::overall() const {
    Verdict out = Verdict::Pass;
    for (const auto& c : checks) {
        if (c.verdict == Verdict::Fail) return Verdict::Fail;
        if (c.verdict == Verdict::Uncertain) out = Verdict::Uncertain;
    }
    return out;
}

StabilityCone::StabilityCone(std::vector<double> angles) : theta(std::move(angles)) {
    for (double& a : theta) {
        a = std::fmod(a, 2.0 * M_PI);
        if (a > M_PI) a -= 2.0 * M_PI;
        if (a <= -M_PI) a += 2.0 * M_PI;
    }
}

bool StabilityCone::in_open_cone(const std::vector<cplx>& z, double boundary_tol) const {
    if (z.size() != theta.size()) throw std::invalid_argument("cone: arity mismatch");
    for (std::size_t m = 0; m < z.size(); ++m) {
        if ((std::polar(1.0, theta[m]) * z[m]).imag() <= boundary_tol) return false;
    }
    return true;
}

VerificationReport verify_gl_polynomial(const ComplexPoly& p, double eps,
                                        const VerifyOptions& opts) {
    if (p.degree() < 2) throw std::invalid_argument("verify_gl_polynomial: degree >= 2");
    VerificationReport rep;
    CheckRecord rec;
    rec.name = "gl-polynomial";

    RootFindResult roots = find_roots(p, opts.root_tol, opts.seed);
    RootFindResult crit = find_roots(p.derivative(), opts.root_tol, opts.seed);
    rep.roots = roots.roots;
    rep.critical_points = crit.roots;

    Hull2D hull = hull2d(roots.roots);
    rep.hull_vertices = hull.vertices;

    if (!roots.converged || !crit.converged) {
        rec.verdict = Verdict::Uncertain;
        std::ostringstream os;
        os << "root finder residuals above tolerance (roots " << roots.converged
           << ", critical " << crit.converged << ")";
        rec.detail = os.str();
        rep.add(std::move(rec));
        return rep;
    }

    double maxd = 0.0;
    std::optional<std::vector<cplx>> witness;
    for (cplx c : crit.roots) {
        double d = hull_distance(hull, c);
        if (d > maxd) {
            maxd = d;
            if (d > eps) witness = std::vector<cplx>{c};
        }
    }
    rec.max_distance = maxd;
    rec.verdict = (maxd <= eps) ? Verdict::Pass : Verdict::Fail;
    rec.witness = witness;
    rep.add(std::move(rec));
    return rep;
}

VerificationReport verify_gl_entire(const CanonicalProductSpec& spec,
                                    const std::vector<std::size_t>& schedule, double eps,
                                    const VerifyOptions& opts) {
    if (schedule.empty()) throw std::invalid_argument("verify_gl_entire: empty schedule");
    for (std::size_t i = 1; i < schedule.size(); ++i) {
        if (schedule[i] <= schedule[i - 1]) {
            throw std::invalid_argument("verify_gl_entire: schedule must increase");
        }
    }
    if (spec.p > 0 && spec.plan && spec.plan->status == PlanStatus::Stalled) {
        throw std::invalid_argument("verify_gl_entire: plan stalled");
    }
    constexpr std::size_t kDegreeCap = 2048;

    VerificationReport rep;
    CheckRecord rec;
    rec.name = "gl-entire";

    const std::size_t n_max = std::min(schedule.back(), spec.max_truncation());

    // Closure surrogate: hull of every root consumed at the largest truncation,
    // clipped to the configured window.
    std::vector<cplx> consumed;
    const double bb = opts.bbox_half_width;
    for (std::size_t n = 1; n <= n_max; ++n) {
        cplx r = spec.root_at(n);
        if (std::abs(r.real()) <= bb && std::abs(r.imag()) <= bb) consumed.push_back(r);
    }
    if (spec.q > 0) consumed.push_back(cplx(0.0));
    Hull2D hull = hull2d(consumed);
    rep.hull_vertices = hull.vertices;
    rep.roots = consumed;

    bool capped = false;
    std::vector<double> distances;
    bool all_converged = true;
    for (std::size_t n : schedule) {
        std::size_t nn = std::min(n, spec.max_truncation());
        if (nn + spec.q > kDegreeCap) {
            capped = true;
            break;
        }
        std::vector<cplx> roots_n(spec.q, cplx(0.0));
        for (std::size_t k = 1; k <= nn; ++k) roots_n.push_back(spec.root_at(k));
        if (roots_n.size() < 2) {
            distances.push_back(0.0);
            continue;
        }
        // Root-basis critical points: monomial coefficients of f_N overflow
        // long before the schedule cap.
        RootFindResult crit = critical_points_from_roots(roots_n, opts.root_tol, opts.seed);
        all_converged = all_converged && crit.converged;
        double maxd = 0.0;
        for (cplx c : crit.roots) {
            if (std::abs(c.real()) > bb || std::abs(c.imag()) > bb) continue;
            maxd = std::max(maxd, hull_distance(hull, c));
        }
        distances.push_back(maxd);
        if (n == schedule.back() || nn == spec.max_truncation()) {
            rep.critical_points = crit.roots;
        }
    }

    std::ostringstream os;
    os << "distances:";
    for (double d : distances) os << " " << d;
    if (capped) os << " (schedule capped at degree " << kDegreeCap << ")";
    rec.detail = os.str();

    bool monotone = true;
    for (std::size_t i = 1; i < distances.size(); ++i) {
        if (distances[i] > distances[i - 1] + 1e-12) monotone = false;
    }
    rec.max_distance = distances.empty() ? 0.0 : distances.back();
    if (!all_converged) {
        rec.verdict = Verdict::Uncertain;
    } else if (!distances.empty() && distances.back() <= eps && monotone) {
        rec.verdict = Verdict::Pass;
    } else {
        rec.verdict = Verdict::Fail;
        if (!rep.critical_points.empty()) {
            cplx worst = rep.critical_points.front();
            double wd = 0.0;
            for (cplx c : rep.critical_points) {
                double d = hull_distance(hull, c);
                if (d > wd) {
                    wd = d;
                    worst = c;
                }
            }
            rec.witness = std::vector<cplx>{worst};
        }
    }
    rep.add(std::move(rec));
    return rep;
}

namespace {

bool derivative_identically_zero(const MultivariateSpec& mv, std::size_t var) {
    if (mv.kind == MultivariateSpec::Kind::Polynomial) {
        return mv.poly.partial_derivative(var).is_zero();
    }
    return false; // canonical-product factors are non-constant in their variable
}

} // namespace

VerificationReport verify_gl_sections(const MultivariateSpec& mv, std::size_t var,
                                      const std::vector<std::vector<cplx>>& samples,
                                      double eps, const VerifyOptions& opts) {
    if (var >= mv.vars) throw std::invalid_argument("verify_gl_sections: bad variable");
    if (derivative_identically_zero(mv, var)) {
        throw std::invalid_argument("verify_gl_sections: partial derivative identically zero");
    }

    VerificationReport rep;
    CheckRecord rec;
    rec.name = "gl-sections";

    std::size_t skipped = 0;
    std::size_t checked = 0;
    double maxd = 0.0;
    Verdict worst = Verdict::Pass;

    if (mv.kind == MultivariateSpec::Kind::CoordinateProduct) {
        // Sections in this variable all share the same non-zero root set; a
        // sample only scales the section by the other factors' values.
        const CanonicalProductSpec& f = mv.factors.at(var);
        std::size_t top = std::min<std::size_t>(f.max_truncation(), 200);
        std::vector<std::size_t> schedule;
        for (std::size_t n = std::max<std::size_t>(top / 4, 1); n <= top; n *= 2) {
            schedule.push_back(n);
        }
        if (schedule.empty() || schedule.back() != top) schedule.push_back(top);
        VerificationReport sub = verify_gl_entire(f, schedule, eps, opts);
        rep = sub;
        rep.checks.front().name = "gl-sections";
        std::ostringstream os;
        os << "coordinate-product sections share one root family; " << sub.checks.front().detail;
        rep.checks.front().detail = os.str();
        return rep;
    }

    for (const auto& sample : samples) {
        ComplexPoly g = mv.poly.section(var, sample);
        if (g.degree() < 2) {
            ++skipped; // constant or affine section: no critical points
            continue;
        }
        VerificationReport sub = verify_gl_polynomial(g, eps, opts);
        ++checked;
        const CheckRecord& c = sub.checks.front();
        maxd = std::max(maxd, c.max_distance);
        if (c.verdict == Verdict::Fail) {
            worst = Verdict::Fail;
            rec.witness = c.witness;
        } else if (c.verdict == Verdict::Uncertain && worst == Verdict::Pass) {
            worst = Verdict::Uncertain;
        }
        if (rep.roots.empty()) {
            rep.roots = sub.roots;
            rep.critical_points = sub.critical_points;
            rep.hull_vertices = sub.hull_vertices;
        }
    }

    rec.max_distance = maxd;
    rec.verdict = worst;
    std::ostringstream os;
    os << checked << " sections checked, " << skipped << " degenerate sections skipped";
    rec.detail = os.str();
    rep.add(std::move(rec));
    return rep;
}

StabilityResult is_theta_stable_univariate(const std::vector<cplx>& roots, double theta,
                                           double boundary_tol) {
    StabilityResult out;
    const cplx rot = std::polar(1.0, theta);
    for (cplx r : roots) {
        if ((rot * r).imag() > boundary_tol) {
            out.stable = false;
            out.witness = std::vector<cplx>{r};
            return out;
        }
    }
    return out;
}

StabilityResult is_theta_stable(const MultivariateSpec& mv, const StabilityCone& cone,
                                int budget, const VerifyOptions& opts) {
    if (cone.theta.size() != mv.vars) throw std::invalid_argument("stability: arity mismatch");
    StabilityResult out;

    if (mv.kind == MultivariateSpec::Kind::CoordinateProduct) {
        // Zeros are unions of per-coordinate root cylinders; check each factor.
        for (std::size_t m = 0; m < mv.vars; ++m) {
            const CanonicalProductSpec& f = mv.factors.at(m);
            std::size_t top = std::min<std::size_t>(f.max_truncation(),
                                                    static_cast<std::size_t>(std::max(budget, 1)));
            for (std::size_t n = 1; n <= top; ++n) {
                cplx r = f.root_at(n);
                if ((std::polar(1.0, cone.theta[m]) * r).imag() > opts.boundary_tol) {
                    out.stable = false;
                    std::vector<cplx> w(mv.vars);
                    for (std::size_t k = 0; k < mv.vars; ++k) {
                        w[k] = (k == m) ? r : std::polar(1.0, -cone.theta[k]) * cplx(0.0, 1.0);
                    }
                    out.witness = std::move(w);
                    return out;
                }
            }
            out.low_confidence = out.low_confidence || top < f.max_truncation();
        }
        return out;
    }

    if (mv.vars == 1) {
        ComplexPoly g = mv.poly.section(0, {cplx(0.0)});
        if (g.degree() >= 1) {
            RootFindResult rr = find_roots(g, opts.root_tol, opts.seed);
            return is_theta_stable_univariate(rr.roots, cone.theta[0], opts.boundary_tol);
        }
        return out;
    }

    std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> re_dist(-2.0, 2.0);
    std::uniform_real_distribution<double> im_dist(1e-6, 2.0);

    int used = 0;
    while (used < budget) {
        for (std::size_t m = 0; m < mv.vars && used < budget; ++m, ++used) {
            std::vector<cplx> z(mv.vars);
            for (std::size_t k = 0; k < mv.vars; ++k) {
                if (k == m) continue;
                // sampled strictly inside the rotated open half-plane
                z[k] = std::polar(1.0, -cone.theta[k]) * cplx(re_dist(rng), im_dist(rng));
            }
            ComplexPoly g = mv.poly.section(m, z);
            if (g.is_zero()) {
                out.stable = false;
                z[m] = std::polar(1.0, -cone.theta[m]) * cplx(0.0, 1.0);
                out.witness = z;
                return out;
            }
            if (g.degree() < 1) continue;
            RootFindResult rr = find_roots(g, opts.root_tol, opts.seed);
            for (cplx w : rr.roots) {
                if ((std::polar(1.0, cone.theta[m]) * w).imag() > opts.boundary_tol &&
                    rr.converged) {
                    z[m] = w;
                    out.stable = false;
                    out.witness = z;
                    return out;
                }
            }
        }
    }
    out.low_confidence = false;
    return out;
}

VerificationReport verify_corollary_stability(const MultivariateSpec& mv,
                                              const StabilityCone& cone, std::size_t var,
                                              int budget, const VerifyOptions& opts) {
    if (var >= mv.vars) throw std::invalid_argument("corollary: bad variable");
    if (derivative_identically_zero(mv, var)) {
        throw std::invalid_argument("corollary: partial derivative identically zero");
    }

    VerificationReport rep;
    CheckRecord rec;
    rec.name = "corollary-stability";

    StabilityResult base = is_theta_stable(mv, cone, budget, opts);
    if (!base.stable) {
        rec.verdict = Verdict::Uncertain;
        rec.detail = "precondition failed: f itself has an instability witness";
        rec.witness = base.witness;
        rep.add(std::move(rec));
        return rep;
    }

    StabilityResult deriv;
    if (mv.kind == MultivariateSpec::Kind::Polynomial) {
        MultivariateSpec dmv;
        dmv.kind = MultivariateSpec::Kind::Polynomial;
        dmv.vars = mv.vars;
        dmv.poly = mv.poly.partial_derivative(var);
        deriv = is_theta_stable(dmv, cone, budget, opts);
    } else {
        // d/dz_var of prod F_m(z_m): the z_var factor becomes F'_var, whose
        // desk-scale surrogate is the derivative of a truncation.
        const CanonicalProductSpec& f = mv.factors.at(var);
        std::size_t n = std::min<std::size_t>(f.max_truncation(),
                                              static_cast<std::size_t>(std::max(budget, 8)));
        std::vector<cplx> roots_n(f.q, cplx(0.0));
        for (std::size_t k = 1; k <= n; ++k) roots_n.push_back(f.root_at(k));
        RootFindResult crit = critical_points_from_roots(roots_n, opts.root_tol, opts.seed);
        StabilityResult uni =
            is_theta_stable_univariate(crit.roots, cone.theta[var], opts.boundary_tol);
        deriv.stable = uni.stable;
        if (uni.witness) {
            std::vector<cplx> w(mv.vars, cplx(0.0));
            w[var] = uni.witness->front();
            deriv.witness = std::move(w);
        }
    }

    if (deriv.stable) {
        rec.verdict = Verdict::Pass;
        rec.detail = base.low_confidence || deriv.low_confidence
                         ? "no witness found (low-confidence sampling)"
                         : "no instability witness found for the partial derivative";
    } else {
        // A genuine witness would contradict the corollary: numerical anomaly.
        rec.verdict = Verdict::Fail;
        rec.witness = deriv.witness;
        rec.detail = "instability witness found for the partial derivative";
    }
    rep.add(std::move(rec));
    return rep;
}

} // namespace glucas
