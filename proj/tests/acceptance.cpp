// Acceptance suite: one criterion per function, one pass/fail line each.
// Run directly or through ctest; exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "glucas/hull.hpp"
#include "glucas/multipoly.hpp"
#include "glucas/poly.hpp"
#include "glucas/product.hpp"
#include "glucas/rearrange.hpp"
#include "glucas/roots.hpp"
#include "glucas/sephull.hpp"
#include "glucas/verifier.hpp"

using namespace glucas;

namespace {

struct Criterion {
    int id;
    std::string label;
    double time_limit_s;
    std::function<bool(std::string&)> body;
};

RootSequenceFamily sin_family(std::size_t pairs) {
    return RootSequenceFamily::parametric(1.0, 1.0, {cplx(1.0), cplx(-1.0)}, 2 * pairs);
}

// +-n presented positives-first in blocks of `block` pairs.
RootSequenceFamily blocked_pm_family(std::size_t pairs, std::size_t block) {
    std::vector<cplx> roots;
    roots.reserve(2 * pairs);
    for (std::size_t base = 0; base < pairs; base += block) {
        std::size_t hi = std::min(base + block, pairs);
        for (std::size_t n = base + 1; n <= hi; ++n) roots.emplace_back(double(n), 0.0);
        for (std::size_t n = base + 1; n <= hi; ++n) roots.emplace_back(-double(n), 0.0);
    }
    return RootSequenceFamily::explicit_list(std::move(roots));
}

double max_vn_from_prefix(const RootSequenceFamily& fam, const RearrangementPlan& plan,
                          std::size_t n, int p) {
    PowerSumLedger led(p);
    for (std::size_t k = 1; k <= n; ++k) led.append(apply_plan(fam, plan, k));
    return led.max_abs();
}

// ---- criterion 1: sin-product convergence -------------------------------

bool crit_sin_product(std::string& detail) {
    const double oracle = 2.0 / std::numbers::pi; // sin(pi/2) / (pi/2)
    const cplx z(0.5, 0.0);
    bool ok = true;
    std::ostringstream os;
    for (auto [pairs, tol] : {std::pair<std::size_t, double>{500, 1e-3}, {5000, 1e-4}}) {
        CanonicalProductSpec spec;
        spec.p = 1;
        spec.family = sin_family(pairs);
        cplx f = partial_product(spec, 2 * pairs, z).to_complex();
        double err = std::abs(f - oracle);
        os << "N=" << 2 * pairs << " err=" << err << " (tol " << tol << ") ";
        ok = ok && err <= tol;
    }
    detail = os.str();
    return ok;
}

// ---- criterion 2: polynomial Gauss-Lucas suite --------------------------

bool crit_poly_suite(std::string& detail) {
    std::mt19937_64 rng(2026);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> rad(0.0, 1.0);
    std::uniform_int_distribution<int> deg(2, 12);
    int failures = 0, uncertain = 0;
    for (int trial = 0; trial < 500; ++trial) {
        int d = deg(rng);
        std::vector<cplx> roots;
        for (int k = 0; k < d; ++k) {
            double r = std::sqrt(rad(rng)), a = ang(rng);
            roots.push_back(std::polar(r, a));
        }
        ComplexPoly p = ComplexPoly::from_roots(roots, cplx(1.0));
        VerificationReport rep = verify_gl_polynomial(p, 1e-7);
        if (rep.overall() == Verdict::Fail) ++failures;
        if (rep.overall() == Verdict::Uncertain) ++uncertain;
    }
    std::ostringstream os;
    os << "500 polynomials, " << failures << " failures, " << uncertain << " uncertain";
    detail = os.str();
    return failures == 0 && uncertain == 0;
}

// ---- criterion 3: entire-function Hurwitz check -------------------------

bool crit_entire_hurwitz(std::string& detail) {
    const std::vector<std::size_t> schedule{20, 40, 80, 160};
    const std::size_t n_max = schedule.back();
    RootSequenceFamily fam = sin_family(n_max / 2);

    std::vector<cplx> all_roots;
    for (std::size_t n = 1; n <= n_max; ++n) all_roots.push_back(fam.nth_root(n));
    Hull2D hull = hull2d(all_roots);

    double max_im = 0.0, max_re = 0.0;
    std::vector<double> distances;
    bool converged = true;
    for (std::size_t n : schedule) {
        std::vector<cplx> roots(all_roots.begin(), all_roots.begin() + n);
        RootFindResult crit = critical_points_from_roots(roots);
        converged = converged && crit.converged;
        double maxd = 0.0;
        for (cplx c : crit.roots) {
            max_im = std::max(max_im, std::abs(c.imag()));
            max_re = std::max(max_re, std::abs(c.real()));
            maxd = std::max(maxd, hull_distance(hull, c));
        }
        distances.push_back(maxd);
    }
    bool monotone = true;
    for (std::size_t i = 1; i < distances.size(); ++i) {
        if (distances[i] > distances[i - 1] + 1e-12) monotone = false;
    }
    std::ostringstream os;
    os << "max |Im|=" << max_im << " max |Re|=" << max_re << " distances:";
    for (double d : distances) os << " " << d;
    detail = os.str();
    return converged && max_im <= 1e-6 && max_re <= double(n_max) && monotone;
}

// ---- criterion 4: rearrangement, genus 1 --------------------------------

bool crit_rearrange_genus1(std::string& detail) {
    RootSequenceFamily fam = blocked_pm_family(2000, 50);
    RearrangeOptions opts;
    opts.window = 200;
    opts.target = 0.1;
    RearrangementPlan plan = rearrange_to_zero(fam, 1, 2000, opts);
    double final_v = plan.checkpoints.empty() ? 1e9 : plan.checkpoints.back().second;
    std::ostringstream os;
    os << "status=" << to_string(plan.status) << " final max|V_N(1)|=" << final_v;
    detail = os.str();
    return plan.status == PlanStatus::Converging && final_v <= 0.1;
}

// ---- criterion 5: rearrangement, genus 2 --------------------------------

bool crit_rearrange_genus2(std::string& detail) {
    RootSequenceFamily fam = RootSequenceFamily::parametric(
        0.5, 1.0, {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)}, 8000);
    RearrangeOptions opts;
    opts.target = 0.05;
    RearrangementPlan plan = rearrange_to_zero(fam, 2, 5000, opts);
    double sup = 0.0;
    for (const auto& [n, v] : plan.checkpoints) {
        if (n >= 500) sup = std::max(sup, v);
    }
    std::ostringstream os;
    os << "status=" << to_string(plan.status) << " sup_{N>=500} max_r |V_N(r)|=" << sup;
    detail = os.str();
    return plan.status == PlanStatus::Converging && sup <= 0.05;
}

// ---- criterion 6: separately convex hull grid ---------------------------

bool crit_sephull(std::string& detail) {
    std::ostringstream os;
    bool ok = true;

    // Two points in C^2: the closure must not grow past the two input cells.
    {
        std::vector<MultiPoint> pts{{0, 0, 0, 0}, {1, 0, 1, 0}};
        SepHullGrid g = sep_hull_grid(pts, {-0.25, -0.25, -0.25, -0.25},
                                      {1.25, 1.25, 1.25, 1.25}, 32);
        ok = ok && g.converged() && g.occupied_count() == 2;
        os << "two-point cells=" << g.occupied_count() << " ";
    }

    // Four real corners in C^2: the closure covers the rasterized real
    // unit square (no real sample point lands in an empty cell).
    {
        std::vector<MultiPoint> pts{{0, 0, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}, {1, 0, 1, 0}};
        SepHullGrid g = sep_hull_grid(pts, {-0.25, -0.25, -0.25, -0.25},
                                      {1.25, 1.25, 1.25, 1.25}, 32);
        bool filled = g.converged();
        for (int i = 0; i <= 16 && filled; ++i) {
            for (int j = 0; j <= 16; ++j) {
                if (g.contains({i / 16.0, 0.0, j / 16.0, 0.0}) == Containment::Outside) {
                    filled = false;
                    break;
                }
            }
        }
        // off the real slice nothing is occupied
        filled = filled && g.contains({0.5, 1.1, 0.5, 1.1}) == Containment::Outside;
        ok = ok && filled;
        os << "square filled=" << (filled ? "yes" : "no") << " ";
    }

    // 50 seeded random point sets in C^2: every occupied cell center lies
    // within one cell diagonal of the ordinary convex hull in R^4.
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    std::uniform_int_distribution<int> npts(2, 12);
    double worst_excess = 0.0;
    int bad_sets = 0;
    for (int set = 0; set < 50; ++set) {
        int k = npts(rng);
        std::vector<MultiPoint> pts;
        for (int i = 0; i < k; ++i)
            pts.push_back({coord(rng), coord(rng), coord(rng), coord(rng)});
        std::vector<double> lo(4, 1e9), hi(4, -1e9);
        for (const auto& p : pts)
            for (int a = 0; a < 4; ++a) {
                lo[a] = std::min(lo[a], p[a]);
                hi[a] = std::max(hi[a], p[a]);
            }
        for (int a = 0; a < 4; ++a) {
            double pad = 0.1 * (hi[a] - lo[a]) + 1e-3;
            lo[a] -= pad;
            hi[a] += pad;
        }
        SepHullGrid g = sep_hull_grid(pts, lo, hi, 32);
        double diag = g.cell_diagonal();
        bool set_ok = true;
        for (const auto& c : g.occupied_centers()) {
            double d = distance_to_convex_hull(pts, c, 4000, diag);
            if (d > diag) {
                set_ok = false;
                worst_excess = std::max(worst_excess, d - diag);
            }
        }
        if (!set_ok) ++bad_sets;
    }
    os << "random sets: " << bad_sets << "/50 violate the one-diagonal bound";
    if (bad_sets > 0) os << " (worst excess " << worst_excess << ")";
    ok = ok && bad_sets == 0;
    detail = os.str();
    return ok;
}

// ---- criterion 7: stability under differentiation -----------------------

bool crit_corollary(std::string& detail) {
    std::ostringstream os;
    bool ok = true;

    // Products of (0,0)-stable affine forms a z1 + b z2 + c in C^2.
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::uniform_int_distribution<int> nforms(3, 5);
    StabilityCone cone({0.0, 0.0});
    int witnesses = 0, not_pass = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::pair<std::vector<cplx>, cplx>> forms;
        int k = nforms(rng);
        for (int i = 0; i < k; ++i) {
            double a = unif(rng) * 2.0, b = unif(rng) * 2.0;
            if (a < 1e-3 && b < 1e-3) a = 1.0;
            cplx c(2.0 * unif(rng) - 1.0, unif(rng)); // Im c >= 0
            forms.push_back({{cplx(a), cplx(b)}, c});
        }
        MultivariateSpec mv;
        mv.kind = MultivariateSpec::Kind::Polynomial;
        mv.vars = 2;
        mv.poly = MultiPoly::product_of_affine(2, forms);
        VerifyOptions opts;
        opts.seed = 1000 + std::uint64_t(trial);
        for (std::size_t var = 0; var < 2; ++var) {
            VerificationReport rep = verify_corollary_stability(mv, cone, var, 60, opts);
            if (rep.overall() == Verdict::Fail) ++witnesses;
            if (rep.overall() != Verdict::Pass) ++not_pass;
        }
    }
    os << "multivariate: " << witnesses << " instability witnesses, " << not_pass
       << " non-pass of 200 checks; ";
    ok = ok && witnesses == 0 && not_pass == 0;

    // Univariate variant: roots in the closed lower half-plane stay there
    // under differentiation.
    std::uniform_int_distribution<int> deg(3, 10);
    double worst_im = -1e9;
    for (int trial = 0; trial < 200; ++trial) {
        int d = deg(rng);
        std::vector<cplx> roots;
        for (int i = 0; i < d; ++i)
            roots.emplace_back(4.0 * unif(rng) - 2.0, -2.0 * unif(rng));
        ComplexPoly df = ComplexPoly::from_roots(roots, cplx(1.0)).derivative();
        RootFindResult rr = find_roots(df);
        if (!rr.converged) {
            ok = false;
            continue;
        }
        for (cplx z : rr.roots) worst_im = std::max(worst_im, z.imag());
    }
    os << "univariate worst derivative-root Im=" << worst_im;
    ok = ok && worst_im <= 1e-8;
    detail = os.str();
    return ok;
}

// ---- criterion 8: cross-module consistency ------------------------------

bool crit_consistency(std::string& detail) {
    std::ostringstream os;
    bool ok = true;

    // M=1 sections agree with the direct univariate path.
    std::mt19937_64 rng(909);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::uniform_int_distribution<int> deg(2, 9);
    int mismatches = 0;
    for (int trial = 0; trial < 20; ++trial) {
        int d = deg(rng);
        std::vector<cplx> roots;
        for (int i = 0; i < d; ++i) roots.emplace_back(unif(rng), unif(rng));
        ComplexPoly p = ComplexPoly::from_roots(roots, cplx(1.0));
        MultivariateSpec mv;
        mv.kind = MultivariateSpec::Kind::Polynomial;
        mv.vars = 1;
        mv.poly = MultiPoly(1);
        for (std::size_t k = 0; k < p.coeffs().size(); ++k)
            mv.poly.add_term(p.coeffs()[k], {unsigned(k)});
        VerificationReport direct = verify_gl_polynomial(p, 1e-7);
        VerificationReport sect = verify_gl_sections(mv, 0, {{cplx(0.0)}}, 1e-7);
        if (direct.overall() != sect.overall()) ++mismatches;
    }
    os << "M=1 verdict mismatches: " << mismatches << "/20; ";
    ok = ok && mismatches == 0;

    // Incremental vs recomputed V_N on 10^4-term random sequences.
    double worst = 0.0;
    for (int seq = 0; seq < 3; ++seq) {
        const int p = 2;
        PowerSumLedger led(p);
        std::vector<cplx> roots;
        for (int n = 0; n < 10000; ++n) {
            cplx g(unif(rng), unif(rng));
            if (std::abs(g) < 0.05) g += cplx(1.0, 1.0);
            roots.push_back(g);
            led.append(g);
        }
        for (int r = 1; r <= p; ++r) {
            cplx direct(0.0);
            for (cplx g : roots) direct += std::pow(g, -double(r));
            worst = std::max(worst, std::abs(direct - led.values()[r - 1]));
        }
    }
    os << "incremental-vs-recomputed max deviation=" << worst;
    ok = ok && worst <= 1e-10;
    detail = os.str();
    return ok;
}

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "sin-product convergence", 1.0, crit_sin_product},
        {2, "polynomial Gauss-Lucas suite", 10.0, crit_poly_suite},
        {3, "entire-function Hurwitz check", 30.0, crit_entire_hurwitz},
        {4, "rearrangement engine, genus 1", 5.0, crit_rearrange_genus1},
        {5, "rearrangement engine, genus 2", 10.0, crit_rearrange_genus2},
        {6, "separately convex hull inclusion", 60.0, crit_sephull},
        {7, "stability under differentiation", 20.0, crit_corollary},
        {8, "cross-module consistency", 60.0, crit_consistency},
    };

    int failed = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                          .count();
        if (secs > c.time_limit_s) {
            ok = false;
            detail += " [over time budget]";
        }
        if (!ok) ++failed;
        std::printf("[%s] criterion %d: %s (%.2f s, limit %.0f s) -- %s\n",
                    ok ? "PASS" : "FAIL", c.id, c.label.c_str(), secs, c.time_limit_s,
                    detail.c_str());
    }
    if (failed == 0) std::printf("all %zu acceptance criteria passed\n", criteria.size());
    return failed;
}
