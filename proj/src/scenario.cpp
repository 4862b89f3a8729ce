#include "glucas/scenario.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include "glucas/rearrange.hpp"

namespace glucas {

namespace fs = std::filesystem;

namespace {

class ArtifactWriter {
public:
    ArtifactWriter(fs::path dir, std::vector<std::string>& names)
        : dir_(std::move(dir)), names_(names) {
        fs::create_directories(dir_);
    }

    std::ofstream open(const std::string& name) {
        names_.push_back(name);
        std::ofstream os(dir_ / name);
        if (!os) throw std::runtime_error("cannot write " + (dir_ / name).string());
        os << std::setprecision(17);
        return os;
    }

    void write_points(const std::string& name, const std::string& check,
                      const std::vector<cplx>& pts) {
        auto os = open(name);
        os << "# " << check << " dim=1\n";
        for (cplx z : pts) os << z.real() << "," << z.imag() << "\n";
    }

    void manifest(bool complete) {
        std::ofstream os(dir_ / "MANIFEST");
        for (const auto& n : names_) os << n << "\n";
        os << (complete ? "complete" : "incomplete") << "\n";
    }

private:
    fs::path dir_;
    std::vector<std::string>& names_;
};

ComplexPoly build_poly(const ScenarioConfig& cfg) {
    if (!cfg.roots.empty()) return ComplexPoly::from_roots(cfg.roots, cfg.leading);
    if (!cfg.coeffs.empty()) return ComplexPoly(cfg.coeffs);
    throw std::invalid_argument("scenario: no polynomial declared");
}

int resolve_genus(const ScenarioConfig& cfg, const RootSequenceFamily& fam) {
    if (cfg.family && cfg.family->genus) return *cfg.family->genus;
    return estimate_genus(fam, 8).p;
}

CanonicalProductSpec build_product_spec(const ScenarioConfig& cfg,
                                        const RootSequenceFamily& fam, int p,
                                        std::size_t n_needed) {
    CanonicalProductSpec spec;
    spec.q = cfg.family ? cfg.family->q : 0;
    spec.p = p;
    spec.family = fam;
    if (p >= 1) {
        RearrangeDiagnostic diag = rearrangeability_diagnostic(fam, p, std::min<std::size_t>(fam.size(), 2000));
        if (diag.verdict != RearrangeVerdict::LikelyNot) {
            RearrangeOptions ro;
            ro.window = cfg.window;
            ro.target = cfg.target;
            spec.plan = rearrange_to_zero(fam, p, std::max(cfg.n_target, n_needed), ro);
        }
    }
    return spec;
}

MultivariateSpec build_multivariate(const ScenarioConfig& cfg) {
    MultivariateSpec mv;
    if (!cfg.terms.empty() || !cfg.forms.empty()) {
        mv.kind = MultivariateSpec::Kind::Polynomial;
        mv.vars = cfg.vars;
        MultiPoly poly(cfg.vars);
        for (const auto& t : cfg.terms) poly.add_term(t.coeff, t.exps);
        if (!cfg.forms.empty()) {
            std::vector<std::pair<std::vector<cplx>, cplx>> forms;
            for (const auto& f : cfg.forms) forms.push_back({f.coeffs, f.constant});
            MultiPoly prod = MultiPoly::product_of_affine(cfg.vars, forms);
            poly = cfg.terms.empty() ? prod : poly.multiply(prod);
        }
        mv.poly = poly;
        return mv;
    }
    if (cfg.family) {
        mv.kind = MultivariateSpec::Kind::CoordinateProduct;
        mv.vars = 1;
        RootSequenceFamily fam = cfg.family->build();
        mv.factors.push_back(CanonicalProductSpec{cfg.family->q, resolve_genus(cfg, fam), fam, {}});
        return mv;
    }
    throw std::invalid_argument("scenario: no multivariate function declared");
}

} // namespace

std::string render_report(const VerificationReport& rep, const ScenarioConfig& cfg) {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "scenario " << cfg.id << "\n";
    os << "mode " << to_string(cfg.mode) << "\n";
    os << "seed " << cfg.seed << "\n";
    for (const auto& c : rep.checks) {
        os << "check " << c.name << " verdict " << to_string(c.verdict) << " max_distance "
           << c.max_distance << "\n";
        if (c.witness) {
            os << "  witness";
            for (cplx z : *c.witness) os << " " << z.real() << " " << z.imag();
            os << "\n";
        }
        if (!c.detail.empty()) os << "  detail " << c.detail << "\n";
    }
    os << "overall " << to_string(rep.overall()) << "\n";
    return os.str();
}

RunResult run_scenario(const ScenarioConfig& cfg, const std::string& out_dir) {
    RunResult run;
    ArtifactWriter writer{fs::path(out_dir), run.artifacts};

    VerifyOptions opts;
    opts.seed = cfg.seed;
    opts.bbox_half_width = cfg.bbox_half_width;
    const double eps = cfg.effective_eps();

    switch (cfg.mode) {
        case ScenarioMode::GlPoly: {
            ComplexPoly p = build_poly(cfg);
            run.report = verify_gl_polynomial(p, eps, opts);
            break;
        }
        case ScenarioMode::GlEntire: {
            RootSequenceFamily fam = cfg.family->build();
            int p = resolve_genus(cfg, fam);
            std::vector<std::size_t> schedule = cfg.schedule;
            if (schedule.empty()) schedule = {25, 50, 100, 200};
            CanonicalProductSpec spec = build_product_spec(cfg, fam, p, schedule.back());
            if (spec.plan && !spec.plan->identity) {
                auto os = writer.open("plan.txt");
                write_plan(os, *spec.plan);
            }
            run.report = verify_gl_entire(spec, schedule, eps, opts);
            break;
        }
        case ScenarioMode::GlSections: {
            MultivariateSpec mv = build_multivariate(cfg);
            std::mt19937_64 rng(cfg.seed);
            std::uniform_real_distribution<double> dist(-cfg.sample_box, cfg.sample_box);
            std::vector<std::vector<cplx>> samples;
            for (std::size_t s = 0; s < cfg.samples; ++s) {
                std::vector<cplx> z(mv.vars);
                for (auto& zz : z) zz = cplx(dist(rng), dist(rng));
                samples.push_back(std::move(z));
            }
            run.report = verify_gl_sections(mv, cfg.var, samples, eps, opts);
            break;
        }
        case ScenarioMode::Rearrange: {
            RootSequenceFamily fam = cfg.family->build();
            int p = resolve_genus(cfg, fam);
            RearrangeDiagnostic diag =
                rearrangeability_diagnostic(fam, p, std::min<std::size_t>(fam.size(), 2000));
            RearrangeOptions ro;
            ro.window = cfg.window;
            ro.target = cfg.target;
            RearrangementPlan plan = rearrange_to_zero(fam, p, cfg.n_target, ro);
            {
                auto os = writer.open("plan.txt");
                write_plan(os, plan);
            }
            {
                auto os = writer.open("checkpoints.csv");
                os << "# rearrange-checkpoints dim=1\n";
                for (const auto& [n, m] : plan.checkpoints) os << n << "," << m << "\n";
            }
            CheckRecord rec;
            rec.name = "rearrange";
            rec.max_distance = plan.checkpoints.empty() ? 0.0 : plan.checkpoints.back().second;
            std::ostringstream detail;
            detail << "diagnostic " << to_string(diag.verdict) << "; status "
                   << to_string(plan.status);
            rec.detail = detail.str();
            if (plan.status == PlanStatus::Converging) {
                rec.verdict =
                    diag.verdict == RearrangeVerdict::LikelyRearrangeable || p == 0
                        ? Verdict::Pass
                        : Verdict::Uncertain;
            } else {
                rec.verdict = Verdict::Fail;
            }
            run.report.add(std::move(rec));
            break;
        }
        case ScenarioMode::Stability: {
            if (cfg.theta.empty()) throw std::invalid_argument("stability: theta required");
            StabilityResult res;
            if (!cfg.roots.empty() || !cfg.coeffs.empty()) {
                std::vector<cplx> roots = cfg.roots;
                if (roots.empty()) {
                    roots = find_roots(build_poly(cfg), opts.root_tol, cfg.seed).roots;
                }
                run.report.roots = roots;
                res = is_theta_stable_univariate(roots, cfg.theta.front(), opts.boundary_tol);
            } else {
                MultivariateSpec mv = build_multivariate(cfg);
                res = is_theta_stable(mv, StabilityCone(cfg.theta), cfg.budget, opts);
            }
            CheckRecord rec;
            rec.name = "theta-stability";
            if (res.stable) {
                rec.verdict = Verdict::Pass;
                rec.detail = res.low_confidence ? "stable-evidence (low confidence)"
                                                : "stable-evidence";
            } else {
                rec.verdict = Verdict::Fail;
                rec.witness = res.witness;
                rec.detail = "instability witness found";
            }
            run.report.add(std::move(rec));
            break;
        }
        case ScenarioMode::Corollary: {
            MultivariateSpec mv = build_multivariate(cfg);
            run.report =
                verify_corollary_stability(mv, StabilityCone(cfg.theta), cfg.var, cfg.budget, opts);
            break;
        }
        case ScenarioMode::SepHull: {
            std::vector<double> lo, hi;
            for (std::size_t i = 0; i + 1 < cfg.bbox.size(); i += 2) {
                lo.push_back(cfg.bbox[i]);
                hi.push_back(cfg.bbox[i + 1]);
            }
            SepHullGrid grid = sep_hull_grid(cfg.points, lo, hi, cfg.resolution, cfg.pass_cap);
            {
                auto os = writer.open("mask.txt");
                grid.write(os);
            }
            CheckRecord rec;
            rec.name = "sep-hull";
            rec.verdict = grid.converged() ? Verdict::Pass : Verdict::Uncertain;
            std::ostringstream detail;
            detail << "occupied " << grid.occupied_count() << " cells in " << grid.passes_used()
                   << " passes" << (grid.converged() ? "" : " (pass cap exceeded)");
            rec.detail = detail.str();
            run.report.add(std::move(rec));
            break;
        }
    }

    run.report.scenario_id = cfg.id;
    if (!run.report.roots.empty()) {
        writer.write_points("roots.csv", cfg.id + "-roots", run.report.roots);
    }
    if (!run.report.critical_points.empty()) {
        writer.write_points("critical_points.csv", cfg.id + "-critical-points",
                            run.report.critical_points);
    }
    if (!run.report.hull_vertices.empty()) {
        writer.write_points("hull.csv", cfg.id + "-hull-vertices", run.report.hull_vertices);
    }
    {
        auto os = writer.open("report.txt");
        os << render_report(run.report, cfg);
    }
    writer.manifest(true);

    switch (run.report.overall()) {
        case Verdict::Pass: run.exit_code = 0; break;
        case Verdict::Fail: run.exit_code = 1; break;
        default: run.exit_code = 2; break;
    }
    return run;
}

} // namespace glucas
