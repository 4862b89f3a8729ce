#ifndef GLUCAS_VERIFIER_HPP
#define GLUCAS_VERIFIER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glucas/hull.hpp"
#include "glucas/multipoly.hpp"
#include "glucas/product.hpp"
#include "glucas/sephull.hpp"

namespace glucas {

enum class Verdict { Pass, Fail, Uncertain };
const char* to_string(Verdict v);

struct CheckRecord {
    std::string name;
    Verdict verdict = Verdict::Uncertain;
    double max_distance = 0.0;
    std::optional<std::vector<cplx>> witness; // offending point, when verdict = fail
    std::string detail;
};

struct VerificationReport {
    std::string scenario_id;
    std::vector<CheckRecord> checks;

    // emitted point sets for CSV artifacts
    std::vector<cplx> roots;
    std::vector<cplx> critical_points;
    std::vector<cplx> hull_vertices;

    Verdict overall() const;
    void add(CheckRecord rec) { checks.push_back(std::move(rec)); }
};

// open cone A(theta) = { z : Im(e^{i theta_m} z_m) > 0 for all m }
struct StabilityCone {
    std::vector<double> theta; // normalized to (-pi, pi]

    explicit StabilityCone(std::vector<double> angles);
    bool in_open_cone(const std::vector<cplx>& z, double boundary_tol = 1e-9) const;
};

struct MultivariateSpec {
    enum class Kind { Polynomial, CoordinateProduct };
    Kind kind = Kind::Polynomial;
    std::size_t vars = 1;
    MultiPoly poly{1};
    // CoordinateProduct: f(z) = prod_m F_m(z_m), one canonical product per variable
    std::vector<CanonicalProductSpec> factors;
};

struct VerifyOptions {
    double eps_poly = 1e-7;       // theorem-exact polynomial checks
    double eps_entire = 1e-3;     // truncation-schedule entire checks
    double root_tol = 1e-12;
    std::uint64_t seed = 0;
    double bbox_half_width = 1e6; // closure surrogate window for entire hulls
    double boundary_tol = 1e-9;   // stability boundary convention
};

// Classic inclusion: every critical point of p lies in the hull of its roots.
VerificationReport verify_gl_polynomial(const ComplexPoly& p, double eps,
                                        const VerifyOptions& opts = {});

// Truncation-schedule check of the entire-function relation: critical points of
// f_N against the hull of all roots consumed at the largest truncation.
VerificationReport verify_gl_entire(const CanonicalProductSpec& spec,
                                    const std::vector<std::size_t>& schedule, double eps,
                                    const VerifyOptions& opts = {});

// Sectioning check: freeze all variables but `var` at each sample and verify
// the univariate relation on the section.
VerificationReport verify_gl_sections(const MultivariateSpec& mv, std::size_t var,
                                      const std::vector<std::vector<cplx>>& samples,
                                      double eps, const VerifyOptions& opts = {});

struct StabilityResult {
    bool stable = true; // "stable-evidence" when no witness was found
    bool low_confidence = false;
    std::optional<std::vector<cplx>> witness; // a root inside the open cone
};

StabilityResult is_theta_stable_univariate(const std::vector<cplx>& roots, double theta,
                                           double boundary_tol = 1e-9);

// Randomized falsification over sampled sections; cannot certify stability.
StabilityResult is_theta_stable(const MultivariateSpec& mv, const StabilityCone& cone,
                                int budget, const VerifyOptions& opts = {});

// Corollary check: given theta-stable f, look for instability witnesses of f_{,m}.
VerificationReport verify_corollary_stability(const MultivariateSpec& mv,
                                              const StabilityCone& cone, std::size_t var,
                                              int budget, const VerifyOptions& opts = {});

} // namespace glucas

#endif
