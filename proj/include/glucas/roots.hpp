#ifndef GLUCAS_ROOTS_HPP
#define GLUCAS_ROOTS_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "glucas/poly.hpp"

namespace glucas {

enum class FamilyKind { ExplicitList, Parametric };

// How a parametric index n maps to the modulus index m in |gamma_n| = c * m^alpha.
//   Shell:  m = ceil(n / k) with k the phase-cycle length, so each modulus
//           shell carries one full phase cycle (expresses the paired +-n family).
//   Direct: m = n (expresses |gamma_n| = c * n^alpha literally).
enum class ModulusIndexing { Shell, Direct };

// Non-zero root sequence gamma_1, gamma_2, ... of a canonical product.
struct RootSequenceFamily {
    FamilyKind kind = FamilyKind::Parametric;

    // explicit-list
    std::vector<cplx> terms;

    // parametric: |gamma_n| = c * m^alpha, phase from a repeating unit cycle
    double alpha = 1.0;
    double c = 1.0;
    std::vector<cplx> phases{cplx(1.0)};
    ModulusIndexing indexing = ModulusIndexing::Shell;
    std::size_t count_limit = 100000;

    static RootSequenceFamily explicit_list(std::vector<cplx> roots);
    static RootSequenceFamily parametric(double alpha, double c,
                                         std::vector<cplx> phases,
                                         std::size_t count_limit,
                                         ModulusIndexing indexing = ModulusIndexing::Shell);

    std::size_t size() const {
        return kind == FamilyKind::ExplicitList ? terms.size() : count_limit;
    }

    // 1-based index, deterministic.
    cplx nth_root(std::size_t n) const;

    void validate() const;
};

enum class GenusMethod { DeclaredExponent, NumericHeuristic };

struct GenusEstimate {
    int p = 0;
    GenusMethod method = GenusMethod::DeclaredExponent;
    bool certified = false; // declared-exponent results only
    // partial sums of sum |gamma_n|^{-(1+p)} at doubling N, for the accepted p
    std::vector<std::pair<std::size_t, double>> tail_evidence;
};

GenusEstimate estimate_genus(const RootSequenceFamily& family, int p_max);

enum class RearrangeVerdict { LikelyRearrangeable, LikelyNot, Inconclusive };

struct ProjectionProbe {
    int r = 0;
    std::string projection;    // "Re", "-Re", "Im", "-Im"
    double nonneg_part_sum = 0.0;
    bool nonneg_part_diverging = false;
    bool terms_vanish = false;
};

struct RearrangeDiagnostic {
    RearrangeVerdict verdict = RearrangeVerdict::Inconclusive;
    std::vector<ProjectionProbe> probes;
    std::string note;
};

// Heuristic probe of whether the prefix power sums V_N(r) can be driven to 0
// by reordering. Reports every projection; never a proof.
RearrangeDiagnostic rearrangeability_diagnostic(const RootSequenceFamily& family,
                                                int p, std::size_t n_probe);

const char* to_string(RearrangeVerdict v);

} // namespace glucas

#endif
