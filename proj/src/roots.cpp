#include "glucas/roots.hpp"

#include <cmath>
#include <stdexcept>

namespace glucas {

RootSequenceFamily RootSequenceFamily::explicit_list(std::vector<cplx> roots) {
    RootSequenceFamily f;
    f.kind = FamilyKind::ExplicitList;
    f.terms = std::move(roots);
    f.count_limit = f.terms.size();
    f.validate();
    return f;
}

RootSequenceFamily RootSequenceFamily::parametric(double alpha, double c,
                                                  std::vector<cplx> phases,
                                                  std::size_t count_limit,
                                                  ModulusIndexing indexing) {
    RootSequenceFamily f;
    f.kind = FamilyKind::Parametric;
    f.alpha = alpha;
    f.c = c;
    f.phases = std::move(phases);
    f.count_limit = count_limit;
    f.indexing = indexing;
    f.validate();
    return f;
}

void RootSequenceFamily::validate() const {
    if (kind == FamilyKind::ExplicitList) {
        for (const cplx& t : terms) {
            if (t == cplx(0.0)) {
                throw std::invalid_argument("root family: explicit roots must be non-zero");
            }
        }
        return;
    }
    if (c <= 0.0) throw std::invalid_argument("root family: c > 0 required");
    if (alpha < 0.0) {
        throw std::invalid_argument("root family: alpha >= 0 required (|gamma_n| must not decrease)");
    }
    if (phases.empty()) throw std::invalid_argument("root family: phase cycle must be non-empty");
    for (const cplx& ph : phases) {
        if (std::abs(std::abs(ph) - 1.0) > 1e-12) {
            throw std::invalid_argument("root family: phase entries must have modulus 1");
        }
    }
}

cplx RootSequenceFamily::nth_root(std::size_t n) const {
    if (n == 0) throw std::out_of_range("nth_root: index is 1-based");
    if (kind == FamilyKind::ExplicitList) {
        if (n > terms.size()) throw std::out_of_range("nth_root: index past explicit list");
        return terms[n - 1];
    }
    if (n > count_limit) throw std::out_of_range("nth_root: index past count_limit");
    const std::size_t k = phases.size();
    const std::size_t m = (indexing == ModulusIndexing::Shell) ? (n + k - 1) / k : n;
    const double mod = c * std::pow(static_cast<double>(m), alpha);
    return mod * phases[(n - 1) % k];
}

namespace {

// For parametric families the effective decay exponent of |gamma_n| in n.
// Shell indexing divides the index by the cycle length, which does not change
// the exponent, only the constant, so the p-series threshold is the same.
int declared_exponent_genus(double alpha, int p_max) {
    if (alpha <= 0.0) return -1; // moduli bounded, no genus
    for (int p = 0; p <= p_max; ++p) {
        if ((1.0 + p) * alpha > 1.0) return p;
    }
    return -1;
}

} // namespace

GenusEstimate estimate_genus(const RootSequenceFamily& family, int p_max) {
    if (p_max < 0) throw std::invalid_argument("estimate_genus: p_max >= 0 required");

    GenusEstimate est;
    if (family.kind == FamilyKind::ExplicitList) {
        est.p = 0;
        est.method = GenusMethod::DeclaredExponent;
        est.certified = true;
        double s = 0.0;
        for (const cplx& t : family.terms) s += 1.0 / std::abs(t);
        est.tail_evidence.push_back({family.terms.size(), s});
        return est;
    }

    int p = declared_exponent_genus(family.alpha, p_max);
    if (p >= 0) {
        est.p = p;
        est.method = GenusMethod::DeclaredExponent;
        est.certified = true;
        double s = 0.0;
        std::size_t cap = std::min<std::size_t>(family.count_limit, 4096);
        for (std::size_t n = 1; n <= cap; ++n) {
            s += std::pow(std::abs(family.nth_root(n)), -(1.0 + p));
            if ((n & (n - 1)) == 0) est.tail_evidence.push_back({n, s});
        }
        return est;
    }

    // Numeric fallback: doubling-Cauchy heuristic on partial sums.
    for (p = 0; p <= p_max; ++p) {
        double s = 0.0;
        std::size_t n = 0;
        double prev_s = 0.0;
        int quiet_doublings = 0;
        std::vector<std::pair<std::size_t, double>> evidence;
        std::size_t block = 64;
        while (n + block <= family.count_limit) {
            for (std::size_t i = 0; i < block; ++i) {
                ++n;
                s += std::pow(std::abs(family.nth_root(n)), -(1.0 + p));
            }
            evidence.push_back({n, s});
            if (s - prev_s < 1e-6 * (1.0 + s)) {
                ++quiet_doublings;
            } else {
                quiet_doublings = 0;
            }
            if (quiet_doublings >= 2) {
                est.p = p;
                est.method = GenusMethod::NumericHeuristic;
                est.certified = false;
                est.tail_evidence = std::move(evidence);
                return est;
            }
            prev_s = s;
            block = n; // doubling schedule
        }
    }
    throw std::runtime_error("estimate_genus: no p <= p_max passes the doubling heuristic");
}

const char* to_string(RearrangeVerdict v) {
    switch (v) {
        case RearrangeVerdict::LikelyRearrangeable: return "likely-rearrangeable";
        case RearrangeVerdict::LikelyNot: return "likely-not";
        default: return "inconclusive";
    }
}

RearrangeDiagnostic rearrangeability_diagnostic(const RootSequenceFamily& family,
                                                int p, std::size_t n_probe) {
    RearrangeDiagnostic diag;
    if (p <= 0) {
        diag.verdict = RearrangeVerdict::LikelyRearrangeable;
        diag.note = "genus 0: prefix power-sum condition is vacuous";
        return diag;
    }
    n_probe = std::min<std::size_t>(n_probe, family.size());
    if (n_probe < 16) {
        diag.verdict = RearrangeVerdict::Inconclusive;
        diag.note = "too few terms to probe";
        return diag;
    }

    bool any_blocked = false;
    bool all_ok = true;
    for (int r = 1; r <= p; ++r) {
        // Signed partial sums of the four real projections of gamma_n^{-r},
        // measured at n_probe/2 and n_probe to spot divergence.
        double pos[4] = {0, 0, 0, 0};
        double pos_half[4] = {0, 0, 0, 0};
        double last_abs = 0.0;
        for (std::size_t n = 1; n <= n_probe; ++n) {
            cplx g = family.nth_root(n);
            cplx t = std::pow(g, -static_cast<double>(r));
            double proj[4] = {t.real(), -t.real(), t.imag(), -t.imag()};
            for (int j = 0; j < 4; ++j) {
                if (proj[j] >= 0.0) pos[j] += proj[j];
            }
            if (n == n_probe / 2) {
                for (int j = 0; j < 4; ++j) pos_half[j] = pos[j];
            }
            if (n + 16 > n_probe) last_abs = std::max(last_abs, std::abs(t));
        }
        const bool terms_vanish = last_abs < 0.05;
        static const char* names[4] = {"Re", "-Re", "Im", "-Im"};
        bool diverging[4];
        for (int j = 0; j < 4; ++j) {
            diverging[j] = (pos[j] - pos_half[j]) > 1e-3 * (1.0 + pos[j]);
            diag.probes.push_back({r, names[j], pos[j], diverging[j], terms_vanish});
        }
        // Per projection axis (Re with -Re, Im with -Im): rearrangeable to 0 if
        // both one-sided sums diverge with vanishing terms, or if the axis is
        // absolutely summable with total ~0. One side diverging alone is blocked.
        for (int axis = 0; axis < 2; ++axis) {
            double plus = pos[2 * axis], minus = pos[2 * axis + 1];
            bool dplus = diverging[2 * axis], dminus = diverging[2 * axis + 1];
            if (dplus && dminus && terms_vanish) continue;
            if (!dplus && !dminus && std::abs(plus - minus) < 1e-6 * (1.0 + plus + minus)) continue;
            if (dplus != dminus) {
                any_blocked = true;
            }
            all_ok = false;
        }
    }
    if (any_blocked) {
        diag.verdict = RearrangeVerdict::LikelyNot;
        diag.note = "a one-sided projection sum diverges; that axis cannot reach 0";
    } else if (all_ok) {
        diag.verdict = RearrangeVerdict::LikelyRearrangeable;
    } else {
        diag.verdict = RearrangeVerdict::Inconclusive;
    }
    return diag;
}

} // namespace glucas
