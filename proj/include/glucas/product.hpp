#ifndef GLUCAS_PRODUCT_HPP
#define GLUCAS_PRODUCT_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "glucas/rearrange.hpp"
#include "glucas/roots.hpp"

namespace glucas {

// Value of a truncated product. Past the magnitude cap the value is carried as
// (log|.|, arg); zeros stay representable as log_abs = -inf.
struct ProductValue {
    bool scaled = false;
    cplx value{1.0, 0.0};
    double log_abs = 0.0;
    double arg = 0.0;

    static constexpr double kMagnitudeCap = 1e150;

    void mul(cplx factor);
    void mul_exp(cplx exponent); // multiply by exp(exponent)
    cplx to_complex() const;     // may overflow to inf when scaled
    double abs_log() const;      // log-magnitude in either representation
};

// f(z) = z^q g(z) with the non-zero roots taken from `family`, optionally
// re-ordered by `plan`.
struct CanonicalProductSpec {
    std::size_t q = 0;
    int p = 0;
    RootSequenceFamily family;
    std::optional<RearrangementPlan> plan; // identity ordering when absent

    cplx root_at(std::size_t n) const; // delta_n, 1-based
    std::size_t max_truncation() const;
};

// Running power sums V_N(r), r = 1..p, updated one root at a time.
class PowerSumLedger {
public:
    explicit PowerSumLedger(int p) : v_(static_cast<std::size_t>(p)) {}

    std::size_t truncation() const { return n_; }
    int genus() const { return static_cast<int>(v_.size()); }
    const std::vector<cplx>& values() const { return v_; }
    const std::vector<std::pair<std::size_t, double>>& checkpoints() const {
        return checkpoints_;
    }

    PowerSumLedger appended(cplx root) const;
    void append(cplx root);
    void checkpoint();
    double max_abs() const;

private:
    std::size_t n_ = 0;
    std::vector<cplx> v_;
    std::vector<std::pair<std::size_t, double>> checkpoints_;
};

PowerSumLedger ledger_at(const CanonicalProductSpec& spec, std::size_t n);

// z^q prod_{n<=N} (1 - z/delta_n), factors taken strictly in the declared order.
ProductValue partial_product(const CanonicalProductSpec& spec, std::size_t n, cplx z);

// h_N(z) = sum_{r=1..p} V_N(r) z^r / r
cplx correction_exponent(const CanonicalProductSpec& spec, const PowerSumLedger& ledger,
                         cplx z);

// g_N(z) = prod (1 - z/delta_n) * exp(h_N(z)); rearrangement-invariant in the limit.
ProductValue corrected_partial_product(const CanonicalProductSpec& spec, std::size_t n,
                                       cplx z);

struct ConvergenceProbe {
    std::size_t n = 0;
    double delta = 0.0; // |f_N(z) - f_{2N}(z)| (or g_N analog)
};

std::vector<ConvergenceProbe> convergence_probe(const CanonicalProductSpec& spec, cplx z,
                                                const std::vector<std::size_t>& schedule,
                                                bool corrected = false);

} // namespace glucas

#endif
