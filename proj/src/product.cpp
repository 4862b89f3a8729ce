#include "glucas/product.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace glucas {

namespace {

double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * M_PI);
    if (a > M_PI) a -= 2.0 * M_PI;
    if (a <= -M_PI) a += 2.0 * M_PI;
    return a;
}

} // namespace

void ProductValue::mul(cplx factor) {
    if (!scaled) {
        value *= factor;
        if (std::abs(value) > kMagnitudeCap) {
            scaled = true;
            log_abs = std::log(std::abs(value));
            arg = std::arg(value);
            value = cplx(1.0);
        }
        return;
    }
    double af = std::abs(factor);
    log_abs += (af > 0.0) ? std::log(af) : -std::numeric_limits<double>::infinity();
    arg = wrap_angle(arg + std::arg(factor));
}

void ProductValue::mul_exp(cplx exponent) {
    if (!scaled && std::abs(exponent.real()) < 300.0) {
        mul(std::exp(exponent));
        return;
    }
    if (!scaled) {
        scaled = true;
        double av = std::abs(value);
        log_abs = (av > 0.0) ? std::log(av) : -std::numeric_limits<double>::infinity();
        arg = std::arg(value);
        value = cplx(1.0);
    }
    log_abs += exponent.real();
    arg = wrap_angle(arg + exponent.imag());
}

cplx ProductValue::to_complex() const {
    if (!scaled) return value;
    return std::polar(std::exp(log_abs), arg);
}

double ProductValue::abs_log() const {
    if (scaled) return log_abs;
    double av = std::abs(value);
    return (av > 0.0) ? std::log(av) : -std::numeric_limits<double>::infinity();
}

cplx CanonicalProductSpec::root_at(std::size_t n) const {
    if (plan && !plan->identity) return apply_plan(family, *plan, n);
    return family.nth_root(n);
}

std::size_t CanonicalProductSpec::max_truncation() const {
    if (plan && !plan->identity) return plan->permutation_prefix.size();
    return family.size();
}

PowerSumLedger PowerSumLedger::appended(cplx root) const {
    PowerSumLedger next = *this;
    next.append(root);
    return next;
}

void PowerSumLedger::append(cplx root) {
    if (root == cplx(0.0)) throw std::invalid_argument("ledger: zero root");
    cplx inv = 1.0 / root;
    cplx pw = inv;
    for (auto& vr : v_) {
        vr += pw;
        pw *= inv;
    }
    ++n_;
}

void PowerSumLedger::checkpoint() { checkpoints_.push_back({n_, max_abs()}); }

double PowerSumLedger::max_abs() const {
    double m = 0.0;
    for (const auto& vr : v_) m = std::max(m, std::abs(vr));
    return m;
}

PowerSumLedger ledger_at(const CanonicalProductSpec& spec, std::size_t n) {
    PowerSumLedger ledger(spec.p);
    for (std::size_t k = 1; k <= n; ++k) ledger.append(spec.root_at(k));
    return ledger;
}

ProductValue partial_product(const CanonicalProductSpec& spec, std::size_t n, cplx z) {
    ProductValue acc;
    if (spec.q > 0) {
        for (std::size_t k = 0; k < spec.q; ++k) acc.mul(z);
    }
    for (std::size_t k = 1; k <= n; ++k) {
        acc.mul(1.0 - z / spec.root_at(k));
    }
    return acc;
}

cplx correction_exponent(const CanonicalProductSpec& spec, const PowerSumLedger& ledger,
                         cplx z) {
    if (ledger.genus() != spec.p) {
        throw std::invalid_argument("correction_exponent: ledger genus mismatch");
    }
    cplx h(0.0);
    cplx zp(1.0);
    for (int r = 1; r <= spec.p; ++r) {
        zp *= z;
        h += ledger.values()[r - 1] * zp / static_cast<double>(r);
    }
    return h;
}

ProductValue corrected_partial_product(const CanonicalProductSpec& spec, std::size_t n,
                                       cplx z) {
    ProductValue acc;
    PowerSumLedger ledger(spec.p);
    for (std::size_t k = 1; k <= n; ++k) {
        cplx root = spec.root_at(k);
        acc.mul(1.0 - z / root);
        ledger.append(root);
    }
    acc.mul_exp(correction_exponent(spec, ledger, z));
    return acc;
}

std::vector<ConvergenceProbe> convergence_probe(const CanonicalProductSpec& spec, cplx z,
                                                const std::vector<std::size_t>& schedule,
                                                bool corrected) {
    for (std::size_t i = 1; i < schedule.size(); ++i) {
        if (schedule[i] <= schedule[i - 1]) {
            throw std::invalid_argument("convergence_probe: schedule must increase");
        }
    }
    std::vector<ConvergenceProbe> out;
    out.reserve(schedule.size());
    for (std::size_t n : schedule) {
        std::size_t n1 = std::min(n, spec.max_truncation());
        std::size_t n2 = std::min(2 * n, spec.max_truncation());
        cplx a = corrected ? corrected_partial_product(spec, n1, z).to_complex()
                           : partial_product(spec, n1, z).to_complex();
        cplx b = corrected ? corrected_partial_product(spec, n2, z).to_complex()
                           : partial_product(spec, n2, z).to_complex();
        out.push_back({n, std::abs(a - b)});
    }
    return out;
}

} // namespace glucas
