#include "glucas/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace glucas {

void MultiPoly::add_term(cplx coeff, std::vector<unsigned> exps) {
    if (exps.size() != vars_) throw std::invalid_argument("multipoly: exponent arity mismatch");
    terms_.push_back({coeff, std::move(exps)});
    normalize();
}

void MultiPoly::normalize() {
    std::map<std::vector<unsigned>, cplx> acc;
    for (auto& t : terms_) acc[t.exps] += t.coeff;
    terms_.clear();
    for (auto& [e, c] : acc) {
        if (c != cplx(0.0)) terms_.push_back({c, e});
    }
}

cplx MultiPoly::eval(const std::vector<cplx>& z) const {
    if (z.size() != vars_) throw std::invalid_argument("multipoly: eval arity mismatch");
    cplx s(0.0);
    for (const auto& t : terms_) {
        cplx m = t.coeff;
        for (std::size_t v = 0; v < vars_; ++v) {
            for (unsigned k = 0; k < t.exps[v]; ++k) m *= z[v];
        }
        s += m;
    }
    return s;
}

MultiPoly MultiPoly::partial_derivative(std::size_t var) const {
    if (var >= vars_) throw std::invalid_argument("multipoly: bad variable index");
    MultiPoly out(vars_);
    for (const auto& t : terms_) {
        if (t.exps[var] == 0) continue;
        auto e = t.exps;
        double k = e[var];
        --e[var];
        out.terms_.push_back({t.coeff * k, std::move(e)});
    }
    out.normalize();
    return out;
}

MultiPoly MultiPoly::multiply(const MultiPoly& other) const {
    if (other.vars_ != vars_) throw std::invalid_argument("multipoly: arity mismatch");
    MultiPoly out(vars_);
    for (const auto& a : terms_) {
        for (const auto& b : other.terms_) {
            std::vector<unsigned> e(vars_);
            for (std::size_t v = 0; v < vars_; ++v) e[v] = a.exps[v] + b.exps[v];
            out.terms_.push_back({a.coeff * b.coeff, std::move(e)});
        }
    }
    out.normalize();
    return out;
}

ComplexPoly MultiPoly::section(std::size_t var, const std::vector<cplx>& z) const {
    if (var >= vars_) throw std::invalid_argument("multipoly: bad variable index");
    if (z.size() != vars_) throw std::invalid_argument("multipoly: section arity mismatch");
    unsigned deg = 0;
    for (const auto& t : terms_) deg = std::max(deg, t.exps[var]);
    std::vector<cplx> coeffs(deg + 1, cplx(0.0));
    for (const auto& t : terms_) {
        cplx m = t.coeff;
        for (std::size_t v = 0; v < vars_; ++v) {
            if (v == var) continue;
            for (unsigned k = 0; k < t.exps[v]; ++k) m *= z[v];
        }
        coeffs[t.exps[var]] += m;
    }
    return ComplexPoly(std::move(coeffs));
}

MultiPoly MultiPoly::affine(std::size_t vars, const std::vector<cplx>& a, cplx b) {
    if (a.size() != vars) throw std::invalid_argument("multipoly: affine arity mismatch");
    MultiPoly out(vars);
    for (std::size_t v = 0; v < vars; ++v) {
        if (a[v] == cplx(0.0)) continue;
        std::vector<unsigned> e(vars, 0);
        e[v] = 1;
        out.terms_.push_back({a[v], std::move(e)});
    }
    if (b != cplx(0.0)) out.terms_.push_back({b, std::vector<unsigned>(vars, 0)});
    out.normalize();
    return out;
}

MultiPoly MultiPoly::product_of_affine(
    std::size_t vars, const std::vector<std::pair<std::vector<cplx>, cplx>>& forms) {
    MultiPoly out(vars);
    out.terms_.push_back({cplx(1.0), std::vector<unsigned>(vars, 0)});
    for (const auto& [a, b] : forms) {
        out = out.multiply(affine(vars, a, b));
    }
    return out;
}

} // namespace glucas
