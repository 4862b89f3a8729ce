#ifndef GLUCAS_MULTIPOLY_HPP
#define GLUCAS_MULTIPOLY_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "glucas/poly.hpp"

namespace glucas {

// Sparse polynomial on C^M as a sum of monomial terms.
class MultiPoly {
public:
    struct Term {
        cplx coeff;
        std::vector<unsigned> exps; // one exponent per variable
    };

    explicit MultiPoly(std::size_t vars) : vars_(vars) {}

    std::size_t vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(cplx coeff, std::vector<unsigned> exps);

    cplx eval(const std::vector<cplx>& z) const;
    MultiPoly partial_derivative(std::size_t var) const;
    MultiPoly multiply(const MultiPoly& other) const;

    // Freeze every variable except `var` at the given values (the entry for
    // `var` in `z` is ignored); returns the univariate section polynomial.
    ComplexPoly section(std::size_t var, const std::vector<cplx>& z) const;

    // sum_m a_m z_m + b
    static MultiPoly affine(std::size_t vars, const std::vector<cplx>& a, cplx b);
    static MultiPoly product_of_affine(std::size_t vars,
                                       const std::vector<std::pair<std::vector<cplx>, cplx>>& forms);

private:
    std::size_t vars_;
    std::vector<Term> terms_;

    void normalize();
};

} // namespace glucas

#endif
