#ifndef GLUCAS_POLY_HPP
#define GLUCAS_POLY_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace glucas {

using cplx = std::complex<double>;

// Dense univariate polynomial over C, coefficients in ascending degree.
// The zero polynomial is represented by an empty coefficient vector.
class ComplexPoly {
public:
    ComplexPoly() = default;
    explicit ComplexPoly(std::vector<cplx> ascending_coeffs);

    static ComplexPoly from_roots(const std::vector<cplx>& roots, cplx leading);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return is_zero() ? -1 : static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<cplx>& coeffs() const { return coeffs_; }
    cplx leading() const { return is_zero() ? cplx(0.0) : coeffs_.back(); }

    cplx eval(cplx z) const;
    // Running magnitude bound sum |c_k| |z|^k, used for relative residual tests.
    double eval_bound(cplx z) const;

    ComplexPoly derivative() const;

private:
    std::vector<cplx> coeffs_;
};

struct RootFindResult {
    std::vector<cplx> roots;
    std::vector<double> residuals;   // |p(root)| / eval_bound(root)
    bool converged = false;
    int iterations = 0;
};

// All-roots simultaneous refinement (Aberth-Ehrlich). Initial guesses lie on a
// circle of radius given by the Cauchy bound, rotated by a seed-derived angle,
// so results are deterministic for a given seed.
RootFindResult find_roots(const ComplexPoly& p, double tol = 1e-12,
                          std::uint64_t seed = 0);

// Critical points of prod (z - r_j) computed as zeros of the logarithmic
// derivative sum mu_j / (z - r_j), plus multiplicity - 1 copies of each
// repeated root. Works at degrees whose monomial coefficients would overflow.
RootFindResult critical_points_from_roots(const std::vector<cplx>& roots,
                                          double tol = 1e-12, std::uint64_t seed = 0);

} // namespace glucas

#endif
