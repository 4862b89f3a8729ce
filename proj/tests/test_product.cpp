#include <doctest.h>

#include <cmath>
#include <random>

#include "glucas/product.hpp"

using namespace glucas;

namespace {

RootSequenceFamily sin_family(std::size_t pairs) {
    return RootSequenceFamily::parametric(1.0, 1.0, {cplx(1.0), cplx(-1.0)}, 2 * pairs);
}

CanonicalProductSpec sin_spec(std::size_t pairs) {
    CanonicalProductSpec spec;
    spec.q = 0;
    spec.p = 1;
    spec.family = sin_family(pairs);
    return spec;
}

} // namespace

TEST_CASE("partial_product small cases") {
    CanonicalProductSpec spec;
    spec.q = 0;
    spec.p = 0;
    spec.family = RootSequenceFamily::explicit_list({cplx(1.0), cplx(-1.0)});
    CHECK(std::abs(partial_product(spec, 2, cplx(2.0)).to_complex() - cplx(-3.0)) < 1e-14);

    spec.q = 2;
    CHECK(partial_product(spec, 2, cplx(0.0)).to_complex() == cplx(0.0));
}

TEST_CASE("sin product converges to sin(pi z)/(pi z) at z=0.5") {
    CanonicalProductSpec spec = sin_spec(500);
    double expect = 2.0 / M_PI; // sin(pi/2)/(pi/2)
    cplx got = partial_product(spec, 1000, cplx(0.5)).to_complex();
    CHECK(std::abs(got - cplx(expect)) <= 1e-3);
}

TEST_CASE("partial_product vanishes exactly at consumed roots") {
    CanonicalProductSpec spec = sin_spec(50);
    for (std::size_t k : {1u, 7u, 64u}) {
        cplx root = spec.root_at(k);
        cplx v = partial_product(spec, 100, root).to_complex();
        CHECK(std::abs(v) <= 1e-12);
    }
}

TEST_CASE("overflow guard switches to log representation and keeps going") {
    CanonicalProductSpec spec = sin_spec(400);
    ProductValue v = partial_product(spec, 800, cplx(1000.0));
    CHECK(v.scaled);
    CHECK(std::isfinite(v.abs_log()));
    CHECK(v.abs_log() > std::log(ProductValue::kMagnitudeCap));
}

TEST_CASE("correction exponent h_N") {
    CanonicalProductSpec spec;
    spec.p = 1;
    spec.family = sin_family(10);
    PowerSumLedger ledger(1);

    // V empty-handed: V_N(1) = 0
    CHECK(correction_exponent(spec, ledger, cplx(3.0, 1.0)) == cplx(0.0));

    // p=1, V(1)=0.5, z=2 -> 1.0
    PowerSumLedger l2(1);
    l2.append(cplx(2.0)); // V(1) = 0.5
    CHECK(std::abs(correction_exponent(spec, l2, cplx(2.0)) - cplx(1.0)) < 1e-15);

    // p=2, V=(1, i), z=1 -> 1 + i/2
    CanonicalProductSpec s2;
    s2.p = 2;
    s2.family = sin_family(10);
    PowerSumLedger l3(2);
    l3.append(cplx(1.0));       // V = (1, 1)
    // adjust to V=(1,i) by a synthetic check through values(): rebuild instead
    // with a root whose inverse-square lands on i: gamma^-2 = i - 1
    // simpler: check the formula on the ledger we actually have
    cplx h = correction_exponent(s2, l3, cplx(1.0));
    CHECK(std::abs(h - (cplx(1.0) + cplx(0.5))) < 1e-15); // V(1)*z + V(2)*z^2/2

    CHECK(correction_exponent(CanonicalProductSpec{0, 0, sin_family(4), {}},
                              PowerSumLedger(0), cplx(5.0)) == cplx(0.0));
}

TEST_CASE("ledger incremental vs recomputed") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    const int p = 3;
    PowerSumLedger inc(p);
    std::vector<cplx> roots;
    for (int n = 0; n < 10000; ++n) {
        cplx g(d(rng), d(rng));
        if (std::abs(g) < 0.2) g += cplx(1.0);
        roots.push_back(g);
        inc.append(g);
    }
    // recompute from scratch
    std::vector<cplx> v(p, cplx(0.0));
    for (cplx g : roots) {
        cplx inv = 1.0 / g, pw = inv;
        for (int r = 0; r < p; ++r) {
            v[r] += pw;
            pw *= inv;
        }
    }
    for (int r = 0; r < p; ++r) {
        double scale = std::max(1.0, std::abs(v[r]));
        CHECK(std::abs(v[r] - inc.values()[r]) <= 1e-10 * scale);
    }
}

TEST_CASE("corrected product equals plain product when h_N = 0") {
    // p = 0
    CanonicalProductSpec p0;
    p0.p = 0;
    p0.family = RootSequenceFamily::explicit_list({cplx(2.0), cplx(-3.0, 1.0)});
    cplx z(0.7, -0.2);
    CHECK(corrected_partial_product(p0, 2, z).to_complex() ==
          partial_product(p0, 2, z).to_complex());

    // paired family at even N: V_N(1) = 0
    CanonicalProductSpec sp = sin_spec(50);
    cplx a = corrected_partial_product(sp, 40, z).to_complex();
    cplx b = partial_product(sp, 40, z).to_complex();
    CHECK(std::abs(a - b) <= 1e-12 * std::abs(b));
}

TEST_CASE("genus-1 all-positive family matches a larger-truncation oracle") {
    CanonicalProductSpec spec;
    spec.p = 1;
    spec.family = RootSequenceFamily::parametric(1.0, 1.0, {cplx(1.0)}, 4000);
    cplx z(0.5, 0.0);
    // roots +n: g_N(z) = prod (1 - z/n) exp(z V_N(1))  ->  finite non-zero limit
    cplx g_n = corrected_partial_product(spec, 1000, z).to_complex();
    cplx oracle = corrected_partial_product(spec, 2000, z).to_complex();
    CHECK(std::abs(g_n - oracle) < 5e-3);
    CHECK(std::abs(g_n) > 0.1);
    // the plain product without correction decays toward 0 instead
    cplx f_n = partial_product(spec, 1000, z).to_complex();
    CHECK(std::abs(f_n) < 5e-2);
}

TEST_CASE("rearrangement invariance of the corrected product") {
    // same multiset, two orderings
    std::mt19937_64 rng(9);
    std::vector<cplx> base;
    auto fam = sin_family(5000);
    for (std::size_t n = 1; n <= 10000; ++n) base.push_back(fam.nth_root(n));
    std::vector<cplx> shuffled = base;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);

    CanonicalProductSpec sa, sb;
    sa.p = sb.p = 1;
    sa.family = RootSequenceFamily::explicit_list(base);
    sb.family = RootSequenceFamily::explicit_list(shuffled);
    for (cplx z : {cplx(0.5), cplx(-0.3, 0.8), cplx(0.0, -1.0)}) {
        cplx a = corrected_partial_product(sa, 10000, z).to_complex();
        cplx b = corrected_partial_product(sb, 10000, z).to_complex();
        CHECK(std::abs(a - b) <= 1e-6 * (1.0 + std::abs(a)));
    }
}

TEST_CASE("triangle-inequality domination of f_N by g_N") {
    CanonicalProductSpec spec = sin_spec(200);
    for (std::size_t n : {37u, 101u, 250u}) {
        for (cplx z : {cplx(0.4, 0.1), cplx(-1.3, 0.7)}) {
            PowerSumLedger ledger = ledger_at(spec, n);
            cplx h = correction_exponent(spec, ledger, z);
            cplx f = partial_product(spec, n, z).to_complex();
            cplx g = corrected_partial_product(spec, n, z).to_complex();
            double lhs = std::abs(f - g);
            double rhs = (std::exp(std::abs(h)) - 1.0) * std::abs(g);
            CHECK(lhs <= rhs + 1e-12);
        }
    }
}

TEST_CASE("convergence probe") {
    CanonicalProductSpec spec = sin_spec(1000);
    auto deltas = convergence_probe(spec, cplx(0.5), {100, 200, 400});
    REQUIRE(deltas.size() == 3);
    CHECK(deltas[0].delta > deltas[1].delta);
    CHECK(deltas[1].delta > deltas[2].delta);

    // z equal to a consumed root: all later truncations stay exactly 0
    auto zero_deltas = convergence_probe(spec, spec.root_at(3), {10, 20, 40});
    for (const auto& d : zero_deltas) CHECK(d.delta == 0.0);

    // empty family, q = 0: constant product 1
    CanonicalProductSpec empty;
    empty.family = RootSequenceFamily::explicit_list({});
    auto const_deltas = convergence_probe(empty, cplx(2.0), {1, 2, 4});
    for (const auto& d : const_deltas) CHECK(d.delta == 0.0);

    CHECK_THROWS(convergence_probe(spec, cplx(0.5), {100, 50}));
}
