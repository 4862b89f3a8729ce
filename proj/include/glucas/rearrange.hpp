#ifndef GLUCAS_REARRANGE_HPP
#define GLUCAS_REARRANGE_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "glucas/roots.hpp"

namespace glucas {

enum class PlanStatus { Converging, Stalled };

// Ordering prefix delta_n = gamma_{pi(n)} together with the recorded
// power-sum magnitudes along the way.
struct RearrangementPlan {
    int p = 0;
    std::size_t window = 0;
    std::size_t n_target = 0;
    PlanStatus status = PlanStatus::Converging;
    std::vector<std::size_t> permutation_prefix; // 1-based original indices
    std::vector<std::pair<std::size_t, double>> checkpoints; // (N, max_r |V_N(r)|)

    bool identity = true; // true when permutation_prefix is the identity map

    std::size_t map_index(std::size_t n) const; // pi(n), 1-based
};

struct RearrangeOptions {
    std::size_t window = 200;
    double target = 0.05;       // max_r |V_N(r)| at the final checkpoints
    std::size_t burn_in = 0;    // checkpoints before this N are not judged
};

// Real 2p-vector (Re g^-1 .. Re g^-p, Im g^-1 .. Im g^-p) of one root's
// contribution to the prefix power sums.
std::vector<double> term_vector(cplx root, int p);

// Greedy norm-minimizing rearrangement: at each step pick, among the W
// lowest-index unused roots, the one that brings the running 2p-dim sum
// closest to the origin. A root waiting more than 10*W steps is taken
// unconditionally so the output stays a permutation in the limit.
RearrangementPlan rearrange_to_zero(const RootSequenceFamily& family, int p,
                                    std::size_t n_target, const RearrangeOptions& opts = {});

cplx apply_plan(const RootSequenceFamily& family, const RearrangementPlan& plan,
                std::size_t n);

void write_plan(std::ostream& os, const RearrangementPlan& plan);
RearrangementPlan read_plan(std::istream& is);

const char* to_string(PlanStatus s);

} // namespace glucas

#endif
