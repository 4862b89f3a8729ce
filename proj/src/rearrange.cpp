#include "glucas/rearrange.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace glucas {

const char* to_string(PlanStatus s) {
    return s == PlanStatus::Converging ? "converging" : "stalled";
}

std::size_t RearrangementPlan::map_index(std::size_t n) const {
    if (identity) return n;
    if (n == 0 || n > permutation_prefix.size()) {
        throw std::out_of_range("plan: index past permutation prefix");
    }
    return permutation_prefix[n - 1];
}

std::vector<double> term_vector(cplx root, int p) {
    if (root == cplx(0.0)) throw std::invalid_argument("term_vector: zero root");
    std::vector<double> v(2 * static_cast<std::size_t>(p));
    cplx inv = 1.0 / root;
    cplx pw = inv;
    for (int r = 1; r <= p; ++r) {
        v[r - 1] = pw.real();
        v[p + r - 1] = pw.imag();
        pw *= inv;
    }
    return v;
}

cplx apply_plan(const RootSequenceFamily& family, const RearrangementPlan& plan,
                std::size_t n) {
    return family.nth_root(plan.map_index(n));
}

RearrangementPlan rearrange_to_zero(const RootSequenceFamily& family, int p,
                                    std::size_t n_target, const RearrangeOptions& opts) {
    if (n_target == 0) throw std::invalid_argument("rearrange_to_zero: n_target >= 1");
    n_target = std::min(n_target, family.size());

    RearrangementPlan plan;
    plan.p = p;
    plan.window = opts.window;
    plan.n_target = n_target;

    if (p <= 0) {
        plan.identity = true;
        plan.status = PlanStatus::Converging;
        return plan;
    }

    const std::size_t w = std::max<std::size_t>(1, opts.window);
    const std::size_t total = family.size();
    const std::size_t checkpoint_every = std::max<std::size_t>(1, n_target / 20);
    const std::size_t dim = 2 * static_cast<std::size_t>(p);

    std::vector<char> used(total + 1, 0);
    std::vector<std::size_t> entered(total + 1, 0); // step index first seen in window
    std::vector<char> seen(total + 1, 0);
    std::size_t lowest = 1;

    std::vector<double> running(dim, 0.0);
    plan.permutation_prefix.reserve(n_target);

    std::vector<std::size_t> window_idx;
    window_idx.reserve(w);

    for (std::size_t step = 0; step < n_target; ++step) {
        while (lowest <= total && used[lowest]) ++lowest;
        window_idx.clear();
        for (std::size_t i = lowest; i <= total && window_idx.size() < w; ++i) {
            if (used[i]) continue;
            window_idx.push_back(i);
            if (!seen[i]) {
                seen[i] = 1;
                entered[i] = step;
            }
        }
        if (window_idx.empty()) break;

        std::size_t pick = 0;
        // Fairness overrides the metric: the longest-waiting overdue root goes first.
        for (std::size_t i : window_idx) {
            if (step - entered[i] > 10 * w) {
                pick = i;
                break;
            }
        }
        if (pick == 0) {
            double norm2 = 0.0;
            for (double s : running) norm2 += s * s;
            std::vector<std::vector<double>> terms;
            terms.reserve(window_idx.size());
            for (std::size_t i : window_idx) terms.push_back(term_vector(family.nth_root(i), p));

            double best = 0.0;
            for (std::size_t c = 0; c < window_idx.size(); ++c) {
                double d2 = 0.0;
                for (std::size_t k = 0; k < dim; ++k) {
                    double s = running[k] + terms[c][k];
                    d2 += s * s;
                }
                if (pick == 0 || d2 < best) { // ties keep the smaller index
                    pick = window_idx[c];
                    best = d2;
                }
            }
            if (best >= norm2) {
                // Deadlock: every single root moves the sum away from the
                // origin (typical when one power sum can only be paid down
                // together with a canceling partner). Look one step ahead
                // over pairs; if even pairs cannot help, spend the
                // lowest-index (largest) root so it cannot starve.
                pick = window_idx.front();
                double best_pair = norm2;
                for (std::size_t a = 0; a < window_idx.size(); ++a) {
                    for (std::size_t b = a + 1; b < window_idx.size(); ++b) {
                        double d2 = 0.0;
                        for (std::size_t k = 0; k < dim; ++k) {
                            double s = running[k] + terms[a][k] + terms[b][k];
                            d2 += s * s;
                        }
                        if (d2 < best_pair) {
                            best_pair = d2;
                            pick = window_idx[a];
                        }
                    }
                }
            }
        }

        std::vector<double> t = term_vector(family.nth_root(pick), p);
        for (std::size_t k = 0; k < dim; ++k) running[k] += t[k];
        used[pick] = 1;
        plan.permutation_prefix.push_back(pick);

        if ((step + 1) % checkpoint_every == 0 || step + 1 == n_target) {
            double m = 0.0;
            for (int r = 1; r <= p; ++r) {
                m = std::max(m, std::hypot(running[r - 1], running[p + r - 1]));
            }
            if (plan.checkpoints.empty() || plan.checkpoints.back().first != step + 1) {
                plan.checkpoints.push_back({step + 1, m});
            }
        }
    }
    plan.identity = false;

    // Converging: final checkpoint under target, and the tail either
    // non-increasing or already entirely under target (jitter at magnitudes
    // below target is not a stall).
    const auto& cp = plan.checkpoints;
    bool ok = false;
    if (cp.size() >= 3) {
        std::size_t n = cp.size();
        bool monotone = cp[n - 3].second >= cp[n - 2].second &&
                        cp[n - 2].second >= cp[n - 1].second;
        bool tail_small = cp[n - 3].second <= opts.target &&
                          cp[n - 2].second <= opts.target;
        ok = cp[n - 1].second <= opts.target && (monotone || tail_small);
    } else if (!cp.empty()) {
        ok = cp.back().second <= opts.target;
    }
    plan.status = ok ? PlanStatus::Converging : PlanStatus::Stalled;
    return plan;
}

void write_plan(std::ostream& os, const RearrangementPlan& plan) {
    os << "p=" << plan.p << " W=" << plan.window << " N=" << plan.n_target
       << " status=" << to_string(plan.status) << "\n";
    if (!plan.identity) {
        for (std::size_t i : plan.permutation_prefix) os << i << "\n";
    }
    for (const auto& [n, m] : plan.checkpoints) {
        os << "# checkpoint " << n << " " << m << "\n";
    }
}

RearrangementPlan read_plan(std::istream& is) {
    RearrangementPlan plan;
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("plan: empty stream");
    {
        std::istringstream hs(line);
        std::string tok;
        while (hs >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos) throw std::runtime_error("plan: bad header token");
            std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            if (key == "p") plan.p = std::stoi(val);
            else if (key == "W") plan.window = std::stoul(val);
            else if (key == "N") plan.n_target = std::stoul(val);
            else if (key == "status")
                plan.status = (val == "converging") ? PlanStatus::Converging : PlanStatus::Stalled;
            else throw std::runtime_error("plan: unknown header key " + key);
        }
    }
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream cs(line.substr(1));
            std::string word;
            std::size_t n;
            double m;
            if (cs >> word >> n >> m && word == "checkpoint") {
                plan.checkpoints.push_back({n, m});
            }
            continue;
        }
        plan.permutation_prefix.push_back(std::stoul(line));
    }
    plan.identity = plan.permutation_prefix.empty();
    return plan;
}

} // namespace glucas
