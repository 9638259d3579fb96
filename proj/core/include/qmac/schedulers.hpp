#ifndef QMAC_SCHEDULERS_HPP
#define QMAC_SCHEDULERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qmac/graph.hpp"
#include "qmac/rng.hpp"

namespace qmac {

// Centralized oracle: max-weight independent set under weights
// [log log Q_i]_+. Ties resolve to the earliest enumerated set, so nodes
// whose clamped weight is zero are never scheduled.
IndependentSet max_weight_schedule(const InterferenceGraph& g,
                                   const std::vector<std::uint64_t>& queues);

// Slotted ALOHA: attempt with fixed probability p while backlogged.
bool aloha_attempt(double p, std::uint64_t queue, const CounterRng& rng,
                   std::uint64_t slot, int node);

// Polynomial back-off in the consecutive-failure count f: attempt with
// probability 1/(1+f)^beta while backlogged. f bumps on collision and
// resets on success; the exact polynomial is a representative choice, not
// a reconstruction of any specific published protocol.
struct BackoffState {
    std::vector<std::uint64_t> failures;
    double beta = 2.0;

    explicit BackoffState(int n, double beta_ = 2.0) : failures(n, 0), beta(beta_) {}
};

bool poly_backoff_attempt(const BackoffState& state, int node, std::uint64_t queue,
                          const CounterRng& rng, std::uint64_t slot);

// Bookkeeping after a slot resolves.
void poly_backoff_observe(BackoffState& state, int node, bool attempted, bool succeeded);

}  // namespace qmac

#endif  // QMAC_SCHEDULERS_HPP
