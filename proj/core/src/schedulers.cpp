#include "qmac/schedulers.hpp"

#include <cmath>

namespace qmac {

IndependentSet max_weight_schedule(const InterferenceGraph& g,
                                   const std::vector<std::uint64_t>& queues) {
    constexpr double e = 2.718281828459045;
    std::vector<double> w(g.n(), 0.0);
    for (int i = 0; i < g.n(); ++i) {
        const double q = static_cast<double>(queues[i]);
        w[i] = q > e ? std::log(std::log(q)) : 0.0;
    }
    return max_weight_independent_set(g, w);
}

bool aloha_attempt(double p, std::uint64_t queue, const CounterRng& rng,
                   std::uint64_t slot, int node) {
    if (queue == 0) return false;
    return rng.bernoulli(p, slot, static_cast<std::uint64_t>(node), CounterRng::kAttempt);
}

bool poly_backoff_attempt(const BackoffState& state, int node, std::uint64_t queue,
                          const CounterRng& rng, std::uint64_t slot) {
    if (queue == 0) return false;
    const double f = static_cast<double>(state.failures[node]);
    const double p = std::pow(1.0 + f, -state.beta);
    return rng.bernoulli(p, slot, static_cast<std::uint64_t>(node), CounterRng::kAttempt);
}

void poly_backoff_observe(BackoffState& state, int node, bool attempted, bool succeeded) {
    if (!attempted) return;
    if (succeeded)
        state.failures[node] = 0;
    else
        state.failures[node] += 1;
}

}  // namespace qmac
