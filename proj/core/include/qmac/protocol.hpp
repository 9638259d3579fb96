#ifndef QMAC_PROTOCOL_HPP
#define QMAC_PROTOCOL_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace qmac {

// Exponent of the weight-estimation map g(x) = exp(([log log x]_+)^alpha).
// The scheme needs alpha > 2; 4 is the stock choice.
struct GParams {
    double alpha = 4.0;

    bool valid() const { return alpha > 2.0; }
};

// All logs are natural, and log / loglog always mean their clamped versions
// [log]_+ / [loglog]_+, so every map below is total on x >= 0.

// g(x) = exp(([log log x]_+)^alpha); equals 1 for x <= e.
double g_of(double x, const GParams& params = {});

// g^{-1}(x) = exp(exp(([log x]_+)^{1/alpha})); equals e for x <= 1.
// Inverts g on [1, inf): g(g_inverse(x)) = x for x >= 1.
double g_inverse(double x, const GParams& params = {});

// Weight rule: W = max{ [log Q]_+ , max_j exp(sqrt([log g(A_j)]_+)) }.
// An empty neighbor list contributes 1, so the result is always >= 1.
double compute_weight(std::uint64_t queue, const std::vector<std::uint64_t>& neighbor_A,
                      const GParams& params = {});

// Attempt rules, one of which fires per slot:
//   1. succeeded last slot            -> attempt w.p. 1 - 1/W
//   2. else, neighborhood quiet       -> attempt w.p. 1/2
//   3. else (some neighbor attempted) -> stay silent
// A node that attempted and collided falls under rule 3: a lone attempt
// always succeeds, so a collision implies an attempting neighbor.
double attempt_probability(bool succeeded_prev, bool any_neighbor_attempted_prev,
                           double weight);

// Counter update for the (A, B) pair node i keeps about neighbor j.
//   j attempted last slot -> B += 1
//   else if B >= 2        -> A += 1 if B >= g(A), else A -= 1 (floored at 0); B = 0
//   else                  -> B = 0
// B is the running attempt-streak length; g(A) is the long-term estimate of
// the neighbor's weight that the streak lengths train.
std::pair<std::uint64_t, std::uint64_t> update_counters(std::uint64_t A, std::uint64_t B,
                                                        bool neighbor_attempted_prev,
                                                        const GParams& params = {});

// Per-node protocol state as the simulator carries it.
struct NodeState {
    std::uint64_t queue = 0;
    bool attempted_prev = false;
    bool succeeded_prev = false;
    // Counter pairs indexed like InterferenceGraph::neighbors(i).
    std::vector<std::uint64_t> A;
    std::vector<std::uint64_t> B;
};

}  // namespace qmac

#endif  // QMAC_PROTOCOL_HPP
