#include "qmac/protocol.hpp"

#include <cassert>
#include <cmath>

namespace qmac {

namespace {

// [log x]_+ for x >= 0 (0 below 1, including x = 0).
inline double log_clamped(double x) {
    return x > 1.0 ? std::log(x) : 0.0;
}

// [log log x]_+; 0 below e.
inline double loglog_clamped(double x) {
    constexpr double e = 2.718281828459045;
    return x > e ? std::log(std::log(x)) : 0.0;
}

}  // namespace

double g_of(double x, const GParams& params) {
    assert(x >= 0.0);
    const double ll = loglog_clamped(x);
    if (ll == 0.0) return 1.0;
    return std::exp(std::pow(ll, params.alpha));
}

double g_inverse(double x, const GParams& params) {
    assert(x >= 0.0);
    const double l = log_clamped(x);
    return std::exp(std::exp(std::pow(l, 1.0 / params.alpha)));
}

double compute_weight(std::uint64_t queue, const std::vector<std::uint64_t>& neighbor_A,
                      const GParams& params) {
    double est = 1.0;
    for (std::uint64_t a : neighbor_A) {
        const double lg = log_clamped(g_of(static_cast<double>(a), params));
        const double w = std::exp(std::sqrt(lg));
        if (w > est) est = w;
    }
    const double lq = log_clamped(static_cast<double>(queue));
    return lq > est ? lq : est;
}

double attempt_probability(bool succeeded_prev, bool any_neighbor_attempted_prev,
                           double weight) {
    assert(weight >= 1.0);
    if (succeeded_prev) return 1.0 - 1.0 / weight;
    if (!any_neighbor_attempted_prev) return 0.5;
    return 0.0;
}

std::pair<std::uint64_t, std::uint64_t> update_counters(std::uint64_t A, std::uint64_t B,
                                                        bool neighbor_attempted_prev,
                                                        const GParams& params) {
    if (neighbor_attempted_prev) return {A, B + 1};
    if (B >= 2) {
        if (static_cast<double>(B) >= g_of(static_cast<double>(A), params))
            return {A + 1, 0};
        return {A > 0 ? A - 1 : 0, 0};
    }
    return {A, 0};
}

}  // namespace qmac
