#ifndef QMAC_GRAPH_HPP
#define QMAC_GRAPH_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qmac {

// Raised when an input (config, file, parameter) is malformed.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an instance exceeds a documented exact-analysis limit.
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Conflict graph: an edge (i,j) means nodes i and j cannot transmit in the
// same slot. Undirected, no self-loops, node ids in [0, n).
class InterferenceGraph {
public:
    InterferenceGraph() = default;
    InterferenceGraph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int i) const { return adj_[i]; }
    bool has_edge(int i, int j) const;
    bool connected() const;

    // Bitmask of N(i); only valid when n <= 32.
    std::uint32_t neighbor_mask(int i) const { return adj_mask_[i]; }

    std::string to_json() const;
    static InterferenceGraph from_json(const std::string& text);
    static InterferenceGraph from_json_file(const std::string& path);

    static InterferenceGraph path(int n);
    static InterferenceGraph cycle(int n);
    static InterferenceGraph star(int n);      // node 0 is the hub
    static InterferenceGraph complete(int n);
    static InterferenceGraph erdos_renyi(int n, double p, std::uint64_t seed);

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint32_t> adj_mask_;
};

// Independent set as an indicator bitmask over nodes (bit i = node i).
struct IndependentSet {
    std::uint32_t bits = 0;

    bool contains(int i) const { return (bits >> i) & 1u; }
    int size() const;
    std::vector<int> members(int n) const;
    friend bool operator==(const IndependentSet&, const IndependentSet&) = default;
};

bool is_independent(const InterferenceGraph& g, std::uint32_t bits);

// Every independent set of g in increasing binary order of the indicator,
// starting with the empty set. Rejects n > 20.
std::vector<IndependentSet> enumerate_independent_sets(const InterferenceGraph& g);

// Exhaustive argmax of sum(weights[i] over i in set); ties resolve to the
// earliest set in enumeration order, so all-zero weights give the empty set.
IndependentSet max_weight_independent_set(const InterferenceGraph& g,
                                          const std::vector<double>& weights);

// Same optimum by recursive include/exclude search with a positive-weight
// upper bound. Independent of the enumeration path; also used as the LP
// pricing oracle. Returns the best value; *out gets one optimal set.
double mwis_branch_and_bound(const InterferenceGraph& g,
                             const std::vector<double>& weights,
                             IndependentSet* out = nullptr);

// Per-node Bernoulli arrival rates, each in [0,1].
struct ArrivalRates {
    std::vector<double> lambda;

    explicit ArrivalRates(std::vector<double> v);
    ArrivalRates() = default;
    int size() const { return static_cast<int>(lambda.size()); }
};

// c* = 1 / min{ sum(alpha) : sum_sets alpha_s * s >= lambda, alpha >= 0 }.
// c* > 1 iff lambda is strictly inside the capacity region; lambda = 0 gives
// +infinity. Solved as a covering LP over the independent sets (column
// generation with the branch-and-bound oracle, so star/ER graphs near the
// n = 20 limit stay cheap).
double capacity_margin(const InterferenceGraph& g, const ArrivalRates& rates);

bool is_in_capacity_region(const InterferenceGraph& g, const ArrivalRates& rates);

}  // namespace qmac

#endif  // QMAC_GRAPH_HPP
