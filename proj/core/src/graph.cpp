#include "qmac/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

#include "qmac/rng.hpp"
#include "qmac/simplex.hpp"
#include <json.hpp>

namespace qmac {

InterferenceGraph::InterferenceGraph(int n, const std::vector<std::pair<int, int>>& edges)
    : n_(n) {
    if (n < 0) throw ConfigError("graph: node count must be nonnegative");
    adj_.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [i, j] : edges) {
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw ConfigError("graph: edge endpoint out of range");
        if (i == j) throw ConfigError("graph: self-loops not allowed");
        if (i > j) std::swap(i, j);
        if (!seen.insert({i, j}).second) continue;
        edges_.push_back({i, j});
        adj_[i].push_back(j);
        adj_[j].push_back(i);
    }
    std::sort(edges_.begin(), edges_.end());
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    adj_mask_.assign(n, 0);
    if (n <= 32) {
        for (auto [i, j] : edges_) {
            adj_mask_[i] |= 1u << j;
            adj_mask_[j] |= 1u << i;
        }
    }
}

bool InterferenceGraph::has_edge(int i, int j) const {
    const auto& nbrs = adj_[i];
    return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

bool InterferenceGraph::connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj_[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
        }
    }
    return count == n_;
}

std::string InterferenceGraph::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    j["edges"] = nlohmann::json::array();
    for (auto [a, b] : edges_) j["edges"].push_back({a, b});
    return j.dump();
}

InterferenceGraph InterferenceGraph::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("graph: bad JSON: ") + e.what());
    }
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ConfigError("graph: missing integer field \"n\"");
    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges")) {
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2)
                throw ConfigError("graph: each edge must be a pair [i,j]");
            edges.push_back({e[0].get<int>(), e[1].get<int>()});
        }
    }
    return InterferenceGraph(j["n"].get<int>(), edges);
}

InterferenceGraph InterferenceGraph::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("graph: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

InterferenceGraph InterferenceGraph::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return InterferenceGraph(n, e);
}

InterferenceGraph InterferenceGraph::cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    if (n >= 3) e.push_back({n - 1, 0});
    return InterferenceGraph(n, e);
}

InterferenceGraph InterferenceGraph::star(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.push_back({0, i});
    return InterferenceGraph(n, e);
}

InterferenceGraph InterferenceGraph::complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return InterferenceGraph(n, e);
}

InterferenceGraph InterferenceGraph::erdos_renyi(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw ConfigError("erdos_renyi: p must be in [0,1]");
    CounterRng rng(seed);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.bernoulli(p, i, j, CounterRng::kGeneric)) e.push_back({i, j});
    return InterferenceGraph(n, e);
}

int IndependentSet::size() const { return std::popcount(bits); }

std::vector<int> IndependentSet::members(int n) const {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

bool is_independent(const InterferenceGraph& g, std::uint32_t bits) {
    for (int i = 0; i < g.n(); ++i)
        if ((bits >> i) & 1u)
            if (g.neighbor_mask(i) & bits) return false;
    return true;
}

std::vector<IndependentSet> enumerate_independent_sets(const InterferenceGraph& g) {
    if (g.n() > 20)
        throw CapabilityError("instance too large for enumeration (n > 20)");
    std::vector<IndependentSet> out;
    const std::uint32_t limit = 1u << g.n();
    for (std::uint32_t m = 0; m < limit; ++m)
        if (is_independent(g, m)) out.push_back({m});
    return out;
}

IndependentSet max_weight_independent_set(const InterferenceGraph& g,
                                          const std::vector<double>& weights) {
    if (static_cast<int>(weights.size()) != g.n())
        throw ConfigError("max_weight_independent_set: weight count != n");
    IndependentSet best{0};
    double best_val = 0.0;  // value of the empty set
    for (const auto& s : enumerate_independent_sets(g)) {
        double v = 0.0;
        for (int i = 0; i < g.n(); ++i)
            if (s.contains(i)) v += weights[i];
        if (v > best_val) {  // strict: ties keep the earliest set
            best_val = v;
            best = s;
        }
    }
    return best;
}

namespace {

void bnb_search(const InterferenceGraph& g, const std::vector<double>& w,
                const std::vector<double>& pos_suffix, int idx, std::uint32_t cur,
                std::uint32_t blocked, double val, double& best, std::uint32_t& best_set) {
    if (val > best) {
        best = val;
        best_set = cur;
    }
    if (idx >= g.n()) return;
    if (val + pos_suffix[idx] <= best) return;
    // include idx when allowed, then exclude
    if (!((blocked >> idx) & 1u)) {
        bnb_search(g, w, pos_suffix, idx + 1, cur | (1u << idx),
                   blocked | g.neighbor_mask(idx), val + w[idx], best, best_set);
    }
    bnb_search(g, w, pos_suffix, idx + 1, cur, blocked, val, best, best_set);
}

}  // namespace

double mwis_branch_and_bound(const InterferenceGraph& g, const std::vector<double>& weights,
                             IndependentSet* out) {
    if (g.n() > 32) throw CapabilityError("mwis_branch_and_bound: n > 32");
    std::vector<double> pos_suffix(g.n() + 1, 0.0);
    for (int i = g.n() - 1; i >= 0; --i)
        pos_suffix[i] = pos_suffix[i + 1] + std::max(weights[i], 0.0);
    double best = 0.0;
    std::uint32_t best_set = 0;
    bnb_search(g, weights, pos_suffix, 0, 0, 0, 0.0, best, best_set);
    if (out) out->bits = best_set;
    return best;
}

ArrivalRates::ArrivalRates(std::vector<double> v) : lambda(std::move(v)) {
    for (double x : lambda)
        if (!(x >= 0.0 && x <= 1.0))
            throw ConfigError("arrival rates must lie in [0,1]");
}

double capacity_margin(const InterferenceGraph& g, const ArrivalRates& rates) {
    if (rates.size() != g.n())
        throw ConfigError("capacity_margin: rate count != n");
    if (g.n() > 20)
        throw CapabilityError("instance too large for enumeration (n > 20)");
    const int n = g.n();
    bool all_zero = true;
    for (double x : rates.lambda) all_zero = all_zero && x == 0.0;
    if (all_zero) return std::numeric_limits<double>::infinity();

    // Restricted covering LP over a growing column pool. Singletons make the
    // start feasible; the pricing oracle adds any set with dual weight > 1.
    std::vector<std::uint32_t> pool;
    std::set<std::uint32_t> in_pool;
    for (int i = 0; i < n; ++i) {
        pool.push_back(1u << i);
        in_pool.insert(1u << i);
    }
    for (;;) {
        std::vector<std::vector<double>> columns;
        for (std::uint32_t m : pool) {
            std::vector<double> col(n, 0.0);
            for (int i = 0; i < n; ++i)
                if ((m >> i) & 1u) col[i] = 1.0;
            columns.push_back(std::move(col));
        }
        std::vector<double> costs(pool.size(), 1.0);
        auto lp = solve_covering_lp(columns, rates.lambda, costs);
        if (!lp) throw std::runtime_error("capacity LP infeasible (should not happen)");
        IndependentSet priced;
        const double score = mwis_branch_and_bound(g, lp->duals, &priced);
        if (score > 1.0 + 1e-10 && !in_pool.count(priced.bits)) {
            pool.push_back(priced.bits);
            in_pool.insert(priced.bits);
            continue;
        }
        return 1.0 / lp->objective;
    }
}

bool is_in_capacity_region(const InterferenceGraph& g, const ArrivalRates& rates) {
    return capacity_margin(g, rates) > 1.0;
}

}  // namespace qmac
