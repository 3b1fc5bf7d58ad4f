#pragma once

// Graceful-labeling verification and exhaustive backtracking search.
//
// The search assigns edge labels in decreasing order: the label d can only
// be realized by a node pair {x, x+d}, which keeps the branching far below
// labeling nodes directly. Exhaustion is a proof of nongracefulness;
// running out of budget is reported as a distinct verdict.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <vector>

#include "eulergraph/graph.hpp"

namespace eg {

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

struct Labeling {
    std::vector<int> phi; // node -> label, -1 when unassigned

    static Labeling of(std::vector<int> phi) { return Labeling{std::move(phi)}; }
};

inline bool verify_graceful(const Graph& g, const Labeling& L) {
    const int q = g.size();
    if (static_cast<int>(L.phi.size()) != g.order()) fail(Errc::PartialLabeling, "labeling size mismatch");
    for (int v : L.phi)
        if (v == -1) fail(Errc::PartialLabeling, "unassigned node label");
    std::vector<char> label_seen(static_cast<size_t>(q) + 1, 0);
    for (int v : L.phi) {
        if (v < 0 || v > q) return false;
        if (label_seen[v]) return false;
        label_seen[v] = 1;
    }
    std::vector<char> diff_seen(static_cast<size_t>(q) + 1, 0);
    for (auto [a, b] : g.edges()) {
        int d = std::abs(L.phi[a] - L.phi[b]);
        if (d == 0 || diff_seen[d]) return false;
        diff_seen[d] = 1;
    }
    return true; // q distinct diffs in [1,q] are exactly {1..q}
}

enum class SearchVerdict { Found, ExhaustedNoLabeling, BudgetExceeded };

struct SearchOutcome {
    SearchVerdict verdict = SearchVerdict::ExhaustedNoLabeling;
    std::optional<Labeling> labeling;
    std::uint64_t nodes_explored = 0;
};

namespace detail {

struct GracefulSearch {
    const Graph& g;
    const int q;
    std::uint64_t budget;
    std::vector<int> phi;
    std::vector<int> label_owner; // label -> node, -1 free
    std::vector<char> diff_done;  // 1..q
    int labeled_count = 0;
    std::uint64_t explored = 0;
    bool out_of_budget = false;

    GracefulSearch(const Graph& g_, std::uint64_t budget_)
        : g(g_), q(g_.size()), budget(budget_), phi(g_.order(), -1), label_owner(q + 1, -1),
          diff_done(q + 1, 0) {}

    bool place(NodeId v, int lab, std::vector<int>& new_diffs) {
        if (lab < 0 || lab > q || label_owner[lab] != -1) return false;
        for (NodeId w : g.neighbors(v)) {
            if (phi[w] == -1) continue;
            int d = std::abs(lab - phi[w]);
            if (diff_done[d]) {
                for (int undo : new_diffs) diff_done[undo] = 0;
                new_diffs.clear();
                return false;
            }
            diff_done[d] = 1;
            new_diffs.push_back(d);
        }
        phi[v] = lab;
        label_owner[lab] = v;
        ++labeled_count;
        if (++explored > budget) out_of_budget = true;
        return true;
    }

    void unplace(NodeId v, const std::vector<int>& new_diffs) {
        for (int d : new_diffs) diff_done[d] = 0;
        label_owner[phi[v]] = -1;
        phi[v] = -1;
        --labeled_count;
    }

    bool dfs() {
        if (out_of_budget) return false;
        int d = q;
        while (d >= 1 && diff_done[d]) --d;
        if (d == 0) return true;

        // extend from a labeled node across one edge
        std::vector<int> cand;
        for (NodeId v = 0; v < g.order(); ++v) {
            if (phi[v] != -1) continue;
            cand.clear();
            for (NodeId w : g.neighbors(v)) {
                if (phi[w] == -1) continue;
                for (int lab : {phi[w] - d, phi[w] + d}) {
                    if (lab < 0 || lab > q) continue;
                    if (std::find(cand.begin(), cand.end(), lab) == cand.end()) cand.push_back(lab);
                }
            }
            std::sort(cand.begin(), cand.end());
            for (int lab : cand) {
                std::vector<int> diffs;
                if (!place(v, lab, diffs)) continue;
                if (dfs()) return true;
                unplace(v, diffs);
                if (out_of_budget) return false;
            }
        }

        // realize d on an edge with both ends unlabeled
        const bool first = labeled_count == 0;
        for (auto [a, b] : g.edges()) {
            if (phi[a] != -1 || phi[b] != -1) continue;
            for (int x = 0; x + d <= q; ++x) {
                // complement symmetry: fix the first placement as (0, q)
                int orientations = first ? 1 : 2;
                for (int o = 0; o < orientations; ++o) {
                    int la = o == 0 ? x : x + d;
                    int lb = o == 0 ? x + d : x;
                    std::vector<int> da, db;
                    if (!place(a, la, da)) continue;
                    if (place(b, lb, db)) {
                        if (dfs()) return true;
                        unplace(b, db);
                    }
                    unplace(a, da);
                    if (out_of_budget) return false;
                }
            }
        }
        return false;
    }
};

} // namespace detail

inline SearchOutcome search_graceful(const Graph& g, std::uint64_t budget = kDefaultSearchBudget) {
    SearchOutcome out;
    if (g.size() == 0) {
        out.verdict = SearchVerdict::Found;
        out.labeling = Labeling::of(std::vector<int>(static_cast<size_t>(g.order()), 0));
        return out;
    }
    detail::GracefulSearch s(g, budget);
    bool found = s.dfs();
    out.nodes_explored = s.explored;
    if (found) {
        Labeling L = Labeling::of(s.phi);
        if (!verify_graceful(g, L)) throw std::logic_error("search produced an unverified labeling");
        out.verdict = SearchVerdict::Found;
        out.labeling = std::move(L);
    } else if (s.out_of_budget) {
        out.verdict = SearchVerdict::BudgetExceeded;
    } else {
        out.verdict = SearchVerdict::ExhaustedNoLabeling;
    }
    return out;
}

} // namespace eg
