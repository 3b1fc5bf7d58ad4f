#pragma once

// Conjecture harness: classifies each input graph, applies the
// Rosa-Golomb filter, runs the graceful search where it applies, and
// aggregates counterexample candidates. Records serialize one JSON object
// per line with an aggregate footer, or as flat CSV.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "eulergraph/classify.hpp"
#include "eulergraph/constructions.hpp"
#include "eulergraph/cycles.hpp"
#include "eulergraph/graceful.hpp"
#include "eulergraph/graph.hpp"
#include "eulergraph/graph6.hpp"

namespace eg {

struct SurveyOptions {
    std::uint64_t cycle_cap = kDefaultCycleCap;
    std::uint64_t decomp_cap = kDefaultDecompCap;
    std::uint64_t budget = kDefaultSearchBudget;
    bool search_nongraceful = false;
    bool include_timing = true;
    bool eulerforest_sweep = false; // re-search small planted variants of found graphs
    int jobs = 1;
};

struct SurveyRecord {
    std::string graph6;
    bool parse_ok = true;
    std::string error;
    int p = 0;
    int q = 0;
    std::string cls;
    std::optional<ClassCounts> counts; // from the peel decomposition
    std::optional<std::string> rosa;
    bool conjecture_applies = false;
    std::string outcome;
    std::optional<std::vector<int>> labeling;
    std::uint64_t nodes_explored = 0;
    long long millis = 0;
    std::string eulerforest_of; // parent graph6 for planted probes
};

struct SurveyAggregate {
    std::uint64_t graphs = 0;
    std::uint64_t parse_errors = 0;
    std::map<std::string, std::uint64_t> by_class;
    std::uint64_t searched = 0;
    std::uint64_t found = 0;
    std::uint64_t exhausted = 0;
    std::uint64_t budget_exceeded = 0;
    std::uint64_t skipped_nongraceful = 0;
    std::vector<std::string> counterexample_candidates;
};

struct SurveyReport {
    std::vector<SurveyRecord> records;
    SurveyAggregate aggregate;
};

namespace detail {

inline SurveyRecord survey_one(const std::string& line, const Graph& g, const SurveyOptions& opt,
                               bool force_search = false) {
    SurveyRecord r;
    r.graph6 = encode_graph6(g);
    r.p = g.order();
    r.q = g.size();
    EpsilonClass cls = epsilon_class(g, opt.cycle_cap);
    r.cls = class_tag(cls);
    bool eul = cls.kind != ClassKind::NotEuler;
    if (eul) {
        r.counts = class_counts(peel_decomposition(g));
        Gracefulness rg = rosa_golomb_status(g);
        r.rosa = rg == Gracefulness::Nongraceful ? "nongraceful" : "candidate";
        if (cls.kind == ClassKind::TwoType) r.conjecture_applies = conjecture_predicate(cls, *r.counts);
    }
    (void)line;

    bool do_search;
    if (force_search) {
        do_search = true;
    } else if (!eul) {
        do_search = false;
        r.outcome = "not_searched_not_euler";
    } else if (r.rosa == "nongraceful" && !opt.search_nongraceful) {
        do_search = false;
        r.outcome = "skipped_nongraceful";
    } else {
        do_search = true;
    }
    if (do_search) {
        auto t0 = std::chrono::steady_clock::now();
        SearchOutcome s = search_graceful(g, opt.budget);
        auto t1 = std::chrono::steady_clock::now();
        r.nodes_explored = s.nodes_explored;
        if (opt.include_timing)
            r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        switch (s.verdict) {
            case SearchVerdict::Found:
                r.outcome = "found";
                r.labeling = s.labeling->phi;
                break;
            case SearchVerdict::ExhaustedNoLabeling: r.outcome = "exhausted_no_labeling"; break;
            case SearchVerdict::BudgetExceeded: r.outcome = "budget_exceeded"; break;
        }
    }
    return r;
}

// Deterministic small sweep of planted trees, at most 4 planted nodes.
inline std::vector<PlantingPlan> eulerforest_plans(const Graph& g) {
    auto path = [](NodeId host, int edges) {
        PlantedTree t;
        t.host = host;
        t.root = 0;
        t.parent.assign(static_cast<size_t>(edges) + 1, 0);
        t.parent[0] = -1;
        for (int i = 1; i <= edges; ++i) t.parent[i] = i - 1;
        return t;
    };
    auto star3 = [](NodeId host) {
        PlantedTree t;
        t.host = host;
        t.root = 0;
        t.parent = {-1, 0, 0, 0};
        return t;
    };
    std::vector<PlantingPlan> plans;
    plans.push_back({path(0, 1)});
    plans.push_back({path(0, 2)});
    plans.push_back({path(0, 3)});
    plans.push_back({path(0, 4)});
    plans.push_back({star3(0)});
    if (g.order() >= 2) {
        plans.push_back({path(0, 1), path(1, 1)});
        plans.push_back({path(0, 2), path(1, 2)});
    }
    return plans;
}

} // namespace detail

inline SurveyReport survey(const std::vector<std::string>& graph6_lines, const SurveyOptions& opt) {
    struct Slot {
        std::vector<SurveyRecord> records;
    };
    std::vector<Slot> slots(graph6_lines.size());
    std::atomic<size_t> next{0};

    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= graph6_lines.size()) return;
            const std::string& line = graph6_lines[i];
            Slot& slot = slots[i];
            Graph g = Graph::build(1, {});
            try {
                g = parse_graph6(line);
            } catch (const Error& e) {
                SurveyRecord r;
                r.graph6 = line;
                r.parse_ok = false;
                r.error = e.what();
                r.outcome = "parse_error";
                slot.records.push_back(std::move(r));
                continue;
            }
            SurveyRecord r = detail::survey_one(line, g, opt);
            bool sweep = opt.eulerforest_sweep && r.outcome == "found" && r.conjecture_applies;
            std::string parent_g6 = r.graph6;
            slot.records.push_back(std::move(r));
            if (sweep) {
                for (const PlantingPlan& plan : detail::eulerforest_plans(g)) {
                    Graph planted = plant(g, plan);
                    SurveyRecord pr = detail::survey_one("", planted, opt, /*force_search=*/true);
                    pr.eulerforest_of = parent_g6;
                    slot.records.push_back(std::move(pr));
                }
            }
        }
    };

    int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
    }

    SurveyReport rep;
    for (Slot& s : slots)
        for (SurveyRecord& r : s.records) rep.records.push_back(std::move(r));

    SurveyAggregate& a = rep.aggregate;
    for (const SurveyRecord& r : rep.records) {
        ++a.graphs;
        if (!r.parse_ok) {
            ++a.parse_errors;
            continue;
        }
        a.by_class[r.cls] += 1;
        if (r.outcome == "skipped_nongraceful") ++a.skipped_nongraceful;
        if (r.outcome == "found" || r.outcome == "exhausted_no_labeling" || r.outcome == "budget_exceeded")
            ++a.searched;
        if (r.outcome == "found") ++a.found;
        if (r.outcome == "exhausted_no_labeling") {
            ++a.exhausted;
            if (r.conjecture_applies) a.counterexample_candidates.push_back(r.graph6);
        }
        if (r.outcome == "budget_exceeded") ++a.budget_exceeded;
    }
    return rep;
}

inline nlohmann::ordered_json survey_record_json(const SurveyRecord& r) {
    nlohmann::ordered_json j;
    j["graph6"] = r.graph6;
    if (!r.parse_ok) {
        j["outcome"] = r.outcome;
        j["error"] = r.error;
        return j;
    }
    j["p"] = r.p;
    j["q"] = r.q;
    j["class"] = r.cls;
    if (r.counts) j["xi"] = r.counts->xi;
    else j["xi"] = nullptr;
    if (r.rosa) j["rosa_golomb"] = *r.rosa;
    else j["rosa_golomb"] = nullptr;
    j["conjecture_applies"] = r.conjecture_applies;
    j["outcome"] = r.outcome;
    if (r.labeling) j["labeling"] = *r.labeling;
    j["nodes_explored"] = r.nodes_explored;
    j["millis"] = r.millis;
    if (!r.eulerforest_of.empty()) j["eulerforest_of"] = r.eulerforest_of;
    return j;
}

inline nlohmann::ordered_json survey_aggregate_json(const SurveyAggregate& a) {
    nlohmann::ordered_json j;
    j["aggregate"] = true;
    j["graphs"] = a.graphs;
    j["parse_errors"] = a.parse_errors;
    j["by_class"] = a.by_class;
    j["searched"] = a.searched;
    j["found"] = a.found;
    j["exhausted_no_labeling"] = a.exhausted;
    j["budget_exceeded"] = a.budget_exceeded;
    j["skipped_nongraceful"] = a.skipped_nongraceful;
    j["counterexample_candidates"] = a.counterexample_candidates;
    return j;
}

inline std::string survey_to_json_lines(const SurveyReport& rep) {
    std::ostringstream out;
    for (const SurveyRecord& r : rep.records) out << survey_record_json(r).dump() << '\n';
    out << survey_aggregate_json(rep.aggregate).dump() << '\n';
    return out.str();
}

inline std::string survey_to_csv(const SurveyReport& rep) {
    std::ostringstream out;
    out << "graph6,p,q,class,xi0,xi1,xi2,xi3,rosa_golomb,conjecture_applies,outcome,labeling,"
           "nodes_explored,millis,eulerforest_of,error\n";
    for (const SurveyRecord& r : rep.records) {
        out << r.graph6 << ',';
        if (r.parse_ok) out << r.p << ',' << r.q;
        else out << ',';
        out << ',' << r.cls << ',';
        if (r.counts)
            out << r.counts->xi[0] << ',' << r.counts->xi[1] << ',' << r.counts->xi[2] << ',' << r.counts->xi[3];
        else
            out << ",,,";
        out << ',' << (r.rosa ? *r.rosa : "") << ',' << (r.conjecture_applies ? "true" : "false") << ','
            << r.outcome << ',';
        if (r.labeling) {
            for (size_t i = 0; i < r.labeling->size(); ++i) out << (i ? " " : "") << (*r.labeling)[i];
        }
        out << ',' << r.nodes_explored << ',' << r.millis << ',' << r.eulerforest_of << ',' << r.error << '\n';
    }
    out << "# graphs=" << rep.aggregate.graphs << " searched=" << rep.aggregate.searched
        << " found=" << rep.aggregate.found << " exhausted=" << rep.aggregate.exhausted
        << " budget_exceeded=" << rep.aggregate.budget_exceeded
        << " candidates=" << rep.aggregate.counterexample_candidates.size() << '\n';
    return out.str();
}

} // namespace eg
