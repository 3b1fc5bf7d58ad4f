// Command-line surface: analyze | decompose | classify | construct |
// graceful | theorems | conjectures over graph6 streams, with JSON or CSV
// reports. Runs are reproducible: fixed caps, deterministic algorithms,
// worker output re-serialized in input order.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eulergraph/classify.hpp"
#include "eulergraph/constructions.hpp"
#include "eulergraph/corpus.hpp"
#include "eulergraph/cycles.hpp"
#include "eulergraph/graceful.hpp"
#include "eulergraph/graph.hpp"
#include "eulergraph/graph6.hpp"
#include "eulergraph/structure.hpp"
#include "eulergraph/survey.hpp"
#include "eulergraph/theorems.hpp"

namespace {

using nlohmann::ordered_json;

struct CommonOpts {
    std::string input = "-";
    std::string output = "-";
    std::string format = "json";
    std::uint64_t cycle_cap = eg::kDefaultCycleCap;
    std::uint64_t decomp_cap = eg::kDefaultDecompCap;
    std::uint64_t budget = eg::kDefaultSearchBudget;
    int jobs = 1;
    bool search_nongraceful = false;
    bool no_timing = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--input", o.input, "graph6 input path, or - for stdin");
    cmd->add_option("--output", o.output, "output path, or - for stdout");
    cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--cycle-cap", o.cycle_cap, "abort cycle enumeration beyond this many cycles");
    cmd->add_option("--decomp-cap", o.decomp_cap, "abort decomposition enumeration beyond this many");
    cmd->add_option("--budget", o.budget, "graceful search node-expansion budget");
    cmd->add_option("--jobs", o.jobs, "worker threads (output order is input order regardless)");
    cmd->add_flag("--search-nongraceful", o.search_nongraceful,
                  "run the graceful search even on Rosa-Golomb nongraceful graphs");
    cmd->add_flag("--no-timing", o.no_timing, "suppress wall-clock fields for byte-reproducible output");
}

std::vector<std::string> read_lines(const std::string& path) {
    std::vector<std::string> lines;
    std::string line;
    if (path == "-") {
        while (eg::read_graph6_line(std::cin, line)) lines.push_back(line);
    } else {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open input: " + path);
        while (eg::read_graph6_line(in, line)) lines.push_back(line);
    }
    return lines;
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output: " + path);
    out << text;
}

ordered_json spectrum_json(const eg::EpsilonClass& cls) {
    ordered_json arr = ordered_json::array();
    for (int r = 0; r < 4; ++r)
        if (cls.residues[r]) arr.push_back(r);
    return arr;
}

ordered_json classify_json(const eg::Graph& g, std::uint64_t cycle_cap) {
    ordered_json j;
    eg::EpsilonClass cls = eg::epsilon_class(g, cycle_cap);
    j["class"] = eg::class_tag(cls);
    if (cls.kind == eg::ClassKind::NotEuler) {
        j["xi"] = nullptr;
        j["q_mod4"] = g.size() % 4;
        j["rosa_golomb"] = nullptr;
        j["conjecture"] = false;
        return j;
    }
    eg::ClassCounts counts = eg::class_counts(eg::peel_decomposition(g));
    j["xi"] = counts.xi;
    j["q_mod4"] = g.size() % 4;
    j["rosa_golomb"] = eg::rosa_golomb_status(g) == eg::Gracefulness::Nongraceful ? "nongraceful" : "candidate";
    j["conjecture"] = cls.kind == eg::ClassKind::TwoType && eg::conjecture_predicate(cls, counts);
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

// ---------------------------------------------------------------- analyze

int cmd_analyze(const CommonOpts& o) {
    auto lines = read_lines(o.input);
    std::ostringstream out;
    bool any_violation = false;
    bool any_parse_error = false;
    if (o.format == "csv")
        out << "graph6,p,q,connected,eulerian,bipartite,regular,class,spectrum,xi0,xi1,xi2,xi3,q_mod4,"
               "rosa_golomb,conjecture,degree_two,planar,block_count,beta_0,beta_1,beta_2,beta_3,beta_pairs,"
               "beta_other,parity_violations\n";
    for (const std::string& line : lines) {
        eg::Graph g = eg::Graph::build(1, {});
        try {
            g = eg::parse_graph6(line);
        } catch (const eg::Error& e) {
            std::cerr << "parse error on '" << line << "': " << e.what() << "\n";
            any_parse_error = true;
            continue;
        }
        bool connected = eg::is_connected(g);
        bool eulerian = eg::is_eulerian(g);
        eg::EpsilonClass cls = eg::epsilon_class(g, o.cycle_cap);
        auto reg = eg::regular_degree(g);
        bool bip = eg::is_bipartite(g);
        bool deg2 = eg::has_degree_two_node(g);
        bool planar = eg::is_planar(g);
        std::optional<eg::BlockProfile> bp;
        if (connected) bp = eg::blocks(g, o.cycle_cap);
        std::vector<eg::ParityViolation> violations;
        if (cls.kind == eg::ClassKind::TwoType) violations = eg::intersection_parity_report(g, cls, o.cycle_cap);
        if (!violations.empty()) any_violation = true;

        ordered_json j;
        j["graph6"] = line;
        j["p"] = g.order();
        j["q"] = g.size();
        j["connected"] = connected;
        j["eulerian"] = eulerian;
        j["bipartite"] = bip;
        if (reg) j["regular"] = *reg;
        else j["regular"] = nullptr;
        j["spectrum"] = connected ? spectrum_json(cls) : ordered_json(nullptr);
        ordered_json cj = classify_json(g, o.cycle_cap);
        for (auto& [k, v] : cj.items()) j[k] = v;
        j["degree_two"] = deg2;
        j["planar"] = planar;
        if (bp) {
            ordered_json bj;
            bj["count"] = bp->blocks.size();
            bj["cut_nodes"] = bp->cut_nodes;
            bj["beta_single"] = bp->beta_single;
            ordered_json pairs = ordered_json::object();
            for (auto& [key, n] : bp->beta_pair)
                pairs[std::to_string(key.first) + std::to_string(key.second)] = n;
            bj["beta_pair"] = pairs;
            bj["beta_other"] = bp->beta_other;
            j["blocks"] = bj;
        } else {
            j["blocks"] = nullptr;
        }
        j["parity_violations"] = violations.size();

        if (o.format == "json") {
            out << j.dump() << '\n';
        } else {
            auto xi = j["xi"];
            out << line << ',' << g.order() << ',' << g.size() << ',' << connected << ',' << eulerian << ','
                << bip << ',' << (reg ? std::to_string(*reg) : "") << ',' << j["class"].get<std::string>() << ',';
            std::string spec;
            for (int r = 0; r < 4; ++r)
                if (connected && cls.residues[r]) spec += std::to_string(r);
            out << spec << ',';
            if (xi.is_null()) out << ",,,";
            else out << xi[0] << ',' << xi[1] << ',' << xi[2] << ',' << xi[3];
            out << ',' << g.size() % 4 << ','
                << (j["rosa_golomb"].is_null() ? "" : j["rosa_golomb"].get<std::string>()) << ','
                << j["conjecture"].get<bool>() << ',' << deg2 << ',' << planar << ',';
            if (bp) {
                out << bp->blocks.size() << ',' << bp->beta_single[0] << ',' << bp->beta_single[1] << ','
                    << bp->beta_single[2] << ',' << bp->beta_single[3] << ',';
                std::string pairs;
                for (auto& [key, n] : bp->beta_pair)
                    pairs += std::to_string(key.first) + std::to_string(key.second) + ":" + std::to_string(n) + " ";
                out << csv_escape(pairs) << ',' << bp->beta_other;
            } else {
                out << ",,,,,,";
            }
            out << ',' << violations.size() << '\n';
        }
    }
    write_text(o.output, out.str());
    if (any_violation) return 2;
    if (any_parse_error) return 1;
    return 0;
}

// -------------------------------------------------------------- decompose

int cmd_decompose(const CommonOpts& o, bool all) {
    auto lines = read_lines(o.input);
    std::ostringstream out;
    bool any_parse_error = false;
    for (const std::string& line : lines) {
        ordered_json j;
        j["graph6"] = line;
        try {
            eg::Graph g = eg::parse_graph6(line);
            eg::CycleDecomposition peel = eg::peel_decomposition(g);
            eg::ClassCounts counts = eg::class_counts(peel);
            ordered_json cycles = ordered_json::array();
            for (const eg::Cycle& c : peel) cycles.push_back(c.nodes);
            j["peel"] = cycles;
            j["xi"] = counts.xi;
            j["qi"] = counts.qi;
            if (all) {
                auto decomps = eg::enumerate_decompositions(g, o.decomp_cap);
                j["decomposition_count"] = decomps.size();
                ordered_json djs = ordered_json::array();
                std::set<std::vector<int>> level_spectra;
                for (const auto& d : decomps) {
                    ordered_json dj = ordered_json::array();
                    std::set<int> residues;
                    for (const eg::Cycle& c : d) {
                        dj.push_back(c.nodes);
                        residues.insert(c.residue());
                    }
                    level_spectra.insert(std::vector<int>(residues.begin(), residues.end()));
                    djs.push_back(dj);
                }
                j["decompositions"] = djs;
                ordered_json spectra = ordered_json::array();
                for (const auto& s : level_spectra) spectra.push_back(s);
                j["decomposition_spectra"] = spectra;
            }
        } catch (const eg::Error& e) {
            std::cerr << "error on '" << line << "': " << e.what() << "\n";
            any_parse_error = true;
            continue;
        }
        out << j.dump() << '\n';
    }
    write_text(o.output, out.str());
    return any_parse_error ? 1 : 0;
}

// --------------------------------------------------------------- classify

int cmd_classify(const CommonOpts& o) {
    auto lines = read_lines(o.input);
    std::ostringstream out;
    bool any_parse_error = false;
    if (o.format == "csv") out << "graph6,class,xi0,xi1,xi2,xi3,q_mod4,rosa_golomb,conjecture\n";
    for (const std::string& line : lines) {
        try {
            eg::Graph g = eg::parse_graph6(line);
            ordered_json j = classify_json(g, o.cycle_cap);
            if (o.format == "json") {
                ordered_json full;
                full["graph6"] = line;
                for (auto& [k, v] : j.items()) full[k] = v;
                out << full.dump() << '\n';
            } else {
                out << line << ',' << j["class"].get<std::string>() << ',';
                if (j["xi"].is_null()) out << ",,,";
                else out << j["xi"][0] << ',' << j["xi"][1] << ',' << j["xi"][2] << ',' << j["xi"][3];
                out << ',' << j["q_mod4"] << ','
                    << (j["rosa_golomb"].is_null() ? "" : j["rosa_golomb"].get<std::string>()) << ','
                    << j["conjecture"].get<bool>() << '\n';
            }
        } catch (const eg::Error& e) {
            std::cerr << "error on '" << line << "': " << e.what() << "\n";
            any_parse_error = true;
        }
    }
    write_text(o.output, out.str());
    return any_parse_error ? 1 : 0;
}

// -------------------------------------------------------------- construct

int cmd_construct(const CommonOpts& o, const std::vector<std::string>& words, bool g6_only) {
    std::string spec;
    for (const auto& w : words) {
        if (!spec.empty()) spec += ' ';
        spec += w;
    }
    eg::Graph g = eg::construct_from_spec(spec);
    std::ostringstream out;
    if (g6_only) {
        out << eg::encode_graph6(g) << '\n';
    } else {
        ordered_json j;
        j["spec"] = spec;
        j["graph6"] = g.order() < 63 ? ordered_json(eg::encode_graph6(g)) : ordered_json(nullptr);
        j["p"] = g.order();
        j["q"] = g.size();
        j["eulerian"] = eg::is_eulerian(g);
        if (g.order() <= 64) {
            ordered_json cj = classify_json(g, o.cycle_cap);
            for (auto& [k, v] : cj.items()) j[k] = v;
        }
        out << j.dump() << '\n';
    }
    write_text(o.output, out.str());
    return 0;
}

// --------------------------------------------------------------- graceful

int cmd_graceful(const CommonOpts& o) {
    auto lines = read_lines(o.input);
    std::ostringstream out;
    bool any_parse_error = false;
    if (o.format == "csv") out << "graph6,outcome,labeling,nodes_explored,millis\n";
    for (const std::string& line : lines) {
        try {
            eg::Graph g = eg::parse_graph6(line);
            auto t0 = std::chrono::steady_clock::now();
            eg::SearchOutcome s = eg::search_graceful(g, o.budget);
            auto t1 = std::chrono::steady_clock::now();
            long long ms =
                o.no_timing ? 0 : std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
            std::string outcome = s.verdict == eg::SearchVerdict::Found ? "found"
                                  : s.verdict == eg::SearchVerdict::ExhaustedNoLabeling ? "exhausted_no_labeling"
                                                                                        : "budget_exceeded";
            if (o.format == "json") {
                ordered_json j;
                j["graph6"] = line;
                j["outcome"] = outcome;
                if (s.labeling) j["labeling"] = s.labeling->phi;
                j["nodes_explored"] = s.nodes_explored;
                j["millis"] = ms;
                out << j.dump() << '\n';
            } else {
                out << line << ',' << outcome << ',';
                if (s.labeling)
                    for (size_t i = 0; i < s.labeling->phi.size(); ++i) out << (i ? " " : "") << s.labeling->phi[i];
                out << ',' << s.nodes_explored << ',' << ms << '\n';
            }
        } catch (const eg::Error& e) {
            std::cerr << "error on '" << line << "': " << e.what() << "\n";
            any_parse_error = true;
        }
    }
    write_text(o.output, out.str());
    return any_parse_error ? 1 : 0;
}

// --------------------------------------------------------------- theorems

int cmd_theorems(const CommonOpts& o, bool no_decomp, bool no_edp) {
    auto lines = read_lines(o.input);
    eg::TheoremOptions topt;
    topt.cycle_cap = o.cycle_cap;
    topt.decomp_cap = o.decomp_cap;
    topt.decomposition_checks = !no_decomp;
    topt.edp_checks = !no_edp;
    topt.jobs = o.jobs;
    eg::TheoremSuiteResult res = eg::run_theorem_suite_lines(lines, topt);
    std::ostringstream out;
    if (o.format == "json") {
        out << eg::theorem_suite_json(res).dump(2) << '\n';
    } else {
        out << "theorem,checked,passed,skipped,violations,findings\n";
        for (const auto& t : res.tallies)
            out << csv_escape(t.id) << ',' << t.checked << ',' << t.passed << ',' << t.skipped << ','
                << t.violations.size() << ',' << t.findings.size() << '\n';
    }
    write_text(o.output, out.str());
    if (res.any_violation()) return 2;
    if (res.parse_errors > 0) return 1;
    return 0;
}

// ------------------------------------------------------------ conjectures

int cmd_conjectures(const CommonOpts& o, bool eulerforest_sweep) {
    auto lines = read_lines(o.input);
    eg::SurveyOptions sopt;
    sopt.cycle_cap = o.cycle_cap;
    sopt.decomp_cap = o.decomp_cap;
    sopt.budget = o.budget;
    sopt.search_nongraceful = o.search_nongraceful;
    sopt.include_timing = !o.no_timing;
    sopt.eulerforest_sweep = eulerforest_sweep;
    sopt.jobs = o.jobs;
    eg::SurveyReport rep = eg::survey(lines, sopt);
    write_text(o.output, o.format == "json" ? eg::survey_to_json_lines(rep) : eg::survey_to_csv(rep));
    if (!rep.aggregate.counterexample_candidates.empty()) return 3;
    if (rep.aggregate.parse_errors > 0) return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Euler graph analysis: mod-4 cycle classification, structural checks, graceful search"};
    app.require_subcommand(1);

    CommonOpts analyze_o, decompose_o, classify_o, construct_o, graceful_o, theorems_o, conjectures_o;

    auto* analyze = app.add_subcommand("analyze", "full per-graph structural report");
    add_common(analyze, analyze_o);

    auto* decompose = app.add_subcommand("decompose", "peel cycle decomposition (optionally all of them)");
    add_common(decompose, decompose_o);
    bool decompose_all = false;
    decompose->add_flag("--all", decompose_all, "enumerate every decomposition and their residue spectra");

    auto* classify = app.add_subcommand("classify", "epsilon-class verdicts");
    add_common(classify, classify_o);

    auto* construct = app.add_subcommand("construct", "build a named family member, e.g. book k=3 len=5");
    add_common(construct, construct_o);
    std::vector<std::string> construct_words;
    construct->add_option("spec", construct_words, "construction spec words")->required()->expected(-1);
    bool g6_only = false;
    construct->add_flag("--graph6-only", g6_only, "emit only the graph6 record");

    auto* graceful = app.add_subcommand("graceful", "graceful-labeling search per input graph");
    add_common(graceful, graceful_o);

    auto* theorems = app.add_subcommand("theorems", "run the structural theorem suite over a corpus");
    add_common(theorems, theorems_o);
    bool no_decomp = false, no_edp = false;
    theorems->add_flag("--no-decomp-checks", no_decomp, "skip the exponential decomposition sweeps");
    theorems->add_flag("--no-edp-checks", no_edp, "skip the all-pairs EDP checks");

    auto* conjectures = app.add_subcommand("conjectures", "gracefulness survey with counterexample detection");
    add_common(conjectures, conjectures_o);
    bool eulerforest_sweep = false;
    conjectures->add_flag("--eulerforest-sweep", eulerforest_sweep,
                          "re-search small planted variants of found graphs");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(analyze_o);
        if (decompose->parsed()) return cmd_decompose(decompose_o, decompose_all);
        if (classify->parsed()) return cmd_classify(classify_o);
        if (construct->parsed()) return cmd_construct(construct_o, construct_words, g6_only);
        if (graceful->parsed()) return cmd_graceful(graceful_o);
        if (theorems->parsed()) return cmd_theorems(theorems_o, no_decomp, no_edp);
        if (conjectures->parsed()) return cmd_conjectures(conjectures_o, eulerforest_sweep);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
