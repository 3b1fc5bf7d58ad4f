// Emits exhaustive isomorph-free graph6 corpora at desk scale: all
// connected Eulerian graphs of a given order, all connected graphs, or all
// graphs, optionally bounded in size. Stands in for an external generator
// in the documented corpus workflow.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "eulergraph/corpus.hpp"
#include "eulergraph/graph6.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exhaustive small-graph corpus generator (graph6 output)"};
    int n = 0;
    int n_max = -1;
    int max_edges = 1 << 20;
    std::string type = "eulerian";
    std::string output = "-";
    app.add_option("--n", n, "order (or lower bound when --n-max is given)")->required();
    app.add_option("--n-max", n_max, "generate all orders n..n-max");
    app.add_option("--type", type, "eulerian | connected | all")
        ->check(CLI::IsMember({"eulerian", "connected", "all"}));
    app.add_option("--max-edges", max_edges, "only graphs with at most this many edges");
    app.add_option("--output", output, "output path, or - for stdout");
    CLI11_PARSE(app, argc, argv);
    if (n_max < n) n_max = n;

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (output != "-") {
        file.open(output);
        if (!file) {
            std::cerr << "cannot open " << output << "\n";
            return 1;
        }
        out = &file;
    }

    try {
        for (int order = n; order <= n_max; ++order) {
            if (type == "eulerian") {
                for (const eg::Graph& g : eg::corpus::connected_eulerian_graphs(order))
                    if (g.size() <= max_edges) *out << eg::encode_graph6(g) << '\n';
            } else if (type == "connected") {
                for (const eg::Graph& g : eg::corpus::connected_graphs(order, max_edges))
                    *out << eg::encode_graph6(g) << '\n';
            } else {
                for (std::uint64_t c : eg::corpus::all_graph_certs(order, max_edges))
                    *out << eg::encode_graph6(eg::corpus::to_graph(eg::corpus::small_from_cert(c, order))) << '\n';
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
