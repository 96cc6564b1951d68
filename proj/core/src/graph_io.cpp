#include "bihole/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace bihole {

BipartiteGraph read_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n_a = -1, n_b = -1;
    long long m_declared = -1, m_seen = 0;
    BipartiteGraph g;

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            if (n_a >= 0) throw ParseError(lineno, "duplicate problem line");
            std::string kind;
            ls >> kind >> n_a >> n_b >> m_declared;
            if (!ls || kind != "bihole" || n_a < 0 || n_b < 0 || m_declared < 0)
                throw ParseError(lineno, "malformed problem line, expected 'p bihole <n_a> <n_b> <m>'");
            g = BipartiteGraph(n_a, n_b);
        } else if (tag == "e") {
            if (n_a < 0) throw ParseError(lineno, "edge before problem line");
            int a = 0, b = 0;
            ls >> a >> b;
            if (!ls) throw ParseError(lineno, "malformed edge line");
            if (a < 1 || a > n_a || b < 1 || b > n_b)
                throw ParseError(lineno, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                                             ") outside 1.." + std::to_string(n_a) + " x 1.." +
                                             std::to_string(n_b));
            g.add_edge(a - 1, b - 1);
            ++m_seen;
        } else {
            throw ParseError(lineno, "unknown line tag '" + tag + "'");
        }
    }
    if (n_a < 0) throw ParseError(lineno, "missing problem line");
    if (m_seen != m_declared)
        throw ParseError(lineno, "edge count mismatch: declared " + std::to_string(m_declared) +
                                     ", found " + std::to_string(m_seen));
    return g;
}

BipartiteGraph read_graph_text(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

BipartiteGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(const BipartiteGraph& g, std::ostream& out) {
    out << "p bihole " << g.size_a() << ' ' << g.size_b() << ' ' << g.edge_count() << '\n';
    for (int a = 0; a < g.size_a(); ++a) {
        const Bitset& row = g.row(a);
        for (std::size_t b = row.find_first(); b != Bitset::npos; b = row.find_next(b))
            out << "e " << (a + 1) << ' ' << (b + 1) << '\n';
    }
}

std::string write_graph_text(const BipartiteGraph& g) {
    std::ostringstream out;
    write_graph(g, out);
    return out.str();
}

void write_graph_file(const BipartiteGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    write_graph(g, out);
}

}  // namespace bihole
