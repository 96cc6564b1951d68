#ifndef BIHOLE_GRAPH_IO_HPP
#define BIHOLE_GRAPH_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "bihole/bipartite_graph.hpp"

namespace bihole {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Edge-list text format (DIMACS-flavored, 1-based):
///   c <comment>
///   p bihole <n_a> <n_b> <m>
///   e <a> <b>        (m such lines)
BipartiteGraph read_graph(std::istream& in);
BipartiteGraph read_graph_text(const std::string& text);
BipartiteGraph read_graph_file(const std::string& path);

void write_graph(const BipartiteGraph& g, std::ostream& out);
std::string write_graph_text(const BipartiteGraph& g);
void write_graph_file(const BipartiteGraph& g, const std::string& path);

}  // namespace bihole

#endif
