#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "clf/graph.hpp"
#include "clf/hypergraph.hpp"

namespace clf {

// "graph n m" followed by one "u v" line per edge (u < v, lexicographic).
std::string format_graph(const Graph& g);
Graph parse_graph(std::string_view text);

using ClassList = std::vector<std::vector<std::size_t>>;

// "hypergraph n m", one line per edge in stored order, then optionally one
// "class <i>: <block indices>" line per parallel class (0-based).
std::string format_hypergraph(const Hypergraph& h, const ClassList& classes = {});

struct HypergraphFile {
    Hypergraph hypergraph;
    ClassList classes;
};

HypergraphFile parse_hypergraph(std::string_view text);

// Throws ParseError when the file cannot be read or written.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

Graph load_graph(const std::string& path);
Hypergraph load_hypergraph(const std::string& path);

}  // namespace clf
