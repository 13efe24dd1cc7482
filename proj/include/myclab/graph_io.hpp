#ifndef MYCLAB_GRAPH_IO_HPP
#define MYCLAB_GRAPH_IO_HPP

#include <string>

#include "myclab/graph.hpp"

namespace myclab {

// Header-less graph6: 6-bit encoding of the upper triangle, column-major.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);

// JSON object {"n": int, "edges": [[i,j], ...]}.
std::string to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

std::string to_dot(const Graph& g);

}  // namespace myclab

#endif
