#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "nodalgeo/graph.hpp"
#include "nodalgeo/linalg.hpp"

namespace nodalgeo {

/// Input-format error carrying the 1-based line it occurred on.
struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

/// Edge-list text format: first line "n m", then m lines "u v" (0-indexed).
Graph read_edge_list(std::istream& in);
Graph load_edge_list(const std::string& path);
std::string write_edge_list(const Graph& g);

/// Rotation-system text format: one line per vertex, "v: w1 w2 ... wd" in
/// cyclic order. Validated against the graph on read.
RotationSystem read_rotation(std::istream& in, const Graph& g);
RotationSystem load_rotation(const std::string& path, const Graph& g);
std::string write_rotation(const RotationSystem& rot);

/// Operator matrix format: first line "n", then n lines of n decimals.
DenseMatrix read_matrix(std::istream& in);
DenseMatrix load_matrix(const std::string& path);
std::string write_matrix(const DenseMatrix& m);

}  // namespace nodalgeo
