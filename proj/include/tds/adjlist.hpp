#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tds/graph.hpp"

namespace tds {

struct AdjacencyListError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// An edge listed from only one endpoint.
struct AsymmetricInput : AdjacencyListError {
    using AdjacencyListError::AdjacencyListError;
};
struct SelfLoop : AdjacencyListError {
    using AdjacencyListError::AdjacencyListError;
};
struct DuplicateNeighbour : AdjacencyListError {
    using AdjacencyListError::AdjacencyListError;
};
struct LabelOutOfRange : AdjacencyListError {
    using AdjacencyListError::AdjacencyListError;
};
struct MalformedAdjacencyList : AdjacencyListError {
    using AdjacencyListError::AdjacencyListError;
};

// Result of parsing the 1-based neighbour-list format
//   v: n1 n2 ... nk [| t]
// with '#' comments and blank lines ignored. The optional trailing column
// carries a claimed triangle degree per vertex; it does not affect the graph.
struct ParsedAdjacencyList {
    Graph graph;
    std::vector<std::optional<int>> t_column;  // indexed by internal vertex id

    bool has_full_t_column() const {
        for (const auto& v : t_column)
            if (!v) return false;
        return !t_column.empty();
    }
};

ParsedAdjacencyList parse_adjacency_list(std::string_view text);

// Just the graph; the t column, if any, is ignored.
Graph from_adjacency_list(std::string_view text);

// 1-based neighbour-list rendering, one row per vertex, columns aligned;
// appends "| t" per row when a profile is given.
std::string to_adjacency_list(const Graph& g, const std::vector<int>* t = nullptr);

}  // namespace tds
