#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "tds/graph.hpp"

namespace tds {

struct MalformedGraph6 : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Short-form graph6: header byte n+63, then the upper triangle of the
// adjacency matrix in column order, six bits per byte, each byte offset
// by 63, zero padded. Only n < 63 is supported; long-form headers are
// rejected.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view line);

}  // namespace tds
