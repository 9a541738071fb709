#include "tds/adjlist.hpp"

#include <algorithm>
#include <sstream>

namespace tds {

namespace {

struct Row {
    int label = 0;  // 1-based
    std::vector<int> neighbours;
    std::optional<int> t;
};

int parse_label(const std::string& token, int line_no) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(token, &pos);
    } catch (const std::exception&) {
        throw MalformedAdjacencyList("line " + std::to_string(line_no) +
                                     ": expected a vertex label, got '" + token + "'");
    }
    if (pos != token.size())
        throw MalformedAdjacencyList("line " + std::to_string(line_no) +
                                     ": expected a vertex label, got '" + token + "'");
    if (value < 1)
        throw LabelOutOfRange("line " + std::to_string(line_no) + ": vertex label " +
                              std::to_string(value) + " is not positive");
    if (value > kMaxVertices)
        throw LabelOutOfRange("line " + std::to_string(line_no) + ": vertex label " +
                              std::to_string(value) + " exceeds the maximum of " +
                              std::to_string(kMaxVertices));
    return value;
}

}  // namespace

ParsedAdjacencyList parse_adjacency_list(std::string_view text) {
    std::vector<Row> rows;
    std::vector<bool> seen_label(kMaxVertices + 1, false);
    int max_label = 0;

    std::istringstream lines{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(lines, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream in(raw);
        std::string head;
        if (!(in >> head)) continue;  // blank

        Row row;
        if (head.back() == ':') {
            head.pop_back();
            if (head.empty())
                throw MalformedAdjacencyList("line " + std::to_string(line_no) +
                                             ": missing vertex label before ':'");
            row.label = parse_label(head, line_no);
        } else {
            row.label = parse_label(head, line_no);
            std::string colon;
            if (!(in >> colon) || colon != ":")
                throw MalformedAdjacencyList("line " + std::to_string(line_no) +
                                             ": expected ':' after the vertex label");
        }
        if (seen_label[row.label])
            throw MalformedAdjacencyList("line " + std::to_string(line_no) +
                                         ": duplicate row for vertex " +
                                         std::to_string(row.label));
        seen_label[row.label] = true;
        max_label = std::max(max_label, row.label);

        std::string token;
        bool in_t_column = false;
        while (in >> token) {
            if (token == "|") {
                if (in_t_column || row.t)
                    throw MalformedAdjacencyList("line " + std::to_string(line_no) +
                                                 ": more than one '|' separator");
                in_t_column = true;
                continue;
            }
            if (in_t_column) {
                if (row.t)
                    throw MalformedAdjacencyList("line " + std::to_string(line_no) +
                                                 ": more than one value after '|'");
                std::size_t pos = 0;
                int value = 0;
                try {
                    value = std::stoi(token, &pos);
                } catch (const std::exception&) {
                    pos = std::string::npos;
                }
                if (pos != token.size())
                    throw MalformedAdjacencyList("line " + std::to_string(line_no) +
                                                 ": bad value after '|': '" + token + "'");
                row.t = value;
                continue;
            }
            const int nb = parse_label(token, line_no);
            if (nb == row.label)
                throw SelfLoop("line " + std::to_string(line_no) + ": vertex " +
                               std::to_string(row.label) + " lists itself");
            if (std::find(row.neighbours.begin(), row.neighbours.end(), nb) !=
                row.neighbours.end())
                throw DuplicateNeighbour("line " + std::to_string(line_no) + ": vertex " +
                                         std::to_string(row.label) + " lists " +
                                         std::to_string(nb) + " twice");
            row.neighbours.push_back(nb);
            max_label = std::max(max_label, nb);
        }
        if (in_t_column && !row.t)
            throw MalformedAdjacencyList("line " + std::to_string(line_no) +
                                         ": missing value after '|'");
        rows.push_back(std::move(row));
    }

    const int n = max_label;
    ParsedAdjacencyList out{Graph(n), std::vector<std::optional<int>>(n)};
    std::vector<std::vector<bool>> listed(n, std::vector<bool>(n, false));
    for (const Row& row : rows) {
        const int u = row.label - 1;
        for (int nb : row.neighbours) listed[u][nb - 1] = true;
        out.t_column[u] = row.t;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (listed[u][v] != listed[v][u])
                throw AsymmetricInput("edge " + std::to_string(u + 1) + "-" +
                                      std::to_string(v + 1) +
                                      " is listed from only one endpoint");
            if (listed[u][v]) out.graph.add_edge(u, v);
        }
    return out;
}

Graph from_adjacency_list(std::string_view text) {
    return parse_adjacency_list(text).graph;
}

std::string to_adjacency_list(const Graph& g, const std::vector<int>* t) {
    const int n = g.order();
    int width = 1;
    for (int x = n; x >= 10; x /= 10) ++width;
    std::ostringstream out;
    for (int v = 0; v < n; ++v) {
        std::string label = std::to_string(v + 1);
        out << std::string(width - label.size(), ' ') << label << ":";
        g.neighbours(v).for_each([&](int u) {
            std::string nb = std::to_string(u + 1);
            out << ' ' << std::string(width - nb.size(), ' ') << nb;
        });
        if (t) out << " | " << (*t)[v];
        out << '\n';
    }
    return out.str();
}

}  // namespace tds
