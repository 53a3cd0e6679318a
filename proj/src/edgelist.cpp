#include "pawkit/edgelist.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

namespace pawkit {

namespace {

// Strips comments and yields the whitespace-separated tokens of the next
// non-blank line.
bool next_data_line(std::istream& in, std::vector<long long>& tokens) {
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        tokens.clear();
        long long value;
        while (ss >> value) tokens.push_back(value);
        if (!ss.eof()) throw ParseError("non-numeric token in line: " + line);
        if (!tokens.empty()) return true;
    }
    return false;
}

}  // namespace

Instance parse_instance(std::istream& in) {
    std::vector<long long> tokens;
    if (!next_data_line(in, tokens)) throw ParseError("missing header line");
    if (tokens.size() != 3) throw ParseError("header must be `n m k`");
    long long n = tokens[0], m = tokens[1], k = tokens[2];
    if (n < 0 || m < 0 || k < 0) throw ParseError("header values must be non-negative");
    if (n > 1'000'000) throw ParseError("vertex count too large");

    std::vector<VertexPair> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, tokens))
            throw ParseError("expected " + std::to_string(m) + " edges, got " +
                             std::to_string(i));
        if (tokens.size() != 2) throw ParseError("edge line must be `u v`");
        long long u = tokens[0], v = tokens[1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge endpoint out of range");
        if (u == v) throw ParseError("self-loop in edge list");
        edges.push_back(ordered_pair(static_cast<VertexId>(u), static_cast<VertexId>(v)));
    }
    if (next_data_line(in, tokens)) throw ParseError("trailing data after edge list");

    try {
        return Instance{Graph::from_edge_list(static_cast<int>(n), edges),
                        static_cast<int>(k)};
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Instance parse_instance_string(const std::string& text) {
    std::istringstream ss(text);
    return parse_instance(ss);
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return parse_instance(in);
}

std::string format_instance(const Instance& inst) {
    const Graph& g = inst.graph;
    std::unordered_map<VertexId, int> index;
    index.reserve(g.vertex_count());
    int next = 0;
    for (VertexId v : g.vertices()) index[v] = next++;

    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << ' ' << inst.budget << '\n';
    for (auto [u, v] : g.edges()) {
        int a = index[u], b = index[v];
        if (a > b) std::swap(a, b);
        out << a << ' ' << b << '\n';
    }
    return out.str();
}

void write_instance_file(const std::string& path, const Instance& inst) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << format_instance(inst);
}

}  // namespace pawkit
