#pragma once

#include <iosfwd>
#include <string>

#include "pawkit/graph.hpp"

namespace pawkit {

/// Raised on malformed edge-list input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Edge-list text format: first line `n m k` (vertex count, edge count,
// budget), then m lines `u v` with 0-based vertex indices. Blank lines and
// `#` comments are ignored.

Instance parse_instance(std::istream& in);
Instance parse_instance_string(const std::string& text);
Instance read_instance_file(const std::string& path);

/// Canonical form: header, then edges in lexicographic order. Graphs whose
/// ids are not contiguous (e.g. kernel outputs) are renumbered to 0..n-1 by
/// ascending original id.
std::string format_instance(const Instance& inst);
void write_instance_file(const std::string& path, const Instance& inst);

}  // namespace pawkit
