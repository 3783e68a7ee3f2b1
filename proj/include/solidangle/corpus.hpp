#pragma once

// Built-in test polygons in polygon-file text: convex and non-convex, lattice
// and rational vertices, with the origin inside, outside, on an edge and at a
// vertex.

#include <string>
#include <vector>

namespace solidangle {

struct CorpusEntry {
    std::string name;
    std::string text;
    bool lattice;
};

const std::vector<CorpusEntry>& polygon_corpus();

} // namespace solidangle
