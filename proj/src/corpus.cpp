#include "solidangle/corpus.hpp"

namespace solidangle {

const std::vector<CorpusEntry>& polygon_corpus()
{
    static const std::vector<CorpusEntry> corpus = {
        {"unit-square", "4\n0 0\n1 0\n1 1\n0 1\n", true},
        {"offset-square", "4\n1 1\n2 1\n2 2\n1 2\n", true},
        {"centered-square", "4\n-1 -1\n1 -1\n1 1\n-1 1\n", true},
        {"skew-triangle", "3\n1 1\n5 3\n3 5\n", true},
        {"delta-3-2", "3\n0 0\n3 0\n0 2\n", true},
        {"rational-triangle", "3\n1/2 1/3\n7/3 1/2\n1 5/2\n", false},
        {"l-shape", "6\n0 0\n3 0\n3 1\n1 1\n1 3\n0 3\n", true},
        {"l-shape-half-shift", "6\n-1/2 -1/2\n5/2 -1/2\n5/2 1/2\n1/2 1/2\n1/2 5/2\n-1/2 5/2\n", false},
        {"chevron", "4\n-2 -2\n0 -1\n2 -2\n0 2\n", true},
        {"origin-on-edge", "3\n-1 0\n2 0\n1 2\n", true},
        {"origin-on-diagonal-edge", "3\n-1/2 -1/2\n3/2 3/2\n-1 2\n", false},
        {"rational-pentagon", "5\n0 -1\n2 -1/2\n5/2 3/2\n1/2 5/2\n-3/2 1\n", false},
        {"sliver", "3\n1 0\n7 1\n1 1/3\n", false},
        {"star", "8\n3 0\n1 1\n0 3\n-1 1\n-3 0\n-1 -1\n0 -3\n1 -1\n", true},
        {"far-triangle", "3\n10 7\n13 8\n11 11\n", true},
        {"third-quadrant", "3\n-3 -1\n-1 -3\n-1 -1\n", true},
        {"u-shape", "8\n-2 -2\n2 -2\n2 2\n1 2\n1 -1\n-1 -1\n-1 2\n-2 2\n", true},
        {"rational-origin-vertex", "3\n0 0\n5/2 1/3\n1/3 7/4\n", false},
        {"dart", "4\n0 0\n4 1\n1 1\n1 4\n", true},
        {"rational-quad", "4\n-7/3 -5/2\n11/4 -3/2\n3 13/5\n-5/2 9/4\n", false},
        {"hexagon", "6\n2 0\n4 1\n4 3\n2 4\n0 3\n0 1\n", true},
        {"origin-inside-triangle", "3\n-1 -1\n2 0\n0 2\n", true},
        {"reflex-at-origin", "5\n-2 -1\n0 0\n2 -1\n3 2\n-1 3\n", true},
        {"rational-notch", "6\n-3/2 -1\n5/2 -1\n5/2 3/2\n1/3 1/2\n-1/2 5/2\n-3/2 3/2\n", false},
    };
    return corpus;
}

} // namespace solidangle
