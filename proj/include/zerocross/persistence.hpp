#pragma once

#include <cstddef>
#include <vector>

namespace zerocross {

// One death entry of a 0-dimensional diagram on the line: the gap between
// consecutive sorted points, tagged with its left endpoint.
struct GapEntry {
    double death = 0.0;      // points[left_index+1] - points[left_index], > 0
    double left_point = 0.0; // location of the gap's left endpoint
    std::size_t left_index = 0;
};

// Sorted-gap diagram of a finite point set on the real line. All births are
// zero, so only deaths are kept. entries.size() == source_size - 1 where
// source_size counts distinct points; sum of deaths telescopes to the span.
struct PersistenceDiagram {
    std::vector<GapEntry> entries; // sorted by left_point ascending
    std::size_t source_size = 0;
};

// Duplicates are collapsed before gap computation; <= 1 distinct point yields
// an empty diagram. Input order is irrelevant.
PersistenceDiagram diagram(std::vector<double> points);

struct HistogramBin {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t count = 0;
};

// Equal-width bins over [0, max death]; empty diagram -> empty histogram.
// Throws std::invalid_argument when bins == 0.
std::vector<HistogramBin> histogram(const PersistenceDiagram& d, std::size_t bins);

} // namespace zerocross
