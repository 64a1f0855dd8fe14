#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kmdgg/cores.hpp"
#include "kmdgg/growth.hpp"
#include "kmdgg/partition.hpp"

namespace kmdgg {

// Annotation printed after the arrow of a horizontal edge that changes shape.
using EdgeMarker = std::function<std::string(const Partition& lower, const Partition& upper, int mark)>;

// Subscript when the marked component is not the southeastmost one.
EdgeMarker llms_marker(const CoreModel& model);
// "*" when a two-component cover marks the negative-diagonal side.
EdgeMarker negative_side_marker(const CoreModel& model);

// Growth diagram drawn from the top row down. Vertices are part lists ("." for
// the empty partition), "->" sits on horizontal edges that change the shape,
// and a line with "X" between rows i-1 and i marks the square of sigma(i).
std::string growth_text(const GrowthDiagram<Partition>& g, const std::vector<int>& perm, const EdgeMarker& marker);

// Entries per cell, rows from the top (longest row last), " / " between rows.
std::string tableau_text(const Partition& shape, const std::function<std::string(Cell)>& entry);

// Every cell of the marked component carries a star.
std::string starred_strong_text(const MarkedChain<Partition>& P, const CoreModel& model);
// The marked component is primed whenever the cover has two components.
std::string primed_strong_text(const MarkedChain<Partition>& P, const CoreModel& model);
std::string weak_text(const MarkedChain<Partition>& Q);

}  // namespace kmdgg
