#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "kmdgg/cores.hpp"
#include "kmdgg/growth.hpp"

namespace kmdgg {

struct NotSymmetric : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ShiftedEntry {
    int value = 0;
    bool primed = false;
    bool operator==(const ShiftedEntry&) const = default;
};

// Row r (from 1) of a shifted diagram starts in column r.
struct ShiftedTableau {
    std::vector<std::vector<ShiftedEntry>> rows;

    // Rows from the top down, e.g. "7 / 3 5' / 1 2' 4 6'".
    std::string str() const;
    bool operator==(const ShiftedTableau&) const = default;
};

// Keeps the cells on or above the main diagonal of a transpose-symmetric
// chain. Strong chains get a prime when the marked component sits on negative
// diagonals.
ShiftedTableau to_shifted_strong(const MarkedChain<Partition>& P, const CoreModel& model);
ShiftedTableau to_shifted_weak(const MarkedChain<Partition>& Q);

MarkedChain<Partition> from_shifted_strong(const ShiftedTableau& P, const CoreModel& model);
MarkedChain<Partition> from_shifted_weak(const ShiftedTableau& Q);

struct ShiftedPair {
    ShiftedTableau insertion;
    ShiftedTableau recording;
};

// Shifted insertion: row bumping until an entry leaves the diagonal, column
// bumping afterwards. The recording entry is primed when column bumping
// occurred.
ShiftedPair sagan_worley(const std::vector<int>& word);

}  // namespace kmdgg
