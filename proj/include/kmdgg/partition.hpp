#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace kmdgg {

// Rows are numbered from 1 at the bottom (French convention).
struct Cell {
    int row = 1;
    int col = 1;
    auto operator<=>(const Cell&) const = default;
};

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int row) const { return row >= 1 && row <= rows() ? parts_[row - 1] : 0; }
    int size() const;
    bool empty() const { return parts_.empty(); }

    bool has(Cell c) const { return c.row >= 1 && c.col >= 1 && c.col <= part(c.row); }
    bool contains(const Partition& smaller) const;
    Partition transpose() const;
    Partition unite(const Partition& o) const;
    Partition intersect(const Partition& o) const;

    // Listed from the bottom row upward.
    std::vector<Cell> addable() const;
    std::vector<Cell> removable() const;
    std::vector<Cell> cells() const;
    // Cells of this diagram missing from smaller, which must be contained.
    std::vector<Cell> minus(const Partition& smaller) const;

    Partition add(Cell c) const;
    Partition remove(Cell c) const;

    int hook(Cell c) const;

    std::string str() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const;
};

inline int diagonal(Cell c, int anchor = 0) { return c.col - c.row + anchor; }

std::vector<Partition> partitions_of(int n);

}  // namespace kmdgg
