#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "kmdgg/growth.hpp"
#include "kmdgg/partition.hpp"

namespace kmdgg {

struct NotCore : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotCover : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Boundary of a partition read as a 0/1 sequence indexed by integers. Row r
// contributes a 0 at part(r) - r + anchor, column c a 1 at
// c - 1 + anchor - (length of column c). Adding a cell on diagonal d turns
// the bits at (d - 1, d) from 01 into 10.
class EdgeSequence {
public:
    EdgeSequence(const Partition& p, int anchor);

    int anchor() const { return anchor_; }
    // Outside [lo, hi) every bit below is 0 and every bit above is 1.
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    int bit(int pos) const;
    void set(int pos, int value);

    Partition partition() const;

private:
    int anchor_ = 0;
    int lo_ = 0;
    int hi_ = 0;
    std::vector<char> bits_;
};

// A reflection acting on boundary positions, given by one representative
// transposition (a, b) with a < b.
struct Reflection {
    int a = 0;
    int b = 0;
    auto operator<=>(const Reflection&) const = default;
};

struct CoreCover {
    Partition shape;
    Reflection reflection;
    // Components sorted from the southeast: decreasing largest diagonal.
    std::vector<std::vector<Cell>> components;
    int multiplicity() const { return static_cast<int>(components.size()); }
};

// Orbits of the empty partition under a group generated by reflections of
// the boundary positions. Diagonals are grouped into classes; generator i
// swaps the bits at (d - 1, d) for every diagonal d of class i.
//   llms(n):          classes d mod n, translates by n (affine type A)
//   folded(n, k):     classes +-d mod 2n, translates by 2n, and the flip
//                     x -> -1 - x (affine type C from A_{2n-1})
//   folded_limit(k):  classes |d| with the flip only
class CoreModel {
public:
    static CoreModel llms(int n, int anchor = 0);
    static CoreModel folded(int n, int anchor);
    static CoreModel folded_limit(int anchor);

    int period() const { return period_; }
    int anchor() const { return anchor_; }
    bool flipped() const { return flipped_; }
    // Number of generators, or -1 when there are infinitely many.
    int generator_count() const;
    int class_of(int diag) const;
    int class_of(Cell c) const { return class_of(diagonal(c, anchor_)); }

    Partition act(int node, const Partition& p) const;
    // Word letters act right to left.
    Partition act_word(const std::vector<int>& word, Partition p) const;

    // Number of generators needed to reach the shape from the empty
    // partition; throws NotCore when the shape is not in the orbit.
    int length(const Partition& p) const;
    std::vector<int> reduced_word(const Partition& p) const;
    bool in_orbit(const Partition& p) const;

    std::vector<std::pair<int, Partition>> weak_up(const Partition& p) const;
    std::vector<std::pair<int, Partition>> weak_down(const Partition& p) const;
    std::vector<CoreCover> strong_up(const Partition& p) const;
    // Lower covers; components are those of the cover seen from below.
    std::vector<CoreCover> strong_down(const Partition& p) const;

    // Components of a cover lower -> upper; throws NotCover.
    std::vector<std::vector<Cell>> components(const Partition& lower, const Partition& upper) const;

    // Applies every transposition in the orbit of the reflection.
    Partition reflect(const Partition& p, Reflection t) const;

private:
    CoreModel(int period, int anchor, bool flipped) : period_(period), anchor_(anchor), flipped_(flipped) {}

    std::vector<std::pair<int, int>> transpositions(const EdgeSequence& seq, Reflection t) const;
    std::vector<Reflection> candidate_reflections(const EdgeSequence& seq) const;
    std::vector<std::vector<Cell>> ribbons(const Partition& lower, const EdgeSequence& seq,
                                           const std::vector<std::pair<int, int>>& swaps) const;

    int period_ = 0;  // 0: no translations
    int anchor_ = 0;
    bool flipped_ = false;
};

bool is_core(const Partition& p, int n);

// The growth rule on a core model: single-box Young moves transported to weak
// covers (see the diagonal and off-diagonal rules in cores.cpp).
class CoreBijection final : public DifferentialBijection<Partition> {
public:
    explicit CoreBijection(CoreModel model) : model_(std::move(model)) {}

    const CoreModel& model() const { return model_; }

    int r() const override { return 1; }
    Partition bottom() const override { return {}; }

    Up<Partition> diag(const Partition& x, int color) const override;
    Up<Partition> diag(const Partition& x, const Down<Partition>& d) const override;
    std::variant<int, Down<Partition>> diag_inverse(const Partition& x, const Up<Partition>& u) const override;
    Up<Partition> offdiag(const Partition& x, const Partition& y, const Down<Partition>& d) const override;
    Down<Partition> offdiag_inverse(const Partition& x, const Partition& y, const Up<Partition>& u) const override;

    std::vector<Neighbor<Partition>> up(Side side, const Partition& x) const override;
    std::vector<Neighbor<Partition>> down(Side side, const Partition& x) const override;

private:
    // Adds every cell in the class of the given addable cell; returns the
    // new shape and the 1-based position of that cell among the new cells.
    std::pair<Partition, int> grow_at(const Partition& x, Cell a) const;

    CoreModel model_;
};

}  // namespace kmdgg
