#pragma once

#include "kmdgg/growth.hpp"
#include "kmdgg/partition.hpp"

namespace kmdgg {

// Young's lattice paired with itself. With r colors every strong edge has r
// markings and every weak edge one; the color of a new entry becomes the
// marking of the first-row cell it creates.
class YoungBijection final : public DifferentialBijection<Partition> {
public:
    explicit YoungBijection(int colors = 1);

    int r() const override { return colors_; }
    Partition bottom() const override { return {}; }

    Up<Partition> diag(const Partition& x, int color) const override;
    Up<Partition> diag(const Partition& x, const Down<Partition>& d) const override;
    std::variant<int, Down<Partition>> diag_inverse(const Partition& x, const Up<Partition>& u) const override;
    Up<Partition> offdiag(const Partition& x, const Partition& y, const Down<Partition>& d) const override;
    Down<Partition> offdiag_inverse(const Partition& x, const Partition& y, const Up<Partition>& u) const override;

    std::vector<Neighbor<Partition>> up(Side side, const Partition& x) const override;
    std::vector<Neighbor<Partition>> down(Side side, const Partition& x) const override;

private:
    int colors_;
};

Automorphism<Partition> transpose_automorphism();

// Number of standard tableaux of the given shape (hook length formula).
long long standard_tableaux(const Partition& shape);

}  // namespace kmdgg
