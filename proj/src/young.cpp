#include "kmdgg/young.hpp"

namespace kmdgg {

namespace {

Cell single_cell(const Partition& big, const Partition& small) {
    auto cells = big.minus(small);
    if (cells.size() != 1 || !big.contains(small)) throw BijectionDomainError("shapes do not differ by one cell");
    return cells.front();
}

Cell addable_in_row(const Partition& x, int row) {
    for (Cell c : x.addable())
        if (c.row == row) return c;
    throw BijectionDomainError("no addable cell in row " + std::to_string(row));
}

}  // namespace

YoungBijection::YoungBijection(int colors) : colors_(colors) {
    if (colors < 1) throw std::invalid_argument("at least one color is required");
}

Up<Partition> YoungBijection::diag(const Partition& x, int color) const {
    if (color < 1 || color > colors_) throw BijectionDomainError("color out of range");
    return {x.add(addable_in_row(x, 1)), color, 1};
}

Up<Partition> YoungBijection::diag(const Partition& x, const Down<Partition>& d) const {
    if (d.m < 1 || d.m > colors_ || d.mp != 1) throw BijectionDomainError("marking out of range");
    Cell removed = single_cell(x, d.z);
    return {x.add(addable_in_row(x, removed.row + 1)), d.m, 1};
}

std::variant<int, Down<Partition>> YoungBijection::diag_inverse(const Partition& x, const Up<Partition>& u) const {
    if (u.M < 1 || u.M > colors_ || u.Mp != 1) throw BijectionDomainError("marking out of range");
    Cell added = single_cell(u.w, x);
    if (added.row == 1) return u.M;
    Cell removed{added.row - 1, x.part(added.row - 1)};
    return Down<Partition>{x.remove(removed), u.M, 1};
}

Up<Partition> YoungBijection::offdiag(const Partition& x, const Partition& y, const Down<Partition>& d) const {
    single_cell(x, d.z);
    single_cell(y, d.z);
    return {x.unite(y), d.m, d.mp};
}

Down<Partition> YoungBijection::offdiag_inverse(const Partition& x, const Partition& y,
                                                const Up<Partition>& u) const {
    single_cell(u.w, x);
    single_cell(u.w, y);
    return {x.intersect(y), u.M, u.Mp};
}

std::vector<Neighbor<Partition>> YoungBijection::up(Side side, const Partition& x) const {
    std::vector<Neighbor<Partition>> out;
    for (Cell c : x.addable()) out.push_back({x.add(c), side == Side::strong ? colors_ : 1});
    return out;
}

std::vector<Neighbor<Partition>> YoungBijection::down(Side side, const Partition& x) const {
    std::vector<Neighbor<Partition>> out;
    for (Cell c : x.removable()) out.push_back({x.remove(c), side == Side::strong ? colors_ : 1});
    return out;
}

Automorphism<Partition> transpose_automorphism() {
    auto t = [](const Partition& p) { return p.transpose(); };
    return {t, t, 2};
}

long long standard_tableaux(const Partition& shape) {
    long long num = 1;
    for (int k = 2; k <= shape.size(); ++k) num *= k;
    long long hooks = 1;
    for (Cell c : shape.cells()) hooks *= shape.hook(c);
    return num / hooks;
}

}  // namespace kmdgg
