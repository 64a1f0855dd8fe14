#include "kmdgg/cores.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace kmdgg {

EdgeSequence::EdgeSequence(const Partition& p, int anchor)
    : anchor_(anchor), lo_(anchor - p.rows()), hi_(anchor + p.part(1)), bits_(hi_ - lo_, 1) {
    for (int r = 1; r <= p.rows(); ++r) bits_[p.part(r) - r + anchor - lo_] = 0;
}

int EdgeSequence::bit(int pos) const {
    if (pos < lo_) return 0;
    if (pos >= hi_) return 1;
    return bits_[pos - lo_];
}

void EdgeSequence::set(int pos, int value) {
    if (pos < lo_) {
        bits_.insert(bits_.begin(), lo_ - pos, 0);
        lo_ = pos;
    }
    if (pos >= hi_) {
        bits_.insert(bits_.end(), pos - hi_ + 1, 1);
        hi_ = pos + 1;
    }
    bits_[pos - lo_] = static_cast<char>(value);
}

Partition EdgeSequence::partition() const {
    std::vector<int> parts;
    int ones = 0;
    for (int pos = lo_; pos < hi_; ++pos) {
        if (bit(pos))
            ++ones;
        else if (ones > 0)
            parts.push_back(ones);
    }
    std::reverse(parts.begin(), parts.end());
    return Partition(std::move(parts));
}

namespace {

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

int max_diagonal(const std::vector<Cell>& cells, int anchor) {
    int best = diagonal(cells.front(), anchor);
    for (Cell c : cells) best = std::max(best, diagonal(c, anchor));
    return best;
}

void sort_southeast_first(std::vector<std::vector<Cell>>& comps, int anchor) {
    std::sort(comps.begin(), comps.end(), [anchor](const auto& x, const auto& y) {
        return max_diagonal(x, anchor) > max_diagonal(y, anchor);
    });
}

std::vector<std::vector<Cell>> singletons(const Partition& upper, const Partition& lower, int anchor) {
    std::vector<std::vector<Cell>> out;
    for (Cell c : upper.minus(lower)) out.push_back({c});
    sort_southeast_first(out, anchor);
    return out;
}

bool strictly_contains(const Partition& big, const Partition& small) { return big != small && big.contains(small); }

}  // namespace

CoreModel CoreModel::llms(int n, int anchor) {
    if (n < 2) throw std::invalid_argument("period must be at least 2");
    return CoreModel(n, anchor, false);
}

CoreModel CoreModel::folded(int n, int anchor) {
    if (n < 1) throw std::invalid_argument("rank must be positive");
    return CoreModel(2 * n, anchor, true);
}

CoreModel CoreModel::folded_limit(int anchor) { return CoreModel(0, anchor, true); }

int CoreModel::generator_count() const {
    if (period_ == 0) return -1;
    return flipped_ ? period_ / 2 + 1 : period_;
}

int CoreModel::class_of(int diag) const {
    if (period_ == 0) return std::abs(diag);
    int r = ((diag % period_) + period_) % period_;
    return flipped_ ? std::min(r, period_ - r) : r;
}

Partition CoreModel::act(int node, const Partition& p) const {
    EdgeSequence seq(p, anchor_);
    EdgeSequence out = seq;
    for (int d = seq.lo(); d <= seq.hi(); ++d) {
        if (class_of(d) != node) continue;
        int x = seq.bit(d - 1), y = seq.bit(d);
        if (x != y) {
            out.set(d - 1, y);
            out.set(d, x);
        }
    }
    return out.partition();
}

Partition CoreModel::act_word(const std::vector<int>& word, Partition p) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) p = act(*it, p);
    return p;
}

std::vector<int> CoreModel::reduced_word(const Partition& p) const {
    std::vector<int> word;
    Partition cur = p;
    while (!cur.empty()) {
        bool found = false;
        for (Cell c : cur.removable()) {
            int node = class_of(c);
            Partition next = act(node, cur);
            if (strictly_contains(cur, next)) {
                word.push_back(node);
                cur = std::move(next);
                found = true;
                break;
            }
        }
        if (!found) throw NotCore("shape " + p.str() + " is not reachable from the empty partition");
    }
    return word;
}

int CoreModel::length(const Partition& p) const { return static_cast<int>(reduced_word(p).size()); }

bool CoreModel::in_orbit(const Partition& p) const {
    try {
        reduced_word(p);
        return true;
    } catch (const NotCore&) {
        return false;
    }
}

std::vector<std::pair<int, Partition>> CoreModel::weak_up(const Partition& p) const {
    std::vector<std::pair<int, Partition>> out;
    std::set<int> seen;
    for (Cell c : p.addable()) {
        int node = class_of(c);
        if (!seen.insert(node).second) continue;
        Partition q = act(node, p);
        if (strictly_contains(q, p)) out.emplace_back(node, std::move(q));
    }
    return out;
}

std::vector<std::pair<int, Partition>> CoreModel::weak_down(const Partition& p) const {
    std::vector<std::pair<int, Partition>> out;
    std::set<int> seen;
    for (Cell c : p.removable()) {
        int node = class_of(c);
        if (!seen.insert(node).second) continue;
        Partition q = act(node, p);
        if (strictly_contains(p, q)) out.emplace_back(node, std::move(q));
    }
    return out;
}

std::vector<std::pair<int, int>> CoreModel::transpositions(const EdgeSequence& seq, Reflection t) const {
    std::vector<std::pair<int, int>> base{{t.a, t.b}};
    if (flipped_) base.emplace_back(-1 - t.b, -1 - t.a);
    std::set<std::pair<int, int>> pairs;
    for (auto [x, y] : base) {
        if (period_ == 0) {
            if (x < seq.hi() && y >= seq.lo()) pairs.emplace(x, y);
            continue;
        }
        int jmin = -floor_div(y - seq.lo(), period_);
        int jmax = floor_div(seq.hi() - 1 - x, period_);
        for (int j = jmin; j <= jmax; ++j) pairs.emplace(x + j * period_, y + j * period_);
    }
    std::vector<std::pair<int, int>> out;
    std::set<int> used;
    for (auto [x, y] : pairs) {
        if (seq.bit(x) == seq.bit(y)) continue;
        if (!used.insert(x).second || !used.insert(y).second)
            throw std::logic_error("reflections in one orbit do not commute");
        out.emplace_back(x, y);
    }
    return out;
}

Partition CoreModel::reflect(const Partition& p, Reflection t) const {
    EdgeSequence seq(p, anchor_);
    EdgeSequence out = seq;
    for (auto [x, y] : transpositions(seq, t)) {
        out.set(x, seq.bit(y));
        out.set(y, seq.bit(x));
    }
    return out.partition();
}

std::vector<std::vector<Cell>> CoreModel::ribbons(const Partition& lower, const EdgeSequence& seq,
                                                  const std::vector<std::pair<int, int>>& swaps) const {
    std::vector<std::vector<Cell>> out;
    for (auto [x, y] : swaps) {
        EdgeSequence one = seq;
        one.set(x, 1);
        one.set(y, 0);
        out.push_back(one.partition().minus(lower));
    }
    sort_southeast_first(out, anchor_);
    return out;
}

std::vector<Reflection> CoreModel::candidate_reflections(const EdgeSequence& seq) const {
    std::vector<Reflection> out;
    const int width = seq.hi() - seq.lo();
    if (period_ > 0) {
        for (int a = 0; a < period_; ++a)
            for (int d = 1; d <= width + 2 * period_; ++d)
                if (d % period_ != 0) out.push_back({a, a + d});
        return out;
    }
    const int reach = width + 2;
    const int first = std::min(seq.lo(), -1 - seq.hi()) - reach;
    const int last = std::max(seq.hi(), -1 - seq.lo()) + reach;
    for (int a = first; a < last; ++a) {
        for (int b = a + 1; b <= last; ++b) {
            Reflection flip{-1 - b, -1 - a};
            if (flip < Reflection{a, b}) continue;
            out.push_back({a, b});
        }
    }
    return out;
}

std::vector<CoreCover> CoreModel::strong_up(const Partition& p) const {
    const EdgeSequence seq(p, anchor_);
    const int len = length(p);
    std::map<Partition, CoreCover> found;
    for (Reflection t : candidate_reflections(seq)) {
        auto swaps = transpositions(seq, t);
        if (swaps.empty()) continue;
        if (std::any_of(swaps.begin(), swaps.end(), [&](auto s) { return seq.bit(s.first) != 0; })) continue;
        EdgeSequence next = seq;
        for (auto [x, y] : swaps) {
            next.set(x, 1);
            next.set(y, 0);
        }
        Partition mu = next.partition();
        if (found.count(mu)) continue;
        if (!in_orbit(mu) || length(mu) != len + 1) continue;
        found.emplace(mu, CoreCover{mu, t, ribbons(p, seq, swaps)});
    }
    std::vector<CoreCover> out;
    for (auto& [shape, cover] : found) out.push_back(std::move(cover));
    return out;
}

std::vector<CoreCover> CoreModel::strong_down(const Partition& p) const {
    const EdgeSequence seq(p, anchor_);
    const int len = length(p);
    std::map<Partition, CoreCover> found;
    for (Reflection t : candidate_reflections(seq)) {
        auto swaps = transpositions(seq, t);
        if (swaps.empty()) continue;
        if (std::any_of(swaps.begin(), swaps.end(), [&](auto s) { return seq.bit(s.first) != 1; })) continue;
        EdgeSequence next = seq;
        for (auto [x, y] : swaps) {
            next.set(x, 0);
            next.set(y, 1);
        }
        Partition nu = next.partition();
        if (found.count(nu)) continue;
        if (!in_orbit(nu) || length(nu) != len - 1) continue;
        EdgeSequence below(nu, anchor_);
        found.emplace(nu, CoreCover{nu, t, ribbons(nu, below, transpositions(below, t))});
    }
    std::vector<CoreCover> out;
    for (auto& [shape, cover] : found) out.push_back(std::move(cover));
    return out;
}

std::vector<std::vector<Cell>> CoreModel::components(const Partition& lower, const Partition& upper) const {
    if (!strictly_contains(upper, lower)) throw NotCover(upper.str() + " does not cover " + lower.str());
    auto diff = upper.minus(lower);
    const int node = class_of(diff.front());
    if (act(node, lower) == upper) return singletons(upper, lower, anchor_);
    for (auto& cover : strong_up(lower))
        if (cover.shape == upper) return cover.components;
    throw NotCover(upper.str() + " does not cover " + lower.str());
}

bool is_core(const Partition& p, int n) {
    EdgeSequence seq(p, 0);
    for (int pos = seq.lo() - n; pos < seq.hi(); ++pos)
        if (seq.bit(pos) == 1 && seq.bit(pos + n) == 0) return false;
    return true;
}

namespace {

int position_of(const std::vector<std::vector<Cell>>& comps, Cell c) {
    for (std::size_t k = 0; k < comps.size(); ++k)
        if (std::find(comps[k].begin(), comps[k].end(), c) != comps[k].end()) return static_cast<int>(k) + 1;
    throw BijectionDomainError("cell is not part of the cover");
}

}  // namespace

std::pair<Partition, int> CoreBijection::grow_at(const Partition& x, Cell a) const {
    Partition w = model_.act(model_.class_of(a), x);
    if (!strictly_contains(w, x)) throw BijectionDomainError("class of an addable cell also removes cells");
    return {w, position_of(singletons(w, x, model_.anchor()), a)};
}

Up<Partition> CoreBijection::diag(const Partition& x, int color) const {
    if (color != 1) throw BijectionDomainError("color out of range");
    auto [w, M] = grow_at(x, Cell{1, x.part(1) + 1});
    return {w, M, 1};
}

Up<Partition> CoreBijection::diag(const Partition& x, const Down<Partition>& d) const {
    if (d.mp != 1 || !strictly_contains(x, d.z)) throw BijectionDomainError("not a weak edge");
    auto cells = singletons(x, d.z, model_.anchor());
    if (d.m < 1 || d.m > static_cast<int>(cells.size())) throw BijectionDomainError("marking out of range");
    Cell removed = cells[d.m - 1].front();
    auto [w, M] = grow_at(x, Cell{removed.row + 1, x.part(removed.row + 1) + 1});
    return {w, M, 1};
}

std::variant<int, Down<Partition>> CoreBijection::diag_inverse(const Partition& x, const Up<Partition>& u) const {
    if (u.Mp != 1 || !strictly_contains(u.w, x)) throw BijectionDomainError("not a weak edge");
    auto cells = singletons(u.w, x, model_.anchor());
    if (u.M < 1 || u.M > static_cast<int>(cells.size())) throw BijectionDomainError("marking out of range");
    Cell added = cells[u.M - 1].front();
    if (model_.act(model_.class_of(added), x) != u.w) throw BijectionDomainError("not a weak edge");
    if (added.row == 1) return 1;
    Cell removed{added.row - 1, x.part(added.row - 1)};
    Partition z = model_.act(model_.class_of(removed), x);
    if (!strictly_contains(x, z)) throw BijectionDomainError("class of a removable cell also adds cells");
    return Down<Partition>{z, position_of(singletons(x, z, model_.anchor()), removed), 1};
}

Up<Partition> CoreBijection::offdiag(const Partition& x, const Partition& y, const Down<Partition>& d) const {
    if (!strictly_contains(x, d.z)) throw BijectionDomainError("not a weak edge");
    const int node = model_.class_of(x.minus(d.z).front());
    Partition w = model_.act(node, y);
    if (!strictly_contains(w, y)) throw BijectionDomainError("off-diagonal image is not a weak cover");
    return {w, d.m, d.mp};
}

Down<Partition> CoreBijection::offdiag_inverse(const Partition& x, const Partition& y, const Up<Partition>& u) const {
    if (!strictly_contains(u.w, y)) throw BijectionDomainError("not a weak edge");
    const int node = model_.class_of(u.w.minus(y).front());
    Partition z = model_.act(node, x);
    if (!strictly_contains(x, z)) throw BijectionDomainError("off-diagonal preimage is not a weak cover");
    return {z, u.M, u.Mp};
}

std::vector<Neighbor<Partition>> CoreBijection::up(Side side, const Partition& x) const {
    std::vector<Neighbor<Partition>> out;
    if (side == Side::weak) {
        for (auto& [node, q] : model_.weak_up(x)) out.push_back({q, 1});
    } else {
        for (auto& c : model_.strong_up(x)) out.push_back({c.shape, c.multiplicity()});
    }
    return out;
}

std::vector<Neighbor<Partition>> CoreBijection::down(Side side, const Partition& x) const {
    std::vector<Neighbor<Partition>> out;
    if (side == Side::weak) {
        for (auto& [node, q] : model_.weak_down(x)) out.push_back({q, 1});
    } else {
        for (auto& c : model_.strong_down(x)) out.push_back({c.shape, c.multiplicity()});
    }
    return out;
}

}  // namespace kmdgg
