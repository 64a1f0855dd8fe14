#include "kmdgg/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <boost/functional/hash.hpp>

namespace kmdgg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must weakly decrease");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& smaller) const {
    if (smaller.rows() > rows()) return false;
    for (int r = 1; r <= smaller.rows(); ++r)
        if (smaller.part(r) > part(r)) return false;
    return true;
}

Partition Partition::transpose() const {
    std::vector<int> t(parts_.empty() ? 0 : parts_.front(), 0);
    for (int len : parts_)
        for (int c = 0; c < len; ++c) ++t[c];
    return Partition(std::move(t));
}

Partition Partition::unite(const Partition& o) const {
    std::vector<int> p(std::max(rows(), o.rows()));
    for (int r = 1; r <= static_cast<int>(p.size()); ++r) p[r - 1] = std::max(part(r), o.part(r));
    return Partition(std::move(p));
}

Partition Partition::intersect(const Partition& o) const {
    std::vector<int> p(std::min(rows(), o.rows()));
    for (int r = 1; r <= static_cast<int>(p.size()); ++r) p[r - 1] = std::min(part(r), o.part(r));
    return Partition(std::move(p));
}

std::vector<Cell> Partition::addable() const {
    std::vector<Cell> out;
    for (int r = 1; r <= rows() + 1; ++r)
        if (r == 1 || part(r - 1) > part(r)) out.push_back(Cell{r, part(r) + 1});
    return out;
}

std::vector<Cell> Partition::removable() const {
    std::vector<Cell> out;
    for (int r = 1; r <= rows(); ++r)
        if (part(r) > part(r + 1)) out.push_back(Cell{r, part(r)});
    return out;
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    for (int r = 1; r <= rows(); ++r)
        for (int c = 1; c <= part(r); ++c) out.push_back(Cell{r, c});
    return out;
}

std::vector<Cell> Partition::minus(const Partition& smaller) const {
    std::vector<Cell> out;
    for (int r = 1; r <= rows(); ++r)
        for (int c = smaller.part(r) + 1; c <= part(r); ++c) out.push_back(Cell{r, c});
    return out;
}

Partition Partition::add(Cell c) const {
    std::vector<int> p = parts_;
    if (c.row == rows() + 1) p.push_back(0);
    if (c.row < 1 || c.row > static_cast<int>(p.size()) || p[c.row - 1] + 1 != c.col)
        throw std::invalid_argument("cell is not addable");
    ++p[c.row - 1];
    return Partition(std::move(p));
}

Partition Partition::remove(Cell c) const {
    if (!has(c) || part(c.row) != c.col || part(c.row + 1) >= c.col)
        throw std::invalid_argument("cell is not removable");
    std::vector<int> p = parts_;
    --p[c.row - 1];
    return Partition(std::move(p));
}

int Partition::hook(Cell c) const {
    int arm = part(c.row) - c.col;
    int leg = 0;
    while (part(c.row + leg + 1) >= c.col) ++leg;
    return arm + leg + 1;
}

std::string Partition::str() const {
    if (parts_.empty()) return "()";
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::size_t PartitionHash::operator()(const Partition& p) const {
    return boost::hash_range(p.parts().begin(), p.parts().end());
}

namespace {

void extend(int remaining, int cap, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min(remaining, cap); k >= 1; --k) {
        cur.push_back(k);
        extend(remaining - k, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    extend(n, n, cur, out);
    return out;
}

}  // namespace kmdgg
