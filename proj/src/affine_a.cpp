#include "kmdgg/affine_a.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace kmdgg {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

}  // namespace

AffinePermutation::AffinePermutation(std::vector<std::int64_t> window) : window_(std::move(window)) {
    const auto n = static_cast<std::int64_t>(window_.size());
    if (n == 0) throw InvalidWindow("empty window");
    std::vector<char> seen(n, 0);
    std::int64_t shift = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        auto r = mod_floor(window_[i], n);
        if (seen[r]) throw InvalidWindow("window values repeat a residue");
        seen[r] = 1;
        shift += window_[i] - (i + 1);
    }
    if (shift != 0) throw InvalidWindow("window values do not sum to 1 + ... + n");
}

AffinePermutation AffinePermutation::identity(int n) {
    std::vector<std::int64_t> w(n);
    std::iota(w.begin(), w.end(), 1);
    return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::simple(int n, int i) {
    if (i < 0 || i >= n) throw InvalidWindow("generator out of range");
    if (i == 0) return reflection(n, 0, 1);
    return reflection(n, i, i + 1);
}

AffinePermutation AffinePermutation::from_word(int n, const std::vector<int>& word) {
    AffinePermutation w = identity(n);
    for (int i : word) w = w * simple(n, i);
    return w;
}

AffinePermutation AffinePermutation::reflection(int n, std::int64_t a, std::int64_t b) {
    if (mod_floor(a - b, n) == 0) throw InvalidWindow("reflection needs distinct residues");
    std::vector<std::int64_t> w(n);
    for (std::int64_t x = 1; x <= n; ++x) {
        if (mod_floor(x - a, n) == 0)
            w[x - 1] = x + (b - a);
        else if (mod_floor(x - b, n) == 0)
            w[x - 1] = x + (a - b);
        else
            w[x - 1] = x;
    }
    return AffinePermutation(std::move(w));
}

std::int64_t AffinePermutation::operator()(std::int64_t x) const {
    const std::int64_t n = this->n();
    std::int64_t r = mod_floor(x - 1, n) + 1;
    return window_[r - 1] + (x - r);
}

AffinePermutation AffinePermutation::operator*(const AffinePermutation& other) const {
    if (n() != other.n()) throw InvalidWindow("periods differ");
    std::vector<std::int64_t> w(n());
    for (int x = 1; x <= n(); ++x) w[x - 1] = (*this)(other(x));
    return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::inverse() const {
    const std::int64_t n = this->n();
    std::vector<std::int64_t> w(n);
    for (std::int64_t x = 1; x <= n; ++x) {
        std::int64_t y = window_[x - 1];
        std::int64_t r = mod_floor(y - 1, n) + 1;
        w[r - 1] = x - (y - r);
    }
    return AffinePermutation(std::move(w));
}

int AffinePermutation::length() const {
    const std::int64_t n = this->n();
    std::int64_t spread = 0;
    for (std::int64_t i = 1; i <= n; ++i) spread = std::max(spread, std::abs(window_[i - 1] - i));
    int count = 0;
    for (std::int64_t a = 1; a <= n; ++a)
        for (std::int64_t b = a + 1; b <= window_[a - 1] + spread + n; ++b)
            if ((*this)(a) > (*this)(b)) ++count;
    return count;
}

bool AffinePermutation::has_right_descent(int i) const { return (*this)(i) > (*this)(i + 1); }

bool AffinePermutation::grassmannian() const {
    for (int i = 1; i < n(); ++i)
        if (has_right_descent(i)) return false;
    return true;
}

std::vector<int> AffinePermutation::reduced_word() const {
    std::vector<int> word;
    AffinePermutation w = *this;
    while (true) {
        int found = -1;
        for (int i = 0; i < n() && found < 0; ++i)
            if (w.has_right_descent(i)) found = i;
        if (found < 0) break;
        word.push_back(found);
        w = w * simple(n(), found);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

int cover_multiplicity(const AffinePermutation& v, const AffinePermutation& w) {
    const int n = v.n();
    if (w.length() != v.length() + 1) throw NotCover("lengths do not differ by one");
    AffinePermutation t = v.inverse() * w;
    std::int64_t a = 0, b = 0;
    for (std::int64_t x = 1; x <= n; ++x) {
        if (t(x) != x) {
            a = x;
            b = t(x);
            break;
        }
    }
    if (a == b || !(t == AffinePermutation::reflection(n, a, b))) throw NotCover("quotient is not a reflection");
    // Words compose left to right here, so the count runs over the inverse.
    std::int64_t i = v(a), j = v(b);
    if (i > j) std::swap(i, j);
    const AffinePermutation u = v.inverse();
    std::int64_t lo = u(i), hi = u(j);
    if (lo > hi) throw NotCover("reflection lowers the element");
    int count = 0;
    for (std::int64_t k = lo; k < hi; ++k)
        if (mod_floor(k, n) == 0) ++count;
    return count;
}

Partition simple_action(int i, const Partition& p, int n, int anchor) { return CoreModel::llms(n, anchor).act(i, p); }

Partition c_bijection(const AffinePermutation& w, int anchor) {
    if (!w.grassmannian()) throw NotGrassmannian("element has a right descent outside node 0");
    return CoreModel::llms(w.n(), anchor).act_word(w.reduced_word(), Partition{});
}

AffinePermutation c_inverse(const Partition& core, int n, int anchor) {
    if (!is_core(core, n)) throw NotCore(core.str() + " is not a core");
    return AffinePermutation::from_word(n, CoreModel::llms(n, anchor).reduced_word(core));
}

std::vector<std::vector<Cell>> ribbon_components(const Partition& lower, const Partition& upper, int n) {
    return CoreModel::llms(n).components(lower, upper);
}

TableauPair<Partition> llms_insert(const std::vector<int>& perm, int n) {
    CoreBijection phi(CoreModel::llms(n));
    return insert(ColoredPermutation::plain(perm), phi);
}

}  // namespace kmdgg
