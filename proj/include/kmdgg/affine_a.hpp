#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kmdgg/cores.hpp"
#include "kmdgg/growth.hpp"
#include "kmdgg/partition.hpp"

namespace kmdgg {

struct InvalidWindow : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotGrassmannian : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Bijection w of the integers with w(x + n) = w(x) + n, stored by its window
// w(1), ..., w(n).
class AffinePermutation {
public:
    explicit AffinePermutation(std::vector<std::int64_t> window);

    static AffinePermutation identity(int n);
    static AffinePermutation simple(int n, int i);
    // [i1, ..., ik] gives s_i1 * ... * s_ik.
    static AffinePermutation from_word(int n, const std::vector<int>& word);
    // Swaps a + kn with b + kn for every k.
    static AffinePermutation reflection(int n, std::int64_t a, std::int64_t b);

    int n() const { return static_cast<int>(window_.size()); }
    const std::vector<std::int64_t>& window() const { return window_; }
    std::int64_t operator()(std::int64_t x) const;

    // (this * other)(x) = this(other(x))
    AffinePermutation operator*(const AffinePermutation& other) const;
    AffinePermutation inverse() const;

    int length() const;
    bool has_right_descent(int i) const;
    bool grassmannian() const;
    std::vector<int> reduced_word() const;

    bool operator==(const AffinePermutation&) const = default;

private:
    std::vector<std::int64_t> window_;
};

// For w = v * t(a, b) covering v: the number of multiples of n in
// [u(i), u(j)) where u = v^-1 and i < j are v(a), v(b). Throws NotCover when
// w does not cover v.
int cover_multiplicity(const AffinePermutation& v, const AffinePermutation& w);

Partition simple_action(int i, const Partition& p, int n, int anchor = 0);

Partition c_bijection(const AffinePermutation& w, int anchor = 0);
AffinePermutation c_inverse(const Partition& core, int n, int anchor = 0);

std::vector<std::vector<Cell>> ribbon_components(const Partition& lower, const Partition& upper, int n);

TableauPair<Partition> llms_insert(const std::vector<int>& perm, int n);

}  // namespace kmdgg
