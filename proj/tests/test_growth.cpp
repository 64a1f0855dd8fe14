#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "kmdgg/growth.hpp"
#include "kmdgg/young.hpp"
#include "oracles.hpp"

using namespace kmdgg;

namespace {

const YoungBijection young1(1);

Partition part(std::vector<int> p) { return Partition(std::move(p)); }

}  // namespace

TEST_CASE("square rules on degenerate squares") {
    const Partition a = part({1}), b = part({2});
    auto u = forward_square<Partition>(young1, a, a, a, 0, 0, 0);
    CHECK(u.w == a);
    CHECK(u.M == 0);
    // z = y != x: the weak edge is carried across.
    u = forward_square<Partition>(young1, a, a, b, 0, 1, 0);
    CHECK(u.w == b);
    CHECK(u.Mp == 1);
    CHECK(u.M == 0);
    auto pre = inverse_square<Partition>(young1, b, b, b, 0, 0);
    CHECK(pre.z == b);
    CHECK(pre.color == 0);
    // w = y != x: the strong marking goes back down.
    pre = inverse_square<Partition>(young1, a, b, b, 1, 0);
    CHECK(pre.z == a);
    CHECK(pre.m == 1);
    CHECK_THROWS_AS(forward_square<Partition>(young1, a, a, b, 0, 0, 0), MalformedSquare);
}

TEST_CASE("Young diagonal rule") {
    auto u = forward_square<Partition>(young1, {}, {}, {}, 0, 0, 1);
    CHECK(u.w == part({1}));
    // A removable corner in row 2 moves to the addable corner in row 3.
    auto v = young1.diag(part({2, 1}), Down<Partition>{part({2}), 1, 1});
    CHECK(v.w == part({2, 1, 1}));
    long long sum = 0;
    for (const auto& p : partitions_of(4)) sum += standard_tableaux(p) * standard_tableaux(p);
    CHECK(sum == 24);
}

TEST_CASE("Young instance passes the domain checks") {
    for (int colors : {1, 2}) {
        YoungBijection phi(colors);
        for (int k = 0; k <= 5; ++k) {
            for (const auto& p : partitions_of(k)) {
                CHECK_NOTHROW(check_diagonal<Partition>(phi, p));
                CHECK_NOTHROW(check_offdiagonal_from<Partition>(phi, p));
            }
        }
    }
    Twisted<Partition> twisted(young1, transpose_automorphism());
    for (int k = 0; k <= 4; ++k)
        for (const auto& p : partitions_of(k)) {
            CHECK_NOTHROW(check_diagonal<Partition>(twisted, p));
            CHECK_NOTHROW(check_offdiagonal_from<Partition>(twisted, p));
        }
}

TEST_CASE("inverse square undoes random valid squares") {
    std::mt19937 rng(20240607);
    std::vector<Partition> pool;
    for (int k = 0; k <= 6; ++k)
        for (const auto& p : partitions_of(k)) pool.push_back(p);
    int checked = 0;
    while (checked < 1000) {
        const Partition& z = pool[rng() % pool.size()];
        auto ups = young1.up(Side::strong, z);
        const auto& y = ups[rng() % ups.size()].vertex;
        const auto& x = ups[rng() % ups.size()].vertex;
        const int color = (x == z && y == z) ? 1 : 0;
        auto u = forward_square<Partition>(young1, z, y, x, y == z ? 0 : 1, x == z ? 0 : 1, color);
        auto pre = inverse_square<Partition>(young1, x, y, u.w, u.M, u.Mp);
        CHECK(pre.z == z);
        CHECK(pre.color == color);
        ++checked;
    }
}

TEST_CASE("insertion of small permutations") {
    auto empty = insert(ColoredPermutation::plain({}), young1);
    CHECK(empty.P.shapes.size() == 1);
    CHECK(reverse(empty, young1).perm.empty());
    auto id = insert(ColoredPermutation::plain({1, 2, 3}), young1);
    CHECK(oracle::chain_tableau(id.P) == oracle::Tableau{{1, 2, 3}});
    CHECK(oracle::chain_tableau(id.Q) == oracle::Tableau{{1, 2, 3}});
    CHECK_THROWS_AS(insert(ColoredPermutation::plain({1, 1}), young1), std::invalid_argument);
}

TEST_CASE("rows are strong chains and columns weak chains") {
    for (const auto& p : oracle::permutations(4)) {
        auto g = grow(ColoredPermutation::plain(p), young1);
        for (int i = 0; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) {
                CHECK(g.grid[i][j].contains(g.grid[i][j - 1]));
                CHECK(g.grid[i][j].size() - g.grid[i][j - 1].size() <= 1);
                CHECK(g.grid[j][i].contains(g.grid[j - 1][i]));
            }
    }
}

TEST_CASE("Young insertion is row bumping and the transpose twist is column bumping") {
    for (const auto& p : oracle::permutations(4)) {
        auto pair = insert(ColoredPermutation::plain(p), young1);
        auto ref = oracle::row_insertion(p);
        CHECK(oracle::chain_tableau(pair.P) == ref.P);
        CHECK(oracle::chain_tableau(pair.Q) == ref.Q);
    }
    Twisted<Partition> twisted(young1, transpose_automorphism());
    for (const auto& p : oracle::permutations(3)) {
        auto pair = insert(ColoredPermutation::plain(p), twisted);
        auto ref = oracle::column_insertion(p);
        CHECK(oracle::chain_tableau(pair.P) == ref.P);
        CHECK(oracle::chain_tableau(pair.Q) == ref.Q);
    }
}

TEST_CASE("twists by the identity and by an involution twice change nothing") {
    Twisted<Partition> plain(young1, Automorphism<Partition>::identity());
    auto tr = transpose_automorphism();
    Twisted<Partition> once(young1, tr);
    Twisted<Partition> twice(once, tr);
    for (const auto& p : oracle::permutations(4)) {
        auto sigma = ColoredPermutation::plain(p);
        CHECK(insert(sigma, plain) == insert(sigma, young1));
        CHECK(insert(sigma, twice) == insert(sigma, young1));
    }
}

TEST_CASE("two colors: reverse inverts insert on P_3(2)") {
    YoungBijection phi(2);
    std::set<TableauPair<Partition>> images;
    for (const auto& p : oracle::permutations(3))
        for (int mask = 0; mask < 8; ++mask) {
            ColoredPermutation sigma{p, {1 + (mask & 1), 1 + (mask >> 1 & 1), 1 + (mask >> 2 & 1)}, {}, {}};
            auto pair = insert(sigma, phi);
            images.insert(pair);
            CHECK(reverse(pair, phi) == sigma);
        }
    CHECK(images.size() == 48);
}

TEST_CASE("mixed insertion") {
    MixedInsertion<Partition> trivial(young1, Automorphism<Partition>::identity(),
                                      Automorphism<Partition>::identity());
    for (const auto& p : oracle::permutations(3)) {
        ColoredPermutation sigma{p, {1, 1, 1}, {0, 0, 0}, {0, 0, 0}};
        auto mixed = trivial.insert(sigma);
        auto plain = insert(ColoredPermutation::plain(p), young1);
        CHECK(mixed.P.shapes == plain.P.shapes);
        CHECK(mixed.Q.shapes == plain.Q.shapes);
    }
    // Pairs with twist data satisfy sum over shapes of (count of marked
    // chains)^2 = r kappa kappa' to the n times n!.
    MixedInsertion<Partition> doubly(young1, transpose_automorphism(), transpose_automorphism());
    std::set<TableauPair<Partition>> images;
    for (const auto& p : oracle::permutations(3))
        for (int mask = 0; mask < 64; ++mask) {
            ColoredPermutation sigma{p, {1, 1, 1}, {}, {}};
            for (int k = 0; k < 3; ++k) {
                sigma.p.push_back(mask >> (2 * k) & 1);
                sigma.pp.push_back(mask >> (2 * k + 1) & 1);
            }
            auto pair = doubly.insert(sigma);
            images.insert(pair);
            CHECK(doubly.reverse(pair) == sigma);
        }
    CHECK(images.size() == 384);
    std::map<Partition, std::set<MarkedChain<Partition>>> P_by_shape, Q_by_shape;
    for (const auto& pair : images) {
        P_by_shape[pair.P.shapes.back()].insert(pair.P);
        Q_by_shape[pair.Q.shapes.back()].insert(pair.Q);
    }
    std::size_t total = 0;
    for (const auto& [shape, chains] : P_by_shape) total += chains.size() * Q_by_shape[shape].size();
    CHECK(total == 4 * 4 * 4 * 6);
}
