#include <doctest.h>

#include <map>
#include <set>

#include "kmdgg/affine_a.hpp"
#include "kmdgg/cores.hpp"
#include "kmdgg/render.hpp"
#include "kmdgg/weyl.hpp"
#include "oracles.hpp"

using namespace kmdgg;

namespace {

Partition part(std::vector<int> p) { return Partition(std::move(p)); }

int residue(Cell c, int n) { return ((c.col - c.row) % n + n) % n; }

// Affine Grassmannian elements of a ball with their cores.
struct Grassmannian {
    Gcm g;
    Ball ball;
    RootTable roots;
    std::vector<char> mask;

    Grassmannian(int n, int radius)
        : g(affine_type('A', n - 1)), ball(generate_ball(g, radius)), roots(RootTable::build(g, radius + 1)) {
        std::vector<int> J;
        for (int j = 1; j < n; ++j) J.push_back(j);
        mask = min_coset_reps(ball, J);
    }
};

}  // namespace

TEST_CASE("windows") {
    CHECK(AffinePermutation::simple(3, 0).window() == std::vector<std::int64_t>{0, 2, 4});
    CHECK(AffinePermutation::identity(3).length() == 0);
    CHECK(AffinePermutation::from_word(3, {1, 0}).length() == 2);
    CHECK_THROWS_AS(AffinePermutation({1, 1, 4}), InvalidWindow);
    auto w = AffinePermutation::from_word(4, {0, 2, 1, 3, 0});
    CHECK((w * w.inverse()) == AffinePermutation::identity(4));
    CHECK(AffinePermutation::from_word(4, w.reduced_word()) == w);
    CHECK(static_cast<int>(w.reduced_word().size()) == w.length());
}

TEST_CASE("cores and the simple action") {
    CHECK(simple_action(0, Partition{}, 3) == part({1}));
    CHECK(is_core(part({2}), 3));
    CHECK_FALSE(is_core(part({3}), 3));
    for (int n : {2, 3, 4})
        for (int k = 0; k <= 7; ++k)
            for (const auto& p : partitions_of(k))
                for (int i = 0; i < n; ++i) CHECK(simple_action(i, simple_action(i, p, n), n) == p);
}

TEST_CASE("the core bijection") {
    CHECK(c_bijection(AffinePermutation::identity(3)).empty());
    for (int n : {2, 3, 4}) {
        Grassmannian G(n, 6);
        std::map<Partition, int> seen;
        std::vector<int> ids;
        for (std::size_t v = 0; v < G.ball.size(); ++v) {
            if (!G.mask[v]) continue;
            auto w = AffinePermutation::from_word(n, G.ball[v].word);
            CHECK(w.grassmannian());
            Partition core = c_bijection(w);
            CHECK(is_core(core, n));
            CHECK(c_inverse(core, n) == w);
            CHECK(++seen[core] == 1);
            ids.push_back(static_cast<int>(v));
            // A core has no addable and removable cells of one residue.
            std::set<int> add, rem;
            for (Cell c : core.addable()) add.insert(residue(c, n));
            for (Cell c : core.removable()) rem.insert(residue(c, n));
            for (int r : add) CHECK(rem.count(r) == 0);
        }
        // Every n-core reached by at most 6 generators appears.
        CoreModel model = CoreModel::llms(n);
        std::set<Partition> layer{Partition{}}, all{Partition{}};
        for (int k = 0; k < 6; ++k) {
            std::set<Partition> next;
            for (const auto& p : layer)
                for (const auto& [node, q] : model.weak_up(p)) next.insert(q);
            all.insert(next.begin(), next.end());
            layer = std::move(next);
        }
        CHECK(all.size() == seen.size());
        // Order isomorphism onto containment.
        BruhatOrder order(G.ball, G.roots);
        for (int a : ids)
            for (int b : ids) {
                auto ca = c_bijection(AffinePermutation::from_word(n, G.ball[a].word));
                auto cb = c_bijection(AffinePermutation::from_word(n, G.ball[b].word));
                CHECK(order.leq(a, b) == cb.contains(ca));
            }
    }
}

TEST_CASE("cover multiplicities agree three ways") {
    for (int n : {2, 3}) {
        Grassmannian G(n, 6);
        for (std::size_t v = 0; v < G.ball.size(); ++v) {
            if (!G.mask[v] || G.ball[v].length >= 5) continue;
            for (const auto& c : strong_covers(G.ball, G.roots, static_cast<int>(v))) {
                if (!G.mask[c.upper]) continue;
                auto lo = AffinePermutation::from_word(n, G.ball[c.lower].word);
                auto hi = AffinePermutation::from_word(n, G.ball[c.upper].word);
                const int window = cover_multiplicity(lo, hi);
                CHECK(window == c.coroot[0]);
                CHECK(static_cast<int>(ribbon_components(c_bijection(lo), c_bijection(hi), n).size()) == window);
            }
            for (const auto& c : weak_covers(G.ball, static_cast<int>(v))) {
                if (!G.mask[c.upper]) continue;
                auto comps = ribbon_components(c_bijection(AffinePermutation::from_word(n, G.ball[c.lower].word)),
                                               c_bijection(AffinePermutation::from_word(n, G.ball[c.upper].word)),
                                               n);
                for (const auto& comp : comps) CHECK(comp.size() == 1);
            }
        }
    }
    CHECK_THROWS_AS(cover_multiplicity(AffinePermutation::identity(3), AffinePermutation::from_word(3, {0, 1})),
                    NotCover);
}

TEST_CASE("the differential bijection on 3-cores") {
    CoreBijection phi(CoreModel::llms(3));
    CHECK(phi.diag(Partition{}, 1).w == part({1}));
    std::set<Partition> layer{Partition{}};
    for (int k = 0; k <= 5; ++k) {
        std::set<Partition> next;
        for (const auto& p : layer) {
            CHECK_NOTHROW(check_diagonal<Partition>(phi, p));
            CHECK_NOTHROW(check_offdiagonal_from<Partition>(phi, p));
            for (const auto& [node, q] : phi.model().weak_up(p)) next.insert(q);
        }
        layer = std::move(next);
    }
}

TEST_CASE("insertion on 3-cores") {
    auto pair = llms_insert({4, 1, 2, 6, 3, 5}, 3);
    CoreModel model = CoreModel::llms(3);
    CHECK(starred_strong_text(pair.P, model) == "6 / 5 / 4* 6* / 3 5 / 1* 2* 3* 5*");
    CHECK(weak_text(pair.Q) == "6 / 5 / 3 6 / 2 5 / 1 3 4 5");
    CHECK(pair.P.shapes.back() == part({4, 2, 2, 1, 1}));
    CHECK(pair.P.marks == std::vector<int>(6, 1));
    std::vector<std::size_t> counts;
    for (std::size_t k = 1; k < pair.P.shapes.size(); ++k)
        counts.push_back(model.components(pair.P.shapes[k - 1], pair.P.shapes[k]).size());
    CHECK(counts == std::vector<std::size_t>{1, 1, 2, 1, 3, 2});
    CoreBijection phi(model);
    CHECK(reverse(pair, phi).perm == std::vector<int>{4, 1, 2, 6, 3, 5});

    auto one = llms_insert({1}, 3);
    CHECK(one.P.shapes.back() == part({1}));
    CHECK(one.Q.shapes.back() == part({1}));

    for (const auto& p : oracle::permutations(4))
        CHECK(reverse(llms_insert(p, 3), phi).perm == p);
}

TEST_CASE("large rank insertion is row insertion") {
    for (int m = 1; m <= 4; ++m)
        for (const auto& p : oracle::permutations(m)) {
            auto pair = llms_insert(p, 2 * m + 1);
            auto ref = oracle::row_insertion(p);
            CHECK(oracle::chain_tableau(pair.P) == ref.P);
            CHECK(oracle::chain_tableau(pair.Q) == ref.Q);
        }
}
