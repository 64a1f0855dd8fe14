#include <doctest.h>

#include <set>

#include "kmdgg/dgg.hpp"
#include "kmdgg/folding_c.hpp"
#include "kmdgg/render.hpp"
#include "kmdgg/shifted.hpp"
#include "oracles.hpp"

using namespace kmdgg;

namespace {

Partition part(std::vector<int> p) { return Partition(std::move(p)); }

FoldingData c2() { return fold(affine_type('A', 3), {0, 3, 2, 1}); }

}  // namespace

TEST_CASE("embedding of the folded group") {
    FoldingData fd = c2();
    auto id = embed_f(fd, element(fd.folded, {}));
    CHECK(id.image.length == 0);
    auto s1 = embed_f(fd, element(fd.folded, {1}));
    CHECK(s1.image.length == 2);
    CHECK(s1.image.key == element(fd.source, {1, 3}).key);
    CHECK(embed_word(fd, {1}) == Word{1, 3});

    Ball folded = generate_ball(fd.folded, 4);
    Ball source = generate_ball(fd.source, 8);
    std::set<Vec> images;
    for (const auto& w : folded.elements()) {
        auto e = embed_f(fd, w);
        CHECK(fixed_by_automorphism(fd, e.image.key));
        images.insert(e.image.key);
        // Homomorphism on products with each generator.
        for (int i = 0; i < 3; ++i) {
            Word longer = w.word;
            longer.push_back(i);
            Word image_word = embed_word(fd, w.word);
            for (int j : fd.orbits[i]) image_word.push_back(j);
            CHECK(embed_f(fd, element(fd.folded, longer)).image.key == element(fd.source, image_word).key);
        }
        // psi(w Lambda) = f(w) psi(Lambda)
        for (int k = 0; k < 3; ++k) {
            Vec lambda = fundamental_weight(fd.folded, k);
            CHECK(psi(fd, apply_word(fd.folded, w.word, lambda)) ==
                  apply_word(fd.source, embed_word(fd, w.word), psi(fd, lambda)));
        }
    }
    CHECK(images.size() == folded.size());
    // The fixed elements of the source ball are exactly the images.
    Ball wide = generate_ball(fd.folded, 8);
    std::set<Vec> expected;
    for (const auto& w : wide.elements()) {
        auto e = embed_f(fd, w);
        if (e.image.length <= 8) expected.insert(e.image.key);
    }
    std::set<Vec> fixed;
    for (const auto& x : source.elements())
        if (fixed_by_automorphism(fd, x.key)) fixed.insert(x.key);
    CHECK(fixed == expected);
}

TEST_CASE("cover orbits") {
    FoldingData fd = c2();
    Ball folded = generate_ball(fd.folded, 4);
    RootTable froots = RootTable::build(fd.folded, 5);
    RootTable sroots = RootTable::build(fd.source, 10);
    Ball source = generate_ball(fd.source, 10);
    BruhatOrder order(source, sroots);
    auto simple = cover_orbit(fd, froots, folded[0], Vec{0, 1, 0}, 0, 0);
    CHECK(simple.roots.size() == 2);
    CHECK(simple.commuting);
    CHECK(simple.boolean_interval);
    CHECK(interval_size(source, order, simple.lower_key, simple.upper_key) == 4);
    auto single = cover_orbit(fd, froots, folded[0], Vec{1, 0, 0}, 0, 0);
    CHECK(single.roots.size() == 1);
    CHECK(interval_size(source, order, single.lower_key, single.upper_key) == 2);
    for (std::size_t v = 0; v < folded.size(); ++v) {
        if (folded[v].length >= 4) continue;
        for (const auto& c : strong_covers(folded, froots, static_cast<int>(v))) {
            auto o = cover_orbit(fd, froots, folded[v], c.root, 0, 0);
            CHECK(o.commuting);
            CHECK(o.boolean_interval);
            CHECK(o.source_multiplicity == o.folded_multiplicity);
            CHECK(o.folded_multiplicity == c.coroot[0]);
            CHECK(interval_size(source, order, o.lower_key, o.upper_key) == 1 << o.roots.size());
        }
    }
}

TEST_CASE("folded graphs") {
    FoldingData fd = c2();
    Ball folded = generate_ball(fd.folded, 4);
    Ball source = generate_ball(fd.source, 10);
    RootTable sroots = RootTable::build(fd.source, 10);
    RootTable froots = RootTable::build(fd.folded, 5);
    const Vec K = canonical_K(fd.folded);
    auto via = folded_graphs(fd, folded, source, sroots, 0, 0, K);
    auto direct = direct_graphs(strong_graph(folded, froots, fundamental_weight(fd.folded, 0)), weak_graph(folded, K));
    auto rep = compare_graphs(via, direct);
    CHECK(rep.ok);
    CHECK(rep.strong_edges > 0);
    CHECK_THROWS_AS(folded_graphs(fd, folded, source, sroots, 0, 1, K), RepresentativeMismatch);
    auto other = folded_graphs(fd, folded, source, sroots, 1, 3, K);
    auto same = folded_graphs(fd, folded, source, sroots, 1, 1, K);
    CHECK(compare_graphs(other, same).ok);
    CHECK(representative_transport(fd, generate_ball(fd.source, 6), sroots, 1, 1));
}

TEST_CASE("symmetric cores") {
    FoldingData fd = c2();
    CHECK(sc_map(fd, 0, element(fd.folded, {})).empty());
    Ball folded = generate_ball(fd.folded, 5);
    RootTable froots = RootTable::build(fd.folded, 6);
    for (std::size_t v = 0; v < folded.size(); ++v) {
        auto core = sc_map(fd, 0, folded[v]);
        CHECK(core.transpose() == core);
    }
    auto mask = min_coset_reps(folded, {1, 2});
    BruhatOrder order(generate_ball(fd.folded, 4), RootTable::build(fd.folded, 5));
    Ball small = generate_ball(fd.folded, 4);
    auto small_mask = min_coset_reps(small, {1, 2});
    for (std::size_t a = 0; a < small.size(); ++a)
        for (std::size_t b = 0; b < small.size(); ++b) {
            if (!small_mask[a] || !small_mask[b]) continue;
            CHECK(order.leq(static_cast<int>(a), static_cast<int>(b)) ==
                  sc_map(fd, 0, small[b]).contains(sc_map(fd, 0, small[a])));
        }
    for (std::size_t v = 0; v < folded.size(); ++v) {
        if (!mask[v] || folded[v].length >= 5) continue;
        for (const auto& c : strong_covers(folded, froots, static_cast<int>(v))) {
            if (!mask[c.upper]) continue;
            CHECK(chevalley_zero(sc_map(fd, 0, folded[c.lower]), sc_map(fd, 0, folded[c.upper]), 2) == c.coroot[0]);
        }
    }
    CHECK(chevalley_zero(Partition{}, part({1}), 2) == 1);
}

TEST_CASE("folded differential bijections") {
    CHECK_THROWS_AS(folded_phi(2, 1, 0), RepresentativeMismatch);
    for (auto phi : {folded_phi(2, 0, 0), folded_limit_phi(0, 0), folded_limit_phi(1, 1)}) {
        std::set<Partition> layer{Partition{}};
        for (int k = 0; k <= 4; ++k) {
            std::set<Partition> next;
            for (const auto& p : layer) {
                CHECK_NOTHROW(check_diagonal<Partition>(phi, p));
                CHECK_NOTHROW(check_offdiagonal_from<Partition>(phi, p));
                for (const auto& nb : phi.up(Side::weak, p)) next.insert(nb.vertex);
            }
            layer = std::move(next);
        }
        for (const auto& p : oracle::permutations(3))
            CHECK(reverse(insert(ColoredPermutation::plain(p), phi), phi).perm == p);
    }
}

TEST_CASE("figures for folded insertion") {
    auto phi = folded_limit_phi(1, 1);
    auto a = folded_insert({2, 4, 3, 1}, std::nullopt, 1, 1);
    CHECK(primed_strong_text(a.P, phi.model()) == "4' / 2 4 / 1 3");
    CHECK(weak_text(a.Q) == "4 / 3 4 / 1 2");
    CHECK(a.P.shapes.back() == part({2, 2, 1}));
    auto b = folded_insert({4, 2, 1, 3}, std::nullopt, 1, 1);
    CHECK(primed_strong_text(b.P, phi.model()) == "4 / 4 / 2 / 1 3");
    CHECK(weak_text(b.Q) == "4 / 3 / 2 / 1 4");

    auto zero = folded_limit_phi(0, 0);
    auto c = folded_insert({2, 6, 7, 3, 5, 4, 1}, std::nullopt, 0, 0);
    CHECK(primed_strong_text(c.P, zero.model()) == "6' / 4 5' 7 / 2' 3 5 / 1 2 4' 6");
    CHECK(weak_text(c.Q) == "7 / 3 5 6 / 2 4 5 / 1 2 3 7");
    CHECK(to_shifted_strong(c.P, zero.model()).str() == "7 / 3 5' / 1 2' 4 6'");
    CHECK(to_shifted_weak(c.Q).str() == "6 / 4 5 / 1 2 3 7");
    // Some cover in this diagram has two ribbons.
    bool two = false;
    for (std::size_t s = 1; s < c.P.shapes.size(); ++s)
        if (zero.model().components(c.P.shapes[s - 1], c.P.shapes[s]).size() == 2) two = true;
    CHECK(two);
}

TEST_CASE("shifted tableaux") {
    auto zero = folded_limit_phi(0, 0);
    auto one = folded_insert({1}, std::nullopt, 0, 0);
    CHECK(to_shifted_strong(one.P, zero.model()).str() == "1");
    CHECK(to_shifted_weak(one.Q).str() == "1");
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : oracle::permutations(n)) {
            auto pair = folded_insert(p, std::nullopt, 0, 0);
            CHECK(from_shifted_strong(to_shifted_strong(pair.P, zero.model()), zero.model()) == pair.P);
            CHECK(from_shifted_weak(to_shifted_weak(pair.Q)) == pair.Q);
        }
    CHECK_THROWS_AS(to_shifted_weak(MarkedChain<Partition>{{Partition{}, part({1}), part({2})}, {1, 1}, {0, 0}}),
                    NotSymmetric);
}

TEST_CASE("shifted insertion") {
    auto single = sagan_worley({1});
    CHECK(single.insertion.str() == "1");
    CHECK(single.recording.str() == "1");
    auto inv = oracle::inverse({2, 6, 7, 3, 5, 4, 1});
    auto sw = sagan_worley(inv);
    CHECK(sw.insertion.str() == "6 / 4 5 / 1 2 3 7");
    CHECK(sw.recording.str() == "7 / 3 5' / 1 2' 4 6'");
    auto zero = folded_limit_phi(0, 0);
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : oracle::permutations(n)) {
            auto pair = folded_insert(p, std::nullopt, 0, 0);
            auto s = sagan_worley(oracle::inverse(p));
            CHECK(s.insertion == to_shifted_weak(pair.Q));
            CHECK(s.recording == to_shifted_strong(pair.P, zero.model()));
            auto ref = oracle::shifted_insertion(oracle::inverse(p));
            CHECK(oracle::shifted_string(ref.P) == s.insertion.str());
            CHECK(oracle::shifted_string(ref.Q) == s.recording.str());
        }
}
