#include <doctest.h>

#include "kmdgg/cartan.hpp"

using namespace kmdgg;

TEST_CASE("validation") {
    CHECK_NOTHROW(Gcm::validate({{2, -2}, {-2, 2}}));
    CHECK_THROWS_AS(Gcm::validate({{2, -1}, {0, 2}}), NotGCM);
    CHECK_THROWS_AS(Gcm::validate({{2, 1}, {1, 2}}), NotGCM);
    CHECK_THROWS_AS(Gcm::validate({{3, -1}, {-1, 2}}), NotGCM);
    Gcm c2 = Gcm::validate({{2, -1, 0}, {-2, 2, -2}, {0, -1, 2}});
    CHECK(c2 == affine_type('C', 2));
    CHECK(c2.nodes() == std::vector<int>{0, 1, 2});
}

TEST_CASE("symmetrizer") {
    CHECK(symmetrizer({{2, -1}, {-1, 2}}) == Vec{1, 1});
    CHECK(symmetrizer(affine_type('C', 2).matrix()) == Vec{2, 1, 2});
    CHECK_FALSE(symmetrizer({{2, -1, -2}, {-2, 2, -1}, {-1, -2, 2}}).has_value());
    for (const char* name : {"A3~", "C3~", "D4~", "E6~", "G2~", "G2", "C4"}) {
        Gcm g = named_gcm(name);
        auto d = g.symmetrizer();
        REQUIRE(d.has_value());
        for (int i = 0; i < g.size(); ++i)
            for (int j = 0; j < g.size(); ++j) CHECK((*d)[i] * g.a(i, j) == (*d)[j] * g.a(j, i));
    }
}

TEST_CASE("center and canonical central element") {
    CHECK(center_basis(finite_type('A', 2)).empty());
    CHECK(canonical_K(affine_type('A', 2)) == Vec{1, 1, 1});
    CHECK(canonical_K(affine_type('C', 4)) == Vec{1, 1, 1, 1, 1});
    CHECK(canonical_K(affine_type('D', 5)) == Vec{1, 1, 2, 2, 1, 1});
    CHECK(canonical_K(affine_type('G', 2)) == Vec{1, 1, 2});
    CHECK_THROWS_AS(canonical_K(finite_type('A', 3)), NotAffine);
    for (const char* name : {"A1~", "A4~", "C2~", "D4~", "E6~", "E7~", "G2~"}) {
        Gcm g = named_gcm(name);
        for (const Vec& k : center_basis(g))
            for (int j = 0; j < g.size(); ++j) {
                Int s = 0;
                for (int i = 0; i < g.size(); ++i) s += k[i] * g.a(i, j);
                CHECK(s == 0);
            }
    }
}

TEST_CASE("E types use the standard labelling") {
    Gcm e6 = finite_type('E', 6);
    auto a = [&](int i, int j) { return e6.a(e6.position(i), e6.position(j)); };
    CHECK(a(1, 3) == -1);
    CHECK(a(2, 4) == -1);
    CHECK(a(3, 4) == -1);
    CHECK(a(5, 6) == -1);
    CHECK(a(1, 2) == 0);
    CHECK(highest_root(e6) == Vec{1, 2, 2, 3, 2, 1});
    CHECK(highest_root(finite_type('G', 2)) == Vec{3, 2});
}

TEST_CASE("folding the affine A3 diagram") {
    FoldingData fd = fold(affine_type('A', 3), {0, 3, 2, 1});
    CHECK(fd.folded.matrix() == Matrix{{2, -1, 0}, {-2, 2, -2}, {0, -1, 2}});
    CHECK(fd.orbits == std::vector<std::vector<int>>{{0}, {1, 3}, {2}});
    CHECK(fd.kappa == 2);
    CHECK(psi(fd, Vec{1, 0, 0}) == Vec{2, 0, 0, 0});
    CHECK(psi(fd, Vec{0, 1, 0}) == Vec{0, 1, 0, 1});
    CHECK(psi(fd, Vec{0, 0, 1}) == Vec{0, 0, 2, 0});
    CHECK(phi(fd, Vec{0, 1, 0}) == Vec{0, 1, 0, 1});
    CHECK(phi(fd, canonical_K(fd.folded)) == canonical_K(fd.source));
    // <phi(alpha_i^vee), psi(Lambda_k)> = kappa delta_ik
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            Vec coroot(3, 0), weight(3, 0);
            coroot[i] = 1;
            weight[k] = 1;
            CHECK(pairing(phi(fd, coroot), psi(fd, weight)) == (i == k ? fd.kappa : 0));
        }

    FoldingData same = fold(affine_type('A', 3), {0, 1, 2, 3});
    CHECK(same.folded == same.source);
    CHECK_THROWS_AS(fold(affine_type('A', 1), {1, 0}), NotAdmissible);
    CHECK_THROWS_AS(fold(affine_type('A', 3), {1, 0, 2, 3}), NotAutomorphism);
}
