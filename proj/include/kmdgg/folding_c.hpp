#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kmdgg/cartan.hpp"
#include "kmdgg/cores.hpp"
#include "kmdgg/dgg.hpp"
#include "kmdgg/growth.hpp"
#include "kmdgg/weyl.hpp"

namespace kmdgg {

struct RepresentativeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Word of f(w) in the source group: every letter becomes its orbit.
Word embed_word(const FoldingData& fd, const Word& word);

struct FoldedElement {
    WeylElement folded;  // in the folded group
    WeylElement image;   // in the source group
};

// Checks that the image is fixed by the automorphism and that lengths add up
// along the orbit sizes.
FoldedElement embed_f(const FoldingData& fd, const WeylElement& w);

bool fixed_by_automorphism(const FoldingData& fd, const Vec& key);
Vec permute_root(const FoldingData& fd, const Vec& v);

struct CoverOrbit {
    std::vector<Vec> roots;    // source roots
    std::vector<Vec> coroots;  // source coroots
    Vec lower_key;             // f(v)
    Vec upper_key;             // f(w)
    bool commuting = false;
    bool boolean_interval = false;  // subsets map to distinct elements of the right lengths
    Int source_multiplicity = 0;    // sum of <gamma^vee, omega_j'> over the orbit
    Int folded_multiplicity = 0;    // <alpha^vee, Lambda_i'>
};

// Orbit of source roots attached to the cover v -> w = v s_alpha, where alpha
// is a root of the table.
CoverOrbit cover_orbit(const FoldingData& fd, const RootTable& roots, const WeylElement& v, const Vec& root,
                       int i_prime, int j_prime);

// Elements of the source Bruhat interval [f(v), f(w)], counted in a source
// ball; used to confirm the interval is boolean.
int interval_size(const Ball& source_ball, const BruhatOrder& order, const Vec& lower_key, const Vec& upper_key);

struct FoldedEdge {
    int lower = -1;  // ids in the folded ball
    int upper = -1;
    Int mult = 0;
    bool operator==(const FoldedEdge&) const = default;
    auto operator<=>(const FoldedEdge&) const = default;
};

struct FoldedGraphs {
    std::vector<FoldedEdge> strong;
    std::vector<FoldedEdge> weak;
};

// Folded strong and weak graphs read off the source side: covers of fixed
// source elements grouped by orbits of the automorphism. Vertices are named by
// their ids in the folded ball; only folded elements of length below the
// folded radius are expanded.
FoldedGraphs folded_graphs(const FoldingData& fd, const Ball& folded_ball, const Ball& source_ball,
                           const RootTable& source_roots, int i_prime, int j_prime, const Vec& K);

// The same edge lists taken directly from the folded graphs.
FoldedGraphs direct_graphs(const GradedGraph& strong, const GradedGraph& weak);

struct IsomorphismReport {
    bool ok = false;
    std::size_t strong_edges = 0;
    std::size_t weak_edges = 0;
    std::string mismatch;
};

IsomorphismReport compare_graphs(const FoldedGraphs& a, const FoldedGraphs& b);

// For every fixed source element x in the ball and every strong cover
// x -> x s_gamma, the multiplicity for omega_j equals the multiplicity for
// omega_{pi^k j} of x -> x s_{pi^k gamma}.
bool representative_transport(const FoldingData& fd, const Ball& source_ball, const RootTable& source_roots, int j,
                              int k);

// Core of f(w) acting on the empty partition with anchor j'. The source is
// affine A_{2n-1} folded by j -> 2n - j.
Partition sc_map(const FoldingData& fd, int j_prime, const WeylElement& w);

// Coefficient of a cover lower -> upper in the folded quotient, summed over the
// period-2n covers lower -> nu inside upper.
int chevalley_zero(const Partition& lower, const Partition& upper, int n);

// Growth rule for type C read on 2n-cores (finite) or on the limit. Throws
// RepresentativeMismatch unless j' lies in the orbit of i'.
CoreBijection folded_phi(int n, int i_prime, int j_prime);
CoreBijection folded_limit_phi(int i_prime, int j_prime);

TableauPair<Partition> folded_insert(const std::vector<int>& perm, std::optional<int> n, int i_prime, int j_prime);

}  // namespace kmdgg
