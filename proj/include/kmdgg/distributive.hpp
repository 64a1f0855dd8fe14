#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kmdgg/cartan.hpp"
#include "kmdgg/weyl.hpp"

namespace kmdgg {

struct NotCominuscule : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotDistributive : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Finite family and rank of a finite Cartan matrix, or of an untwisted affine
// matrix with node 0 removed.
std::optional<std::pair<char, int>> identify_finite(const Gcm& finite);
Gcm finite_part(const Gcm& affine);
Gcm transpose_gcm(const Gcm& g);

struct RootWithCoroot {
    Vec root;    // simple-root coordinates
    Vec coroot;  // simple-coroot coordinates
};

std::vector<RootWithCoroot> positive_roots(const Gcm& finite);

struct QuotientCover {
    int lower = -1;
    int upper = -1;
    Vec root;  // upper = lower * s_root
    Vec coroot;
    int node = -1;  // weak covers: upper = s_node * lower, as a position
};

// Minimal coset representatives of a finite Weyl group modulo the maximal
// parabolic subgroup fixing the fundamental weight at `position`. Elements are
// the orbit of that weight.
class ParabolicQuotient {
public:
    static ParabolicQuotient build(const Gcm& finite, int position, std::size_t cap = 200'000);

    const Gcm& gcm() const { return gcm_; }
    int position() const { return position_; }
    std::size_t size() const { return elements_.size(); }
    const WeylElement& operator[](int id) const { return elements_[id]; }
    const std::vector<WeylElement>& elements() const { return elements_; }
    const std::vector<QuotientCover>& strong_covers() const { return strong_; }
    const std::vector<QuotientCover>& weak_covers() const { return weak_; }
    bool leq(int a, int b) const;
    int bottom() const { return 0; }
    int top() const { return static_cast<int>(elements_.size()) - 1; }
    bool is_chain() const;

private:
    Gcm gcm_;
    int position_ = 0;
    std::vector<WeylElement> elements_;  // key holds the orbit weight
    std::vector<QuotientCover> strong_;
    std::vector<QuotientCover> weak_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> below_;
};

struct LatticeReport {
    std::size_t size = 0;
    bool lattice = false;
    bool distributive = false;
    int join_irreducibles = 0;
    std::string witness;
};

// Join existence for every pair, then distributivity by comparing the size
// with the number of order ideals of the join-irreducibles.
LatticeReport lattice_test(const ParabolicQuotient& q);

struct Classification {
    bool distributive = false;
    bool cominuscule = false;
    // Cominuscule node of the dual type used instead, when the node itself is
    // not cominuscule.
    std::optional<std::pair<char, int>> dual_type;
    std::string witness;
};

Classification classify(char family, int rank, int node);

// Positive roots lying above a simple root, ordered by coordinatewise
// comparison.
class RootPoset {
public:
    RootPoset(const Gcm& finite, int position);

    const Gcm& gcm() const { return gcm_; }
    int position() const { return position_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<RootWithCoroot>& elements() const { return elements_; }
    const RootWithCoroot& operator[](int k) const { return elements_[k]; }
    std::optional<int> index_of(const Vec& root) const;
    bool leq(int a, int b) const;
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    int maximum() const;
    bool cominuscule() const;

private:
    Gcm gcm_;
    int position_ = 0;
    std::vector<RootWithCoroot> elements_;
    std::vector<std::pair<int, int>> covers_;
};

using Ideal = std::uint64_t;  // bit k stands for element k of a RootPoset

std::vector<Ideal> order_ideals(const RootPoset& poset, std::size_t cap = 1'000'000);

struct InversionReport {
    bool ok = false;
    std::vector<Ideal> ideals;  // indexed by quotient id
    std::size_t ideal_count = 0;
    std::size_t ideal_covers = 0;
    std::string failure;
};

// w -> {alpha > 0 : w alpha < 0} on the quotient. Throws NotCominuscule.
Ideal inversion_ideal(const ParabolicQuotient& q, const RootPoset& poset, int id);
InversionReport inv_isomorphism(const ParabolicQuotient& q, const RootPoset& poset);

// For every pair in the poset the reflection of one in the other is one of the
// allowed shapes. Returns an empty string on success.
std::string check_reflection_shapes(const RootPoset& poset);

struct LabeledPosets {
    std::string type;     // e.g. "C4~ node 4"
    std::string pathway;  // "root poset", "dual root poset" or "chain"
    std::size_t quotient_size = 0;
    // Abstract poset: element k with covers; roots in the original coordinates.
    std::vector<Vec> roots;
    std::vector<Vec> order_roots;  // coordinates the order was computed in
    std::vector<std::pair<int, int>> covers;
    std::vector<std::string> strong;  // reflection names
    std::vector<int> weak;            // node numbers
    std::vector<Int> P;               // <alpha^vee, Lambda_i>
    std::vector<Int> Q;               // k_j of the weak node
    bool orders_coincide = false;
    bool strong_labels_consistent = false;
    bool weak_labels_consistent = false;
    std::optional<bool> inversion_isomorphism;  // unset on the chain pathway
    std::string reflection_shapes;                // empty when the check passes

    bool ok() const;
};

LabeledPosets labeled_posets(const Gcm& affine, int node);

// Root written the way tables name reflections: "pq" for the classical
// families, coefficient strings for the exceptional ones.
std::string root_name(char family, int rank, const Vec& root);

// Hasse diagram turned so that covers step east or north and the minimum sits
// in the southwest corner. Rows from the top, joined with " / "; "." marks an
// empty cell before the first entry of a row.
std::string rotated_grid(const std::vector<std::pair<int, int>>& covers, const std::vector<Vec>& roots,
                         const std::vector<std::string>& labels);

template <class T>
std::vector<std::string> to_strings(const std::vector<T>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(std::to_string(x));
    return out;
}

}  // namespace kmdgg
