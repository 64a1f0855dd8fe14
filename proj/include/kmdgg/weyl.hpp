#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include <boost/functional/hash.hpp>

#include "kmdgg/cartan.hpp"

namespace kmdgg {

// Words list node positions; [i1, ..., ik] stands for s_i1 ... s_ik.
using Word = std::vector<int>;

struct VecHash {
    std::size_t operator()(const Vec& v) const { return boost::hash_range(v.begin(), v.end()); }
};

struct DepthExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OutOfBall : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct ProportionalRoots : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Vec reflect_weight(const Gcm& g, int i, Vec weight);
Vec reflect_root(const Gcm& g, int i, Vec root);
Vec reflect_coroot(const Gcm& g, int i, Vec coroot);

Vec apply_word(const Gcm& g, const Word& word, Vec weight);
Vec apply_word_to_root(const Gcm& g, const Word& word, Vec root);
Vec apply_word_to_coroot(const Gcm& g, const Word& word, Vec coroot);

// Root coordinates to fundamental-weight coordinates.
Vec root_to_weight(const Gcm& g, const Vec& root);

struct WeylElement {
    Vec key;  // image of rho
    int length = 0;
    Word word;
};

WeylElement element(const Gcm& g, const Word& word);
WeylElement element_from_key(const Gcm& g, Vec key);
Word inverse_word(Word w);

std::vector<int> left_descents(const WeylElement& w);
std::vector<int> right_descents(const Gcm& g, const WeylElement& w);

struct RootEntry {
    Vec root;
    Vec coroot;
    int depth = 0;
    Word word;       // root = word applied to the simple root below
    int simple = 0;
};

class RootTable {
public:
    static RootTable build(const Gcm& g, int depth, std::size_t cap = 2'000'000);

    int depth() const { return depth_; }
    const std::vector<RootEntry>& entries() const { return entries_; }
    std::optional<int> find(const Vec& root) const;

private:
    int depth_ = 0;
    std::vector<RootEntry> entries_;
    std::unordered_map<Vec, int, VecHash> index_;
};

class Ball {
public:
    const Gcm& gcm() const { return gcm_; }
    int radius() const { return radius_; }
    // True when the ball is the whole (finite) group.
    bool complete() const { return complete_; }
    std::size_t size() const { return elements_.size(); }
    const WeylElement& operator[](int id) const { return elements_[id]; }
    const std::vector<WeylElement>& elements() const { return elements_; }
    const std::vector<std::vector<int>>& levels() const { return levels_; }
    std::optional<int> find(const Vec& key) const;
    int id_of(const Vec& key) const;

    friend Ball generate_ball(const Gcm& g, int radius, std::size_t cap);

private:
    Gcm gcm_;
    int radius_ = 0;
    bool complete_ = false;
    std::vector<WeylElement> elements_;
    std::vector<std::vector<int>> levels_;
    std::unordered_map<Vec, int, VecHash> index_;
};

Ball generate_ball(const Gcm& g, int radius, std::size_t cap = 5'000'000);

struct CoverData {
    int lower = -1;
    int upper = -1;
    Vec root;
    Vec coroot;
    int node = -1;  // weak covers: upper = s_node * lower
};

// Images of the simple roots under w, in weight coordinates.
std::vector<Vec> simple_root_images(const Gcm& g, const WeylElement& w);

// Key of w * s_alpha.
Vec right_reflect_key(const Gcm& g, const WeylElement& w, const std::vector<Vec>& images,
                      const RootEntry& root);

std::vector<CoverData> strong_covers(const Ball& ball, const RootTable& roots, int v);
std::vector<CoverData> weak_covers(const Ball& ball, int v);

// Bruhat order on a ball, from the transitive closure of strong covers.
class BruhatOrder {
public:
    BruhatOrder(const Ball& ball, const RootTable& roots);
    bool leq(int v, int w) const;
    const std::vector<std::vector<CoverData>>& covers() const { return covers_; }

private:
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> below_;
    std::vector<std::vector<CoverData>> covers_;
};

// Mask of elements with no right descent in J.
std::vector<char> min_coset_reps(const Ball& ball, const std::vector<int>& J);

}  // namespace kmdgg
