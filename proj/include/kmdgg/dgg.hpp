#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kmdgg/weyl.hpp"

namespace kmdgg {

using BigInt = boost::multiprecision::cpp_int;

struct SupportViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Edge {
    int to = -1;
    Int mult = 0;
    Vec root;       // strong edges
    int node = -1;  // weak edges
};

// Graded graph on the vertices of a ball (optionally a subset of them).
// Edges are stored in both directions; covers whose label vanishes are kept
// apart in zero_covers.
class GradedGraph {
public:
    enum class Kind { strong, weak };

    const Ball& ball() const { return *ball_; }
    Kind kind() const { return kind_; }
    const Vec& label() const { return label_; }
    bool active(int v) const { return active_[v] != 0; }
    int grade(int v) const { return (*ball_)[v].length; }
    const std::vector<Edge>& out(int v) const { return out_[v]; }
    const std::vector<Edge>& in(int v) const { return in_[v]; }
    const std::vector<CoverData>& zero_covers() const { return zero_; }
    Int multiplicity(int v, int w) const;
    std::vector<int> vertices() const;
    std::size_t edge_count() const;

    // Limits vertices to the mask; edges leaving the mask are dropped.
    GradedGraph induced(const std::vector<char>& mask) const;
    // Overrides one edge label; used to exercise the duality check.
    void set_multiplicity(int v, int w, Int m);

    friend GradedGraph strong_graph(const Ball&, const RootTable&, const Vec&);
    friend GradedGraph weak_graph(const Ball&, const Vec&);

private:
    GradedGraph(const Ball& ball, Kind kind, Vec label);

    const Ball* ball_ = nullptr;
    Kind kind_ = Kind::strong;
    Vec label_;
    std::vector<char> active_;
    std::vector<std::vector<Edge>> out_;
    std::vector<std::vector<Edge>> in_;
    std::vector<CoverData> zero_;
};

GradedGraph strong_graph(const Ball& ball, const RootTable& roots, const Vec& weight);
GradedGraph weak_graph(const Ball& ball, const Vec& K);

using FormalSum = std::map<int, Int>;

FormalSum up(const GradedGraph& g, const FormalSum& s);
FormalSum down(const GradedGraph& g, const FormalSum& s);

struct DualityReport {
    bool ok = false;
    Int r = 0;
    int checked = 0;
    std::optional<int> vertex;  // first failing vertex
    FormalSum defect;           // (DU - UD - r)(vertex)
};

// Checks D_weak U_strong - U_strong D_weak = r Id on every active vertex of
// length at most interior. The parallel version splits the vertex loop.
DualityReport verify_duality(const GradedGraph& strong, const GradedGraph& weak, int interior);
DualityReport verify_duality_serial(const GradedGraph& strong, const GradedGraph& weak, int interior);

// Restriction to minimal coset representatives for J.
std::pair<GradedGraph, GradedGraph> restrict_parabolic(const GradedGraph& strong, const GradedGraph& weak,
                                                       const std::vector<int>& J);

// Weighted count of saturated chains from the identity, indexed by ball id.
std::vector<BigInt> count_tableaux(const GradedGraph& g);
BigInt identity_sum(const GradedGraph& strong, const GradedGraph& weak, int n);
bool verify_identity(const GradedGraph& strong, const GradedGraph& weak, int n);

}  // namespace kmdgg
