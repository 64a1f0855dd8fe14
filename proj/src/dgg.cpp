#include "kmdgg/dgg.hpp"

#include <algorithm>

#include <omp.h>

namespace kmdgg {

Int GradedGraph::multiplicity(int v, int w) const {
    for (const auto& e : out_[v])
        if (e.to == w) return e.mult;
    return 0;
}

std::vector<int> GradedGraph::vertices() const {
    std::vector<int> out;
    for (std::size_t v = 0; v < active_.size(); ++v)
        if (active_[v]) out.push_back(static_cast<int>(v));
    return out;
}

std::size_t GradedGraph::edge_count() const {
    std::size_t n = 0;
    for (const auto& e : out_) n += e.size();
    return n;
}

GradedGraph GradedGraph::induced(const std::vector<char>& mask) const {
    GradedGraph g = *this;
    for (std::size_t v = 0; v < active_.size(); ++v) g.active_[v] = active_[v] && mask[v];
    auto keep = [&](std::vector<Edge>& edges) {
        edges.erase(std::remove_if(edges.begin(), edges.end(), [&](const Edge& e) { return !g.active_[e.to]; }),
                    edges.end());
    };
    for (std::size_t v = 0; v < active_.size(); ++v) {
        if (!g.active_[v]) {
            g.out_[v].clear();
            g.in_[v].clear();
            continue;
        }
        keep(g.out_[v]);
        keep(g.in_[v]);
    }
    std::erase_if(g.zero_, [&](const CoverData& c) { return !g.active_[c.lower] || !g.active_[c.upper]; });
    return g;
}

void GradedGraph::set_multiplicity(int v, int w, Int m) {
    for (auto& e : out_[v])
        if (e.to == w) e.mult = m;
    for (auto& e : in_[w])
        if (e.to == v) e.mult = m;
}

GradedGraph::GradedGraph(const Ball& ball, Kind kind, Vec label)
    : ball_(&ball),
      kind_(kind),
      label_(std::move(label)),
      active_(ball.size(), 1),
      out_(ball.size()),
      in_(ball.size()) {}

GradedGraph strong_graph(const Ball& ball, const RootTable& roots, const Vec& weight) {
    if (std::any_of(weight.begin(), weight.end(), [](Int x) { return x < 0; }))
        throw std::invalid_argument("weight is not dominant");
    GradedGraph g(ball, GradedGraph::Kind::strong, weight);
    const int n = static_cast<int>(ball.size());
    std::vector<std::vector<CoverData>> covers(n);
#pragma omp parallel for schedule(dynamic)
    for (int v = 0; v < n; ++v) {
        if (ball[v].length < ball.radius() || ball.complete()) covers[v] = strong_covers(ball, roots, v);
    }
    for (int v = 0; v < n; ++v) {
        for (auto& c : covers[v]) {
            Int m = pairing(c.coroot, weight);
            if (m == 0) {
                g.zero_.push_back(std::move(c));
                continue;
            }
            g.out_[v].push_back(Edge{c.upper, m, c.root, -1});
            g.in_[c.upper].push_back(Edge{v, m, c.root, -1});
        }
    }
    return g;
}

GradedGraph weak_graph(const Ball& ball, const Vec& K) {
    GradedGraph g(ball, GradedGraph::Kind::weak, K);
    const int n = static_cast<int>(ball.size());
    for (int v = 0; v < n; ++v) {
        if (ball[v].length >= ball.radius() && !ball.complete()) continue;
        for (auto& c : weak_covers(ball, v)) {
            Int m = K.at(c.node);
            if (m == 0) {
                g.zero_.push_back(std::move(c));
                continue;
            }
            g.out_[v].push_back(Edge{c.upper, m, {}, c.node});
            g.in_[c.upper].push_back(Edge{v, m, {}, c.node});
        }
    }
    return g;
}

namespace {

void check_support(const GradedGraph& g, const FormalSum& s, bool upward) {
    for (const auto& [v, c] : s) {
        if (!g.active(v)) throw OutOfBall("vertex outside the graph");
        if (upward && g.grade(v) >= g.ball().radius() && !g.ball().complete())
            throw OutOfBall("up operator needs vertices beyond the radius");
    }
}

}  // namespace

FormalSum up(const GradedGraph& g, const FormalSum& s) {
    check_support(g, s, true);
    FormalSum out;
    for (const auto& [v, c] : s)
        for (const auto& e : g.out(v)) out[e.to] += c * e.mult;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

FormalSum down(const GradedGraph& g, const FormalSum& s) {
    check_support(g, s, false);
    FormalSum out;
    for (const auto& [v, c] : s)
        for (const auto& e : g.in(v)) out[e.to] += c * e.mult;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

namespace {

FormalSum commutator_defect(const GradedGraph& strong, const GradedGraph& weak, int v, Int r) {
    FormalSum acc;
    for (const auto& e : strong.out(v))
        for (const auto& f : weak.in(e.to)) acc[f.to] += e.mult * f.mult;
    for (const auto& e : weak.in(v))
        for (const auto& f : strong.out(e.to)) acc[f.to] -= e.mult * f.mult;
    acc[v] -= r;
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
    return acc;
}

std::vector<int> interior_vertices(const GradedGraph& strong, const GradedGraph& weak, int interior) {
    const Ball& ball = strong.ball();
    if (&ball != &weak.ball()) throw std::invalid_argument("graphs live on different balls");
    if (interior >= ball.radius() && !ball.complete()) throw OutOfBall("interior radius must be below the ball radius");
    std::vector<int> out;
    for (int v : strong.vertices())
        if (weak.active(v) && strong.grade(v) <= interior) out.push_back(v);
    return out;
}

}  // namespace

DualityReport verify_duality_serial(const GradedGraph& strong, const GradedGraph& weak, int interior) {
    DualityReport rep;
    rep.r = pairing(weak.label(), strong.label());
    auto verts = interior_vertices(strong, weak, interior);
    for (int v : verts) {
        ++rep.checked;
        FormalSum d = commutator_defect(strong, weak, v, rep.r);
        if (!d.empty()) {
            rep.vertex = v;
            rep.defect = std::move(d);
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

DualityReport verify_duality(const GradedGraph& strong, const GradedGraph& weak, int interior) {
    DualityReport rep;
    rep.r = pairing(weak.label(), strong.label());
    auto verts = interior_vertices(strong, weak, interior);
    const int n = static_cast<int>(verts.size());
    int first_bad = n;
#pragma omp parallel for schedule(dynamic, 16) reduction(min : first_bad)
    for (int k = 0; k < n; ++k) {
        if (!commutator_defect(strong, weak, verts[k], rep.r).empty()) first_bad = std::min(first_bad, k);
    }
    rep.checked = n;
    if (first_bad < n) {
        rep.vertex = verts[first_bad];
        rep.defect = commutator_defect(strong, weak, verts[first_bad], rep.r);
        return rep;
    }
    rep.ok = true;
    return rep;
}

std::pair<GradedGraph, GradedGraph> restrict_parabolic(const GradedGraph& strong, const GradedGraph& weak,
                                                       const std::vector<int>& J) {
    for (int j : J)
        if (strong.label().at(j) != 0)
            throw SupportViolation("weight has a nonzero coordinate at node position " + std::to_string(j));
    auto mask = min_coset_reps(strong.ball(), J);
    return {strong.induced(mask), weak.induced(mask)};
}

std::vector<BigInt> count_tableaux(const GradedGraph& g) {
    const Ball& ball = g.ball();
    std::vector<BigInt> f(ball.size(), 0);
    f[0] = g.active(0) ? 1 : 0;
    for (std::size_t level = 1; level < ball.levels().size(); ++level) {
        for (int w : ball.levels()[level]) {
            if (!g.active(w)) continue;
            BigInt s = 0;
            for (const auto& e : g.in(w)) s += f[e.to] * e.mult;
            f[w] = s;
        }
    }
    return f;
}

BigInt identity_sum(const GradedGraph& strong, const GradedGraph& weak, int n) {
    const Ball& ball = strong.ball();
    if (n > ball.radius()) throw OutOfBall("level beyond the ball radius");
    auto fs = count_tableaux(strong);
    auto fw = count_tableaux(weak);
    BigInt sum = 0;
    if (static_cast<std::size_t>(n) < ball.levels().size())
        for (int w : ball.levels()[n]) sum += fs[w] * fw[w];
    return sum;
}

bool verify_identity(const GradedGraph& strong, const GradedGraph& weak, int n) {
    const Int r = pairing(weak.label(), strong.label());
    BigInt expected = 1;
    for (int k = 1; k <= n; ++k) expected *= BigInt(r) * k;
    return identity_sum(strong, weak, n) == expected;
}

}  // namespace kmdgg
