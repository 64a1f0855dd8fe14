#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

namespace kmdgg {

struct MalformedSquare : std::logic_error {
    using std::logic_error::logic_error;
};
struct BijectionDomainError : std::logic_error {
    using std::logic_error::logic_error;
};
struct InconsistentPair : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// z -> y in the strong graph with marking m, z -> x in the weak graph with
// marking mp.
template <class V>
struct Down {
    V z;
    int m = 0;
    int mp = 0;
};

// x -> w in the strong graph with marking M, y -> w in the weak graph with
// marking Mp.
template <class V>
struct Up {
    V w;
    int M = 0;
    int Mp = 0;
};

enum class Side { strong, weak };

template <class V>
struct Neighbor {
    V vertex;
    int mult = 0;
};

template <class V>
class DifferentialBijection {
public:
    virtual ~DifferentialBijection() = default;

    virtual int r() const = 0;
    virtual V bottom() const = 0;

    virtual Up<V> diag(const V& x, int color) const = 0;
    virtual Up<V> diag(const V& x, const Down<V>& d) const = 0;
    virtual std::variant<int, Down<V>> diag_inverse(const V& x, const Up<V>& u) const = 0;
    virtual Up<V> offdiag(const V& x, const V& y, const Down<V>& d) const = 0;
    virtual Down<V> offdiag_inverse(const V& x, const V& y, const Up<V>& u) const = 0;

    virtual std::vector<Neighbor<V>> up(Side side, const V& x) const = 0;
    virtual std::vector<Neighbor<V>> down(Side side, const V& x) const = 0;
};

template <class V>
struct Automorphism {
    std::function<V(const V&)> forward;
    std::function<V(const V&)> backward;
    int order = 1;

    static Automorphism identity() {
        return {[](const V& v) { return v; }, [](const V& v) { return v; }, 1};
    }

    Automorphism then(const Automorphism& next) const {
        auto f = forward, g = next.forward, fb = backward, gb = next.backward;
        return {[f, g](const V& v) { return g(f(v)); }, [fb, gb](const V& v) { return fb(gb(v)); },
                std::max(order, next.order)};
    }

    Automorphism power(int k) const {
        Automorphism out = identity();
        for (int i = 0; i < k; ++i) out = out.then(*this);
        return out;
    }
};

// The bijection conjugated by tau: tau^-1 o Phi_{tau x, tau y} o tau.
// Markings are carried through unchanged.
template <class V>
class Twisted final : public DifferentialBijection<V> {
public:
    Twisted(const DifferentialBijection<V>& base, Automorphism<V> tau) : base_(base), tau_(std::move(tau)) {}

    int r() const override { return base_.r(); }
    V bottom() const override { return base_.bottom(); }

    Up<V> diag(const V& x, int color) const override { return back(base_.diag(tau_.forward(x), color)); }
    Up<V> diag(const V& x, const Down<V>& d) const override {
        return back(base_.diag(tau_.forward(x), fwd(d)));
    }
    std::variant<int, Down<V>> diag_inverse(const V& x, const Up<V>& u) const override {
        auto res = base_.diag_inverse(tau_.forward(x), fwd(u));
        if (auto* d = std::get_if<Down<V>>(&res)) return back(*d);
        return res;
    }
    Up<V> offdiag(const V& x, const V& y, const Down<V>& d) const override {
        return back(base_.offdiag(tau_.forward(x), tau_.forward(y), fwd(d)));
    }
    Down<V> offdiag_inverse(const V& x, const V& y, const Up<V>& u) const override {
        return back(base_.offdiag_inverse(tau_.forward(x), tau_.forward(y), fwd(u)));
    }
    std::vector<Neighbor<V>> up(Side side, const V& x) const override {
        auto out = base_.up(side, tau_.forward(x));
        for (auto& nb : out) nb.vertex = tau_.backward(nb.vertex);
        return out;
    }
    std::vector<Neighbor<V>> down(Side side, const V& x) const override {
        auto out = base_.down(side, tau_.forward(x));
        for (auto& nb : out) nb.vertex = tau_.backward(nb.vertex);
        return out;
    }

private:
    Down<V> fwd(const Down<V>& d) const { return {tau_.forward(d.z), d.m, d.mp}; }
    Up<V> fwd(const Up<V>& u) const { return {tau_.forward(u.w), u.M, u.Mp}; }
    Down<V> back(const Down<V>& d) const { return {tau_.backward(d.z), d.m, d.mp}; }
    Up<V> back(const Up<V>& u) const { return {tau_.backward(u.w), u.M, u.Mp}; }

    const DifferentialBijection<V>& base_;
    Automorphism<V> tau_;
};

template <class V>
Up<V> forward_square(const DifferentialBijection<V>& phi, const V& z, const V& y, const V& x, int m, int mp,
                     int color) {
    const bool zy = z == y;
    const bool zx = z == x;
    if (color != 0 && !(zy && zx)) throw MalformedSquare("a colored square needs equal corners");
    if (color < 0 || color > phi.r()) throw MalformedSquare("color out of range");
    if (zy != (m == 0) || zx != (mp == 0)) throw MalformedSquare("markings do not match the edges");
    if (zy && zx) {
        if (color == 0) return {z, 0, 0};
        return phi.diag(x, color);
    }
    if (x == y) return phi.diag(x, Down<V>{z, m, mp});
    if (zy) return {x, 0, mp};
    if (zx) return {y, m, 0};
    return phi.offdiag(x, y, Down<V>{z, m, mp});
}

template <class V>
struct Preimage {
    V z;
    int m = 0;
    int mp = 0;
    int color = 0;
};

template <class V>
Preimage<V> inverse_square(const DifferentialBijection<V>& phi, const V& x, const V& y, const V& w, int M, int Mp) {
    if ((w == x) != (M == 0) || (w == y) != (Mp == 0)) throw MalformedSquare("markings do not match the edges");
    if (x == y) {
        if (w == x) return {x, 0, 0, 0};
        auto res = phi.diag_inverse(x, Up<V>{w, M, Mp});
        if (const int* c = std::get_if<int>(&res)) return {x, 0, 0, *c};
        const auto& d = std::get<Down<V>>(res);
        return {d.z, d.m, d.mp, 0};
    }
    if (w == x) return {y, 0, Mp, 0};
    if (w == y) return {x, M, 0, 0};
    Down<V> d = phi.offdiag_inverse(x, y, Up<V>{w, M, Mp});
    return {d.z, d.m, d.mp, 0};
}

// One-line permutation with a color per position; for mixed insertion each
// entry also carries a pair of twist exponents.
struct ColoredPermutation {
    std::vector<int> perm;   // perm[i - 1] = sigma(i)
    std::vector<int> color;  // 1..r
    std::vector<int> p;      // mixed: 0..kappa-1, empty otherwise
    std::vector<int> pp;     // mixed: 0..kappa'-1, empty otherwise

    int size() const { return static_cast<int>(perm.size()); }
    bool operator==(const ColoredPermutation&) const = default;

    static ColoredPermutation plain(std::vector<int> perm) {
        ColoredPermutation c;
        c.color.assign(perm.size(), 1);
        c.perm = std::move(perm);
        return c;
    }
};

template <class V>
struct MarkedChain {
    std::vector<V> shapes;  // n + 1 vertices
    std::vector<int> marks;
    std::vector<int> aux;

    bool operator==(const MarkedChain&) const = default;
    bool operator<(const MarkedChain& o) const {
        return std::tie(shapes, marks, aux) < std::tie(o.shapes, o.marks, o.aux);
    }
};

template <class V>
struct GrowthDiagram {
    int n = 0;
    std::vector<std::vector<V>> grid;       // grid[i][j], 0 <= i, j <= n
    std::vector<std::vector<int>> hmark;    // edge (i, j-1) -> (i, j)
    std::vector<std::vector<int>> vmark;    // edge (i-1, j) -> (i, j)
    std::vector<std::vector<int>> haux;
    std::vector<std::vector<int>> vaux;

    MarkedChain<V> P() const {
        MarkedChain<V> c{grid[n], {}, {}};
        for (int j = 1; j <= n; ++j) {
            c.marks.push_back(hmark[n][j]);
            c.aux.push_back(haux[n][j]);
        }
        return c;
    }
    MarkedChain<V> Q() const {
        MarkedChain<V> c;
        for (int i = 0; i <= n; ++i) c.shapes.push_back(grid[i][n]);
        for (int i = 1; i <= n; ++i) {
            c.marks.push_back(vmark[i][n]);
            c.aux.push_back(vaux[i][n]);
        }
        return c;
    }
};

template <class V>
struct TableauPair {
    MarkedChain<V> P;
    MarkedChain<V> Q;
    bool operator==(const TableauPair&) const = default;
    bool operator<(const TableauPair& o) const { return std::tie(P, Q) < std::tie(o.P, o.Q); }
};

namespace detail {

template <class V>
GrowthDiagram<V> empty_diagram(int n, const V& bottom) {
    GrowthDiagram<V> g;
    g.n = n;
    g.grid.assign(n + 1, std::vector<V>(n + 1, bottom));
    g.hmark.assign(n + 1, std::vector<int>(n + 1, 0));
    g.vmark = g.hmark;
    g.haux = g.hmark;
    g.vaux = g.hmark;
    return g;
}

inline void check_permutation(const ColoredPermutation& s) {
    const int n = s.size();
    std::vector<int> sorted = s.perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
        if (sorted[i] != i + 1) throw std::invalid_argument("not a permutation");
    if (static_cast<int>(s.color.size()) != n) throw std::invalid_argument("one color per entry is required");
}

}  // namespace detail

// Fills the diagram row by row. select(i, j) supplies the bijection used at
// square (i, j).
template <class V, class Select>
GrowthDiagram<V> grow(const ColoredPermutation& sigma, const V& bottom, Select select) {
    detail::check_permutation(sigma);
    const int n = sigma.size();
    const bool mixed = !sigma.p.empty();
    auto g = detail::empty_diagram(n, bottom);
    std::vector<int> row_of(n + 1);
    for (int i = 1; i <= n; ++i) row_of[sigma.perm[i - 1]] = i;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const int color = sigma.perm[i - 1] == j ? sigma.color[i - 1] : 0;
            Up<V> u = forward_square(select(i, j), g.grid[i - 1][j - 1], g.grid[i - 1][j], g.grid[i][j - 1],
                                     g.hmark[i - 1][j], g.vmark[i][j - 1], color);
            g.grid[i][j] = std::move(u.w);
            g.hmark[i][j] = u.M;
            g.vmark[i][j] = u.Mp;
            if (mixed) {
                g.haux[i][j] = i >= row_of[j] ? sigma.p[row_of[j] - 1] : 0;
                g.vaux[i][j] = j >= sigma.perm[i - 1] ? sigma.pp[i - 1] : 0;
            }
        }
    }
    return g;
}

template <class V>
GrowthDiagram<V> grow(const ColoredPermutation& sigma, const DifferentialBijection<V>& phi) {
    return grow(sigma, phi.bottom(), [&](int, int) -> const DifferentialBijection<V>& { return phi; });
}

template <class V>
TableauPair<V> insert(const ColoredPermutation& sigma, const DifferentialBijection<V>& phi) {
    auto g = grow(sigma, phi);
    return {g.P(), g.Q()};
}

// Runs the inverse local rule from the south-east corner. The returned
// permutation carries aux labels when the chains do.
template <class V, class Select>
ColoredPermutation reverse(const TableauPair<V>& pair, const V& bottom, Select select) {
    const int n = static_cast<int>(pair.P.marks.size());
    if (static_cast<int>(pair.Q.marks.size()) != n || static_cast<int>(pair.P.shapes.size()) != n + 1 ||
        static_cast<int>(pair.Q.shapes.size()) != n + 1)
        throw InconsistentPair("tableaux have different lengths");
    if (pair.P.shapes.back() != pair.Q.shapes.back()) throw InconsistentPair("tableaux have different shapes");
    auto g = detail::empty_diagram(n, bottom);
    for (int j = 0; j <= n; ++j) g.grid[n][j] = pair.P.shapes[j];
    for (int i = 0; i <= n; ++i) g.grid[i][n] = pair.Q.shapes[i];
    for (int j = 1; j <= n; ++j) g.hmark[n][j] = pair.P.marks[j - 1];
    for (int i = 1; i <= n; ++i) g.vmark[i][n] = pair.Q.marks[i - 1];
    ColoredPermutation out;
    out.perm.assign(n, 0);
    out.color.assign(n, 0);
    std::vector<char> column_used(n + 1, 0);
    for (int i = n; i >= 1; --i) {
        for (int j = n; j >= 1; --j) {
            Preimage<V> pre;
            try {
                pre = inverse_square(select(i, j), g.grid[i][j - 1], g.grid[i - 1][j], g.grid[i][j], g.hmark[i][j],
                                     g.vmark[i][j]);
            } catch (const std::logic_error& e) {
                throw InconsistentPair(std::string("no preimage: ") + e.what());
            }
            g.grid[i - 1][j - 1] = pre.z;
            g.hmark[i - 1][j] = pre.m;
            g.vmark[i][j - 1] = pre.mp;
            if (pre.color != 0) {
                if (out.perm[i - 1] != 0 || column_used[j]) throw InconsistentPair("two entries in one line");
                out.perm[i - 1] = j;
                out.color[i - 1] = pre.color;
                column_used[j] = 1;
            }
        }
    }
    for (int k = 0; k <= n; ++k)
        if (!(g.grid[0][k] == bottom) || !(g.grid[k][0] == bottom)) throw InconsistentPair("border is not minimal");
    for (int i = 1; i <= n; ++i)
        if (out.perm[i - 1] == 0) throw InconsistentPair("row without an entry");
    if (!pair.P.aux.empty() && std::any_of(pair.P.aux.begin(), pair.P.aux.end(), [](int a) { return a != 0; }))
        out.p.assign(n, 0);
    if (!pair.Q.aux.empty() && std::any_of(pair.Q.aux.begin(), pair.Q.aux.end(), [](int a) { return a != 0; }))
        out.pp.assign(n, 0);
    if (!out.p.empty() || !out.pp.empty()) {
        out.p.resize(n, 0);
        out.pp.resize(n, 0);
        for (int i = 1; i <= n; ++i) {
            out.p[i - 1] = pair.P.aux.empty() ? 0 : pair.P.aux[out.perm[i - 1] - 1];
            out.pp[i - 1] = pair.Q.aux.empty() ? 0 : pair.Q.aux[i - 1];
        }
    }
    return out;
}

template <class V>
ColoredPermutation reverse(const TableauPair<V>& pair, const DifferentialBijection<V>& phi) {
    return reverse(pair, phi.bottom(), [&](int, int) -> const DifferentialBijection<V>& { return phi; });
}

// Mixed insertion: square (i, j) uses the twist tau^k tau'^k' where k is the
// first exponent of the entry in column j and k' the second exponent of the
// entry in row i.
template <class V>
class MixedInsertion {
public:
    MixedInsertion(const DifferentialBijection<V>& phi, Automorphism<V> tau, Automorphism<V> tau_prime)
        : phi_(phi) {
        for (int k = 0; k < tau.order; ++k) {
            for (int kp = 0; kp < tau_prime.order; ++kp) {
                twists_.emplace(std::pair{k, kp},
                                std::make_unique<Twisted<V>>(phi_, tau.power(k).then(tau_prime.power(kp))));
            }
        }
    }

    GrowthDiagram<V> grow(const ColoredPermutation& sigma) const {
        const int n = sigma.size();
        std::vector<int> row_of(n + 1);
        for (int i = 1; i <= n; ++i) row_of[sigma.perm[i - 1]] = i;
        return kmdgg::grow(sigma, phi_.bottom(), [&](int i, int j) -> const DifferentialBijection<V>& {
            return *twists_.at({sigma.p[row_of[j] - 1], sigma.pp[i - 1]});
        });
    }

    TableauPair<V> insert(const ColoredPermutation& sigma) const {
        auto g = grow(sigma);
        return {g.P(), g.Q()};
    }

    ColoredPermutation reverse(const TableauPair<V>& pair) const {
        auto out = kmdgg::reverse(pair, phi_.bottom(), [&](int i, int j) -> const DifferentialBijection<V>& {
            return *twists_.at({pair.P.aux[j - 1], pair.Q.aux[i - 1]});
        });
        out.p.resize(out.size(), 0);
        out.pp.resize(out.size(), 0);
        return out;
    }

private:
    const DifferentialBijection<V>& phi_;
    std::map<std::pair<int, int>, std::unique_ptr<Twisted<V>>> twists_;
};

// Checks that Phi_x is a bijection from colors plus UD_x onto DU_x, using the
// graph data reported by the instance.
template <class V>
void check_diagonal(const DifferentialBijection<V>& phi, const V& x) {
    auto mult = [&](const std::vector<Neighbor<V>>& list, const V& v) {
        for (const auto& nb : list)
            if (nb.vertex == v) return nb.mult;
        return 0;
    };
    const auto up_s = phi.up(Side::strong, x);
    const auto up_w = phi.up(Side::weak, x);
    const auto down_s = phi.down(Side::strong, x);
    const auto down_w = phi.down(Side::weak, x);
    std::size_t du = 0, ud = 0;
    for (const auto& nb : up_s) du += static_cast<std::size_t>(nb.mult) * mult(up_w, nb.vertex);
    for (const auto& nb : down_s) ud += static_cast<std::size_t>(nb.mult) * mult(down_w, nb.vertex);
    if (du != static_cast<std::size_t>(phi.r()) + ud) throw BijectionDomainError("diagonal counts do not balance");
    std::set<std::tuple<V, int, int>> images;
    auto record = [&](const Up<V>& u) {
        int ms = mult(up_s, u.w), mw = mult(up_w, u.w);
        if (u.M < 1 || u.M > ms || u.Mp < 1 || u.Mp > mw) throw BijectionDomainError("diagonal image out of range");
        if (!images.emplace(u.w, u.M, u.Mp).second) throw BijectionDomainError("diagonal map is not injective");
    };
    for (int c = 1; c <= phi.r(); ++c) {
        Up<V> u = phi.diag(x, c);
        record(u);
        auto back = phi.diag_inverse(x, u);
        if (!std::holds_alternative<int>(back) || std::get<int>(back) != c)
            throw BijectionDomainError("diagonal inverse fails on a color");
    }
    for (const auto& nb : down_s) {
        const int mw = mult(down_w, nb.vertex);
        for (int m = 1; m <= nb.mult; ++m) {
            for (int mp = 1; mp <= mw; ++mp) {
                Up<V> u = phi.diag(x, Down<V>{nb.vertex, m, mp});
                record(u);
                auto back = phi.diag_inverse(x, u);
                const auto* d = std::get_if<Down<V>>(&back);
                if (!d || !(d->z == nb.vertex) || d->m != m || d->mp != mp)
                    throw BijectionDomainError("diagonal inverse fails");
            }
        }
    }
}

// Checks Phi_xy on every pair x != y above z.
template <class V>
void check_offdiagonal_from(const DifferentialBijection<V>& phi, const V& z) {
    auto mult = [](const std::vector<Neighbor<V>>& list, const V& v) {
        for (const auto& nb : list)
            if (nb.vertex == v) return nb.mult;
        return 0;
    };
    for (const auto& xs : phi.up(Side::weak, z)) {
        for (const auto& ys : phi.up(Side::strong, z)) {
            const V& x = xs.vertex;
            const V& y = ys.vertex;
            if (x == y) continue;
            const auto up_sx = phi.up(Side::strong, x);
            const auto up_wy = phi.up(Side::weak, y);
            for (int m = 1; m <= ys.mult; ++m) {
                for (int mp = 1; mp <= xs.mult; ++mp) {
                    Up<V> u = phi.offdiag(x, y, Down<V>{z, m, mp});
                    if (u.M < 1 || u.M > mult(up_sx, u.w) || u.Mp < 1 || u.Mp > mult(up_wy, u.w))
                        throw BijectionDomainError("off-diagonal image out of range");
                    Down<V> d = phi.offdiag_inverse(x, y, u);
                    if (!(d.z == z) || d.m != m || d.mp != mp) throw BijectionDomainError("off-diagonal inverse fails");
                }
            }
        }
    }
}

}  // namespace kmdgg
