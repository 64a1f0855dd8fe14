#include "kmdgg/folding_c.hpp"

#include <algorithm>
#include <set>

namespace kmdgg {

Word embed_word(const FoldingData& fd, const Word& word) {
    Word out;
    for (int i : word)
        for (int j : fd.orbits.at(i)) out.push_back(j);
    return out;
}

bool fixed_by_automorphism(const FoldingData& fd, const Vec& key) {
    for (std::size_t j = 0; j < key.size(); ++j)
        if (key[fd.pi[j]] != key[j]) return false;
    return true;
}

Vec permute_root(const FoldingData& fd, const Vec& v) {
    Vec out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out[fd.pi[j]] = v[j];
    return out;
}

FoldedElement embed_f(const FoldingData& fd, const WeylElement& w) {
    FoldedElement out{w, element(fd.source, embed_word(fd, w.word))};
    if (!fixed_by_automorphism(fd, out.image.key)) throw std::logic_error("image is not fixed by the automorphism");
    Int expected = 0;
    for (int i : w.word) expected += fd.orbit_size[i];
    if (out.image.length != expected) throw std::logic_error("lengths are not additive along the image word");
    return out;
}

namespace {

Int coroot_root_pairing(const Gcm& g, const Vec& coroot, const Vec& root) {
    Int s = 0;
    for (int k = 0; k < g.size(); ++k)
        for (int l = 0; l < g.size(); ++l) s += coroot[k] * g.a(k, l) * root[l];
    return s;
}

Vec reflect_right(const Gcm& g, const Vec& key, const Vec& root, const Vec& coroot) {
    WeylElement w = element_from_key(g, key);
    RootEntry e{root, coroot, 0, {}, 0};
    return right_reflect_key(g, w, simple_root_images(g, w), e);
}

}  // namespace

CoverOrbit cover_orbit(const FoldingData& fd, const RootTable& roots, const WeylElement& v, const Vec& root,
                       int i_prime, int j_prime) {
    const Gcm& A = fd.folded;
    const Gcm& B = fd.source;
    auto idx = roots.find(root);
    if (!idx) throw DepthExceeded("root is not in the table");
    const RootEntry& entry = roots.entries()[*idx];
    CoverOrbit out;
    const Word u = embed_word(fd, entry.word);
    for (int j : fd.orbits[entry.simple]) {
        Vec e(B.size(), 0);
        e[j] = 1;
        out.roots.push_back(apply_word_to_root(B, u, e));
        out.coroots.push_back(apply_word_to_coroot(B, u, e));
    }
    out.lower_key = embed_f(fd, v).image.key;
    WeylElement w = element_from_key(A, right_reflect_key(A, v, simple_root_images(A, v), entry));
    if (w.length != v.length + 1) throw NotCover("reflection does not give a cover");
    out.upper_key = embed_f(fd, w).image.key;

    const std::size_t k = out.roots.size();
    out.commuting = true;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            if (a != b && coroot_root_pairing(B, out.coroots[a], out.roots[b]) != 0) out.commuting = false;

    const int base = element_from_key(B, out.lower_key).length;
    std::set<Vec> seen;
    bool lengths_ok = true;
    Vec top;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        Vec key = out.lower_key;
        int bits = 0;
        for (std::size_t a = 0; a < k; ++a) {
            if (!(mask >> a & 1U)) continue;
            key = reflect_right(B, key, out.roots[a], out.coroots[a]);
            ++bits;
        }
        if (element_from_key(B, key).length != base + bits) lengths_ok = false;
        seen.insert(key);
        if (mask + 1 == (std::size_t{1} << k)) top = key;
    }
    out.boolean_interval = lengths_ok && seen.size() == (std::size_t{1} << k) && top == out.upper_key;
    for (const auto& c : out.coroots) out.source_multiplicity += c[j_prime];
    out.folded_multiplicity = entry.coroot[i_prime];
    return out;
}

int interval_size(const Ball& source_ball, const BruhatOrder& order, const Vec& lower_key, const Vec& upper_key) {
    const int lo = source_ball.id_of(lower_key);
    const int hi = source_ball.id_of(upper_key);
    int count = 0;
    for (int u = 0; u < static_cast<int>(source_ball.size()); ++u)
        if (order.leq(lo, u) && order.leq(u, hi)) ++count;
    return count;
}

FoldedGraphs folded_graphs(const FoldingData& fd, const Ball& folded_ball, const Ball& source_ball,
                           const RootTable& source_roots, int i_prime, int j_prime, const Vec& K) {
    const Gcm& B = fd.source;
    if (fd.orbit_of.at(j_prime) != i_prime)
        throw RepresentativeMismatch("node position " + std::to_string(j_prime) + " is not in the orbit");
    const Vec phiK = phi(fd, K);
    std::unordered_map<Vec, int, VecHash> preimage;
    for (std::size_t a = 0; a < folded_ball.size(); ++a)
        preimage.emplace(apply_word(B, embed_word(fd, folded_ball[a].word), rho(B)), static_cast<int>(a));

    FoldedGraphs out;
    for (std::size_t a = 0; a < folded_ball.size(); ++a) {
        const WeylElement& v = folded_ball[a];
        if (v.length >= folded_ball.radius() && !folded_ball.complete()) continue;
        const Vec x = apply_word(B, embed_word(fd, v.word), rho(B));
        auto xid = source_ball.find(x);
        if (!xid) throw OutOfBall("image leaves the source ball");
        const int xlen = source_ball[*xid].length;

        auto covers = strong_covers(source_ball, source_roots, *xid);
        std::set<Vec> done;
        for (const auto& c : covers) {
            if (done.count(c.root)) continue;
            std::vector<const CoverData*> orbit;
            Vec r = c.root;
            do {
                done.insert(r);
                auto it = std::find_if(covers.begin(), covers.end(), [&](const CoverData& d) { return d.root == r; });
                if (it == covers.end()) throw std::logic_error("automorphism does not preserve covers");
                orbit.push_back(&*it);
                r = permute_root(fd, r);
            } while (r != c.root);
            bool commuting = true;
            for (auto* p : orbit)
                for (auto* q : orbit)
                    if (p != q && coroot_root_pairing(B, p->coroot, q->root) != 0) commuting = false;
            if (!commuting) continue;
            Vec y = x;
            for (auto* p : orbit) y = reflect_right(B, y, p->root, p->coroot);
            if (!fixed_by_automorphism(fd, y)) continue;
            if (element_from_key(B, y).length != xlen + static_cast<int>(orbit.size())) continue;
            auto target = preimage.find(y);
            if (target == preimage.end()) throw std::logic_error("fixed element without a preimage");
            Int mult = 0;
            for (auto* p : orbit) mult += p->coroot[j_prime];
            if (mult > 0) out.strong.push_back({static_cast<int>(a), target->second, mult});
        }

        for (std::size_t i = 0; i < fd.orbits.size(); ++i) {
            const auto& orb = fd.orbits[i];
            const auto up = std::count_if(orb.begin(), orb.end(), [&](int j) { return x[j] > 0; });
            if (up == 0) continue;
            if (up != static_cast<long>(orb.size())) throw std::logic_error("orbit splits between descents");
            Vec y = x;
            for (int j : orb) y = reflect_weight(B, j, std::move(y));
            auto target = preimage.find(y);
            if (target == preimage.end()) throw std::logic_error("weak cover leaves the image");
            const Int mult = phiK[orb.front()];
            for (int j : orb)
                if (phiK[j] != mult) throw std::logic_error("central element is not invariant");
            if (mult > 0) out.weak.push_back({static_cast<int>(a), target->second, mult});
        }
    }
    std::sort(out.strong.begin(), out.strong.end());
    std::sort(out.weak.begin(), out.weak.end());
    return out;
}

FoldedGraphs direct_graphs(const GradedGraph& strong, const GradedGraph& weak) {
    FoldedGraphs out;
    for (int v : strong.vertices())
        for (const auto& e : strong.out(v)) out.strong.push_back({v, e.to, e.mult});
    for (int v : weak.vertices())
        for (const auto& e : weak.out(v)) out.weak.push_back({v, e.to, e.mult});
    std::sort(out.strong.begin(), out.strong.end());
    std::sort(out.weak.begin(), out.weak.end());
    return out;
}

IsomorphismReport compare_graphs(const FoldedGraphs& a, const FoldedGraphs& b) {
    IsomorphismReport rep;
    rep.strong_edges = a.strong.size();
    rep.weak_edges = a.weak.size();
    auto describe = [](const char* kind, const std::vector<FoldedEdge>& x, const std::vector<FoldedEdge>& y) {
        std::size_t k = 0;
        while (k < x.size() && k < y.size() && x[k] == y[k]) ++k;
        std::string s = std::string(kind) + " edge lists differ at entry " + std::to_string(k);
        if (k < x.size())
            s += ": " + std::to_string(x[k].lower) + "->" + std::to_string(x[k].upper) + " x" +
                 std::to_string(x[k].mult);
        return s;
    };
    if (a.strong != b.strong) {
        rep.mismatch = describe("strong", a.strong, b.strong);
        return rep;
    }
    if (a.weak != b.weak) {
        rep.mismatch = describe("weak", a.weak, b.weak);
        return rep;
    }
    rep.ok = true;
    return rep;
}

bool representative_transport(const FoldingData& fd, const Ball& source_ball, const RootTable& source_roots, int j,
                              int k) {
    int target = j;
    for (int s = 0; s < k; ++s) target = fd.pi[target];
    for (std::size_t x = 0; x < source_ball.size(); ++x) {
        const WeylElement& w = source_ball[x];
        if (w.length >= source_ball.radius() && !source_ball.complete()) continue;
        if (!fixed_by_automorphism(fd, w.key)) continue;
        auto covers = strong_covers(source_ball, source_roots, static_cast<int>(x));
        for (const auto& c : covers) {
            Vec r = c.root;
            for (int s = 0; s < k; ++s) r = permute_root(fd, r);
            auto it = std::find_if(covers.begin(), covers.end(), [&](const CoverData& d) { return d.root == r; });
            if (it == covers.end() || it->coroot[target] != c.coroot[j]) return false;
        }
    }
    return true;
}

Partition sc_map(const FoldingData& fd, int j_prime, const WeylElement& w) {
    const int period = fd.source.size();
    return CoreModel::llms(period, j_prime).act_word(embed_word(fd, w.word), Partition{});
}

int chevalley_zero(const Partition& lower, const Partition& upper, int n) {
    CoreModel::folded(n, 0).components(lower, upper);
    int total = 0;
    for (const auto& c : CoreModel::llms(2 * n).strong_up(lower))
        if (upper.contains(c.shape)) total += c.multiplicity();
    return total;
}

CoreBijection folded_phi(int n, int i_prime, int j_prime) {
    CoreModel model = CoreModel::folded(n, j_prime);
    if (model.class_of(j_prime) != i_prime)
        throw RepresentativeMismatch("anchor " + std::to_string(j_prime) + " is not in the orbit of node " +
                                     std::to_string(i_prime));
    return CoreBijection(model);
}

CoreBijection folded_limit_phi(int i_prime, int j_prime) {
    CoreModel model = CoreModel::folded_limit(j_prime);
    if (model.class_of(j_prime) != i_prime)
        throw RepresentativeMismatch("anchor " + std::to_string(j_prime) + " is not in the orbit of node " +
                                     std::to_string(i_prime));
    return CoreBijection(model);
}

TableauPair<Partition> folded_insert(const std::vector<int>& perm, std::optional<int> n, int i_prime, int j_prime) {
    CoreBijection phi = n ? folded_phi(*n, i_prime, j_prime) : folded_limit_phi(i_prime, j_prime);
    return insert(ColoredPermutation::plain(perm), phi);
}

}  // namespace kmdgg
