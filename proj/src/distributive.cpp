#include "kmdgg/distributive.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>

namespace kmdgg {

namespace {

bool positive(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Int x) { return x >= 0; }) &&
           std::any_of(v.begin(), v.end(), [](Int x) { return x > 0; });
}

Vec unit(int size, int k) {
    Vec v(size, 0);
    v[k] = 1;
    return v;
}

Int height(const Vec& v) { return std::accumulate(v.begin(), v.end(), Int{0}); }

// Index of the simple root b - a, or -1.
int simple_difference(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return -1;
    int found = -1;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const Int d = b[k] - a[k];
        if (d == 0) continue;
        if (d != 1 || found >= 0) return -1;
        found = static_cast<int>(k);
    }
    return found;
}

Int coroot_root_pairing(const Gcm& g, const Vec& coroot, const Vec& root) {
    Int s = 0;
    for (int j = 0; j < g.size(); ++j)
        for (int l = 0; l < g.size(); ++l) s += coroot[j] * g.a(j, l) * root[l];
    return s;
}

std::string type_name(char family, int rank) { return std::string(1, family) + std::to_string(rank); }

}  // namespace

std::optional<std::pair<char, int>> identify_finite(const Gcm& finite) {
    const int n = finite.size();
    for (char f : std::string("ABCDEFG")) {
        try {
            if (finite_type(f, n).matrix() == finite.matrix()) return std::make_pair(f, n);
        } catch (const NotGCM&) {
        }
    }
    return std::nullopt;
}

Gcm finite_part(const Gcm& affine) {
    const int n = affine.size() - 1;
    if (n < 1) throw NotAffine("matrix has no finite part");
    Matrix m(n, Vec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = affine.a(i + 1, j + 1);
    std::vector<int> nodes(n);
    std::iota(nodes.begin(), nodes.end(), 1);
    return Gcm::validate(std::move(m), std::move(nodes));
}

Gcm transpose_gcm(const Gcm& g) {
    Matrix m(g.size(), Vec(g.size()));
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j) m[i][j] = g.a(j, i);
    return Gcm::validate(std::move(m), g.nodes());
}

std::vector<RootWithCoroot> positive_roots(const Gcm& finite) {
    const int n = finite.size();
    std::vector<RootWithCoroot> out;
    std::set<Vec> seen;
    for (int i = 0; i < n; ++i) {
        out.push_back({unit(n, i), unit(n, i)});
        seen.insert(out.back().root);
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (int j = 0; j < n; ++j) {
            Vec r = reflect_root(finite, j, out[k].root);
            if (!positive(r) || seen.count(r)) continue;
            if (seen.size() > 10'000) throw ResourceLimit("root system is not finite");
            seen.insert(r);
            out.push_back({std::move(r), reflect_coroot(finite, j, out[k].coroot)});
        }
    }
    std::sort(out.begin(), out.end(), [](const RootWithCoroot& a, const RootWithCoroot& b) {
        const Int ha = height(a.root), hb = height(b.root);
        return ha != hb ? ha < hb : a.root < b.root;
    });
    return out;
}

// ---------------------------------------------------------------------------

ParabolicQuotient ParabolicQuotient::build(const Gcm& finite, int position, std::size_t cap) {
    ParabolicQuotient q;
    q.gcm_ = finite;
    q.position_ = position;
    const int n = finite.size();
    std::unordered_map<Vec, int, VecHash> index;
    q.elements_.push_back({fundamental_weight(finite, position), 0, {}});
    index.emplace(q.elements_[0].key, 0);
    for (std::size_t k = 0; k < q.elements_.size(); ++k) {
        for (int j = 0; j < n; ++j) {
            if (q.elements_[k].key[j] <= 0) continue;
            Vec next = reflect_weight(finite, j, q.elements_[k].key);
            auto [it, fresh] = index.emplace(next, static_cast<int>(q.elements_.size()));
            if (fresh) {
                if (q.elements_.size() >= cap) throw ResourceLimit("quotient exceeds the element cap");
                Word word{j};
                word.insert(word.end(), q.elements_[k].word.begin(), q.elements_[k].word.end());
                q.elements_.push_back({std::move(next), q.elements_[k].length + 1, std::move(word)});
            }
            const WeylElement& w = q.elements_[k];
            const Word inv = inverse_word(w.word);
            q.weak_.push_back({static_cast<int>(k), it->second, apply_word_to_root(finite, inv, unit(n, j)),
                               apply_word_to_coroot(finite, inv, unit(n, j)), j});
        }
    }

    const auto roots = positive_roots(finite);
    std::vector<Vec> root_weights;
    for (const auto& r : roots) root_weights.push_back(root_to_weight(finite, r.root));
    for (std::size_t k = 0; k < q.elements_.size(); ++k) {
        const WeylElement& w = q.elements_[k];
        const Word inv = inverse_word(w.word);
        for (std::size_t r = 0; r < roots.size(); ++r) {
            const Int c = pairing(roots[r].coroot, w.key);
            if (c <= 0) continue;
            Vec next = w.key;
            for (int i = 0; i < n; ++i) next[i] -= c * root_weights[r][i];
            auto it = index.find(next);
            if (it == index.end()) throw std::logic_error("reflection leaves the orbit");
            if (q.elements_[it->second].length != w.length + 1) continue;
            q.strong_.push_back({static_cast<int>(k), it->second, apply_word_to_root(finite, inv, roots[r].root),
                                 apply_word_to_coroot(finite, inv, roots[r].coroot), -1});
        }
    }

    const std::size_t size = q.elements_.size();
    q.words_ = (size + 63) / 64;
    q.below_.assign(size * q.words_, 0);
    // below_ row a holds the elements above a.
    std::vector<std::vector<int>> ups(size);
    for (const auto& c : q.strong_) ups[c.lower].push_back(c.upper);
    for (std::size_t a = size; a-- > 0;) {
        std::uint64_t* row = &q.below_[a * q.words_];
        row[a / 64] |= std::uint64_t{1} << (a % 64);
        for (int b : ups[a]) {
            const std::uint64_t* other = &q.below_[static_cast<std::size_t>(b) * q.words_];
            for (std::size_t w = 0; w < q.words_; ++w) row[w] |= other[w];
        }
    }
    return q;
}

bool ParabolicQuotient::leq(int a, int b) const {
    return (below_[static_cast<std::size_t>(a) * words_ + b / 64] >> (b % 64)) & 1U;
}

bool ParabolicQuotient::is_chain() const {
    for (std::size_t k = 1; k < elements_.size(); ++k)
        if (elements_[k].length == elements_[k - 1].length) return false;
    return true;
}

// ---------------------------------------------------------------------------

namespace {

// Order ideals of a poset on 0..n-1 given by its strict lower sets, listed so
// that every element comes after everything below it. Stops after cap ideals.
std::size_t count_ideals(const std::vector<std::vector<int>>& lower, std::size_t cap) {
    const std::size_t n = lower.size();
    std::vector<char> in(n, 0);
    std::size_t count = 0;
    std::function<void(std::size_t)> walk = [&](std::size_t k) {
        if (count >= cap) return;
        if (k == n) {
            ++count;
            return;
        }
        walk(k + 1);
        if (std::all_of(lower[k].begin(), lower[k].end(), [&](int b) { return in[b] != 0; })) {
            in[k] = 1;
            walk(k + 1);
            in[k] = 0;
        }
    };
    walk(0);
    return count;
}

}  // namespace

LatticeReport lattice_test(const ParabolicQuotient& q) {
    LatticeReport rep;
    const int n = static_cast<int>(q.size());
    rep.size = q.size();
    const std::size_t words = (q.size() + 63) / 64;
    std::vector<std::uint64_t> above(q.size() * words, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (q.leq(a, b)) above[a * words + b / 64] |= std::uint64_t{1} << (b % 64);
    std::vector<std::uint64_t> common(words);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            int least = -1;
            for (std::size_t w = 0; w < words; ++w) {
                common[w] = above[a * words + w] & above[b * words + w];
                if (least < 0 && common[w]) least = static_cast<int>(w * 64) + std::countr_zero(common[w]);
            }
            bool ok = least >= 0;
            for (std::size_t w = 0; ok && w < words; ++w)
                if (common[w] & ~above[least * words + w]) ok = false;
            if (!ok) {
                rep.witness = "elements " + std::to_string(a) + " and " + std::to_string(b) + " have no join";
                return rep;
            }
        }
    }
    rep.lattice = true;

    std::vector<int> lower_covers(n, 0);
    for (const auto& c : q.strong_covers()) ++lower_covers[c.upper];
    std::vector<int> irreducible;
    for (int a = 0; a < n; ++a)
        if (lower_covers[a] == 1) irreducible.push_back(a);
    rep.join_irreducibles = static_cast<int>(irreducible.size());
    std::vector<std::vector<int>> lower(irreducible.size());
    for (std::size_t x = 0; x < irreducible.size(); ++x)
        for (std::size_t y = 0; y < x; ++y)
            if (q.leq(irreducible[y], irreducible[x])) lower[x].push_back(static_cast<int>(y));
    const std::size_t ideals = count_ideals(lower, q.size() + 1);
    rep.distributive = ideals == q.size();
    if (!rep.distributive)
        rep.witness = std::to_string(irreducible.size()) + " join-irreducibles have more than " +
                      std::to_string(q.size()) + " order ideals";
    return rep;
}

Classification classify(char family, int rank, int node) {
    Classification c;
    const int n = rank;
    if (node < 1 || node > n) throw UnknownNode("node " + std::to_string(node) + " of " + type_name(family, rank));
    auto yes = [&](bool comin, std::string why) {
        c.distributive = true;
        c.cominuscule = comin;
        c.witness = std::move(why);
    };
    switch (family) {
        case 'A':
            yes(true, "every node of type A");
            break;
        case 'B':
            if (node == 1)
                yes(true, "W_J of type B" + std::to_string(n - 1));
            else if (node == n) {
                yes(false, "W_J of type A" + std::to_string(n - 1) + ", dual quotient C" + std::to_string(n) +
                               " node " + std::to_string(n));
                c.dual_type = std::make_pair('C', n);
            }
            break;
        case 'C':
            if (node == n)
                yes(true, "W_J of type A" + std::to_string(n - 1));
            else if (node == 1) {
                yes(false, "W_J of type C" + std::to_string(n - 1) + ", dual quotient B" + std::to_string(n) +
                               " node 1");
                c.dual_type = std::make_pair('B', n);
            }
            break;
        case 'D':
            if (node == 1)
                yes(true, "W_J of type D" + std::to_string(n - 1));
            else if (node >= n - 1)
                yes(true, "W_J of type A" + std::to_string(n - 1));
            break;
        case 'E':
            if ((n == 6 && (node == 1 || node == 6)) || (n == 7 && node == 7)) yes(true, "minuscule node of E");
            break;
        case 'G':
            yes(false, "both quotients of G2 are chains");
            break;
        default:
            break;
    }
    if (!c.distributive && c.witness.empty())
        c.witness = "node " + std::to_string(node) + " of " + type_name(family, rank) + " is not in the table";
    return c;
}

// ---------------------------------------------------------------------------

RootPoset::RootPoset(const Gcm& finite, int position) : gcm_(finite), position_(position) {
    for (auto& r : positive_roots(finite))
        if (r.root[position] >= 1) elements_.push_back(std::move(r));
    if (elements_.size() > 64) throw ResourceLimit("root poset has more than 64 elements");
    for (std::size_t a = 0; a < elements_.size(); ++a)
        for (std::size_t b = 0; b < elements_.size(); ++b)
            if (simple_difference(elements_[a].root, elements_[b].root) >= 0)
                covers_.emplace_back(static_cast<int>(a), static_cast<int>(b));
}

std::optional<int> RootPoset::index_of(const Vec& root) const {
    for (std::size_t k = 0; k < elements_.size(); ++k)
        if (elements_[k].root == root) return static_cast<int>(k);
    return std::nullopt;
}

bool RootPoset::leq(int a, int b) const {
    const Vec& x = elements_[a].root;
    const Vec& y = elements_[b].root;
    for (std::size_t k = 0; k < x.size(); ++k)
        if (y[k] < x[k]) return false;
    return true;
}

int RootPoset::maximum() const { return static_cast<int>(elements_.size()) - 1; }

bool RootPoset::cominuscule() const { return elements_[maximum()].root[position_] == 1; }

std::vector<Ideal> order_ideals(const RootPoset& poset, std::size_t cap) {
    const int n = static_cast<int>(poset.size());
    std::vector<Ideal> below(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < a; ++b)
            if (poset.leq(b, a)) below[a] |= Ideal{1} << b;
    std::vector<Ideal> out;
    std::function<void(int, Ideal)> walk = [&](int k, Ideal cur) {
        if (out.size() >= cap) throw ResourceLimit("too many order ideals");
        if (k == n) {
            out.push_back(cur);
            return;
        }
        walk(k + 1, cur);
        if ((below[k] & cur) == below[k]) walk(k + 1, cur | (Ideal{1} << k));
    };
    walk(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::optional<Ideal> inversions(const ParabolicQuotient& q, const RootPoset& poset, int id, std::string& failure) {
    Ideal out = 0;
    for (const auto& r : positive_roots(q.gcm())) {
        Vec image = apply_word_to_root(q.gcm(), q[id].word, r.root);
        if (positive(image)) continue;
        auto k = poset.index_of(r.root);
        if (!k) {
            failure = "inversion outside the root poset for element " + std::to_string(id);
            return std::nullopt;
        }
        out |= Ideal{1} << *k;
    }
    return out;
}

bool is_ideal(const RootPoset& poset, Ideal I) {
    for (const auto& [a, b] : poset.covers())
        if ((I >> b & 1U) && !(I >> a & 1U)) return false;
    return true;
}

void require_cominuscule(const RootPoset& poset) {
    if (!poset.cominuscule())
        throw NotCominuscule("node position " + std::to_string(poset.position()) + " is not cominuscule");
}

}  // namespace

Ideal inversion_ideal(const ParabolicQuotient& q, const RootPoset& poset, int id) {
    require_cominuscule(poset);
    std::string failure;
    auto I = inversions(q, poset, id, failure);
    if (!I) throw std::logic_error(failure);
    return *I;
}

InversionReport inv_isomorphism(const ParabolicQuotient& q, const RootPoset& poset) {
    require_cominuscule(poset);
    InversionReport rep;
    for (int id = 0; id < static_cast<int>(q.size()); ++id) {
        auto I = inversions(q, poset, id, rep.failure);
        if (!I) return rep;
        if (!is_ideal(poset, *I)) {
            rep.failure = "inversion set of element " + std::to_string(id) + " is not an order ideal";
            return rep;
        }
        rep.ideals.push_back(*I);
    }
    std::set<Ideal> distinct(rep.ideals.begin(), rep.ideals.end());
    if (distinct.size() != rep.ideals.size()) {
        rep.failure = "two quotient elements share an inversion set";
        return rep;
    }
    for (const auto& c : q.strong_covers()) {
        auto k = poset.index_of(c.root);
        const Ideal lo = rep.ideals[c.lower], hi = rep.ideals[c.upper];
        if (!k || (lo >> *k & 1U) || hi != (lo | Ideal{1} << *k)) {
            rep.failure = "cover " + std::to_string(c.lower) + " -> " + std::to_string(c.upper) +
                          " does not add its reflection root";
            return rep;
        }
        for (const auto& [a, b] : poset.covers())
            if (a == *k && (hi >> b & 1U)) {
                rep.failure = "added root is not maximal";
                return rep;
            }
    }
    const auto ideals = order_ideals(poset);
    rep.ideal_count = ideals.size();
    for (Ideal I : ideals)
        for (int k = 0; k < static_cast<int>(poset.size()); ++k)
            if (!(I >> k & 1U) && is_ideal(poset, I | Ideal{1} << k)) ++rep.ideal_covers;
    if (rep.ideal_count != q.size()) {
        rep.failure = std::to_string(rep.ideal_count) + " ideals against " + std::to_string(q.size()) + " elements";
        return rep;
    }
    if (rep.ideal_covers != q.strong_covers().size()) {
        rep.failure = std::to_string(rep.ideal_covers) + " ideal covers against " +
                      std::to_string(q.strong_covers().size()) + " quotient covers";
        return rep;
    }
    rep.ok = true;
    return rep;
}

std::string check_reflection_shapes(const RootPoset& poset) {
    const Gcm& g = poset.gcm();
    const int n = static_cast<int>(poset.size());
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const Int k = -coroot_root_pairing(g, poset[a].coroot, poset[b].root);
            const std::string where = "pair " + std::to_string(a) + ", " + std::to_string(b);
            if (k != 0 && k != -1 && k != -2) return where + ": pairing out of range";
            const bool comparable = poset.leq(a, b) || poset.leq(b, a);
            if (!comparable && k != 0) return where + ": incomparable roots do not commute";
            if (a == b || !poset.leq(b, a) || k == 0) continue;
            Vec gamma = poset[b].root;
            for (std::size_t l = 0; l < gamma.size(); ++l) gamma[l] = -(gamma[l] + k * poset[a].root[l]);
            if (!positive(gamma)) return where + ": reflection stays positive";
            auto c = poset.index_of(gamma);
            if (c && !(poset.leq(a, *c) && *c != a)) return where + ": reflection lands below";
        }
    }
    return {};
}

// ---------------------------------------------------------------------------

bool LabeledPosets::ok() const {
    return orders_coincide && strong_labels_consistent && weak_labels_consistent &&
           inversion_isomorphism.value_or(true) && reflection_shapes.empty();
}

LabeledPosets labeled_posets(const Gcm& affine, int node) {
    const Gcm fin = finite_part(affine);
    const auto kind = identify_finite(fin);
    if (!kind) throw NotDistributive("finite part is not of a known type");
    const auto [family, rank] = *kind;
    const int p = node - 1;
    if (p < 0 || p >= fin.size()) throw UnknownNode("node " + std::to_string(node));
    const Vec K = canonical_K(affine);

    LabeledPosets out;
    out.type = type_name(family, rank) + "~ node " + std::to_string(node);

    Gcm working = fin;
    bool dual = false;
    bool chain = false;
    if (RootPoset(fin, p).cominuscule()) {
        out.pathway = "root poset";
    } else if (RootPoset(transpose_gcm(fin), p).cominuscule()) {
        working = transpose_gcm(fin);
        dual = true;
        out.pathway = "dual root poset";
    } else if (ParabolicQuotient::build(fin, p).is_chain()) {
        chain = true;
        out.pathway = "chain";
    } else {
        throw NotDistributive(out.type + " has no distributive quotient");
    }

    const ParabolicQuotient q = ParabolicQuotient::build(working, p);
    out.quotient_size = q.size();
    std::set<std::pair<int, int>> strong_pairs, weak_pairs;
    for (const auto& c : q.strong_covers()) strong_pairs.emplace(c.lower, c.upper);
    for (const auto& c : q.weak_covers()) weak_pairs.emplace(c.lower, c.upper);
    out.orders_coincide = strong_pairs == weak_pairs;

    // Simple root reached by the lower element applied to the cover root.
    auto image_node = [&](const QuotientCover& c) {
        const Vec img = apply_word_to_root(working, q[c.lower].word, c.root);
        for (int j = 0; j < working.size(); ++j)
            if (img == unit(working.size(), j)) return j;
        return -1;
    };

    if (chain) {
        const int m = static_cast<int>(q.size()) - 1;
        out.strong_labels_consistent = static_cast<int>(q.strong_covers().size()) == m;
        out.weak_labels_consistent = static_cast<int>(q.weak_covers().size()) == m;
        std::vector<const QuotientCover*> by_level(m, nullptr), weak_by_level(m, nullptr);
        for (const auto& c : q.strong_covers()) by_level.at(q[c.lower].length) = &c;
        for (const auto& c : q.weak_covers()) weak_by_level.at(q[c.lower].length) = &c;
        for (int k = 0; k < m; ++k) {
            const QuotientCover& s = *by_level.at(k);
            const QuotientCover& w = *weak_by_level.at(k);
            if (image_node(s) != w.node) out.weak_labels_consistent = false;
            out.roots.push_back(s.root);
            out.order_roots.push_back(s.root);
            out.strong.push_back(root_name(family, rank, s.root));
            out.P.push_back(s.coroot[p]);
            out.weak.push_back(w.node + 1);
            out.Q.push_back(K[w.node + 1]);
            if (k > 0) out.covers.emplace_back(k - 1, k);
        }
        return out;
    }

    const RootPoset poset(working, p);
    const InversionReport inv = inv_isomorphism(q, poset);
    out.inversion_isomorphism = inv.ok;
    out.reflection_shapes = check_reflection_shapes(poset);
    out.covers = poset.covers();
    const int n = static_cast<int>(poset.size());
    for (int k = 0; k < n; ++k) {
        // A root of the transposed matrix is a coroot of the original one.
        const Vec& original = dual ? poset[k].coroot : poset[k].root;
        out.roots.push_back(original);
        out.order_roots.push_back(poset[k].root);
        out.strong.push_back(root_name(family, rank, original));
        out.P.push_back(dual ? poset[k].root[p] : poset[k].coroot[p]);
    }
    out.weak.assign(n, 0);
    out.Q.assign(n, 0);
    if (!inv.ok) return out;

    auto added = [&](const QuotientCover& c) {
        const Ideal d = inv.ideals[c.upper] ^ inv.ideals[c.lower];
        return std::popcount(d) == 1 ? std::countr_zero(d) : -1;
    };
    out.strong_labels_consistent = true;
    out.weak_labels_consistent = true;
    for (const auto& c : q.weak_covers()) {
        const int k = added(c);
        if (k < 0 || c.root != poset[k].root) {
            out.weak_labels_consistent = false;
            continue;
        }
        if (out.weak[k] != 0 && out.weak[k] != c.node + 1) out.weak_labels_consistent = false;
        out.weak[k] = c.node + 1;
        out.Q[k] = K[c.node + 1];
    }
    for (const auto& c : q.strong_covers()) {
        const int k = added(c);
        if (k < 0 || c.root != poset[k].root) out.strong_labels_consistent = false;
        // Every cover adding the same root sends it to the same simple root.
        else if (image_node(c) + 1 != out.weak[k])
            out.weak_labels_consistent = false;
    }
    if (std::count(out.weak.begin(), out.weak.end(), 0) != 0) out.weak_labels_consistent = false;
    return out;
}

// ---------------------------------------------------------------------------

std::string root_name(char family, int rank, const Vec& root) {
    const int n = rank;
    auto digits = [](const Vec& v) {
        std::string s;
        for (Int x : v) s += std::to_string(x);
        return s;
    };
    if (family == 'A') {
        int first = -1, last = -1;
        for (int k = 0; k < n; ++k)
            if (root[k] != 0) {
                if (first < 0) first = k;
                last = k;
            }
        return std::to_string(first + 1) + std::to_string(last + 1);
    }
    if (family == 'B' || family == 'C' || family == 'D') {
        Vec e(n, 0);
        for (int k = 0; k < n; ++k) e[k] = root[k] - (k > 0 ? root[k - 1] : 0);
        if (family == 'C') e[n - 1] = 2 * root[n - 1] - root[n - 2];
        if (family == 'D') {
            e[n - 2] = root[n - 2] + root[n - 1] - root[n - 3];
            e[n - 1] = root[n - 1] - root[n - 2];
        }
        std::string s;
        for (int k = 0; k < n; ++k) {
            if (e[k] < 0) s += '-';
            for (Int c = 0; c < std::abs(e[k]); ++c) s += std::to_string(k + 1);
        }
        return s;
    }
    if (family == 'G') {
        for (int k = 0; k < n; ++k)
            if (root == unit(n, k)) return std::to_string(k + 1);
    }
    return digits(root);
}

std::string rotated_grid(const std::vector<std::pair<int, int>>& covers, const std::vector<Vec>& roots,
                         const std::vector<std::string>& labels) {
    const int n = static_cast<int>(labels.size());
    const int m = static_cast<int>(covers.size());
    std::vector<std::vector<int>> ups(n), downs(n);
    for (int e = 0; e < m; ++e) {
        ups[covers[e].first].push_back(e);
        downs[covers[e].second].push_back(e);
    }
    for (int v = 0; v < n; ++v)
        if (ups[v].size() > 2 || downs[v].size() > 2) throw std::invalid_argument("poset does not fit a grid");
    auto added = [&](int e) {
        if (roots.empty()) return -1;
        return simple_difference(roots[covers[e].first], roots[covers[e].second]);
    };

    // Edges carry a parity: 0 east, 1 north, up to a flip per component.
    std::vector<int> parent(m), parity(m, 0);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::pair<int, int>(int)> find = [&](int e) -> std::pair<int, int> {
        if (parent[e] == e) return {e, 0};
        auto [r, p] = find(parent[e]);
        parent[e] = r;
        parity[e] ^= p;
        return {r, parity[e]};
    };
    auto relate = [&](int a, int b, int differ) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) {
            if ((pa ^ pb) != differ) throw std::invalid_argument("poset does not fit a grid");
            return;
        }
        parent[rb] = ra;
        parity[rb] = pa ^ pb ^ differ;
    };
    std::vector<std::pair<int, int>> siblings;
    for (int v = 0; v < n; ++v) {
        if (ups[v].size() == 2) siblings.emplace_back(ups[v][0], ups[v][1]);
        if (downs[v].size() == 2) siblings.emplace_back(downs[v][0], downs[v][1]);
    }
    for (auto [a, b] : siblings) relate(a, b, 1);
    for (int v = 0; v < n; ++v) {
        if (ups[v].size() != 2) continue;
        const int e1 = ups[v][0], e2 = ups[v][1];
        const int b = covers[e1].second, c = covers[e2].second;
        for (int f1 : ups[b])
            for (int f2 : ups[c])
                if (covers[f1].second == covers[f2].second) {
                    relate(e1, f2, 0);
                    relate(e2, f1, 0);
                }
    }

    // Components with siblings: the cover adding the larger simple root goes east.
    std::map<int, int> flip;
    for (auto [a, b] : siblings) {
        const int root = find(a).first;
        if (flip.count(root)) continue;
        const int ia = added(a), ib = added(b);
        if (ia < 0 || ib < 0) continue;
        const int east = ia > ib ? a : b;
        flip[root] = find(east).second;
    }
    for (auto [a, b] : siblings)
        if (!flip.count(find(a).first)) flip[find(a).first] = find(a).second;

    // The remaining covers form chains; each chain keeps one direction.
    std::vector<int> chain_of(m, -1);
    int chains = 0;
    for (int e = 0; e < m; ++e) {
        if (flip.count(find(e).first) || chain_of[e] >= 0) continue;
        int start = e;
        for (;;) {
            const int v = covers[start].first;
            if (downs[v].size() != 1 || ups[v].size() != 1) break;
            const int prev = downs[v][0];
            if (flip.count(find(prev).first)) break;
            start = prev;
        }
        for (int cur = start;;) {
            chain_of[cur] = chains;
            const int v = covers[cur].second;
            if (ups[v].size() != 1 || downs[v].size() != 1) break;
            const int next = ups[v][0];
            if (flip.count(find(next).first)) break;
            cur = next;
        }
        ++chains;
    }
    if (chains > 20) throw std::invalid_argument("too many free chains to orient");

    int minimum = -1;
    for (int v = 0; v < n; ++v)
        if (downs[v].empty()) {
            if (minimum >= 0) throw std::invalid_argument("poset has no unique minimum");
            minimum = v;
        }
    if (minimum < 0) throw std::invalid_argument("poset is empty");

    auto place = [&](unsigned mask, std::vector<std::pair<int, int>>& pos) {
        pos.assign(n, {INT32_MIN, INT32_MIN});
        pos[minimum] = {0, 0};
        std::queue<int> todo;
        todo.push(minimum);
        while (!todo.empty()) {
            const int v = todo.front();
            todo.pop();
            auto step = [&](int e, int sign) {
                int dir = chain_of[e] >= 0 ? static_cast<int>(mask >> chain_of[e] & 1U)
                                           : find(e).second ^ flip.at(find(e).first);
                const int w = sign > 0 ? covers[e].second : covers[e].first;
                std::pair<int, int> target = pos[v];
                (dir == 0 ? target.first : target.second) += sign;
                if (pos[w].first == INT32_MIN) {
                    pos[w] = target;
                    todo.push(w);
                } else if (pos[w] != target) {
                    return false;
                }
                return true;
            };
            for (int e : ups[v])
                if (!step(e, 1)) return false;
            for (int e : downs[v])
                if (!step(e, -1)) return false;
        }
        std::set<std::pair<int, int>> cells(pos.begin(), pos.end());
        return cells.size() == static_cast<std::size_t>(n);
    };

    std::vector<std::pair<int, int>> pos, best;
    long best_score = -1;
    for (unsigned mask = 0; mask < (1U << chains); ++mask) {
        if (!place(mask, pos)) continue;
        std::set<std::pair<int, int>> cells(pos.begin(), pos.end());
        long score = 0;
        for (int c = 0; c < chains; ++c) {
            const bool north = mask >> c & 1U;
            int e = 0;
            while (chain_of[e] != c) ++e;
            auto cell = pos[covers[e].first];
            auto& moving = north ? cell.second : cell.first;
            while (cells.count(cell)) --moving;
            ++moving;
            while (cells.count(cell)) {
                ++moving;
                ++score;
            }
        }
        if (score > best_score) {
            best_score = score;
            best = pos;
        }
    }
    if (best.empty()) throw std::invalid_argument("poset does not fit a grid");

    int min_x = 0, max_y = 0;
    for (auto [x, y] : best) {
        min_x = std::min(min_x, x);
        max_y = std::max(max_y, y);
    }
    std::map<std::pair<int, int>, int> at;
    for (int v = 0; v < n; ++v) at[best[v]] = v;
    std::string s;
    for (int y = max_y; y >= 0; --y) {
        int last = INT32_MIN;
        for (auto& [xy, v] : at)
            if (xy.second == y) last = std::max(last, xy.first);
        if (last == INT32_MIN) continue;
        if (!s.empty()) s += " / ";
        for (int x = min_x; x <= last; ++x) {
            if (x > min_x) s += ' ';
            auto it = at.find({x, y});
            s += it == at.end() ? std::string(".") : labels[it->second];
        }
    }
    return s;
}

}  // namespace kmdgg
