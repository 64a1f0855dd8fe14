#include "kmdgg/weyl.hpp"

#include <algorithm>
#include <numeric>

namespace kmdgg {

Vec reflect_weight(const Gcm& g, int i, Vec weight) {
    if (i < 0 || i >= g.size()) throw UnknownNode("node position " + std::to_string(i));
    const Int c = weight[i];
    if (c != 0)
        for (int k = 0; k < g.size(); ++k) weight[k] -= c * g.a(k, i);
    return weight;
}

Vec reflect_root(const Gcm& g, int i, Vec root) {
    Int c = 0;
    for (int j = 0; j < g.size(); ++j) c += g.a(i, j) * root[j];
    root[i] -= c;
    return root;
}

Vec reflect_coroot(const Gcm& g, int i, Vec coroot) {
    Int c = 0;
    for (int j = 0; j < g.size(); ++j) c += coroot[j] * g.a(j, i);
    coroot[i] -= c;
    return coroot;
}

Vec apply_word(const Gcm& g, const Word& word, Vec weight) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) weight = reflect_weight(g, *it, std::move(weight));
    return weight;
}

Vec apply_word_to_root(const Gcm& g, const Word& word, Vec root) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) root = reflect_root(g, *it, std::move(root));
    return root;
}

Vec apply_word_to_coroot(const Gcm& g, const Word& word, Vec coroot) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) coroot = reflect_coroot(g, *it, std::move(coroot));
    return coroot;
}

Vec root_to_weight(const Gcm& g, const Vec& root) {
    Vec out(g.size(), 0);
    for (int j = 0; j < g.size(); ++j) {
        if (root[j] == 0) continue;
        for (int i = 0; i < g.size(); ++i) out[i] += g.a(i, j) * root[j];
    }
    return out;
}

WeylElement element_from_key(const Gcm& g, Vec key) {
    WeylElement w;
    w.key = key;
    Word stripped;
    for (;;) {
        auto neg = std::find_if(key.begin(), key.end(), [](Int x) { return x < 0; });
        if (neg == key.end()) break;
        int i = static_cast<int>(neg - key.begin());
        stripped.push_back(i);
        key = reflect_weight(g, i, std::move(key));
    }
    if (std::any_of(key.begin(), key.end(), [](Int x) { return x != 1; }))
        throw std::invalid_argument("key is not in the orbit of rho");
    w.length = static_cast<int>(stripped.size());
    w.word = std::move(stripped);
    return w;
}

WeylElement element(const Gcm& g, const Word& word) { return element_from_key(g, apply_word(g, word, rho(g))); }

Word inverse_word(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

std::vector<int> left_descents(const WeylElement& w) {
    std::vector<int> out;
    for (std::size_t i = 0; i < w.key.size(); ++i)
        if (w.key[i] < 0) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> right_descents(const Gcm& g, const WeylElement& w) {
    Vec inv = apply_word(g, inverse_word(w.word), rho(g));
    std::vector<int> out;
    for (std::size_t i = 0; i < inv.size(); ++i)
        if (inv[i] < 0) out.push_back(static_cast<int>(i));
    return out;
}

RootTable RootTable::build(const Gcm& g, int depth, std::size_t cap) {
    RootTable t;
    t.depth_ = depth;
    std::unordered_map<Vec, int, VecHash> primitive_index;
    auto add = [&](RootEntry e) {
        if (t.index_.count(e.root)) return false;
        Int content = 0;
        for (Int x : e.root) content = std::gcd(content, x);
        Vec prim = e.root;
        for (auto& x : prim) x /= content;
        if (!primitive_index.emplace(prim, static_cast<int>(t.entries_.size())).second)
            throw ProportionalRoots("proportional real roots in the generated table");
        t.index_.emplace(e.root, static_cast<int>(t.entries_.size()));
        t.entries_.push_back(std::move(e));
        if (t.entries_.size() > cap) throw ResourceLimit("root table exceeds its cap");
        return true;
    };
    const int n = g.size();
    std::size_t frontier_begin = 0;
    for (int i = 0; i < n; ++i) {
        RootEntry e{Vec(n, 0), Vec(n, 0), 0, {}, i};
        e.root[i] = 1;
        e.coroot[i] = 1;
        add(std::move(e));
    }
    for (int d = 1; d <= depth; ++d) {
        std::size_t frontier_end = t.entries_.size();
        for (std::size_t k = frontier_begin; k < frontier_end; ++k) {
            for (int i = 0; i < n; ++i) {
                const RootEntry& src = t.entries_[k];
                Vec r = reflect_root(g, i, src.root);
                if (std::any_of(r.begin(), r.end(), [](Int x) { return x < 0; })) continue;
                RootEntry e{std::move(r), reflect_coroot(g, i, src.coroot), d, src.word, src.simple};
                e.word.insert(e.word.begin(), i);
                add(std::move(e));
            }
        }
        frontier_begin = frontier_end;
    }
    return t;
}

std::optional<int> RootTable::find(const Vec& root) const {
    auto it = index_.find(root);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Ball::find(const Vec& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int Ball::id_of(const Vec& key) const {
    auto id = find(key);
    if (!id) throw OutOfBall("element is outside the ball");
    return *id;
}

Ball generate_ball(const Gcm& g, int radius, std::size_t cap) {
    Ball b;
    b.gcm_ = g;
    b.radius_ = radius;
    WeylElement id{rho(g), 0, {}};
    b.index_.emplace(id.key, 0);
    b.elements_.push_back(std::move(id));
    b.levels_.push_back({0});
    for (int len = 1; len <= radius; ++len) {
        std::vector<int> level;
        for (int v : b.levels_[len - 1]) {
            for (int i = 0; i < g.size(); ++i) {
                if (b.elements_[v].key[i] <= 0) continue;
                Vec key = reflect_weight(g, i, b.elements_[v].key);
                if (b.index_.count(key)) continue;
                Word word = b.elements_[v].word;
                word.insert(word.begin(), i);
                int id_new = static_cast<int>(b.elements_.size());
                b.index_.emplace(key, id_new);
                b.elements_.push_back(WeylElement{std::move(key), len, std::move(word)});
                level.push_back(id_new);
                if (b.elements_.size() > cap) throw ResourceLimit("ball exceeds its element cap");
            }
        }
        if (level.empty()) break;
        b.levels_.push_back(std::move(level));
    }
    b.complete_ = std::all_of(b.levels_.back().begin(), b.levels_.back().end(), [&](int v) {
        const Vec& k = b.elements_[v].key;
        return std::all_of(k.begin(), k.end(), [](Int x) { return x < 0; });
    });
    return b;
}

std::vector<Vec> simple_root_images(const Gcm& g, const WeylElement& w) {
    std::vector<Vec> out;
    out.reserve(g.size());
    for (int j = 0; j < g.size(); ++j) out.push_back(apply_word(g, w.word, g.root_weight(j)));
    return out;
}

Vec right_reflect_key(const Gcm& g, const WeylElement& w, const std::vector<Vec>& images,
                      const RootEntry& root) {
    const Int c = std::accumulate(root.coroot.begin(), root.coroot.end(), Int{0});
    Vec key = w.key;
    for (int j = 0; j < g.size(); ++j) {
        if (root.root[j] == 0) continue;
        for (int k = 0; k < g.size(); ++k) key[k] -= c * root.root[j] * images[j][k];
    }
    return key;
}

std::vector<CoverData> strong_covers(const Ball& ball, const RootTable& roots, int v) {
    const WeylElement& w = ball[v];
    if (w.length >= ball.radius() && !ball.complete())
        throw OutOfBall("covers of a top-level element leave the ball");
    if (roots.depth() < w.length)
        throw DepthExceeded("root table depth " + std::to_string(roots.depth()) + " is below length " +
                            std::to_string(w.length));
    const Gcm& g = ball.gcm();
    auto images = simple_root_images(g, w);
    std::vector<CoverData> out;
    for (const auto& e : roots.entries()) {
        Vec key = right_reflect_key(g, w, images, e);
        auto id = ball.find(key);
        if (!id || ball[*id].length != w.length + 1) continue;
        out.push_back(CoverData{v, *id, e.root, e.coroot, -1});
    }
    std::sort(out.begin(), out.end(),
              [&](const CoverData& a, const CoverData& b) { return ball[a.upper].key < ball[b.upper].key; });
    return out;
}

std::vector<CoverData> weak_covers(const Ball& ball, int v) {
    const Gcm& g = ball.gcm();
    const WeylElement& w = ball[v];
    std::vector<CoverData> out;
    const Word inv = inverse_word(w.word);
    for (int i = 0; i < g.size(); ++i) {
        if (w.key[i] <= 0) continue;
        auto id = ball.find(reflect_weight(g, i, w.key));
        if (!id) throw OutOfBall("weak cover leaves the ball");
        Vec e(g.size(), 0);
        e[i] = 1;
        CoverData c{v, *id, apply_word_to_root(g, inv, e), apply_word_to_coroot(g, inv, e), i};
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(),
              [&](const CoverData& a, const CoverData& b) { return ball[a.upper].key < ball[b.upper].key; });
    return out;
}

BruhatOrder::BruhatOrder(const Ball& ball, const RootTable& roots) {
    const std::size_t n = ball.size();
    words_per_row_ = (n + 63) / 64;
    below_.assign(n * words_per_row_, 0);
    covers_.resize(n);
    for (std::size_t level = 0; level < ball.levels().size(); ++level) {
        if (static_cast<int>(level) >= ball.radius() && !ball.complete()) break;
        for (int v : ball.levels()[level]) covers_[v] = strong_covers(ball, roots, v);
    }
    for (const auto& level : ball.levels()) {
        for (int w : level) {
            std::uint64_t* row = &below_[w * words_per_row_];
            row[w / 64] |= std::uint64_t{1} << (w % 64);
        }
    }
    for (std::size_t level = 0; level + 1 < ball.levels().size(); ++level) {
        for (int v : ball.levels()[level]) {
            const std::uint64_t* src = &below_[v * words_per_row_];
            for (const auto& c : covers_[v]) {
                std::uint64_t* dst = &below_[c.upper * words_per_row_];
                for (std::size_t k = 0; k < words_per_row_; ++k) dst[k] |= src[k];
            }
        }
    }
}

bool BruhatOrder::leq(int v, int w) const {
    return (below_[w * words_per_row_ + v / 64] >> (v % 64)) & 1U;
}

std::vector<char> min_coset_reps(const Ball& ball, const std::vector<int>& J) {
    std::vector<char> keep(ball.size(), 1);
    for (std::size_t v = 0; v < ball.size(); ++v) {
        for (int d : right_descents(ball.gcm(), ball[v])) {
            if (std::find(J.begin(), J.end(), d) != J.end()) {
                keep[v] = 0;
                break;
            }
        }
    }
    return keep;
}

}  // namespace kmdgg
