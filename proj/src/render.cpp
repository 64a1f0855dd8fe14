#include "kmdgg/render.hpp"

#include <algorithm>
#include <map>

namespace kmdgg {

namespace {

bool negative_side(const std::vector<Cell>& comp, int anchor) {
    return std::all_of(comp.begin(), comp.end(), [&](Cell c) { return diagonal(c, anchor) < 0; });
}

std::string shape_token(const Partition& p) { return p.empty() ? "." : p.str(); }

std::map<Cell, int> steps(const MarkedChain<Partition>& chain) {
    std::map<Cell, int> at;
    for (std::size_t s = 1; s < chain.shapes.size(); ++s)
        for (Cell c : chain.shapes[s].minus(chain.shapes[s - 1])) at[c] = static_cast<int>(s);
    return at;
}

}  // namespace

EdgeMarker llms_marker(const CoreModel&) {
    return [](const Partition&, const Partition&, int mark) { return mark > 1 ? std::to_string(mark) : std::string(); };
}

EdgeMarker negative_side_marker(const CoreModel& model) {
    return [model](const Partition& lo, const Partition& hi, int mark) {
        auto comps = model.components(lo, hi);
        if (comps.size() == 2 && negative_side(comps.at(mark - 1), model.anchor())) return std::string("*");
        return std::string();
    };
}

std::string growth_text(const GrowthDiagram<Partition>& g, const std::vector<int>& perm, const EdgeMarker& marker) {
    const int n = g.n;
    std::size_t width = 1;
    for (const auto& row : g.grid)
        for (const auto& p : row) width = std::max(width, shape_token(p).size());
    std::size_t edge = 4;
    for (int i = 0; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (g.grid[i][j] != g.grid[i][j - 1])
                edge = std::max(edge, 4 + marker(g.grid[i][j - 1], g.grid[i][j], g.hmark[i][j]).size());
    auto pad = [](std::string s, std::size_t w) {
        s.resize(std::max(s.size(), w), ' ');
        return s;
    };
    std::string out;
    for (int i = 0; i <= n; ++i) {
        if (i > 0) {
            // The X sits in the middle of the edge column left of sigma(i).
            const int j = perm[i - 1];
            std::string line(width * j + edge * (j - 1) + edge / 2 - 1, ' ');
            out += line + "X\n";
        }
        std::string line;
        for (int j = 0; j <= n; ++j) {
            if (j > 0) {
                std::string e = "  ";
                if (g.grid[i][j] != g.grid[i][j - 1])
                    e = " ->" + marker(g.grid[i][j - 1], g.grid[i][j], g.hmark[i][j]);
                line += pad(e, edge);
            }
            line += pad(shape_token(g.grid[i][j]), j < n ? width : 0);
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

std::string tableau_text(const Partition& shape, const std::function<std::string(Cell)>& entry) {
    std::string s;
    for (int r = shape.rows(); r >= 1; --r) {
        if (!s.empty()) s += " / ";
        for (int c = 1; c <= shape.part(r); ++c) {
            if (c > 1) s += ' ';
            s += entry(Cell{r, c});
        }
    }
    return s;
}

std::string starred_strong_text(const MarkedChain<Partition>& P, const CoreModel& model) {
    auto at = steps(P);
    std::map<Cell, bool> star;
    for (std::size_t s = 1; s < P.shapes.size(); ++s) {
        auto comps = model.components(P.shapes[s - 1], P.shapes[s]);
        for (Cell c : comps.at(P.marks[s - 1] - 1)) star[c] = true;
    }
    return tableau_text(P.shapes.back(), [&](Cell c) { return std::to_string(at.at(c)) + (star[c] ? "*" : ""); });
}

std::string primed_strong_text(const MarkedChain<Partition>& P, const CoreModel& model) {
    auto at = steps(P);
    std::map<Cell, bool> prime;
    for (std::size_t s = 1; s < P.shapes.size(); ++s) {
        auto comps = model.components(P.shapes[s - 1], P.shapes[s]);
        const auto& marked = comps.at(P.marks[s - 1] - 1);
        if (comps.size() == 2)
            for (Cell c : marked) prime[c] = true;
    }
    return tableau_text(P.shapes.back(), [&](Cell c) { return std::to_string(at.at(c)) + (prime[c] ? "'" : ""); });
}

std::string weak_text(const MarkedChain<Partition>& Q) {
    auto at = steps(Q);
    return tableau_text(Q.shapes.back(), [&](Cell c) { return std::to_string(at.at(c)); });
}

}  // namespace kmdgg
