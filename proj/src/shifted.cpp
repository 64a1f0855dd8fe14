#include "kmdgg/shifted.hpp"

#include <algorithm>
#include <map>

namespace kmdgg {

std::string ShiftedTableau::str() const {
    std::string s;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        if (!s.empty()) s += " / ";
        for (std::size_t k = 0; k < it->size(); ++k) {
            if (k) s += ' ';
            s += std::to_string((*it)[k].value);
            if ((*it)[k].primed) s += '\'';
        }
    }
    return s;
}

namespace {

void require_symmetric(const Partition& p) {
    if (p.transpose() != p) throw NotSymmetric(p.str() + " is not transpose-symmetric");
}

ShiftedTableau upper_half(const std::vector<Partition>& shapes, const std::vector<bool>& primes) {
    const Partition& shape = shapes.back();
    require_symmetric(shape);
    std::map<Cell, int> step;
    for (std::size_t s = 1; s < shapes.size(); ++s) {
        require_symmetric(shapes[s]);
        for (Cell c : shapes[s].minus(shapes[s - 1])) step[c] = static_cast<int>(s);
    }
    ShiftedTableau t;
    for (int r = 1; r <= shape.rows() && r <= shape.part(r); ++r) {
        std::vector<ShiftedEntry> row;
        for (int c = r; c <= shape.part(r); ++c) {
            int s = step.at(Cell{r, c});
            row.push_back({s, primes[s - 1]});
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::vector<Partition> symmetric_shapes(const ShiftedTableau& t, int& length) {
    std::map<int, std::vector<Cell>> cells;
    length = 0;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        for (std::size_t k = 0; k < t.rows[r].size(); ++k) {
            int row = static_cast<int>(r) + 1, col = row + static_cast<int>(k);
            int v = t.rows[r][k].value;
            cells[v].push_back({row, col});
            if (col != row) cells[v].push_back({col, row});
            length = std::max(length, v);
        }
    }
    std::vector<Partition> shapes{Partition{}};
    for (int s = 1; s <= length; ++s) {
        std::vector<int> parts = shapes.back().parts();
        for (Cell c : cells[s]) {
            if (static_cast<int>(parts.size()) < c.row) parts.resize(c.row, 0);
            parts[c.row - 1] = std::max(parts[c.row - 1], c.col);
        }
        shapes.emplace_back(std::move(parts));
        if (shapes.back().size() != shapes[s - 1].size() + static_cast<int>(cells[s].size()))
            throw std::invalid_argument("shifted tableau does not give a chain of shapes");
    }
    return shapes;
}

bool on_negative_side(const std::vector<Cell>& comp, int anchor) {
    return std::all_of(comp.begin(), comp.end(), [&](Cell c) { return diagonal(c, anchor) < 0; });
}

}  // namespace

ShiftedTableau to_shifted_strong(const MarkedChain<Partition>& P, const CoreModel& model) {
    std::vector<bool> primes;
    for (std::size_t s = 1; s < P.shapes.size(); ++s) {
        auto comps = model.components(P.shapes[s - 1], P.shapes[s]);
        primes.push_back(on_negative_side(comps.at(P.marks[s - 1] - 1), model.anchor()));
    }
    return upper_half(P.shapes, primes);
}

ShiftedTableau to_shifted_weak(const MarkedChain<Partition>& Q) {
    return upper_half(Q.shapes, std::vector<bool>(Q.marks.size(), false));
}

MarkedChain<Partition> from_shifted_strong(const ShiftedTableau& P, const CoreModel& model) {
    int n = 0;
    MarkedChain<Partition> out;
    out.shapes = symmetric_shapes(P, n);
    std::vector<bool> primed(n + 1, false);
    for (const auto& row : P.rows)
        for (const auto& e : row)
            if (e.primed) primed[e.value] = true;
    for (int s = 1; s <= n; ++s) {
        auto comps = model.components(out.shapes[s - 1], out.shapes[s]);
        int mark = 0;
        for (std::size_t k = 0; k < comps.size() && mark == 0; ++k)
            if (on_negative_side(comps[k], model.anchor()) == primed[s]) mark = static_cast<int>(k) + 1;
        if (mark == 0) throw std::invalid_argument("prime does not match any component");
        out.marks.push_back(mark);
        out.aux.push_back(0);
    }
    return out;
}

MarkedChain<Partition> from_shifted_weak(const ShiftedTableau& Q) {
    int n = 0;
    MarkedChain<Partition> out;
    out.shapes = symmetric_shapes(Q, n);
    out.marks.assign(n, 1);
    out.aux.assign(n, 0);
    return out;
}

ShiftedPair sagan_worley(const std::vector<int>& word) {
    ShiftedPair out;
    auto& P = out.insertion.rows;
    auto& Q = out.recording.rows;
    // Cell (row r, column c) of the shifted diagram lives at P[r - 1][c - r].
    auto column_length = [&](int c) {
        int len = 0;
        for (std::size_t r = 0; r < P.size(); ++r)
            if (static_cast<int>(r) + 1 <= c && c - static_cast<int>(r) - 1 < static_cast<int>(P[r].size())) ++len;
        return len;
    };
    auto place = [&](int row, int col, int value, int step, bool primed) {
        if (static_cast<int>(P.size()) < row) {
            P.resize(row);
            Q.resize(row);
        }
        if (col - row != static_cast<int>(P[row - 1].size())) throw std::logic_error("insertion leaves the shape");
        P[row - 1].push_back({value, false});
        Q[row - 1].push_back({step, primed});
    };
    for (std::size_t s = 0; s < word.size(); ++s) {
        const int step = static_cast<int>(s) + 1;
        int x = word[s];
        int row = 1;
        bool columns = false;
        int col = 0;
        for (;;) {
            if (!columns) {
                if (static_cast<int>(P.size()) < row) {
                    place(row, row, x, step, false);
                    break;
                }
                auto& r = P[row - 1];
                auto it = std::find_if(r.begin(), r.end(), [&](const ShiftedEntry& e) { return e.value > x; });
                if (it == r.end()) {
                    place(row, row + static_cast<int>(r.size()), x, step, false);
                    break;
                }
                const bool diagonal_cell = it == r.begin();
                std::swap(x, it->value);
                if (diagonal_cell) {
                    columns = true;
                    col = row + 1;
                } else {
                    ++row;
                }
            } else {
                const int len = column_length(col);
                int hit = -1;
                for (int r = 1; r <= len; ++r) {
                    if (P[r - 1][col - r].value > x) {
                        hit = r;
                        break;
                    }
                }
                if (hit < 0) {
                    place(len + 1, col, x, step, true);
                    break;
                }
                std::swap(x, P[hit - 1][col - hit].value);
                if (hit == col) throw std::logic_error("column insertion reached the diagonal");
                ++col;
            }
        }
    }
    return out;
}

}  // namespace kmdgg
