#include "kmdgg/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include <boost/rational.hpp>

namespace kmdgg {

namespace {

using Rat = boost::rational<Int>;

Int lcm_of(Int a, Int b) { return a / std::gcd(a, b) * b; }

// Clears denominators and divides out the content.
Vec primitive(const std::vector<Rat>& v) {
    Int den = 1;
    for (const auto& x : v) den = lcm_of(den, x.denominator());
    Vec out;
    out.reserve(v.size());
    Int g = 0;
    for (const auto& x : v) {
        Int value = x.numerator() * (den / x.denominator());
        out.push_back(value);
        g = std::gcd(g, value < 0 ? -value : value);
    }
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

// Basis of the rational kernel of m (rows x cols), one vector per free column.
std::vector<std::vector<Rat>> kernel(const Matrix& m, int cols) {
    std::vector<std::vector<Rat>> r;
    for (const auto& row : m) r.emplace_back(row.begin(), row.end());
    std::vector<int> pivot_col;
    int row = 0;
    for (int c = 0; c < cols && row < static_cast<int>(r.size()); ++c) {
        int p = row;
        while (p < static_cast<int>(r.size()) && r[p][c].numerator() == 0) ++p;
        if (p == static_cast<int>(r.size())) continue;
        std::swap(r[p], r[row]);
        Rat inv = Rat(1) / r[row][c];
        for (auto& x : r[row]) x *= inv;
        for (int q = 0; q < static_cast<int>(r.size()); ++q) {
            if (q == row || r[q][c].numerator() == 0) continue;
            Rat f = r[q][c];
            for (int k = 0; k < cols; ++k) r[q][k] -= f * r[row][k];
        }
        pivot_col.push_back(c);
        ++row;
    }
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < cols; ++free) {
        if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free] = 1;
        for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -r[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix zero_matrix(int n) { return Matrix(n, Vec(n, 0)); }

void link(Matrix& a, int i, int j, Int aij = -1, Int aji = -1) {
    a[i][j] = aij;
    a[j][i] = aji;
}

}  // namespace

Gcm Gcm::validate(Matrix matrix, std::vector<int> nodes) {
    const int n = static_cast<int>(matrix.size());
    for (const auto& row : matrix)
        if (static_cast<int>(row.size()) != n) throw NotGCM("matrix is not square");
    if (nodes.empty()) {
        nodes.resize(n);
        std::iota(nodes.begin(), nodes.end(), 0);
    }
    if (static_cast<int>(nodes.size()) != n) throw NotGCM("node count does not match matrix size");
    if (std::set<int>(nodes.begin(), nodes.end()).size() != nodes.size())
        throw NotGCM("repeated node identifier");
    for (int i = 0; i < n; ++i) {
        if (matrix[i][i] != 2) throw NotGCM("diagonal entry at node " + std::to_string(nodes[i]) + " is not 2");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (matrix[i][j] > 0)
                throw NotGCM("positive off-diagonal entry at (" + std::to_string(nodes[i]) + "," +
                             std::to_string(nodes[j]) + ")");
            if ((matrix[i][j] < 0) != (matrix[j][i] < 0))
                throw NotGCM("sign asymmetry at (" + std::to_string(nodes[i]) + "," +
                             std::to_string(nodes[j]) + ")");
        }
    }
    Gcm g;
    g.sym_ = kmdgg::symmetrizer(matrix);
    g.a_ = std::move(matrix);
    g.nodes_ = std::move(nodes);
    return g;
}

int Gcm::position(int node) const {
    auto it = std::find(nodes_.begin(), nodes_.end(), node);
    if (it == nodes_.end()) throw UnknownNode("unknown node " + std::to_string(node));
    return static_cast<int>(it - nodes_.begin());
}

Vec Gcm::root_weight(int j) const {
    Vec out(size());
    for (int i = 0; i < size(); ++i) out[i] = a_[i][j];
    return out;
}

std::optional<Vec> symmetrizer(const Matrix& a) {
    const int n = static_cast<int>(a.size());
    std::vector<Rat> d(n, Rat(0));
    std::vector<int> component(n, -1);
    int components = 0;
    for (int start = 0; start < n; ++start) {
        if (component[start] >= 0) continue;
        d[start] = 1;
        component[start] = components;
        std::queue<int> todo;
        todo.push(start);
        while (!todo.empty()) {
            int i = todo.front();
            todo.pop();
            for (int j = 0; j < n; ++j) {
                if (i == j || a[i][j] == 0) continue;
                Rat want = d[i] * Rat(a[i][j], a[j][i]);
                if (component[j] < 0) {
                    component[j] = components;
                    d[j] = want;
                    todo.push(j);
                } else if (d[j] != want) {
                    return std::nullopt;
                }
            }
        }
        ++components;
    }
    Vec out(n);
    for (int c = 0; c < components; ++c) {
        std::vector<Rat> part;
        for (int i = 0; i < n; ++i)
            if (component[i] == c) part.push_back(d[i]);
        Vec scaled = primitive(part);
        int k = 0;
        for (int i = 0; i < n; ++i)
            if (component[i] == c) out[i] = scaled[k++];
    }
    return out;
}

std::vector<Vec> center_basis(const Gcm& gcm) {
    const int n = gcm.size();
    Matrix transposed(n, Vec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) transposed[j][i] = gcm.a(i, j);
    std::vector<Vec> out;
    for (const auto& v : kernel(transposed, n)) {
        Vec k = primitive(v);
        bool nonneg = std::all_of(k.begin(), k.end(), [](Int x) { return x >= 0; });
        bool nonpos = std::all_of(k.begin(), k.end(), [](Int x) { return x <= 0; });
        if (nonpos && !nonneg)
            for (auto& x : k) x = -x;
        if (nonneg || nonpos) out.push_back(std::move(k));
    }
    return out;
}

Vec canonical_K(const Gcm& gcm) {
    const int n = gcm.size();
    Matrix transposed(n, Vec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) transposed[j][i] = gcm.a(i, j);
    auto basis = kernel(transposed, n);
    if (basis.size() != 1) throw NotAffine("center has dimension " + std::to_string(basis.size()));
    Vec k = primitive(basis.front());
    if (k.front() < 0)
        for (auto& x : k) x = -x;
    if (!std::all_of(k.begin(), k.end(), [](Int x) { return x > 0; }))
        throw NotAffine("kernel generator is not strictly positive");
    return k;
}

Gcm finite_type(char family, int rank) {
    family = static_cast<char>(std::toupper(static_cast<unsigned char>(family)));
    const int n = rank;
    Matrix a = zero_matrix(n);
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto bad = [&] { return NotGCM(std::string("unsupported finite type ") + family + std::to_string(rank)); };
    switch (family) {
        case 'A':
            if (n < 1) throw bad();
            for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
            break;
        case 'B':
            if (n < 2) throw bad();
            for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
            link(a, n - 2, n - 1, -1, -2);
            break;
        case 'C':
            if (n < 2) throw bad();
            for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
            link(a, n - 2, n - 1, -2, -1);
            break;
        case 'D':
            if (n < 4) throw bad();
            for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
            link(a, n - 3, n - 1);
            break;
        case 'E':
            if (n < 6 || n > 8) throw bad();
            link(a, 0, 2);
            link(a, 1, 3);
            for (int i = 2; i + 1 < n; ++i) link(a, i, i + 1);
            break;
        case 'F':
            if (n != 4) throw bad();
            link(a, 0, 1);
            link(a, 1, 2, -2, -1);
            link(a, 2, 3);
            break;
        case 'G':
            if (n != 2) throw bad();
            link(a, 0, 1, -3, -1);
            break;
        default:
            throw bad();
    }
    std::vector<int> nodes(n);
    std::iota(nodes.begin(), nodes.end(), 1);
    return Gcm::validate(std::move(a), std::move(nodes));
}

namespace {

struct RootPair {
    Vec root;
    Vec coroot;
};

RootPair highest_pair(const Gcm& g) {
    const int n = g.size();
    std::set<Vec> seen;
    std::queue<RootPair> todo;
    RootPair best;
    Int best_height = -1;
    for (int i = 0; i < n; ++i) {
        RootPair p{Vec(n, 0), Vec(n, 0)};
        p.root[i] = 1;
        p.coroot[i] = 1;
        seen.insert(p.root);
        todo.push(p);
    }
    while (!todo.empty()) {
        RootPair p = todo.front();
        todo.pop();
        Int height = std::accumulate(p.root.begin(), p.root.end(), Int{0});
        if (height > best_height) {
            best_height = height;
            best = p;
        }
        for (int i = 0; i < n; ++i) {
            Int c = 0, d = 0;
            for (int j = 0; j < n; ++j) {
                c += g.a(i, j) * p.root[j];
                d += p.coroot[j] * g.a(j, i);
            }
            RootPair q = p;
            q.root[i] -= c;
            q.coroot[i] -= d;
            if (q.root[i] < 0 || !seen.insert(q.root).second) continue;
            if (seen.size() > 100000) throw NotGCM("root system is not finite");
            todo.push(std::move(q));
        }
    }
    return best;
}

}  // namespace

Vec highest_root(const Gcm& finite) { return highest_pair(finite).root; }

Gcm affine_type(char family, int rank) {
    Gcm fin = finite_type(family, rank);
    RootPair theta = highest_pair(fin);
    const int n = fin.size();
    Matrix a = zero_matrix(n + 1);
    a[0][0] = 2;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i + 1][j + 1] = fin.a(i, j);
    for (int j = 0; j < n; ++j) {
        Int row0 = 0, col0 = 0;
        for (int i = 0; i < n; ++i) {
            row0 += theta.coroot[i] * fin.a(i, j);
            col0 += fin.a(j, i) * theta.root[i];
        }
        a[0][j + 1] = -row0;
        a[j + 1][0] = -col0;
    }
    std::vector<int> nodes(n + 1);
    std::iota(nodes.begin(), nodes.end(), 0);
    return Gcm::validate(std::move(a), std::move(nodes));
}

Gcm named_gcm(const std::string& name) {
    if (name.size() < 2) throw NotGCM("cannot parse type name '" + name + "'");
    bool affine = name.back() == '~';
    std::string digits = name.substr(1, name.size() - 1 - (affine ? 1 : 0));
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw NotGCM("cannot parse type name '" + name + "'");
    int rank = std::stoi(digits);
    return affine ? affine_type(name[0], rank) : finite_type(name[0], rank);
}

Int pairing(const Vec& coroot, const Vec& weight) {
    Int s = 0;
    for (std::size_t i = 0; i < coroot.size(); ++i) s += coroot[i] * weight[i];
    return s;
}

Vec rho(const Gcm& gcm) { return Vec(gcm.size(), 1); }

Vec fundamental_weight(const Gcm& gcm, int i) {
    Vec v(gcm.size(), 0);
    v.at(i) = 1;
    return v;
}

FoldingData fold(const Gcm& source, const std::vector<int>& pi) {
    const int n = source.size();
    if (static_cast<int>(pi.size()) != n) throw NotAutomorphism("permutation has wrong length");
    std::vector<int> sorted = pi;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
        if (sorted[i] != i) throw NotAutomorphism("not a permutation of the nodes");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (source.a(pi[i], pi[j]) != source.a(i, j))
                throw NotAutomorphism("permutation does not preserve the matrix");

    FoldingData fd{source, pi, {}, std::vector<int>(n, -1), {}, 1, source};
    for (int i = 0; i < n; ++i) {
        if (fd.orbit_of[i] >= 0) continue;
        std::vector<int> orbit;
        for (int j = i; fd.orbit_of[j] < 0; j = pi[j]) {
            fd.orbit_of[j] = static_cast<int>(fd.orbits.size());
            orbit.push_back(j);
        }
        std::sort(orbit.begin(), orbit.end());
        for (int x : orbit)
            for (int y : orbit)
                if (x != y && source.a(x, y) != 0)
                    throw NotAdmissible("nodes " + std::to_string(source.node(x)) + " and " +
                                        std::to_string(source.node(y)) + " are joined inside one orbit");
        fd.orbit_size.push_back(static_cast<Int>(orbit.size()));
        fd.kappa = lcm_of(fd.kappa, static_cast<Int>(orbit.size()));
        fd.orbits.push_back(std::move(orbit));
    }
    const int m = static_cast<int>(fd.orbits.size());
    Matrix a = zero_matrix(m);
    for (int ip = 0; ip < m; ++ip) {
        for (int i = 0; i < m; ++i) {
            std::optional<Rat> value;
            for (int jp : fd.orbits[ip]) {
                Int sum = 0;
                for (int j : fd.orbits[i]) sum += source.a(jp, j);
                Rat v = Rat(fd.orbit_size[ip] * sum, fd.orbit_size[i]);
                if (value && *value != v) throw NotAdmissible("folded entry depends on the orbit representative");
                value = v;
            }
            if (value->denominator() != 1) throw NotAdmissible("folded entry is not an integer");
            a[ip][i] = value->numerator();
        }
    }
    std::vector<int> nodes;
    for (const auto& orbit : fd.orbits) nodes.push_back(source.node(orbit.front()));
    fd.folded = Gcm::validate(std::move(a), std::move(nodes));
    return fd;
}

Vec psi(const FoldingData& fd, const Vec& weight) {
    Vec out(fd.source.size());
    for (int j = 0; j < fd.source.size(); ++j) {
        int i = fd.orbit_of[j];
        out[j] = weight.at(i) * (fd.kappa / fd.orbit_size[i]);
    }
    return out;
}

Vec phi(const FoldingData& fd, const Vec& coroot) {
    Vec out(fd.source.size());
    for (int j = 0; j < fd.source.size(); ++j) out[j] = coroot.at(fd.orbit_of[j]);
    return out;
}

}  // namespace kmdgg
