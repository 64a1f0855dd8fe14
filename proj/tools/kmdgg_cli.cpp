#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <regex>
#include <sstream>

#include "kmdgg/affine_a.hpp"
#include "kmdgg/cartan.hpp"
#include "kmdgg/dgg.hpp"
#include "kmdgg/distributive.hpp"
#include "kmdgg/folding_c.hpp"
#include "kmdgg/render.hpp"
#include "kmdgg/shifted.hpp"
#include "kmdgg/weyl.hpp"
#include "kmdgg/young.hpp"

using json = nlohmann::ordered_json;
using namespace kmdgg;

namespace {

constexpr const char* kSchema = "kmdgg/1";
constexpr int kMaxRadius = 12;
constexpr int kMaxPermutation = 9;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    std::string command;
    std::string gcm = "A2~";
    int radius = 4;
    std::string weight = "L0";
    std::string central = "can";
    std::string perm;
    int n = 3;
    bool n_given = false;
    int i_prime = 0;
    int j_prime = 0;
    int node = 1;
    int colors = 1;
    int upto = 4;
    std::string render = "text";
    std::uint64_t seed = 0;
    std::string out;
    bool serial = false;

    json to_json() const {
        json j{{"command", command}, {"render", render}, {"seed", seed}};
        if (command == "dual-check" || command == "count" || command == "ball" || command == "fold")
            j.update({{"gcm", gcm}, {"radius", radius}});
        if (command == "dual-check" || command == "count") j.update({{"weight", weight}, {"K", central}});
        if (command == "count") j["n"] = n;
        if (command == "insert" || command == "llms" || command == "c-insert") j["perm"] = perm;
        if (command == "insert") j["colors"] = colors;
        if (command == "llms") j["n"] = n;
        if (command == "c-insert") j["n"] = n_given ? json(n) : json("limit");
        if (command == "fold" || command == "c-insert") j.update({{"i_prime", i_prime}, {"j_prime", j_prime}});
        if (command == "sw-check") j["upto"] = upto;
        if (command == "distributive") j.update({{"gcm", gcm}, {"node", node}});
        return j;
    }
};

// Result of one subcommand: text for humans, JSON for machines, and whether
// every verification passed.
struct Outcome {
    std::string text;
    json results = json::object();
    bool ok = true;
};

std::vector<int> parse_permutation(const std::string& s, std::vector<int>* colors = nullptr) {
    std::vector<int> perm;
    const bool pairs = s.find(':') != std::string::npos;
    if (!pairs && s.find_first_of(", ") == std::string::npos) {
        for (char c : s) {
            if (c < '1' || c > '9') throw UsageError("permutation digits must be 1-9: " + s);
            perm.push_back(c - '0');
        }
    } else {
        std::stringstream in(s);
        std::string token;
        while (std::getline(in, token, ',')) {
            std::stringstream words(token);
            std::string w;
            while (words >> w) {
                auto colon = w.find(':');
                perm.push_back(std::stoi(w.substr(0, colon)));
                if (colors) colors->push_back(colon == std::string::npos ? 1 : std::stoi(w.substr(colon + 1)));
            }
        }
    }
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i) + 1) throw UsageError("not a permutation: " + s);
    if (perm.empty() || perm.size() > static_cast<std::size_t>(kMaxPermutation))
        throw UsageError("permutation size must be between 1 and " + std::to_string(kMaxPermutation));
    if (colors && colors->empty()) colors->assign(perm.size(), 1);
    return perm;
}

// "L0", "L0+L2", "2L1+L3" in fundamental-weight coordinates.
Vec parse_weight(const Gcm& g, const std::string& s) {
    Vec w(g.size(), 0);
    static const std::regex term(R"(^\s*(\d*)\s*L(\d+)\s*$)");
    std::stringstream in(s);
    std::string token;
    while (std::getline(in, token, '+')) {
        std::smatch m;
        if (!std::regex_match(token, m, term)) throw UsageError("cannot read weight term '" + token + "'");
        const Int coeff = m[1].str().empty() ? 1 : std::stoll(m[1].str());
        w.at(g.position(std::stoi(m[2].str()))) += coeff;
    }
    return w;
}

Vec parse_central(const Gcm& g, const std::string& s) {
    if (s == "can") return canonical_K(g);
    Vec k;
    std::stringstream in(s);
    std::string token;
    while (std::getline(in, token, ',')) k.push_back(std::stoll(token));
    if (static_cast<int>(k.size()) != g.size()) throw UsageError("central element needs one entry per node");
    for (Int x : k)
        if (x < 0) throw UsageError("central element entries must be nonnegative");
    return k;
}

Gcm parse_gcm(const std::string& name) {
    try {
        return named_gcm(name);
    } catch (const std::exception& e) {
        throw UsageError("unknown Cartan type '" + name + "': " + e.what());
    }
}

void check_radius(int radius) {
    if (radius < 0 || radius > kMaxRadius)
        throw UsageError("radius must lie in [0, " + std::to_string(kMaxRadius) + "]");
}

std::string vec_text(const Vec& v) {
    std::string s;
    for (Int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return "(" + s + ")";
}

std::string join_lines(const std::vector<std::string>& lines) {
    std::string s;
    for (const auto& l : lines) s += l + "\n";
    return s;
}

Outcome dual_check(const RunConfig& cfg) {
    check_radius(cfg.radius);
    Gcm g = parse_gcm(cfg.gcm);
    Vec weight = parse_weight(g, cfg.weight);
    Vec K = parse_central(g, cfg.central);
    Ball ball = generate_ball(g, cfg.radius + 1);
    RootTable roots = RootTable::build(g, cfg.radius + 1);
    GradedGraph strong = strong_graph(ball, roots, weight);
    GradedGraph weak = weak_graph(ball, K);
    DualityReport rep = cfg.serial ? verify_duality_serial(strong, weak, cfg.radius) : verify_duality(strong, weak, cfg.radius);
    Outcome out;
    out.ok = rep.ok;
    out.results = {{"r", rep.r},         {"checked", rep.checked},          {"ok", rep.ok},
                   {"ball", ball.size()}, {"strong_edges", strong.edge_count()}, {"weak_edges", weak.edge_count()}};
    std::vector<std::string> lines{"r=" + std::to_string(rep.r),
                                   "checked " + std::to_string(rep.checked) + " vertices of length <= " +
                                       std::to_string(cfg.radius)};
    if (rep.ok) {
        lines.push_back("OK");
    } else {
        std::string defect;
        for (const auto& [v, c] : rep.defect) defect += " " + vec_text(ball[v].key) + ":" + std::to_string(c);
        out.results["vertex"] = ball[*rep.vertex].key;
        out.results["defect"] = defect;
        lines.push_back("FAIL at " + vec_text(ball[*rep.vertex].key) + " defect" + defect);
    }
    out.text = join_lines(lines);
    return out;
}

Outcome count(const RunConfig& cfg) {
    if (cfg.n < 0 || cfg.n > kMaxRadius) throw UsageError("n must lie in [0, 12]");
    Gcm g = parse_gcm(cfg.gcm);
    Vec weight = parse_weight(g, cfg.weight);
    Vec K = parse_central(g, cfg.central);
    Ball ball = generate_ball(g, cfg.n + 1);
    RootTable roots = RootTable::build(g, cfg.n + 1);
    GradedGraph strong = strong_graph(ball, roots, weight);
    GradedGraph weak = weak_graph(ball, K);
    const Int r = pairing(K, weight);
    Outcome out;
    json rows = json::array();
    std::vector<std::string> lines{"r=" + std::to_string(r)};
    BigInt expected = 1;
    for (int k = 1; k <= cfg.n; ++k) {
        expected *= r * k;
        const BigInt sum = identity_sum(strong, weak, k);
        const bool ok = sum == expected;
        out.ok = out.ok && ok;
        rows.push_back({{"n", k}, {"sum", sum.str()}, {"expected", expected.str()}, {"ok", ok}});
        lines.push_back("n=" + std::to_string(k) + " sum=" + sum.str() + " r^n n!=" + expected.str() +
                        (ok ? " OK" : " FAIL"));
    }
    out.results = {{"r", r}, {"levels", rows}};
    out.text = join_lines(lines);
    return out;
}

Outcome ball(const RunConfig& cfg) {
    check_radius(cfg.radius);
    Gcm g = parse_gcm(cfg.gcm);
    Ball b = generate_ball(g, cfg.radius);
    Outcome out;
    json levels = json::array();
    std::vector<std::string> lines{"size " + std::to_string(b.size()) + (b.complete() ? " (whole group)" : "")};
    for (std::size_t k = 0; k < b.levels().size(); ++k) {
        levels.push_back(b.levels()[k].size());
        lines.push_back("length " + std::to_string(k) + ": " + std::to_string(b.levels()[k].size()));
    }
    out.results = {{"size", b.size()}, {"complete", b.complete()}, {"levels", levels}};
    out.text = join_lines(lines);
    return out;
}

json chain_json(const MarkedChain<Partition>& c) {
    json shapes = json::array();
    for (const auto& p : c.shapes) shapes.push_back(p.parts());
    return {{"shapes", shapes}, {"marks", c.marks}};
}

Outcome insert(const RunConfig& cfg) {
    std::vector<int> colors;
    auto perm = parse_permutation(cfg.perm, &colors);
    if (cfg.colors < 1) throw UsageError("colors must be positive");
    for (int c : colors)
        if (c < 1 || c > cfg.colors) throw UsageError("color out of range");
    YoungBijection phi(cfg.colors);
    ColoredPermutation sigma{perm, colors, {}, {}};
    auto pair = kmdgg::insert(sigma, phi);
    const bool round_trip = reverse(pair, phi) == sigma;
    auto marked = [&](const MarkedChain<Partition>& c) {
        return weak_text(c) + (cfg.colors > 1 ? "  marks " + json(c.marks).dump() : "");
    };
    Outcome out;
    out.ok = round_trip;
    out.results = {{"P", chain_json(pair.P)}, {"Q", chain_json(pair.Q)}, {"round_trip", round_trip}};
    out.text = "P: " + marked(pair.P) + "\nQ: " + weak_text(pair.Q) + "\n" + (round_trip ? "" : "round trip FAILED\n");
    return out;
}

Outcome llms(const RunConfig& cfg) {
    auto perm = parse_permutation(cfg.perm);
    if (cfg.n < 2) throw UsageError("n must be at least 2");
    CoreBijection phi(CoreModel::llms(cfg.n));
    auto g = grow(ColoredPermutation::plain(perm), phi);
    const bool round_trip = reverse(TableauPair<Partition>{g.P(), g.Q()}, phi).perm == perm;
    Outcome out;
    out.ok = round_trip;
    const std::string P = starred_strong_text(g.P(), phi.model()), Q = weak_text(g.Q());
    out.results = {{"P", P}, {"Q", Q}, {"P_chain", chain_json(g.P())}, {"Q_chain", chain_json(g.Q())},
                   {"round_trip", round_trip}};
    out.text = growth_text(g, perm, llms_marker(phi.model())) + "P: " + P + "\nQ: " + Q + "\n";
    return out;
}

Outcome c_insert(const RunConfig& cfg) {
    auto perm = parse_permutation(cfg.perm);
    CoreBijection phi = cfg.n_given ? folded_phi(cfg.n, cfg.i_prime, cfg.j_prime)
                                    : folded_limit_phi(cfg.i_prime, cfg.j_prime);
    auto g = grow(ColoredPermutation::plain(perm), phi);
    const bool round_trip = reverse(TableauPair<Partition>{g.P(), g.Q()}, phi).perm == perm;
    Outcome out;
    out.ok = round_trip;
    const std::string P = primed_strong_text(g.P(), phi.model()), Q = weak_text(g.Q());
    out.results = {{"P", P}, {"Q", Q}, {"P_chain", chain_json(g.P())}, {"Q_chain", chain_json(g.Q())},
                   {"round_trip", round_trip}};
    out.text = growth_text(g, perm, negative_side_marker(phi.model())) + "P: " + P + "\nQ: " + Q + "\n";
    if (cfg.i_prime == 0 && !cfg.n_given) {
        const std::string Ps = to_shifted_strong(g.P(), phi.model()).str(), Qs = to_shifted_weak(g.Q()).str();
        out.results["P_shifted"] = Ps;
        out.results["Q_shifted"] = Qs;
        out.text += "P*: " + Ps + "\nQ*: " + Qs + "\n";
    }
    return out;
}

std::vector<int> inverse_permutation(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[p[i] - 1] = static_cast<int>(i) + 1;
    return inv;
}

Outcome sw_check(const RunConfig& cfg) {
    if (cfg.upto < 1 || cfg.upto > 8) throw UsageError("upto must lie in [1, 8]");
    CoreBijection phi = folded_limit_phi(0, 0);
    Outcome out;
    json rows = json::array();
    std::vector<std::string> lines;
    for (int k = 1; k <= cfg.upto; ++k) {
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 1);
        long total = 0, agree = 0;
        std::string first_failure;
        do {
            ++total;
            auto pair = kmdgg::insert(ColoredPermutation::plain(perm), phi);
            auto sw = sagan_worley(inverse_permutation(perm));
            if (sw.insertion == to_shifted_weak(pair.Q) && sw.recording == to_shifted_strong(pair.P, phi.model()))
                ++agree;
            else if (first_failure.empty())
                first_failure = json(perm).dump();
        } while (std::next_permutation(perm.begin(), perm.end()));
        const bool ok = agree == total;
        out.ok = out.ok && ok;
        json row{{"n", k}, {"permutations", total}, {"agree", agree}, {"ok", ok}};
        if (!ok) row["first_failure"] = first_failure;
        rows.push_back(row);
        lines.push_back("S_" + std::to_string(k) + ": " + std::to_string(agree) + "/" + std::to_string(total) +
                        " agree" + (ok ? "" : " FAIL first at " + first_failure));
    }
    lines.push_back(out.ok ? "OK" : "FAIL");
    out.results = {{"levels", rows}, {"ok", out.ok}};
    out.text = join_lines(lines);
    return out;
}

// Type C_n~ folded from A_{2n-1}~ by j -> 2n - j.
Outcome fold_check(const RunConfig& cfg) {
    check_radius(cfg.radius);
    Gcm folded_name = parse_gcm(cfg.gcm);
    auto type = identify_finite(finite_part(folded_name));
    if (!type || type->first != 'C') throw UsageError("fold expects an affine type C, e.g. C2~");
    const int n = type->second;
    Gcm source = affine_type('A', 2 * n - 1);
    std::vector<int> pi(2 * n);
    for (int j = 0; j < 2 * n; ++j) pi[j] = (2 * n - j) % (2 * n);
    FoldingData fd = fold(source, pi);
    if (!(fd.folded.matrix() == folded_name.matrix())) throw std::logic_error("folding does not produce " + cfg.gcm);
    const int source_radius = 2 * cfg.radius + 2;
    if (source_radius > 2 * kMaxRadius) throw UsageError("radius too large for the source ball");
    Ball folded_ball = generate_ball(fd.folded, cfg.radius);
    Ball source_ball = generate_ball(source, source_radius);
    RootTable folded_roots = RootTable::build(fd.folded, cfg.radius + 1);
    RootTable source_roots = RootTable::build(source, source_radius);
    const Vec K = canonical_K(fd.folded);
    auto via_source = folded_graphs(fd, folded_ball, source_ball, source_roots, cfg.i_prime, cfg.j_prime, K);
    auto strong = strong_graph(folded_ball, folded_roots, fundamental_weight(fd.folded, cfg.i_prime));
    auto weak = weak_graph(folded_ball, K);
    auto rep = compare_graphs(via_source, direct_graphs(strong, weak));
    Outcome out;
    out.ok = rep.ok;
    out.results = {{"ok", rep.ok},
                   {"strong_edges", rep.strong_edges},
                   {"weak_edges", rep.weak_edges},
                   {"folded_ball", folded_ball.size()},
                   {"source_ball", source_ball.size()}};
    std::vector<std::string> lines{cfg.gcm + " from A" + std::to_string(2 * n - 1) + "~, ball radius " +
                                       std::to_string(cfg.radius),
                                   "strong edges " + std::to_string(rep.strong_edges) + ", weak edges " +
                                       std::to_string(rep.weak_edges)};
    lines.push_back(rep.ok ? "OK" : "FAIL " + rep.mismatch);
    if (!rep.ok) out.results["mismatch"] = rep.mismatch;
    out.text = join_lines(lines);
    return out;
}

Outcome distributive(const RunConfig& cfg) {
    Gcm g = parse_gcm(cfg.gcm);
    LabeledPosets L = labeled_posets(g, cfg.node);
    auto grid = [&](const std::vector<std::string>& labels) { return rotated_grid(L.covers, L.order_roots, labels); };
    const std::string Vs = grid(L.strong), Vw = grid(to_strings(L.weak)), P = grid(to_strings(L.P)),
                      Q = grid(to_strings(L.Q));
    Outcome out;
    out.ok = L.ok();
    json elements = json::array();
    for (std::size_t k = 0; k < L.roots.size(); ++k)
        elements.push_back({{"root", L.roots[k]},
                            {"strong", L.strong[k]},
                            {"weak", L.weak[k]},
                            {"P", L.P[k]},
                            {"Q", L.Q[k]}});
    json covers = json::array();
    for (auto [a, b] : L.covers) covers.push_back({a, b});
    out.results = {{"type", L.type},
                   {"pathway", L.pathway},
                   {"quotient_size", L.quotient_size},
                   {"elements", elements},
                   {"covers", covers},
                   {"grids", {{"V_strong", Vs}, {"V_weak", Vw}, {"P", P}, {"Q", Q}}},
                   {"orders_coincide", L.orders_coincide},
                   {"strong_labels_consistent", L.strong_labels_consistent},
                   {"weak_labels_consistent", L.weak_labels_consistent},
                   {"inversion_isomorphism", L.inversion_isomorphism ? json(*L.inversion_isomorphism) : json()},
                   {"reflection_shapes", L.reflection_shapes.empty() ? json("ok") : json(L.reflection_shapes)},
                   {"ok", L.ok()}};
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    std::vector<std::string> lines{L.type + " (" + L.pathway + ", " + std::to_string(L.quotient_size) + " elements)",
                                   "V_strong: " + Vs,
                                   "V_weak:   " + Vw,
                                   "P:        " + P,
                                   "Q:        " + Q,
                                   std::string("strong and weak orders coincide: ") + yes(L.orders_coincide),
                                   std::string("strong labels consistent: ") + yes(L.strong_labels_consistent),
                                   std::string("weak labels consistent: ") + yes(L.weak_labels_consistent)};
    if (L.inversion_isomorphism) lines.push_back(std::string("inversion isomorphism: ") + yes(*L.inversion_isomorphism));
    if (!L.reflection_shapes.empty()) lines.push_back("reflection shapes: " + L.reflection_shapes);
    lines.push_back(L.ok() ? "OK" : "FAIL");
    out.text = join_lines(lines);
    return out;
}

void emit(const RunConfig& cfg, const std::string& payload) {
    if (cfg.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw UsageError("cannot open " + cfg.out);
    f << payload;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dual graded graphs for Kac-Moody algebras"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--render", cfg.render, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--seed", cfg.seed, "Recorded in the JSON header");
        sub->add_option("--out", cfg.out, "Write output to a file");
    };
    auto lattice = [&](CLI::App* sub) {
        sub->add_option("--gcm", cfg.gcm, "Cartan type, e.g. A2~ or C2~");
        sub->add_option("--weight", cfg.weight, "Dominant weight, e.g. L0 or L0+L2");
        sub->add_option("--K", cfg.central, "Central element: 'can' or comma-separated coefficients");
    };

    auto* dual = app.add_subcommand("dual-check", "Check DU - UD = r on a ball");
    lattice(dual);
    dual->add_option("--radius", cfg.radius, "Check vertices up to this length");
    dual->add_flag("--serial", cfg.serial, "Use the serial kernel");
    common(dual);

    auto* cnt = app.add_subcommand("count", "Sum of f_weak f_strong over each length");
    lattice(cnt);
    cnt->add_option("--n", cfg.n, "Largest length");
    common(cnt);

    auto* bl = app.add_subcommand("ball", "Size of a Bruhat ball");
    bl->add_option("--gcm", cfg.gcm, "Cartan type");
    bl->add_option("--radius", cfg.radius, "Radius");
    common(bl);

    auto* ins = app.add_subcommand("insert", "Young insertion of a colored permutation");
    ins->add_option("--perm", cfg.perm, "One-line permutation, or value:color pairs")->required();
    ins->add_option("--colors", cfg.colors, "Number of colors");
    common(ins);

    auto* ll = app.add_subcommand("llms", "Affine insertion on n-cores");
    ll->add_option("--perm", cfg.perm, "One-line permutation")->required();
    ll->add_option("--n", cfg.n, "Core size");
    common(ll);

    auto* fo = app.add_subcommand("fold", "Compare folded graphs with the type C graphs");
    fo->add_option("--gcm", cfg.gcm, "Affine type C, e.g. C2~");
    fo->add_option("--radius", cfg.radius, "Ball radius in the folded group");
    fo->add_option("--i-prime", cfg.i_prime, "Folded node");
    fo->add_option("--j-prime", cfg.j_prime, "Source node in its orbit");
    common(fo);

    auto* ci = app.add_subcommand("c-insert", "Folded insertion on symmetric cores or the limit");
    ci->add_option("--perm", cfg.perm, "One-line permutation")->required();
    auto* n_opt = ci->add_option("--n", cfg.n, "Rank of C_n~ (omit for the limit)");
    ci->add_option("--i-prime", cfg.i_prime, "Folded node");
    ci->add_option("--j-prime", cfg.j_prime, "Source node in its orbit");
    common(ci);

    auto* sw = app.add_subcommand("sw-check", "Compare folded insertion with shifted insertion");
    sw->add_option("--upto", cfg.upto, "Largest permutation size");
    common(sw);

    auto* dist = app.add_subcommand("distributive", "Labeled posets of a distributive quotient");
    dist->add_option("--gcm", cfg.gcm, "Untwisted affine type, e.g. C4~");
    dist->add_option("--node", cfg.node, "Node of the finite type");
    common(dist);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << json{{"error", e.what()}, {"kind", "usage"}}.dump() << "\n";
        return 2;
    }

    CLI::App* chosen = app.get_subcommands().front();
    cfg.command = chosen->get_name();
    cfg.n_given = n_opt->count() > 0;
    try {
        Outcome out;
        if (cfg.command == "dual-check") out = dual_check(cfg);
        else if (cfg.command == "count") out = count(cfg);
        else if (cfg.command == "ball") out = ball(cfg);
        else if (cfg.command == "insert") out = insert(cfg);
        else if (cfg.command == "llms") out = llms(cfg);
        else if (cfg.command == "fold") out = fold_check(cfg);
        else if (cfg.command == "c-insert") out = c_insert(cfg);
        else if (cfg.command == "sw-check") out = sw_check(cfg);
        else out = distributive(cfg);
        if (cfg.render == "json")
            emit(cfg, json{{"schema", kSchema}, {"config", cfg.to_json()}, {"results", out.results}}.dump(2) + "\n");
        else
            emit(cfg, out.text);
        return out.ok ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << json{{"error", e.what()}, {"kind", "usage"}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}, {"kind", "computation"}}.dump() << "\n";
        return 3;
    }
}
