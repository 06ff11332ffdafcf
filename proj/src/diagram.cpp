#include "monty/diagram.hpp"

#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace monty {

namespace {

// ---- Tangle construction on a port graph ------------------------------
//
// Crossing ports are counterclockwise NW(0), SW(1), SE(2), NE(3). A +1
// tile has its over strand on SW-NE, a -1 tile on NW-SE. Wire nodes have
// two ports and carry no crossing; they are contracted away at the end.

struct Port {
    int node = -1;
    int slot = -1;
};

struct Node {
    bool crossing = false;
    bool over_on_odd = false;  // over strand uses slots 1,3
    std::array<Port, 4> link{};
};

struct Tangle {
    Port nw, ne, sw, se;
};

class PortGraph {
public:
    Tangle zero_tangle() {
        const int a = add_wire(), b = add_wire();
        return {{a, 0}, {a, 1}, {b, 0}, {b, 1}};
    }

    Tangle infinity_tangle() {
        const int a = add_wire(), b = add_wire();
        return {{a, 0}, {b, 0}, {a, 1}, {b, 1}};
    }

    // Fraction f -> f + s (s = +-1).
    Tangle twist_horizontal(const Tangle& t, int s) {
        const int c = add_crossing(s);
        connect(t.ne, {c, 0});
        connect(t.se, {c, 1});
        return {t.nw, {c, 3}, t.sw, {c, 2}};
    }

    // Fraction f -> 1 / (1/f + s).
    Tangle twist_vertical(const Tangle& t, int s) {
        const int c = add_crossing(s);
        connect(t.sw, {c, 0});
        connect(t.se, {c, 3});
        return {t.nw, t.ne, {c, 1}, {c, 2}};
    }

    Tangle twist_horizontal(Tangle t, const Integer& count) {
        const int s = sign(count);
        for (Integer k = abs(count); k > 0; --k) t = twist_horizontal(t, s);
        return t;
    }

    Tangle twist_vertical(Tangle t, const Integer& count) {
        const int s = sign(count);
        for (Integer k = abs(count); k > 0; --k) t = twist_vertical(t, s);
        return t;
    }

    Tangle sum(const Tangle& t, const Tangle& u) {
        connect(t.ne, u.nw);
        connect(t.se, u.sw);
        return {t.nw, u.ne, t.sw, u.se};
    }

    // Rational tangle of fraction beta/alpha (alpha >= 0, not both zero).
    Tangle rational(const Integer& beta, const Integer& alpha) {
        // Regular continued fraction with quotients truncated toward zero:
        // beta/alpha = a_0 + 1/(a_1 + 1/(a_2 + ...)).
        std::vector<Integer> quotients;
        Integer num = beta, den = alpha;
        if (den == 0) return infinity_tangle();
        while (den != 0) {
            const Integer q = trunc_div(num, den);
            quotients.push_back(q);
            const Integer rem = num - q * den;
            num = den;
            den = rem;
        }
        // Even positions twist horizontally, odd positions vertically.
        const std::size_t last = quotients.size() - 1;
        Tangle t = last % 2 == 0 ? zero_tangle() : infinity_tangle();
        for (std::size_t i = quotients.size(); i-- > 0;)
            t = i % 2 == 0 ? twist_horizontal(t, quotients[i]) : twist_vertical(t, quotients[i]);
        return t;
    }

    void numerator_closure(const Tangle& t) {
        connect(t.nw, t.ne);
        connect(t.sw, t.se);
    }

    PlanarDiagram to_pd() const;

private:
    int add_wire() {
        nodes_.push_back(Node{});
        return static_cast<int>(nodes_.size()) - 1;
    }

    int add_crossing(int s) {
        Node n;
        n.crossing = true;
        n.over_on_odd = s > 0;
        nodes_.push_back(n);
        return static_cast<int>(nodes_.size()) - 1;
    }

    void connect(Port a, Port b) {
        nodes_[a.node].link[a.slot] = b;
        nodes_[b.node].link[b.slot] = a;
    }

    std::vector<Node> nodes_;
};

PlanarDiagram PortGraph::to_pd() const {
    // Crossing index for each crossing node.
    std::vector<int> index(nodes_.size(), -1);
    int n = 0;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].crossing) index[i] = n++;

    std::vector<bool> wire_seen(nodes_.size(), false);
    // Follows a port through wires to the crossing port it reaches.
    auto resolve = [&](Port p) {
        while (!nodes_[p.node].crossing) {
            wire_seen[p.node] = true;
            p = nodes_[p.node].link[1 - p.slot];
        }
        return p;
    };
    std::vector<std::array<Port, 4>> adj(n);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!nodes_[i].crossing) continue;
        for (int s = 0; s < 4; ++s) {
            Port q = resolve(nodes_[i].link[s]);
            adj[index[i]][s] = {index[q.node], q.slot};
        }
    }

    PlanarDiagram d;
    // Remaining wires form closed loops.
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].crossing || wire_seen[i]) continue;
        ++d.free_loops;
        Port p{static_cast<int>(i), 0};
        while (!wire_seen[p.node]) {
            wire_seen[p.node] = true;
            p = nodes_[p.node].link[1 - p.slot];
        }
    }

    // Trace components, labelling edges in travel order.
    std::vector<std::array<long, 4>> label(n, {0, 0, 0, 0});
    std::vector<std::array<bool, 4>> incoming(n, {false, false, false, false});
    long next_label = 1;
    for (int c = 0; c < n; ++c) {
        for (int s = 0; s < 4; ++s) {
            if (label[c][s] != 0) continue;
            int cc = c, ss = s;  // leaving crossing cc through slot ss
            while (label[cc][ss] == 0) {
                const Port q = adj[cc][ss];
                label[cc][ss] = next_label;
                label[q.node][q.slot] = next_label;
                incoming[q.node][q.slot] = true;
                ++next_label;
                cc = q.node;
                ss = (q.slot + 2) % 4;
            }
        }
    }

    std::vector<int> crossing_nodes;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].crossing) crossing_nodes.push_back(static_cast<int>(i));
    for (int c = 0; c < n; ++c) {
        const bool over_on_odd = nodes_[crossing_nodes[c]].over_on_odd;
        const int u0 = over_on_odd ? 0 : 1;
        const int u_in = incoming[c][u0] ? u0 : u0 + 2;
        const int o0 = over_on_odd ? 1 : 0;
        const int o_in = incoming[c][o0] ? o0 : o0 + 2;
        PdCrossing x;
        for (int k = 0; k < 4; ++k) x.edges[k] = label[c][(u_in + k) % 4];
        x.sign = ((u_in - o_in + 4) % 4 == 1) ? 1 : -1;
        d.crossings.push_back(x);
    }
    return d;
}

struct Occurrence {
    std::size_t crossing;
    int slot;
};

// label -> its two (crossing, slot) positions.
std::vector<std::array<Occurrence, 2>> occurrences(const PlanarDiagram& d) {
    std::vector<std::array<Occurrence, 2>> occ(d.edge_count() + 1);
    std::vector<int> seen(d.edge_count() + 1, 0);
    for (std::size_t c = 0; c < d.crossings.size(); ++c)
        for (int s = 0; s < 4; ++s) {
            const long e = d.crossings[c].edges[s];
            occ[e][seen[e]++] = {c, s};
        }
    return occ;
}

Occurrence partner(const std::vector<std::array<Occurrence, 2>>& occ, const PlanarDiagram& d, std::size_t c,
                   int s) {
    const auto& pair = occ[d.crossings[c].edges[s]];
    return (pair[0].crossing == c && pair[0].slot == s) ? pair[1] : pair[0];
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

long PlanarDiagram::writhe() const {
    long w = 0;
    for (const auto& x : crossings) w += x.sign;
    return w;
}

PlanarDiagram synthesize(const LinkExpr& expr) {
    PortGraph g;
    struct Visitor {
        PortGraph& g;
        void operator()(const MontesinosLink& m) const {
            Tangle t = g.zero_tangle();
            for (const auto& s : m.slopes) t = g.sum(t, g.rational(s.beta, s.alpha));
            t = g.twist_horizontal(t, m.e);
            g.numerator_closure(t);
        }
        void operator()(const Pretzel& p) const {
            Tangle t = g.zero_tangle();
            for (const auto& q : p.twists) t = g.sum(t, g.twist_vertical(g.infinity_tangle(), q));
            g.numerator_closure(t);
        }
        void operator()(const TwoBridge& b) const { g.numerator_closure(g.rational(b.alpha, b.beta)); }
    };
    std::visit(Visitor{g}, expr);
    PlanarDiagram d = g.to_pd();
    d.provenance = expr;
    return d;
}

void validate(const PlanarDiagram& d) {
    const long limit = static_cast<long>(d.edge_count());
    std::vector<int> count(d.edge_count() + 1, 0);
    for (const auto& x : d.crossings) {
        if (x.sign != 1 && x.sign != -1) throw DomainError("crossing sign must be +1 or -1");
        for (long e : x.edges) {
            if (e < 1 || e > limit) throw DomainError("edge label " + std::to_string(e) + " out of range");
            ++count[e];
        }
    }
    for (long e = 1; e <= limit; ++e)
        if (count[e] != 2) throw DomainError("edge label " + std::to_string(e) + " does not occur exactly twice");
}

std::size_t components(const PlanarDiagram& d) {
    UnionFind uf(d.edge_count() + 1);
    for (const auto& x : d.crossings) {
        uf.unite(x.edges[0], x.edges[2]);
        uf.unite(x.edges[1], x.edges[3]);
    }
    std::size_t count = d.free_loops;
    for (std::size_t e = 1; e <= d.edge_count(); ++e)
        if (uf.find(e) == e) ++count;
    return count;
}

bool is_connected(const PlanarDiagram& d) {
    if (d.crossings.empty()) return d.free_loops <= 1;
    if (d.free_loops > 0) return false;
    UnionFind uf(d.edge_count() + 1);
    for (const auto& x : d.crossings)
        for (int s = 1; s < 4; ++s) uf.unite(x.edges[0], x.edges[s]);
    const std::size_t root = uf.find(1);
    for (std::size_t e = 2; e <= d.edge_count(); ++e)
        if (uf.find(e) != root) return false;
    return true;
}

std::vector<std::vector<Integer>> goeritz_matrix(const PlanarDiagram& d) {
    validate(d);
    if (d.crossings.empty() || !is_connected(d))
        throw DomainError("Goeritz matrix needs a connected diagram with crossings");
    const std::size_t n = d.crossings.size();
    const auto occ = occurrences(d);

    // Corner (c, s) lies between slots s and s+1. Walking along the edge at
    // slot s+1 keeps the face on the same side and arrives at its partner
    // corner.
    std::vector<std::array<int, 4>> face(n, {-1, -1, -1, -1});
    int faces = 0;
    for (std::size_t c0 = 0; c0 < n; ++c0)
        for (int s0 = 0; s0 < 4; ++s0) {
            if (face[c0][s0] != -1) continue;
            std::size_t c = c0;
            int s = s0;
            while (face[c][s] == -1) {
                face[c][s] = faces;
                const Occurrence next = partner(occ, d, c, (s + 1) % 4);
                c = next.crossing;
                s = next.slot;
            }
            ++faces;
        }
    if (static_cast<std::size_t>(faces) != n + 2)
        throw DomainError("diagram is not planar (" + std::to_string(faces) + " faces for " + std::to_string(n) +
                          " crossings)");

    // Checkerboard colouring: neighbouring corners at a crossing differ.
    std::vector<std::vector<int>> adjacent(faces);
    for (std::size_t c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) {
            adjacent[face[c][s]].push_back(face[c][(s + 1) % 4]);
            adjacent[face[c][(s + 1) % 4]].push_back(face[c][s]);
        }
    std::vector<int> colour(faces, -1);
    std::queue<int> queue;
    colour[face[0][0]] = 0;
    queue.push(face[0][0]);
    while (!queue.empty()) {
        const int f = queue.front();
        queue.pop();
        for (int g : adjacent[f]) {
            if (colour[g] == -1) {
                colour[g] = 1 - colour[f];
                queue.push(g);
            } else if (colour[g] == colour[f]) {
                throw DomainError("diagram faces admit no checkerboard colouring");
            }
        }
    }

    // Shaded faces share the colour of face(0, 0), which gets index 0 and is
    // dropped at the end.
    std::vector<int> shaded_index(faces, -1);
    int shaded = 0;
    shaded_index[face[0][0]] = shaded++;
    for (int f = 0; f < faces; ++f)
        if (colour[f] == 0 && shaded_index[f] == -1) shaded_index[f] = shaded++;

    std::vector<std::vector<Integer>> g(shaded, std::vector<Integer>(shaded, 0));
    for (std::size_t c = 0; c < n; ++c) {
        const int first = colour[face[c][0]] == 0 ? 0 : 1;
        const int f1 = shaded_index[face[c][first]];
        const int f2 = shaded_index[face[c][first + 2]];
        if (f1 == f2) continue;
        // Shaded corners at slots {1,3} meet the under strand edge-on.
        const int eta = first == 1 ? 1 : -1;
        g[f1][f2] += eta;
        g[f2][f1] += eta;
    }
    for (int i = 0; i < shaded; ++i) {
        Integer row = 0;
        for (int j = 0; j < shaded; ++j)
            if (j != i) row += g[i][j];
        g[i][i] = -row;
    }

    std::vector<std::vector<Integer>> reduced(shaded - 1, std::vector<Integer>(shaded - 1));
    for (int i = 1; i < shaded; ++i)
        for (int j = 1; j < shaded; ++j) reduced[i - 1][j - 1] = g[i][j];
    return reduced;
}

Integer goeritz_det(const PlanarDiagram& d) {
    validate(d);
    if (d.crossings.empty()) return d.free_loops == 1 ? 1 : 0;
    if (!is_connected(d)) return 0;
    return abs(bareiss_det(goeritz_matrix(d)));
}

LaurentPoly alexander(const PlanarDiagram& d) {
    validate(d);
    const std::size_t k = components(d);
    if (k != 1)
        throw DomainError("Alexander polynomial requested for a " + std::to_string(k) + "-component link");
    const std::size_t n = d.crossings.size();
    if (n <= 1) return LaurentPoly(1);

    // Arcs: the over strand is unbroken at a crossing.
    UnionFind uf(d.edge_count() + 1);
    for (const auto& x : d.crossings) uf.unite(x.edges[1], x.edges[3]);
    std::map<std::size_t, std::size_t> arc_of_root;
    for (std::size_t e = 1; e <= d.edge_count(); ++e) arc_of_root.try_emplace(uf.find(e), arc_of_root.size());
    if (arc_of_root.size() != n) throw DomainError("knot diagram has a component with no undercrossing");
    auto arc = [&](long e) { return arc_of_root.at(uf.find(static_cast<std::size_t>(e))); };

    const LaurentPoly t = LaurentPoly::t();
    PolyMatrix m(n - 1);
    for (std::size_t row = 0; row + 1 < n; ++row) {
        const auto& x = d.crossings[row];
        const std::size_t over = arc(x.edges[1]);
        const std::size_t in = arc(x.edges[0]);
        const std::size_t out = arc(x.edges[2]);
        auto put = [&](std::size_t col, const LaurentPoly& v) {
            if (col + 1 < n) m.at(row, col) += v;
        };
        put(over, LaurentPoly(1) - t);
        if (x.sign > 0) {
            put(in, t);
            put(out, LaurentPoly(-1));
        } else {
            put(in, LaurentPoly(-1));
            put(out, t);
        }
    }
    LaurentPoly minor = det(m);
    if (minor.is_zero()) throw DomainError("Alexander minor vanished on a knot diagram");
    return normalize_symmetric(minor.divide_exact(minor.content()));
}

std::string export_diagram(const PlanarDiagram& d) {
    std::ostringstream out;
    for (const auto& x : d.crossings)
        out << x.edges[0] << ' ' << x.edges[1] << ' ' << x.edges[2] << ' ' << x.edges[3] << ' '
            << (x.sign > 0 ? "+1" : "-1") << '\n';
    if (d.free_loops > 0) out << "loops " << d.free_loops << '\n';
    return out.str();
}

PlanarDiagram import_diagram(std::string_view text) {
    PlanarDiagram d;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string head;
        if (!(fields >> head)) continue;
        if (head == "loops") {
            long k = 0;
            if (!(fields >> k) || k < 0) throw ParseError("bad loop count on line " + std::to_string(line_no), 0);
            d.free_loops = static_cast<std::size_t>(k);
            continue;
        }
        PdCrossing x{};
        try {
            x.edges[0] = std::stol(head);
        } catch (const std::exception&) {
            throw ParseError("bad edge label on line " + std::to_string(line_no), 0);
        }
        long sign_field = 0;
        if (!(fields >> x.edges[1] >> x.edges[2] >> x.edges[3] >> sign_field))
            throw ParseError("expected four labels and a sign on line " + std::to_string(line_no), 0);
        x.sign = static_cast<int>(sign_field);
        d.crossings.push_back(x);
    }
    validate(d);
    return d;
}

}  // namespace monty
