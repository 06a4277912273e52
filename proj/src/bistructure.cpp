#include "wshom/bistructure.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <map>
#include <numeric>

#include "wshom/error.hpp"

namespace wshom {

namespace {

std::string arc_text(const Arc& a) {
    return "(" + std::to_string(a.i) + "," + std::to_string(a.j) + ")";
}

} // namespace

SecondaryStructure parse_dot_bracket(const std::string& text) {
    if (text.empty()) fail(errc::parse_error, "empty structure string");
    SecondaryStructure s;
    s.length = static_cast<int>(text.size());
    std::vector<int> open;
    for (int k = 0; k < s.length; ++k) {
        const char ch = text[static_cast<size_t>(k)];
        if (ch == '.') continue;
        if (ch == '(') {
            open.push_back(k + 1);
        } else if (ch == ')') {
            if (open.empty())
                fail(errc::parse_error, "unmatched ')' at position " + std::to_string(k + 1));
            s.arcs.push_back(Arc{open.back(), k + 1});
            open.pop_back();
        } else {
            fail(errc::parse_error,
                 std::string("illegal character '") + ch + "' at position " + std::to_string(k + 1));
        }
    }
    if (!open.empty())
        fail(errc::parse_error, "unmatched '(' at position " + std::to_string(open.back()));
    std::sort(s.arcs.begin(), s.arcs.end());
    return s;
}

std::string render_dot_bracket(const SecondaryStructure& s) {
    check_structure(s);
    std::string out(static_cast<size_t>(s.length), '.');
    for (const Arc& a : s.arcs) {
        out[static_cast<size_t>(a.i - 1)] = '(';
        out[static_cast<size_t>(a.j - 1)] = ')';
    }
    return out;
}

void check_structure(const SecondaryStructure& s) {
    if (s.length < 1) fail(errc::domain_error, "backbone length must be positive");
    std::vector<char> used(static_cast<size_t>(s.length) + 1, 0);
    for (const Arc& a : s.arcs) {
        if (a.i < 1 || a.j > s.length || a.i >= a.j)
            fail(errc::domain_error, "arc " + arc_text(a) + " is out of range");
        for (int e : {a.i, a.j}) {
            if (used[static_cast<size_t>(e)])
                fail(errc::domain_error, "arcs share endpoint " + std::to_string(e));
            used[static_cast<size_t>(e)] = 1;
        }
    }
    for (size_t x = 0; x < s.arcs.size(); ++x)
        for (size_t y = x + 1; y < s.arcs.size(); ++y) {
            const Arc &a = s.arcs[x], &b = s.arcs[y];
            if ((a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j))
                fail(errc::domain_error, "arcs " + arc_text(a) + " and " + arc_text(b) + " cross");
        }
}

std::vector<Loop> loops(const SecondaryStructure& s) {
    check_structure(s);
    const std::vector<Arc>& arcs = s.arcs; // sorted; nesting follows from sortedness
    const int n = static_cast<int>(arcs.size());

    // Direct children per arc, slot n standing in for the rainbow arc.
    std::vector<std::vector<int>> children(static_cast<size_t>(n) + 1);
    std::vector<int> stack;
    for (int a = 0; a < n; ++a) {
        while (!stack.empty() && arcs[static_cast<size_t>(stack.back())].j < arcs[static_cast<size_t>(a)].i)
            stack.pop_back();
        children[static_cast<size_t>(stack.empty() ? n : stack.back())].push_back(a);
        stack.push_back(a);
    }

    // The loop of an arc is its span minus the open interiors of its
    // children: the gap segments plus all endpoints.
    const auto build = [&](const Arc& bounds, const std::vector<int>& kids) {
        std::vector<int> verts;
        int cursor = std::max(1, bounds.i);
        for (int k : kids) {
            for (int v = cursor; v <= arcs[static_cast<size_t>(k)].i; ++v) verts.push_back(v);
            cursor = arcs[static_cast<size_t>(k)].j;
        }
        for (int v = cursor; v <= std::min(s.length, bounds.j); ++v) verts.push_back(v);
        return verts;
    };

    std::vector<Loop> out;
    const Arc rainbow{0, s.length + 1};
    out.push_back(Loop{true, rainbow, build(rainbow, children[static_cast<size_t>(n)])});
    for (int a = 0; a < n; ++a)
        out.push_back(Loop{false, arcs[static_cast<size_t>(a)],
                           build(arcs[static_cast<size_t>(a)], children[static_cast<size_t>(a)])});
    return out;
}

BiStructure BiStructure::make(SecondaryStructure s, SecondaryStructure t) {
    check_structure(s);
    check_structure(t);
    if (s.length != t.length)
        fail(errc::domain_error, "backbone lengths differ: " + std::to_string(s.length) + " vs " +
                                     std::to_string(t.length));
    return BiStructure{std::move(s), std::move(t)};
}

const Loop& LoopNerve::loop(int vertex) const {
    const int ns = static_cast<int>(s_loops.size());
    if (vertex < 0 || vertex >= ns + static_cast<int>(t_loops.size()))
        fail(errc::internal_error, "loop vertex out of range");
    return vertex < ns ? s_loops[static_cast<size_t>(vertex)]
                       : t_loops[static_cast<size_t>(vertex - ns)];
}

std::string LoopNerve::loop_name(int vertex) const {
    const int ns = static_cast<int>(s_loops.size());
    return vertex < ns ? "S" + std::to_string(vertex) : "T" + std::to_string(vertex - ns);
}

LoopNerve loop_complex(const BiStructure& b, Field f) {
    std::vector<Loop> ls = loops(b.s), lt = loops(b.t);
    const int n = static_cast<int>(ls.size() + lt.size());
    std::vector<const std::vector<int>*> vs;
    vs.reserve(static_cast<size_t>(n));
    for (const Loop& l : ls) vs.push_back(&l.vertices);
    for (const Loop& l : lt) vs.push_back(&l.vertices);

    // Grow the nerve a dimension at a time: extend each simplex by a
    // later loop and keep it while the common intersection is nonempty.
    // A backbone position lies in at most two loops per structure, so
    // this stays tiny.
    std::vector<SimplexEntry> entries;
    struct Node {
        std::vector<int> verts;
        std::vector<int> common;
    };
    std::vector<Node> frontier;
    for (int i = 0; i < n; ++i) {
        entries.push_back(SimplexEntry{Simplex{{i}}, static_cast<int>(vs[static_cast<size_t>(i)]->size())});
        frontier.push_back(Node{{i}, *vs[static_cast<size_t>(i)]});
    }
    while (!frontier.empty()) {
        std::vector<Node> next;
        for (const Node& node : frontier) {
            for (int m = node.verts.back() + 1; m < n; ++m) {
                std::vector<int> common;
                std::set_intersection(node.common.begin(), node.common.end(),
                                      vs[static_cast<size_t>(m)]->begin(),
                                      vs[static_cast<size_t>(m)]->end(), std::back_inserter(common));
                if (common.empty()) continue;
                std::vector<int> verts = node.verts;
                verts.push_back(m);
                entries.push_back(SimplexEntry{Simplex{verts}, static_cast<int>(common.size())});
                next.push_back(Node{std::move(verts), std::move(common)});
            }
        }
        frontier = std::move(next);
    }

    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(n));
    for (int i = 0; i < static_cast<int>(ls.size()); ++i) names.push_back("S" + std::to_string(i));
    for (int i = 0; i < static_cast<int>(lt.size()); ++i) names.push_back("T" + std::to_string(i));

    WeightedComplex cx = WeightedComplex::build(f, entries, std::move(names));
    return LoopNerve{std::move(ls), std::move(lt), std::move(cx)};
}

CrossingComponents crossing_components(const BiStructure& b) {
    check_structure(b.s);
    check_structure(b.t);
    std::vector<ArcRef> arcs;
    for (const Arc& a : b.s.arcs) arcs.push_back(ArcRef{'S', a});
    for (const Arc& a : b.t.arcs) arcs.push_back(ArcRef{'T', a});
    const int n = static_cast<int>(arcs.size());

    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    const std::function<int(int)> find = [&](int v) {
        return parent[static_cast<size_t>(v)] == v
                   ? v
                   : parent[static_cast<size_t>(v)] = find(parent[static_cast<size_t>(v)]);
    };
    std::vector<char> crossing(static_cast<size_t>(n), 0);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            const Arc &a = arcs[static_cast<size_t>(x)].arc, &c = arcs[static_cast<size_t>(y)].arc;
            if ((a.i < c.i && c.i < a.j && a.j < c.j) || (c.i < a.i && a.i < c.j && c.j < a.j)) {
                crossing[static_cast<size_t>(x)] = crossing[static_cast<size_t>(y)] = 1;
                parent[static_cast<size_t>(find(x))] = find(y);
            }
        }

    std::map<int, std::vector<ArcRef>> classes;
    for (int x = 0; x < n; ++x)
        if (crossing[static_cast<size_t>(x)]) classes[find(x)].push_back(arcs[static_cast<size_t>(x)]);

    CrossingComponents out;
    for (auto& [root, members] : classes) {
        std::sort(members.begin(), members.end());
        out.components.push_back(std::move(members));
    }
    std::sort(out.components.begin(), out.components.end(),
              [](const std::vector<ArcRef>& a, const std::vector<ArcRef>& b) {
                  return a.front() < b.front();
              });
    out.count = static_cast<int>(out.components.size());
    return out;
}

bool is_lean(const WeightedComplex& x) {
    if (x.dim() > 2) return false;
    for (int i = 0; i < x.size(2); ++i)
        if (x.weight(2, i) != 1) return false;
    return true;
}

LeanCheck verify_lean_formulas(const BiStructure& b, Field f) {
    const LoopNerve nerve = loop_complex(b, f);
    const WeightedComplex& x = nerve.complex;

    LeanCheck out;
    out.crossing_count = crossing_components(b).count;
    out.applicable = is_lean(x);
    out.computed.resize(3);
    out.predicted.resize(3);
    for (int n = 0; n <= 2; ++n)
        out.computed[static_cast<size_t>(n)] =
            n <= x.dim() ? homology_direct(x, n) : ModuleInvariants{};
    out.rank2_matches_crossings = out.computed[2].rank == out.crossing_count;
    if (!out.applicable) return out;

    out.predicted[2] = ModuleInvariants{out.crossing_count, {}};

    ModuleInvariants deg1;
    if (x.dim() >= 1) {
        for (int k : kappa_mu_split(x, 1).kappa) {
            const int e = x.weight(1, k) - 1;
            if (e > 0) deg1.torsion.push_back(static_cast<unsigned>(e));
        }
        std::sort(deg1.torsion.begin(), deg1.torsion.end());
    }
    out.predicted[1] = std::move(deg1);

    ModuleInvariants deg0;
    deg0.rank = 1;
    deg0.torsion = homology_structure(x, 0).invariants.torsion;
    out.predicted[0] = std::move(deg0);

    for (int n = 0; n <= 2; ++n)
        out.match[n] = out.computed[static_cast<size_t>(n)] == out.predicted[static_cast<size_t>(n)];
    return out;
}

} // namespace wshom
