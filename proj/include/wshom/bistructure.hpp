#pragma once

#include <string>
#include <vector>

#include "wshom/homology.hpp"
#include "wshom/weighted_complex.hpp"

namespace wshom {

// Backbone arc, 1-indexed, i < j.
struct Arc {
    int i = 0;
    int j = 0;

    bool operator==(const Arc& o) const = default;
    bool operator<(const Arc& o) const { return i != o.i ? i < o.i : j < o.j; }
};

// One secondary structure: a set of pairwise non-crossing arcs without
// shared endpoints over a backbone of the given length.
struct SecondaryStructure {
    int length = 0;
    std::vector<Arc> arcs; // sorted by (i, j)
};

// Parses dot-bracket notation ('.', '(', ')'); errors on illegal
// characters and unbalanced brackets, with positions in the message.
SecondaryStructure parse_dot_bracket(const std::string& text);
std::string render_dot_bracket(const SecondaryStructure& s);

// Throws errc::domain_error unless the arcs are within range, pairwise
// non-crossing and free of shared endpoints.
void check_structure(const SecondaryStructure& s);

// A loop is the covered-vertex set of one arc: the positions inside the
// arc that no strictly nested arc separates from it. The exterior loop
// comes from an artificial rainbow arc spanning past both backbone ends.
struct Loop {
    bool exterior = false;
    Arc arc;                   // the defining arc; (0, length+1) for the exterior loop
    std::vector<int> vertices; // ascending backbone positions
};

// All loops of the structure: the exterior loop first, then one loop per
// arc in arc order.
std::vector<Loop> loops(const SecondaryStructure& s);

struct BiStructure {
    SecondaryStructure s, t;

    // Validates both structures and the equal-length requirement.
    static BiStructure make(SecondaryStructure s, SecondaryStructure t);
};

// The weighted nerve of all loops of both structures: vertex k is the
// k-th loop (S loops first, exterior loops leading), a simplex is any
// loop set with nonempty common intersection, and the weight exponent is
// the intersection cardinality. Loop vertex names are "S0", "S1", ...
// and "T0", ... with index 0 the exterior loop.
struct LoopNerve {
    std::vector<Loop> s_loops, t_loops;
    WeightedComplex complex;

    const Loop& loop(int vertex) const;
    std::string loop_name(int vertex) const;
};

LoopNerve loop_complex(const BiStructure& b, Field f = Field::rationals());

struct ArcRef {
    char owner = 'S'; // 'S' or 'T'
    Arc arc;

    bool operator<(const ArcRef& o) const {
        return arc != o.arc ? arc < o.arc : owner < o.owner;
    }
};

// Nontrivial classes of the transitive crossing relation over the real
// arcs of both structures (two arcs cross when they interleave as
// i < k < j < l). Rainbow arcs take no part.
struct CrossingComponents {
    int count = 0;
    std::vector<std::vector<ArcRef>> components; // each sorted, listed by first arc
};

CrossingComponents crossing_components(const BiStructure& b);

// A loop complex is lean when it has no 3-simplices and every triangle
// has weight exponent exactly 1 (triple overlaps of one position only).
bool is_lean(const WeightedComplex& x);

// Closed-form predictions for the homology of a lean loop complex,
// checked against the engine:
//   degree 2: R^C for C crossing components,
//   degree 1: pure torsion with exponents w(kappa) - 1,
//   degree 0: R plus the torsion realized by the degree-0 pairing.
// For non-lean nerves only the computed invariants are reported. The
// degree-2 rank is compared against the crossing count for every input,
// lean or not.
struct LeanCheck {
    bool applicable = false;
    int crossing_count = 0;
    std::vector<ModuleInvariants> computed;  // degrees 0..2
    std::vector<ModuleInvariants> predicted; // degrees 0..2, valid when applicable
    bool match[3] = {false, false, false};
    bool rank2_matches_crossings = false;

    bool all_match() const { return applicable && match[0] && match[1] && match[2]; }
};

LeanCheck verify_lean_formulas(const BiStructure& b, Field f = Field::rationals());

} // namespace wshom
