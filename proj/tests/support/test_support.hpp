#pragma once

// Shared test utilities: fixture loading, deliberately naive reference
// oracles, and small random generators. Everything here is independent
// of the engine's internals so the cross-checks stay meaningful.

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wshom/bistructure.hpp"
#include "wshom/complex_io.hpp"
#include "wshom/generator.hpp"
#include "wshom/sparse_matrix.hpp"

namespace wshom::testsupport {

inline std::string fixture_path(const std::string& name) {
    return std::string(WSHOM_FIXTURE_DIR) + "/" + name;
}

inline WeightedComplex load_fixture(const std::string& name, std::optional<Field> f = {}) {
    return load_complex_file(fixture_path(name), f);
}

// First `terms` power-series coefficients of a ring element, by long
// division of the numerator against the denominator (a unit, so its
// constant coefficient divides). This is the reference semantics for
// LocalElement arithmetic.
inline std::vector<FieldElem> series_prefix(const LocalElement& e, int terms) {
    std::vector<FieldElem> s;
    s.reserve(static_cast<size_t>(terms));
    const FieldElem lead = e.den().coeff(0);
    for (int k = 0; k < terms; ++k) {
        FieldElem acc = e.num().coeff(static_cast<unsigned>(k));
        for (int j = 1; j <= k; ++j)
            acc -= e.den().coeff(static_cast<unsigned>(j)) * s[static_cast<size_t>(k - j)];
        s.push_back(acc / lead);
    }
    return s;
}

// Covering-scan loop oracle: p belongs to loop(a) iff p lies under a
// (clamped to the backbone) and is not strictly inside any arc nested
// under a. Quadratic and proud of it.
inline std::vector<int> naive_loop(const SecondaryStructure& s, Arc a) {
    std::vector<int> out;
    for (int p = std::max(1, a.i); p <= std::min(s.length, a.j); ++p) {
        bool interior = false;
        for (const Arc& b : s.arcs) {
            if (b == a) continue;
            if (a.i <= b.i && b.j <= a.j && b.i < p && p < b.j) {
                interior = true;
                break;
            }
        }
        if (!interior) out.push_back(p);
    }
    return out;
}

// All loops in the same order the engine reports them: the exterior
// (rainbow) loop first, then real arcs ascending.
inline std::vector<Loop> naive_loops(const SecondaryStructure& s) {
    std::vector<Loop> out;
    out.push_back(Loop{true, Arc{0, s.length + 1}, naive_loop(s, Arc{0, s.length + 1})});
    for (const Arc& a : s.arcs) out.push_back(Loop{false, a, naive_loop(s, a)});
    return out;
}

// a - b over the ring; the empty map means a == b.
inline SparseVec vec_minus(Field f, const SparseVec& a, const SparseVec& b) {
    SparseVec diff = a;
    vec_axpy(diff, -LocalElement::one(f), b);
    return diff;
}

inline LocalElement vec_get(Field f, const SparseVec& v, int i) {
    const auto it = v.find(i);
    return it == v.end() ? LocalElement::zero(f) : it->second;
}

// Random balanced dot-bracket string of the given length.
inline SecondaryStructure random_structure(int length, std::mt19937_64& rng) {
    std::string text(static_cast<size_t>(length), '.');
    int open = 0;
    for (int p = 0; p < length; ++p) {
        const int remaining = length - p;
        if (open == remaining) {
            text[static_cast<size_t>(p)] = ')';
            --open;
            continue;
        }
        switch (rng() % 3) {
            case 0: break; // unpaired
            case 1:
                if (open + 1 < remaining) {
                    text[static_cast<size_t>(p)] = '(';
                    ++open;
                }
                break;
            default:
                if (open > 0) {
                    text[static_cast<size_t>(p)] = ')';
                    --open;
                }
                break;
        }
    }
    return parse_dot_bracket(text);
}

inline BiStructure random_bistructure(int length, std::mt19937_64& rng) {
    return BiStructure::make(random_structure(length, rng), random_structure(length, rng));
}

// Sparse matrix whose nonzero entries are monomials c*pi^d.
inline SparseMatrix random_monomial_matrix(Field f, int rows, int cols, std::mt19937_64& rng,
                                           int max_deg = 6) {
    SparseMatrix m(f, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (rng() % 2) continue;
            long coeff = static_cast<long>(rng() % 5) + 1;
            if (f.kind == field_kind::prime) coeff = 1 + static_cast<long>(rng() % (f.p - 1));
            if (rng() % 2) coeff = -coeff;
            const unsigned deg = static_cast<unsigned>(rng() % static_cast<unsigned>(max_deg + 1));
            m.set(r, c, LocalElement::monomial(f, FieldElem(f, coeff), deg));
        }
    return m;
}

// Fresh monotone weights on the simplices of x, exponents <= cap.
inline WeightedComplex with_random_weights(const WeightedComplex& x, std::mt19937_64& rng,
                                           int cap = 10) {
    return x.with_weights(random_subweights(x.constant_weight(cap), rng));
}

} // namespace wshom::testsupport
