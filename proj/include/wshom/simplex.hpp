#pragma once

#include <string>
#include <vector>

namespace wshom {

// Simplex as its strictly ascending vertex id list. Faces are produced in
// the standard orientation convention: facet i omits the i-th vertex of
// the ascending list.
struct Simplex {
    std::vector<int> verts;

    Simplex() = default;
    explicit Simplex(std::vector<int> v) : verts(std::move(v)) {}
    Simplex(std::initializer_list<int> v) : verts(v) {}

    int dim() const { return static_cast<int>(verts.size()) - 1; }
    bool valid() const; // nonempty, non-negative, strictly ascending

    Simplex facet(int i) const; // omit the i-th vertex
    std::vector<Simplex> facets() const;

    bool operator==(const Simplex& o) const { return verts == o.verts; }
    bool operator!=(const Simplex& o) const { return verts != o.verts; }
    bool operator<(const Simplex& o) const; // dimension, then colex

    // "AB" when every vertex has a single-character name, "A-B" or "0-1"
    // otherwise. Vertices without a name fall back to their id.
    std::string label(const std::vector<std::string>& names) const;
};

// Colexicographic comparison of equal-dimension vertex lists: compare the
// last entries first. This is the canonical per-dimension simplex order.
bool colex_less(const Simplex& a, const Simplex& b);

} // namespace wshom
