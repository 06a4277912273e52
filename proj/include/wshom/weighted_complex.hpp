#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wshom/field.hpp"
#include "wshom/simplex.hpp"

namespace wshom {

// Weight exponents per simplex, aligned with the complex's canonical
// per-dimension order: assignment[d][i] is the exponent of simplex i of
// dimension d. Weights multiply as pi^exponent, so "weight 1" in the
// multiplicative sense is exponent 0.
using WeightAssignment = std::vector<std::vector<int>>;

struct Violation {
    enum Kind { bad_simplex, duplicate, missing_face, monotonicity, bad_weight };
    Kind kind;
    Simplex subject;
    Simplex other; // the coface for monotonicity violations
    std::string message;
};

// One listed simplex of a raw (unvalidated) document.
struct SimplexEntry {
    Simplex simplex;
    int weight = 0;
};

// Check a raw listing for face closure, weight monotonicity (faces weigh
// at least as much as cofaces), well-formed vertex lists, non-negative
// weights and duplicates. Returns every violation found.
std::vector<Violation> validate(const std::vector<SimplexEntry>& entries);

// Finite weighted simplicial complex over a coefficient field. Valid by
// construction: face-closed, duplicate-free, weights monotone, simplices
// kept in colex order within each dimension.
class WeightedComplex {
public:
    // Builds from a listing. With auto_close, missing faces are added
    // with the maximum weight over their cofaces (the smallest valid
    // choice); otherwise any gap is a validation error. Vertex names are
    // optional; when given they must cover every vertex id.
    static WeightedComplex build(Field f, const std::vector<SimplexEntry>& entries,
                                 std::vector<std::string> names = {}, bool auto_close = false);

    const Field& field() const { return field_; }
    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    int size(int d) const {
        return d >= 0 && d <= dim() ? static_cast<int>(by_dim_[d].size()) : 0;
    }
    int total_size() const;

    const Simplex& simplex(int d, int i) const { return by_dim_[d][i]; }
    const std::vector<Simplex>& simplices(int d) const { return by_dim_[d]; }
    int weight(int d, int i) const { return weights_[d][i]; }

    // Index of a simplex within its dimension, or nullopt if absent.
    std::optional<int> find(const Simplex& s) const;
    int weight_of(const Simplex& s) const;

    const std::vector<std::string>& names() const { return names_; }
    std::string label(int d, int i) const { return by_dim_[d][i].label(names_); }

    // Subcomplex of all simplices of dimension <= k.
    WeightedComplex skeleton(int k) const;

    // Same simplices, every weight exponent c.
    WeightedComplex constant_weight(int c = 0) const;

    // Same simplices with the given weights; validates monotonicity.
    WeightedComplex with_weights(const WeightAssignment& w) const;

    WeightAssignment weights() const { return weights_; }

    // Re-checks the construction invariants (face closure, monotonicity).
    // Empty for every complex this class hands out; exists so callers can
    // audit instances after manual surgery on listings.
    std::vector<Violation> revalidate() const;

    std::vector<SimplexEntry> entries() const;

    bool operator==(const WeightedComplex& o) const {
        return field_ == o.field_ && by_dim_ == o.by_dim_ && weights_ == o.weights_ && names_ == o.names_;
    }

private:
    Field field_ = Field::rationals();
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<std::vector<int>> weights_;
    std::map<Simplex, std::pair<int, int>> index_; // simplex -> (dim, position)
    std::vector<std::string> names_;

    void rebuild_index();
};

} // namespace wshom
