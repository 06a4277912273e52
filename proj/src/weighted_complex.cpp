#include "wshom/weighted_complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "wshom/error.hpp"

namespace wshom {

namespace {

std::string entry_label(const Simplex& s) { return s.label({}); }

void append_violation(std::vector<Violation>& out, Violation::Kind kind, const Simplex& subject,
                      const Simplex& other, std::string message) {
    out.push_back(Violation{kind, subject, other, std::move(message)});
}

} // namespace

std::vector<Violation> validate(const std::vector<SimplexEntry>& entries) {
    std::vector<Violation> out;
    std::map<Simplex, int> weight_of;
    std::set<Simplex> seen;
    for (const auto& e : entries) {
        if (!e.simplex.valid()) {
            append_violation(out, Violation::bad_simplex, e.simplex, {},
                             "simplex [" + entry_label(e.simplex) + "] is not a strictly ascending vertex list");
            continue;
        }
        if (e.weight < 0)
            append_violation(out, Violation::bad_weight, e.simplex, {},
                             "simplex " + entry_label(e.simplex) + " has negative weight exponent " +
                                 std::to_string(e.weight));
        if (!seen.insert(e.simplex).second) {
            append_violation(out, Violation::duplicate, e.simplex, {},
                             "simplex " + entry_label(e.simplex) + " listed more than once");
            continue;
        }
        weight_of[e.simplex] = e.weight;
    }
    for (const auto& [s, w] : weight_of) {
        for (const Simplex& f : s.facets()) {
            auto it = weight_of.find(f);
            if (it == weight_of.end()) {
                append_violation(out, Violation::missing_face, f, s,
                                 "face " + entry_label(f) + " of " + entry_label(s) + " is missing");
            } else if (it->second < w) {
                append_violation(out, Violation::monotonicity, f, s,
                                 "weight of " + entry_label(f) + " (" + std::to_string(it->second) +
                                     ") is below weight of its coface " + entry_label(s) + " (" +
                                     std::to_string(w) + ")");
            }
        }
    }
    return out;
}

WeightedComplex WeightedComplex::build(Field f, const std::vector<SimplexEntry>& entries,
                                       std::vector<std::string> names, bool auto_close) {
    std::vector<SimplexEntry> listing = entries;

    if (auto_close) {
        // Close downward, dimension by dimension. An added face gets the
        // max weight over its immediate cofaces, which is the smallest
        // assignment compatible with monotonicity; explicitly listed
        // weights are never touched.
        std::set<Simplex> explicit_set;
        int max_dim = -1;
        for (const auto& e : listing) {
            if (!e.simplex.valid())
                fail(errc::validation_error,
                     "simplex [" + entry_label(e.simplex) + "] is not a strictly ascending vertex list");
            explicit_set.insert(e.simplex);
            max_dim = std::max(max_dim, e.simplex.dim());
        }
        std::map<Simplex, int> weight_of;
        for (const auto& e : listing) weight_of[e.simplex] = e.weight;
        for (int d = max_dim; d >= 1; --d) {
            std::vector<Simplex> level;
            for (const auto& [s, w] : weight_of)
                if (s.dim() == d) level.push_back(s);
            for (const Simplex& s : level) {
                const int w = weight_of[s];
                for (const Simplex& face : s.facets()) {
                    if (explicit_set.count(face)) continue;
                    auto [it, inserted] = weight_of.emplace(face, w);
                    if (!inserted) it->second = std::max(it->second, w);
                }
            }
        }
        listing.clear();
        for (const auto& [s, w] : weight_of) listing.push_back({s, w});
    }

    const std::vector<Violation> bad = validate(listing);
    if (!bad.empty()) {
        std::ostringstream msg;
        msg << bad.size() << " validation error" << (bad.size() > 1 ? "s" : "") << ": " << bad[0].message;
        if (bad.size() > 1) msg << " (and " << bad.size() - 1 << " more)";
        fail(errc::validation_error, msg.str());
    }

    WeightedComplex x;
    x.field_ = f;
    int max_dim = -1, max_vertex = -1;
    for (const auto& e : listing) {
        max_dim = std::max(max_dim, e.simplex.dim());
        max_vertex = std::max(max_vertex, e.simplex.verts.back());
    }
    if (!names.empty()) {
        if (static_cast<int>(names.size()) <= max_vertex)
            fail(errc::validation_error, "name table covers " + std::to_string(names.size()) +
                                             " vertices but vertex id " + std::to_string(max_vertex) +
                                             " occurs");
        std::set<std::string> uniq(names.begin(), names.end());
        if (uniq.size() != names.size()) fail(errc::validation_error, "vertex names are not unique");
    }
    x.names_ = std::move(names);
    x.by_dim_.assign(max_dim + 1, {});
    x.weights_.assign(max_dim + 1, {});

    std::vector<SimplexEntry> sorted = listing;
    std::sort(sorted.begin(), sorted.end(),
              [](const SimplexEntry& a, const SimplexEntry& b) { return a.simplex < b.simplex; });
    for (auto& e : sorted) {
        const int d = e.simplex.dim();
        x.by_dim_[d].push_back(std::move(e.simplex));
        x.weights_[d].push_back(e.weight);
    }
    x.rebuild_index();
    return x;
}

void WeightedComplex::rebuild_index() {
    index_.clear();
    for (int d = 0; d <= dim(); ++d)
        for (int i = 0; i < size(d); ++i) index_[by_dim_[d][i]] = {d, i};
}

int WeightedComplex::total_size() const {
    int n = 0;
    for (int d = 0; d <= dim(); ++d) n += size(d);
    return n;
}

std::optional<int> WeightedComplex::find(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second.second;
}

int WeightedComplex::weight_of(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end())
        fail(errc::domain_error, "simplex " + entry_label(s) + " is not in the complex");
    return weights_[it->second.first][it->second.second];
}

WeightedComplex WeightedComplex::skeleton(int k) const {
    WeightedComplex x;
    x.field_ = field_;
    x.names_ = names_;
    const int top = std::min(k, dim());
    if (top >= 0) {
        x.by_dim_.assign(by_dim_.begin(), by_dim_.begin() + top + 1);
        x.weights_.assign(weights_.begin(), weights_.begin() + top + 1);
    }
    x.rebuild_index();
    return x;
}

WeightedComplex WeightedComplex::constant_weight(int c) const {
    if (c < 0) fail(errc::domain_error, "constant weight exponent must be non-negative");
    WeightAssignment w = weights_;
    for (auto& level : w) std::fill(level.begin(), level.end(), c);
    return with_weights(w);
}

WeightedComplex WeightedComplex::with_weights(const WeightAssignment& w) const {
    if (static_cast<int>(w.size()) != dim() + 1)
        fail(errc::domain_error, "weight assignment has wrong number of dimensions");
    for (int d = 0; d <= dim(); ++d)
        if (w[d].size() != by_dim_[d].size())
            fail(errc::domain_error, "weight assignment has wrong size at dimension " + std::to_string(d));
    WeightedComplex x = *this;
    x.weights_ = w;
    const std::vector<Violation> bad = x.revalidate();
    if (!bad.empty()) fail(errc::validation_error, bad[0].message);
    return x;
}

std::vector<Violation> WeightedComplex::revalidate() const {
    return wshom::validate(entries());
}

std::vector<SimplexEntry> WeightedComplex::entries() const {
    std::vector<SimplexEntry> out;
    out.reserve(total_size());
    for (int d = 0; d <= dim(); ++d)
        for (int i = 0; i < size(d); ++i) out.push_back({by_dim_[d][i], weights_[d][i]});
    return out;
}

} // namespace wshom
