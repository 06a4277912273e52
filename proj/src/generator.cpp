#include "wshom/generator.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wshom/error.hpp"

namespace wshom {

namespace {

int draw(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

} // namespace

WeightedComplex random_complex(Field f, std::uint64_t seed, const GeneratorParams& params) {
    if (params.max_dim < 0 || params.per_dim_budget < 1 || params.max_weight < 0)
        fail(errc::domain_error, "bad generator parameters");
    std::mt19937_64 rng(seed);

    const int nverts = draw(rng, 2, std::max(2, params.per_dim_budget));
    std::set<Simplex> chosen;
    for (int v = 0; v < nverts; ++v) chosen.insert(Simplex{v});
    for (int d = 1; d <= params.max_dim; ++d) {
        if (d + 1 > nverts) break;
        const int count = draw(rng, 0, params.per_dim_budget);
        for (int c = 0; c < count; ++c) {
            std::set<int> verts;
            while (static_cast<int>(verts.size()) < d + 1) verts.insert(draw(rng, 0, nverts - 1));
            chosen.insert(Simplex(std::vector<int>(verts.begin(), verts.end())));
        }
    }

    // Face closure.
    std::set<Simplex> closed;
    std::vector<Simplex> stack(chosen.begin(), chosen.end());
    while (!stack.empty()) {
        Simplex s = std::move(stack.back());
        stack.pop_back();
        if (!closed.insert(s).second) continue;
        for (Simplex& face : s.facets()) stack.push_back(std::move(face));
    }

    // Weights, top-down: maximal simplices draw freely, faces take the
    // max over cofaces plus a small increment. Iteration is over ordered
    // sets, so the draw sequence is reproducible.
    std::map<Simplex, int> weight;
    int top = 0;
    for (const Simplex& s : closed) top = std::max(top, s.dim());
    for (int d = top; d >= 0; --d) {
        for (const Simplex& s : closed) {
            if (s.dim() != d) continue;
            int floor_w = -1;
            for (const auto& [t, w] : weight) {
                if (t.dim() != d + 1) continue;
                if (std::includes(t.verts.begin(), t.verts.end(), s.verts.begin(), s.verts.end()))
                    floor_w = std::max(floor_w, w);
            }
            weight[s] = floor_w < 0 ? draw(rng, 0, params.max_weight)
                                    : floor_w + draw(rng, 0, std::min(2, params.max_weight));
        }
    }

    std::vector<SimplexEntry> entries;
    entries.reserve(weight.size());
    for (const auto& [s, w] : weight) entries.push_back({s, w});
    return WeightedComplex::build(f, entries);
}

WeightAssignment random_subweights(const WeightedComplex& x, std::mt19937_64& rng) {
    WeightAssignment w(x.dim() + 1);
    for (int d = x.dim(); d >= 0; --d) {
        w[d].resize(x.size(d));
        for (int i = 0; i < x.size(d); ++i) {
            // Lower bound: stay monotone against the already drawn
            // cofaces. Upper bound: never exceed the complex's weight.
            int lo = 0;
            const Simplex& s = x.simplex(d, i);
            for (int j = 0; d + 1 <= x.dim() && j < x.size(d + 1); ++j) {
                const Simplex& t = x.simplex(d + 1, j);
                if (std::includes(t.verts.begin(), t.verts.end(), s.verts.begin(), s.verts.end()))
                    lo = std::max(lo, w[d + 1][j]);
            }
            w[d][i] = draw(rng, lo, std::max(lo, x.weight(d, i)));
        }
    }
    return w;
}

} // namespace wshom
