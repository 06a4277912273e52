#include "wshom/simplex.hpp"

namespace wshom {

bool Simplex::valid() const {
    if (verts.empty()) return false;
    if (verts.front() < 0) return false;
    for (size_t i = 1; i < verts.size(); ++i)
        if (verts[i] <= verts[i - 1]) return false;
    return true;
}

Simplex Simplex::facet(int i) const {
    Simplex f;
    f.verts.reserve(verts.size() - 1);
    for (int j = 0; j < static_cast<int>(verts.size()); ++j)
        if (j != i) f.verts.push_back(verts[j]);
    return f;
}

std::vector<Simplex> Simplex::facets() const {
    std::vector<Simplex> out;
    if (dim() < 1) return out;
    out.reserve(verts.size());
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) out.push_back(facet(i));
    return out;
}

bool colex_less(const Simplex& a, const Simplex& b) {
    for (size_t i = a.verts.size(); i-- > 0;) {
        if (a.verts[i] != b.verts[i]) return a.verts[i] < b.verts[i];
    }
    return false;
}

bool Simplex::operator<(const Simplex& o) const {
    if (verts.size() != o.verts.size()) return verts.size() < o.verts.size();
    return colex_less(*this, o);
}

std::string Simplex::label(const std::vector<std::string>& names) const {
    std::vector<std::string> parts;
    parts.reserve(verts.size());
    bool all_single = true;
    for (int v : verts) {
        std::string n = v >= 0 && v < static_cast<int>(names.size()) && !names[v].empty()
                            ? names[v]
                            : std::to_string(v);
        all_single = all_single && n.size() == 1;
        parts.push_back(std::move(n));
    }
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i > 0 && !all_single) out += "-";
        out += parts[i];
    }
    return out;
}

} // namespace wshom
