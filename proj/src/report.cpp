#include "wshom/report.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "wshom/error.hpp"

namespace wshom {

using nlohmann::json;

std::string format_invariants(const ModuleInvariants& inv) {
    if (inv.is_zero_module()) return "0";
    std::vector<std::string> parts;
    if (inv.rank > 0) parts.push_back("R^" + std::to_string(inv.rank));
    for (unsigned d : inv.torsion) parts.push_back("R/(pi^" + std::to_string(d) + ")");
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " (+) ";
        out += parts[i];
    }
    return out;
}

std::string homology_line(int n, const ModuleInvariants& inv) {
    return "H_" + std::to_string(n) + "^v = " + format_invariants(inv);
}

namespace {

// Appends "+ term" / "- term", folding a leading minus of the rendered
// coefficient into the connective.
void append_term(std::string& out, const std::string& term) {
    if (out.empty()) {
        out = term;
        return;
    }
    if (!term.empty() && term[0] == '-')
        out += " - " + term.substr(1);
    else
        out += " + " + term;
}

std::string coeff_term(std::string coeff, const std::string& label) {
    if (coeff == "1") return label;
    if (coeff == "-1") return "-" + label;
    const bool compound = coeff.find(' ') != std::string::npos || coeff.find('/') != std::string::npos;
    if (compound) coeff = "(" + coeff + ")";
    return coeff + "*" + label;
}

std::vector<int> selected_degrees(const WeightedComplex& x, const ReportRequest& req) {
    if (req.dim) {
        if (*req.dim < 0 || *req.dim > x.dim())
            fail(errc::domain_error, "degree " + std::to_string(*req.dim) +
                                         " is out of range for a complex of dimension " +
                                         std::to_string(x.dim()));
        return {*req.dim};
    }
    std::vector<int> all(static_cast<size_t>(x.dim() + 1));
    std::iota(all.begin(), all.end(), 0);
    return all;
}

// Shuffled processing order for the split experiments; a fresh draw per
// degree so --order perturbs every dimension independently.
std::vector<int> shuffled_order(const WeightedComplex& x, int n, std::uint64_t seed) {
    std::vector<int> order(static_cast<size_t>(x.size(n)));
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(n + 1));
    std::shuffle(order.begin(), order.end(), rng);
    return order;
}

json invariants_json(int n, const ModuleInvariants& inv) {
    return json{{"dim", n},
                {"rank", inv.rank},
                {"torsion", inv.torsion},
                {"rendered", homology_line(n, inv)}};
}

} // namespace

std::string chain_to_string(const WeightedComplex& x, int n, const SparseVec& v) {
    if (v.empty()) return "0";
    std::string out;
    for (const auto& [i, c] : v) append_term(out, coeff_term(c.to_string(), x.label(n, i)));
    return out;
}

std::string report_homology(const WeightedComplex& x, const ReportRequest& req) {
    const std::vector<int> degrees = selected_degrees(x, req);
    json doc{{"report", "homology"}, {"field", x.field().to_string()}};
    json rows = json::array();
    std::string text;
    for (int n : degrees) {
        std::vector<int> order;
        const std::vector<int>* order_ptr = nullptr;
        if (req.order_seed) {
            order = shuffled_order(x, n, *req.order_seed);
            order_ptr = &order;
        }
        const StructureResult st = homology_structure(x, n, order_ptr);
        text += homology_line(n, st.invariants) + "\n";
        rows.push_back(invariants_json(n, st.invariants));
    }
    if (!req.json) return text;
    doc["homology"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string report_basis(const WeightedComplex& x, const ReportRequest& req) {
    const std::vector<int> degrees = selected_degrees(x, req);
    json doc{{"report", "basis"}, {"field", x.field().to_string()}};
    json rows = json::array();
    std::string text;
    for (int n : degrees) {
        std::vector<int> order;
        const std::vector<int>* order_ptr = nullptr;
        if (req.order_seed) {
            order = shuffled_order(x, n, *req.order_seed);
            order_ptr = &order;
        }
        const KappaMuSplit split = kappa_mu_split(x, n, order_ptr);
        const std::vector<BasisCycle> basis = k_basis(x, split);

        auto label_list = [&](const std::vector<int>& ids) {
            std::string s;
            for (size_t i = 0; i < ids.size(); ++i) {
                if (i) s += ", ";
                s += x.label(n, ids[i]);
            }
            return s.empty() ? std::string("(none)") : s;
        };
        text += "dim " + std::to_string(n) + ": K = {" + label_list(split.kappa) + "}, mu = {" +
                label_list(split.mu) + "}\n";
        json cycles = json::array();
        for (const BasisCycle& bc : basis) {
            text += "beta[" + x.label(n, bc.kappa) + "] = " + chain_to_string(x, n, bc.cycle) + "\n";
            json terms = json::array();
            for (const auto& [i, c] : bc.cycle)
                terms.push_back(json{{"simplex", x.label(n, i)}, {"coeff", c.to_string()}});
            cycles.push_back(json{{"kappa", x.label(n, bc.kappa)}, {"terms", std::move(terms)}});
        }
        json row{{"dim", n}, {"cycles", std::move(cycles)}};
        json kl = json::array(), ml = json::array();
        for (int k : split.kappa) kl.push_back(x.label(n, k));
        for (int m : split.mu) ml.push_back(x.label(n, m));
        row["kappa"] = std::move(kl);
        row["mu"] = std::move(ml);
        rows.push_back(std::move(row));
    }
    if (!req.json) return text;
    doc["basis"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string report_pairing(const WeightedComplex& x, const ReportRequest& req) {
    const std::vector<int> degrees = selected_degrees(x, req);
    json doc{{"report", "pairing"}, {"field", x.field().to_string()}};
    json rows = json::array();
    std::string text;
    for (int n : degrees) {
        std::vector<int> order;
        const std::vector<int>* order_ptr = nullptr;
        if (req.order_seed) {
            order = shuffled_order(x, n, *req.order_seed);
            order_ptr = &order;
        }
        const StructureResult st = homology_structure(x, n, order_ptr);
        text += "dim " + std::to_string(n) + ": " + homology_line(n, st.invariants) + "\n";
        json pairs = json::array();
        for (const TorsionPair& p : st.pairing.pairs) {
            text += "(" + x.label(n, p.kappa) + ", " + x.label(n + 1, p.mu) + ", " +
                    std::to_string(p.exponent) + ")\n";
            pairs.push_back(json{{"kappa", x.label(n, p.kappa)},
                                 {"mu", x.label(n + 1, p.mu)},
                                 {"exponent", p.exponent}});
        }
        std::string free;
        json free_list = json::array();
        for (size_t i = 0; i < st.pairing.free_kappas.size(); ++i) {
            if (i) free += ", ";
            free += x.label(n, st.pairing.free_kappas[i]);
            free_list.push_back(x.label(n, st.pairing.free_kappas[i]));
        }
        text += "free: " + (free.empty() ? std::string("(none)") : free) + "\n";
        rows.push_back(json{{"dim", n}, {"pairs", std::move(pairs)}, {"free", std::move(free_list)}});
    }
    if (!req.json) return text;
    doc["pairing"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string report_quotient(const WeightedComplex& x, const WeightAssignment& sub,
                            const ReportRequest& req) {
    const std::vector<int> degrees = selected_degrees(x, req);
    json doc{{"report", "quotient"}, {"field", x.field().to_string()}};
    json rows = json::array();
    std::string text;
    for (int n : degrees) {
        const ModuleInvariants inv = quotient_homology(x, sub, n);
        text += "H_" + std::to_string(n) + "^v(X/theta) = " + format_invariants(inv) + "\n";
        json row = invariants_json(n, inv);
        row["rendered"] = "H_" + std::to_string(n) + "^v(X/theta) = " + format_invariants(inv);
        rows.push_back(std::move(row));
    }
    if (!req.json) return text;
    doc["quotient"] = std::move(rows);
    return doc.dump(2) + "\n";
}

namespace {

std::string integer_chain_to_string(const WeightedComplex& x, int n,
                                    const std::map<int, mpz_class>& v) {
    if (v.empty()) return "0";
    std::string out;
    for (const auto& [i, c] : v) append_term(out, coeff_term(c.get_str(), x.label(n, i)));
    return out;
}

} // namespace

std::string report_theta(const WeightedComplex& x, const ReportRequest& req) {
    const std::vector<int> degrees = selected_degrees(x, req);
    json doc{{"report", "theta"}, {"field", x.field().to_string()}};
    json rows = json::array();
    std::string text;
    for (int n : degrees) {
        const ThetaInjectivityResult r = theta_injectivity(x, n);
        json row{{"dim", n}, {"injective", r.injective}};
        if (r.injective) {
            text += "theta_" + std::to_string(n) + ": injective (H_" + std::to_string(n) +
                    " has no integral torsion)\n";
        } else {
            std::string tor;
            json tor_list = json::array();
            for (size_t i = 0; i < r.integral_torsion.size(); ++i) {
                if (i) tor += ", ";
                tor += r.integral_torsion[i].get_str();
                tor_list.push_back(r.integral_torsion[i].get_str());
            }
            text += "theta_" + std::to_string(n) + ": not injective (integral torsion {" + tor +
                    "})\n";
            text += "witness of order " + r.witness_order.get_str() + ": " +
                    integer_chain_to_string(x, n, r.witness) + "\n";
            text += "certificate: theta(witness) = d_v(" +
                    chain_to_string(x, n + 1, r.certificate) + ")\n";
            row["integral_torsion"] = std::move(tor_list);
            row["witness_order"] = r.witness_order.get_str();
            json wit = json::array();
            for (const auto& [i, c] : r.witness)
                wit.push_back(json{{"simplex", x.label(n, i)}, {"coeff", c.get_str()}});
            row["witness"] = std::move(wit);
            json cert = json::array();
            for (const auto& [i, c] : r.certificate)
                cert.push_back(json{{"simplex", x.label(n + 1, i)}, {"coeff", c.to_string()}});
            row["certificate"] = std::move(cert);
        }
        rows.push_back(std::move(row));
    }
    if (!req.json) return text;
    doc["theta"] = std::move(rows);
    return doc.dump(2) + "\n";
}

namespace {

std::string vertex_set_to_string(const std::vector<int>& verts) {
    std::string s = "{";
    for (size_t i = 0; i < verts.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(verts[i]);
    }
    return s + "}";
}

} // namespace

std::string report_bistruct(const BiStructure& b, Field f, const ReportRequest& req) {
    const LoopNerve nerve = loop_complex(b, f);
    const CrossingComponents cross = crossing_components(b);
    const WeightedComplex& x = nerve.complex;

    json doc{{"report", "bistruct"}, {"field", f.to_string()}, {"length", b.s.length}};
    std::string text = "backbone length " + std::to_string(b.s.length) + "\n";

    auto loop_block = [&](char tag, const std::vector<Loop>& loops) {
        json list = json::array();
        text += std::string(1, tag) + " loops:\n";
        for (size_t i = 0; i < loops.size(); ++i) {
            const std::string name = std::string(1, tag) + std::to_string(i);
            text += name + " = " + vertex_set_to_string(loops[i].vertices);
            if (loops[i].exterior) text += "  (exterior)";
            text += "\n";
            list.push_back(json{{"name", name},
                                {"exterior", loops[i].exterior},
                                {"arc", {loops[i].arc.i, loops[i].arc.j}},
                                {"vertices", loops[i].vertices}});
        }
        return list;
    };
    doc["s_loops"] = loop_block('S', nerve.s_loops);
    doc["t_loops"] = loop_block('T', nerve.t_loops);

    std::string sizes;
    json size_list = json::array();
    for (int d = 0; d <= x.dim(); ++d) {
        if (d) sizes += ", ";
        sizes += std::to_string(x.size(d));
        size_list.push_back(x.size(d));
    }
    text += "nerve: dim " + std::to_string(x.dim()) + "; simplices per dim: " + sizes + "\n";
    json simplices = json::array();
    for (int d = 0; d <= x.dim(); ++d)
        for (int i = 0; i < x.size(d); ++i)
            simplices.push_back(json{{"simplex", x.label(d, i)}, {"weight", x.weight(d, i)}});
    doc["nerve"] = json{{"dim", x.dim()}, {"sizes", std::move(size_list)},
                        {"simplices", std::move(simplices)}};

    text += "crossing components: " + std::to_string(cross.count) + "\n";
    json comps = json::array();
    for (const auto& comp : cross.components) {
        json one = json::array();
        for (const ArcRef& a : comp)
            one.push_back(json{{"owner", std::string(1, a.owner)}, {"i", a.arc.i}, {"j", a.arc.j}});
        comps.push_back(std::move(one));
    }
    doc["crossing_components"] = json{{"count", cross.count}, {"components", std::move(comps)}};

    const bool lean = is_lean(x);
    text += std::string("lean: ") + (lean ? "yes" : "no") + "\n";
    doc["lean"] = lean;

    json hom = json::array();
    for (int n = 0; n <= x.dim(); ++n) {
        const StructureResult st = homology_structure(x, n);
        text += homology_line(n, st.invariants) + "\n";
        hom.push_back(invariants_json(n, st.invariants));
    }
    doc["homology"] = std::move(hom);

    if (lean) {
        const LeanCheck chk = verify_lean_formulas(b, f);
        const bool all = chk.all_match();
        text += std::string("closed forms: ") + (all ? "match" : "MISMATCH") +
                " (rank H_2 = crossing components: " +
                (chk.rank2_matches_crossings ? "yes" : "NO") + ")\n";
        doc["lean_check"] = json{{"applicable", true},
                                 {"match", {chk.match[0], chk.match[1], chk.match[2]}},
                                 {"rank2_matches_crossings", chk.rank2_matches_crossings}};
    } else {
        text += "closed forms: not applicable (complex is not lean)\n";
        doc["lean_check"] = json{{"applicable", false}};
    }

    if (!req.json) return text;
    return doc.dump(2) + "\n";
}

std::string report_check(const WeightedComplex& x, const ReportRequest& req, bool& check_passed) {
    const std::uint64_t seed = req.order_seed.value_or(7);
    const OracleReport rep = check_complex(x, seed);

    json doc{{"report", "check"}, {"field", x.field().to_string()}, {"seed", seed}};
    std::string text;
    const auto line = [&text](const std::string& name, bool ok) {
        text += name + ": " + (ok ? "ok" : "FAIL") + "\n";
    };
    const CaseChecks& c = rep.checks;
    line("chain complex identity", c.chain_complex);
    line("theta naturality (seeded subweights)", c.naturality);
    line("structure vs direct homology", c.structure_vs_direct);
    line("rank over the field", c.rank_over_field);
    line("K-basis laws", c.basis_laws);
    line("split reference", c.split_reference);
    line("skeleton quotient torsion", c.skeleton_quotient_torsion);
    text += "SNF vs minor oracle: " +
            std::string(c.snf_vs_minor_oracle ? "ok" : "FAIL") + " (" +
            std::to_string(c.minor_checks_run) + " instances)\n";
    if (!rep.match) text += "first failure: " + rep.detail + "\n";

    doc["checks"] = json{{"chain_complex", c.chain_complex},
                         {"naturality", c.naturality},
                         {"structure_vs_direct", c.structure_vs_direct},
                         {"rank_over_field", c.rank_over_field},
                         {"basis_laws", c.basis_laws},
                         {"split_reference", c.split_reference},
                         {"skeleton_quotient_torsion", c.skeleton_quotient_torsion},
                         {"snf_vs_minor_oracle", c.snf_vs_minor_oracle},
                         {"minor_checks_run", c.minor_checks_run}};
    if (!rep.detail.empty()) doc["detail"] = rep.detail;

    bool pass = rep.match;
    if (req.oracle) {
        const int cases = 25;
        const std::vector<OracleReport> suite = differential_run(seed, cases);
        int matches = 0;
        json failures = json::array();
        for (const OracleReport& r : suite) {
            if (r.match) {
                ++matches;
            } else {
                failures.push_back(json{{"case", r.case_id}, {"detail", r.detail}});
                if (pass) text += "suite failure (case " + std::to_string(r.case_id) + "): " +
                                  r.detail + "\n";
            }
        }
        text += "differential suite: " + std::to_string(matches) + "/" + std::to_string(cases) +
                " cases match (seed " + std::to_string(seed) + ")\n";
        doc["suite"] = json{{"seed", seed},
                            {"cases", cases},
                            {"matches", matches},
                            {"failures", std::move(failures)}};
        pass = pass && matches == cases;
    }
    text += std::string("result: ") + (pass ? "PASS" : "FAIL") + "\n";
    doc["pass"] = pass;
    check_passed = pass;

    if (!req.json) return text;
    return doc.dump(2) + "\n";
}

} // namespace wshom
