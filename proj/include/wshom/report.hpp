#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wshom/bistructure.hpp"
#include "wshom/homology.hpp"
#include "wshom/oracle.hpp"

namespace wshom {

// Canonical rendering of module invariants: "R^1 (+) R/(pi^1) (+) R/(pi^4)",
// or "0" for the zero module. Torsion exponents always carry the caret.
std::string format_invariants(const ModuleInvariants& inv);
std::string homology_line(int n, const ModuleInvariants& inv);

// Chain vector in degree n as a signed sum of labeled simplices.
std::string chain_to_string(const WeightedComplex& x, int n, const SparseVec& v);

struct ReportRequest {
    std::optional<int> dim;                  // absent = every degree
    bool json = false;                       // machine-readable mirror
    std::optional<std::uint64_t> order_seed; // shuffled split order per degree
    bool oracle = false;                     // check verb: add the random differential suite
};

std::string report_homology(const WeightedComplex& x, const ReportRequest& req);
std::string report_basis(const WeightedComplex& x, const ReportRequest& req);
std::string report_pairing(const WeightedComplex& x, const ReportRequest& req);
std::string report_quotient(const WeightedComplex& x, const WeightAssignment& sub,
                            const ReportRequest& req);
std::string report_theta(const WeightedComplex& x, const ReportRequest& req);
std::string report_bistruct(const BiStructure& b, Field f, const ReportRequest& req);

// Verification suite on one complex; check_passed reports the verdict so
// the caller can pick the exit status.
std::string report_check(const WeightedComplex& x, const ReportRequest& req, bool& check_passed);

} // namespace wshom
