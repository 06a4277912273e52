#include <cstdint>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include <wshom.h>

namespace {

struct CommonOpts {
    std::string input;
    int dim = -1;
    std::string field = "q";
    bool json = false;
    std::uint64_t order_seed = 0;
    bool has_order = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_order) {
    cmd->add_option("input", o.input, "complex document (JSON)")->required();
    cmd->add_option("--dim", o.dim, "restrict to one degree (default: all)");
    cmd->add_option("--field", o.field, "coefficient field: q or fp:<prime>")
        ->default_str("q");
    cmd->add_flag("--json", o.json, "machine-readable output");
    if (with_order)
        cmd->add_option("--order", o.order_seed, "seed for a shuffled simplex processing order")
            ->each([&o](const std::string&) { o.has_order = true; });
}

unsigned flags_of(const CommonOpts& o) { return o.json ? WSHOM_FORMAT_JSON : 0u; }

// Exit 1 for anything the engine rejected (bad documents, bad degrees,
// bad field specs); the message goes to stderr.
int report_failure() {
    std::fprintf(stderr, "error: %s\n", wshom_last_error());
    return 1;
}

int emit(char* text) {
    std::fputs(text, stdout);
    wshom_string_free(text);
    return 0;
}

struct ComplexHandle {
    wshom_complex* ptr = nullptr;
    ~ComplexHandle() { wshom_complex_free(ptr); }
};

int load(const CommonOpts& o, ComplexHandle& h) {
    if (wshom_complex_from_file(o.input.c_str(), o.field.c_str(), &h.ptr) != WSHOM_OK)
        return report_failure();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"homology of weighted simplicial complexes over F[[pi]]"};
    app.set_version_flag("--version", std::string(wshom_version()));
    app.require_subcommand(1);

    CommonOpts hom_o, basis_o, pair_o, quot_o, theta_o, check_o;
    std::string sub_path;
    int sub_const = 0;
    std::string bs_s, bs_t, bs_field = "q";
    bool bs_json = false;
    bool check_oracle = false;

    CLI::App* hom = app.add_subcommand("homology", "module invariants per degree");
    add_common(hom, hom_o, true);

    CLI::App* basis = app.add_subcommand("basis", "distinguished cycles of the kernel");
    add_common(basis, basis_o, true);

    CLI::App* pair = app.add_subcommand("pairing", "torsion pairing tables");
    add_common(pair, pair_o, true);

    CLI::App* quot = app.add_subcommand("quotient", "homology of the quotient by theta");
    add_common(quot, quot_o, false);
    quot->add_option("--sub", sub_path, "document carrying the sub-weights (same simplices)");
    quot->add_option("--sub-const", sub_const,
                     "constant sub-weight exponent (default 0; ignored with --sub)");

    CLI::App* theta = app.add_subcommand("theta", "injectivity of the maps induced by theta");
    add_common(theta, theta_o, false);

    CLI::App* bs = app.add_subcommand("bistruct", "loop nerve of a bi-structure");
    bs->add_option("--s", bs_s, "first structure, dot-bracket")->required();
    bs->add_option("--t", bs_t, "second structure, dot-bracket")->required();
    bs->add_option("--field", bs_field, "coefficient field: q or fp:<prime>")->default_str("q");
    bs->add_flag("--json", bs_json, "machine-readable output");

    CLI::App* chk = app.add_subcommand("check", "verification suite on a complex");
    add_common(chk, check_o, true);
    chk->add_flag("--oracle", check_oracle, "also run the random differential suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // help exits clean, usage errors exit 2
    }

    char* text = nullptr;

    if (hom->parsed()) {
        ComplexHandle h;
        if (int rc = load(hom_o, h)) return rc;
        const std::uint64_t seed = hom_o.order_seed;
        if (wshom_report_homology(h.ptr, hom_o.dim, flags_of(hom_o),
                                  hom_o.has_order ? &seed : nullptr, &text) != WSHOM_OK)
            return report_failure();
        return emit(text);
    }
    if (basis->parsed()) {
        ComplexHandle h;
        if (int rc = load(basis_o, h)) return rc;
        const std::uint64_t seed = basis_o.order_seed;
        if (wshom_report_basis(h.ptr, basis_o.dim, flags_of(basis_o),
                               basis_o.has_order ? &seed : nullptr, &text) != WSHOM_OK)
            return report_failure();
        return emit(text);
    }
    if (pair->parsed()) {
        ComplexHandle h;
        if (int rc = load(pair_o, h)) return rc;
        const std::uint64_t seed = pair_o.order_seed;
        if (wshom_report_pairing(h.ptr, pair_o.dim, flags_of(pair_o),
                                 pair_o.has_order ? &seed : nullptr, &text) != WSHOM_OK)
            return report_failure();
        return emit(text);
    }
    if (quot->parsed()) {
        ComplexHandle h, sub;
        if (int rc = load(quot_o, h)) return rc;
        if (!sub_path.empty() &&
            wshom_complex_from_file(sub_path.c_str(), quot_o.field.c_str(), &sub.ptr) != WSHOM_OK)
            return report_failure();
        if (wshom_report_quotient(h.ptr, sub.ptr, sub_const, quot_o.dim, flags_of(quot_o),
                                  &text) != WSHOM_OK)
            return report_failure();
        return emit(text);
    }
    if (theta->parsed()) {
        ComplexHandle h;
        if (int rc = load(theta_o, h)) return rc;
        if (wshom_report_theta(h.ptr, theta_o.dim, flags_of(theta_o), &text) != WSHOM_OK)
            return report_failure();
        return emit(text);
    }
    if (bs->parsed()) {
        if (wshom_report_bistruct(bs_s.c_str(), bs_t.c_str(), bs_field.c_str(),
                                  bs_json ? WSHOM_FORMAT_JSON : 0u, &text) != WSHOM_OK)
            return report_failure();
        return emit(text);
    }
    if (chk->parsed()) {
        ComplexHandle h;
        if (int rc = load(check_o, h)) return rc;
        unsigned flags = flags_of(check_o);
        if (check_oracle) flags |= WSHOM_WITH_ORACLE;
        const std::uint64_t seed = check_o.order_seed;
        int passed = 0;
        if (wshom_report_check(h.ptr, flags, check_o.has_order ? &seed : nullptr, &passed,
                               &text) != WSHOM_OK)
            return report_failure();
        emit(text);
        return passed ? 0 : 1;
    }
    return 2;
}
