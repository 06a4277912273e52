#include "wshom.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "wshom/complex_io.hpp"
#include "wshom/error.hpp"
#include "wshom/report.hpp"

struct wshom_complex {
    wshom::WeightedComplex x;
};

namespace {

thread_local std::string g_last_error;

wshom_status to_status(wshom::errc e) {
    switch (e) {
        case wshom::errc::field_mismatch: return WSHOM_ERR_FIELD_MISMATCH;
        case wshom::errc::zero_input: return WSHOM_ERR_ZERO_INPUT;
        case wshom::errc::not_a_unit: return WSHOM_ERR_NOT_A_UNIT;
        case wshom::errc::not_divisible: return WSHOM_ERR_NOT_DIVISIBLE;
        case wshom::errc::parse_error: return WSHOM_ERR_PARSE;
        case wshom::errc::validation_error: return WSHOM_ERR_VALIDATION;
        case wshom::errc::domain_error: return WSHOM_ERR_DOMAIN;
        case wshom::errc::internal_error: return WSHOM_ERR_INTERNAL;
    }
    return WSHOM_ERR_INTERNAL;
}

template <typename Fn>
wshom_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const wshom::error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return WSHOM_ERR_INTERNAL;
    }
}

wshom_status take_string(const std::string& s, char** out) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) {
        g_last_error = "out of memory";
        return WSHOM_ERR_INTERNAL;
    }
    std::memcpy(p, s.c_str(), s.size() + 1);
    *out = p;
    return WSHOM_OK;
}

wshom_status bad_argument(const char* what) {
    g_last_error = what;
    return WSHOM_ERR_BAD_ARGUMENT;
}

std::optional<wshom::Field> parse_field(const char* field) {
    if (!field) return std::nullopt;
    return wshom::Field::parse(field);
}

wshom::ReportRequest make_request(int dim, unsigned flags, const uint64_t* order_seed) {
    wshom::ReportRequest req;
    if (dim >= 0) req.dim = dim;
    req.json = (flags & WSHOM_FORMAT_JSON) != 0;
    req.oracle = (flags & WSHOM_WITH_ORACLE) != 0;
    if (order_seed) req.order_seed = *order_seed;
    return req;
}

// Sub-weights for the quotient: either the weights of a second document
// covering exactly the same simplices, or a constant exponent.
wshom::WeightAssignment sub_assignment(const wshom::WeightedComplex& x,
                                       const wshom_complex* sub, int sub_const) {
    wshom::WeightAssignment w(static_cast<size_t>(x.dim() + 1));
    if (!sub) {
        if (sub_const < 0)
            wshom::fail(wshom::errc::domain_error, "constant sub-weight must be non-negative");
        for (int d = 0; d <= x.dim(); ++d)
            w[static_cast<size_t>(d)].assign(static_cast<size_t>(x.size(d)), sub_const);
        return w;
    }
    const wshom::WeightedComplex& s = sub->x;
    if (s.total_size() != x.total_size() || s.dim() != x.dim())
        wshom::fail(wshom::errc::validation_error,
                    "sub-weight document does not cover the same complex");
    for (int d = 0; d <= x.dim(); ++d) {
        w[static_cast<size_t>(d)].resize(static_cast<size_t>(x.size(d)));
        for (int i = 0; i < x.size(d); ++i) {
            const auto at = s.find(x.simplex(d, i));
            if (!at)
                wshom::fail(wshom::errc::validation_error,
                            "sub-weight document is missing simplex " + x.label(d, i));
            w[static_cast<size_t>(d)][static_cast<size_t>(i)] = s.weight(d, *at);
        }
    }
    return w;
}

} // namespace

extern "C" {

const char* wshom_version(void) { return "0.1.0"; }

const char* wshom_last_error(void) { return g_last_error.c_str(); }

void wshom_string_free(char* s) { std::free(s); }

wshom_status wshom_complex_from_json(const char* text, const char* field, wshom_complex** out) {
    if (!text || !out) return bad_argument("null argument");
    return guarded([&] {
        auto handle = new wshom_complex{wshom::load_complex(text, parse_field(field))};
        *out = handle;
        return WSHOM_OK;
    });
}

wshom_status wshom_complex_from_file(const char* path, const char* field, wshom_complex** out) {
    if (!path || !out) return bad_argument("null argument");
    return guarded([&] {
        auto handle = new wshom_complex{wshom::load_complex_file(path, parse_field(field))};
        *out = handle;
        return WSHOM_OK;
    });
}

void wshom_complex_free(wshom_complex* x) { delete x; }

int wshom_complex_dim(const wshom_complex* x) { return x ? x->x.dim() : -1; }

int wshom_complex_size(const wshom_complex* x, int dim) {
    if (!x || dim < 0 || dim > x->x.dim()) return 0;
    return x->x.size(dim);
}

wshom_status wshom_report_homology(const wshom_complex* x, int dim, unsigned flags,
                                   const uint64_t* order_seed, char** out) {
    if (!x || !out) return bad_argument("null argument");
    return guarded([&] {
        return take_string(wshom::report_homology(x->x, make_request(dim, flags, order_seed)), out);
    });
}

wshom_status wshom_report_basis(const wshom_complex* x, int dim, unsigned flags,
                                const uint64_t* order_seed, char** out) {
    if (!x || !out) return bad_argument("null argument");
    return guarded([&] {
        return take_string(wshom::report_basis(x->x, make_request(dim, flags, order_seed)), out);
    });
}

wshom_status wshom_report_pairing(const wshom_complex* x, int dim, unsigned flags,
                                  const uint64_t* order_seed, char** out) {
    if (!x || !out) return bad_argument("null argument");
    return guarded([&] {
        return take_string(wshom::report_pairing(x->x, make_request(dim, flags, order_seed)), out);
    });
}

wshom_status wshom_report_quotient(const wshom_complex* x, const wshom_complex* sub,
                                   int sub_const, int dim, unsigned flags, char** out) {
    if (!x || !out) return bad_argument("null argument");
    return guarded([&] {
        const wshom::WeightAssignment w = sub_assignment(x->x, sub, sub_const);
        return take_string(wshom::report_quotient(x->x, w, make_request(dim, flags, nullptr)), out);
    });
}

wshom_status wshom_report_theta(const wshom_complex* x, int dim, unsigned flags, char** out) {
    if (!x || !out) return bad_argument("null argument");
    return guarded([&] {
        return take_string(wshom::report_theta(x->x, make_request(dim, flags, nullptr)), out);
    });
}

wshom_status wshom_report_bistruct(const char* s, const char* t, const char* field,
                                   unsigned flags, char** out) {
    if (!s || !t || !out) return bad_argument("null argument");
    return guarded([&] {
        const wshom::BiStructure b =
            wshom::BiStructure::make(wshom::parse_dot_bracket(s), wshom::parse_dot_bracket(t));
        const wshom::Field f = field ? wshom::Field::parse(field) : wshom::Field::rationals();
        return take_string(wshom::report_bistruct(b, f, make_request(-1, flags, nullptr)), out);
    });
}

wshom_status wshom_report_check(const wshom_complex* x, unsigned flags,
                                const uint64_t* order_seed, int* passed, char** out) {
    if (!x || !out || !passed) return bad_argument("null argument");
    return guarded([&] {
        bool ok = false;
        const std::string text =
            wshom::report_check(x->x, make_request(-1, flags, order_seed), ok);
        *passed = ok ? 1 : 0;
        return take_string(text, out);
    });
}

} // extern "C"
