#include "offhex/offhex.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

#include "offhex/errors.hpp"
#include "offhex/formulas.hpp"
#include "offhex/verification.hpp"

struct offhex_spec {
    offhex::RegionSpec spec;
};

namespace {

using namespace offhex;

thread_local std::string g_last_error;

offhex_status status_of(ErrorKind k)
{
    switch (k) {
    case ErrorKind::Parse: return OFFHEX_E_PARSE;
    case ErrorKind::ParityViolation: return OFFHEX_E_PARITY;
    case ErrorKind::YBelowMinimum: return OFFHEX_E_Y_BELOW_MINIMUM;
    case ErrorKind::FernOverflow: return OFFHEX_E_FERN_OVERFLOW;
    case ErrorKind::PositionUnsupported: return OFFHEX_E_POSITION_UNSUPPORTED;
    case ErrorKind::YNotMinimal: return OFFHEX_E_Y_NOT_MINIMAL;
    case ErrorKind::NegativeArgument: return OFFHEX_E_NEGATIVE_ARGUMENT;
    case ErrorKind::NonIntegral: return OFFHEX_E_NON_INTEGRAL;
    case ErrorKind::NoTheoremRow: return OFFHEX_E_NO_THEOREM_ROW;
    case ErrorKind::ResourceLimit: return OFFHEX_E_RESOURCE_LIMIT;
    case ErrorKind::ColorPatternViolation: return OFFHEX_E_COLOR_PATTERN;
    case ErrorKind::ConditionMismatch: return OFFHEX_E_CONDITION_MISMATCH;
    case ErrorKind::UnknownId: return OFFHEX_E_UNKNOWN_ID;
    }
    return OFFHEX_E_INTERNAL;
}

offhex_status fail(offhex_status s, const std::string& msg)
{
    g_last_error = msg;
    return s;
}

// Runs f, mapping exceptions to status codes.
template <class F>
offhex_status guarded(F&& f)
{
    g_last_error.clear();
    try {
        return f();
    } catch (const Error& e) {
        return fail(status_of(e.kind()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(OFFHEX_E_RESOURCE_LIMIT, "out of memory");
    } catch (const std::exception& e) {
        return fail(OFFHEX_E_INTERNAL, e.what());
    }
}

char* dup(const std::string& s)
{
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

CountLimits limits(const offhex_limits* lim)
{
    CountLimits l;
    if (lim && lim->max_states) l.max_states = static_cast<std::size_t>(lim->max_states);
    return l;
}

offhex_status need(bool ok, const char* what)
{
    return ok ? OFFHEX_OK : fail(OFFHEX_E_INVALID_ARGUMENT, std::string("null argument: ") + what);
}

std::vector<int> seq_of(const int* seq, size_t n)
{
    std::vector<int> v(seq, seq + n);
    for (int e : v)
        if (e < 0) throw Error(ErrorKind::Parse, "negative entry in sequence");
    return v;
}

void emit_check(const CrossCheckReport& r, offhex_check_cb cb, void* user)
{
    if (!cb) return;
    std::string spec = r.spec.to_string();
    offhex_check_record rec{spec.c_str(),
                            static_cast<offhex_check_status>(r.status),
                            r.formula.c_str(),
                            r.brute.c_str(),
                            r.reason.c_str(),
                            r.pi_clean ? 1 : 0,
                            r.ms};
    cb(&rec, user);
}

}  // namespace

extern "C" {

const char* offhex_status_name(offhex_status s)
{
    switch (s) {
    case OFFHEX_OK: return "Ok";
    case OFFHEX_E_PARSE: return "Parse";
    case OFFHEX_E_PARITY: return "ParityViolation";
    case OFFHEX_E_Y_BELOW_MINIMUM: return "YBelowMinimum";
    case OFFHEX_E_FERN_OVERFLOW: return "FernOverflow";
    case OFFHEX_E_POSITION_UNSUPPORTED: return "PositionUnsupported";
    case OFFHEX_E_Y_NOT_MINIMAL: return "YNotMinimal";
    case OFFHEX_E_NEGATIVE_ARGUMENT: return "NegativeArgument";
    case OFFHEX_E_NON_INTEGRAL: return "NonIntegral";
    case OFFHEX_E_NO_THEOREM_ROW: return "NoTheoremRow";
    case OFFHEX_E_RESOURCE_LIMIT: return "ResourceLimit";
    case OFFHEX_E_COLOR_PATTERN: return "ColorPatternViolation";
    case OFFHEX_E_CONDITION_MISMATCH: return "ConditionMismatch";
    case OFFHEX_E_UNKNOWN_ID: return "UnknownId";
    case OFFHEX_E_INVALID_ARGUMENT: return "InvalidArgument";
    case OFFHEX_E_INTERNAL: return "Internal";
    }
    return "?";
}

const char* offhex_last_error(void) { return g_last_error.c_str(); }

void offhex_string_free(char* s) { std::free(s); }

offhex_status offhex_spec_parse(const char* text, offhex_spec** out)
{
    return guarded([&] {
        if (auto st = need(text && out, "text/out")) return st;
        *out = new offhex_spec{parse_region_spec(text)};
        return OFFHEX_OK;
    });
}

void offhex_spec_free(offhex_spec* s) { delete s; }

offhex_status offhex_spec_to_string(const offhex_spec* s, char** out)
{
    return guarded([&] {
        if (auto st = need(s && out, "spec/out")) return st;
        *out = dup(s->spec.to_string());
        return OFFHEX_OK;
    });
}

offhex_status offhex_spec_params(const offhex_spec* s, int* x, int* y, int* z, int* a, int* b, int* c)
{
    return guarded([&] {
        if (auto st = need(s, "spec")) return st;
        if (x) *x = s->spec.x;
        if (y) *y = s->spec.y;
        if (z) *z = s->spec.z;
        if (a) *a = s->spec.a.total();
        if (b) *b = s->spec.b.total();
        if (c) *c = s->spec.c.total();
        return OFFHEX_OK;
    });
}

offhex_status offhex_region_cells(const offhex_spec* s, int** cells, size_t* count)
{
    return guarded([&] {
        if (auto st = need(s && cells && count, "spec/cells/count")) return st;
        TriRegion r = build_region(s->spec);
        int* p = static_cast<int*>(std::malloc(sizeof(int) * 3 * (r.size() ? r.size() : 1)));
        if (!p) throw std::bad_alloc();
        std::size_t i = 0;
        for (const auto& t : r.cells()) {
            p[i++] = t.row;
            p[i++] = t.col;
            p[i++] = t.orient == Orient::Up ? 0 : 1;
        }
        *cells = p;
        *count = r.size();
        return OFFHEX_OK;
    });
}

void offhex_cells_free(int* cells) { std::free(cells); }

offhex_status offhex_region_svg(const offhex_spec* s, char** svg)
{
    return guarded([&] {
        if (auto st = need(s && svg, "spec/svg")) return st;
        *svg = dup(region_svg(build_region(s->spec)));
        return OFFHEX_OK;
    });
}

offhex_status offhex_count_enumerate(const offhex_spec* s, const offhex_limits* lim, char** count)
{
    return guarded([&] {
        if (auto st = need(s && count, "spec/count")) return st;
        *count = dup(count_tilings(build_region(s->spec), limits(lim)).get_str());
        return OFFHEX_OK;
    });
}

offhex_status offhex_count_formula(const offhex_spec* s, char** count)
{
    return guarded([&] {
        if (auto st = need(s && count, "spec/count")) return st;
        build_region(s->spec);  // geometry errors take precedence
        *count = dup(theorem_count(s->spec).get_str());
        return OFFHEX_OK;
    });
}

offhex_status offhex_normalize_zero_triangles(const offhex_spec* s, offhex_spec** out)
{
    return guarded([&] {
        if (auto st = need(s && out, "spec/out")) return st;
        *out = new offhex_spec{normalize_zero_triangles(s->spec)};
        return OFFHEX_OK;
    });
}

offhex_status offhex_reduce_y_minimal(const offhex_spec* s, offhex_spec** out)
{
    return guarded([&] {
        if (auto st = need(s && out, "spec/out")) return st;
        *out = new offhex_spec{reduce_y_minimal(s->spec)};
        return OFFHEX_OK;
    });
}

offhex_status offhex_count_hexagon(int a, int b, int c, char** count)
{
    return guarded([&] {
        if (auto st = need(count, "count")) return st;
        if (a < 0 || b < 0 || c < 0) return fail(OFFHEX_E_INVALID_ARGUMENT, "negative side");
        *count = dup(count_tilings(build_hexagon(a, b, c)).get_str());
        return OFFHEX_OK;
    });
}

offhex_status offhex_pp_box(int a, int b, int c, char** count)
{
    return guarded([&] {
        if (auto st = need(count, "count")) return st;
        *count = dup(pp_box(a, b, c).get_str());
        return OFFHEX_OK;
    });
}

offhex_status offhex_clp_count(const int* seq, size_t n, char** count)
{
    return guarded([&] {
        if (auto st = need(count && (seq || n == 0), "seq/count")) return st;
        *count = dup(clp_count(seq_of(seq, n)).get_str());
        return OFFHEX_OK;
    });
}

offhex_status offhex_count_semihexagon(const int* seq, size_t n, char** count)
{
    return guarded([&] {
        if (auto st = need(count && (seq || n == 0), "seq/count")) return st;
        *count = dup(count_tilings(build_dented_semihexagon(seq_of(seq, n))).get_str());
        return OFFHEX_OK;
    });
}

offhex_status offhex_cross_check(const offhex_spec* s, const offhex_limits* lim, offhex_check_cb cb, void* user)
{
    return guarded([&] {
        if (auto st = need(s, "spec")) return st;
        emit_check(cross_check(s->spec, limits(lim)), cb, user);
        return OFFHEX_OK;
    });
}

void offhex_grid_default(offhex_grid* g)
{
    if (!g) return;
    SweepGrid d;
    *g = offhex_grid{nullptr, d.min_x, d.max_x, d.min_z, d.max_z, d.max_fern_entry, d.max_fern_len, d.y_extra};
}

offhex_status offhex_sweep(const offhex_grid* g, const offhex_limits* lim, offhex_check_cb cb, void* user,
                           int* pass, int* fail_count, int* skip)
{
    return guarded([&] {
        if (auto st = need(g, "grid")) return st;
        if (g->min_x < 0 || g->min_z < 0 || g->max_fern_entry < 0 || g->max_fern_len < 0 || g->y_extra < 0)
            return fail(OFFHEX_E_INVALID_ARGUMENT, "grid bounds must be nonnegative");
        SweepGrid grid;
        grid.min_x = g->min_x, grid.max_x = g->max_x;
        grid.min_z = g->min_z, grid.max_z = g->max_z;
        grid.max_fern_entry = g->max_fern_entry, grid.max_fern_len = g->max_fern_len;
        grid.y_extra = g->y_extra;
        std::string fams = g->families ? g->families : "all";
        if (fams != "all" && !fams.empty()) {
            std::stringstream ss(fams);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item.empty()) continue;
                Family f = parse_family(item);
                bool any = false;
                for (const auto& r : theorem_table())
                    if (r.family == f) {
                        grid.rows.push_back({r.family, r.position});
                        any = true;
                    }
                if (!any) throw Error(ErrorKind::Parse, "no theorem rows for family '" + item + "'");
            }
        }
        SweepSummary sum = sweep(grid, limits(lim), [&](const CrossCheckReport& r) { emit_check(r, cb, user); });
        if (pass) *pass = sum.pass;
        if (fail_count) *fail_count = sum.fail;
        if (skip) *skip = sum.skip;
        return OFFHEX_OK;
    });
}

offhex_status offhex_base_case(const offhex_spec* s, const offhex_limits* lim, offhex_base_cb cb, void* user)
{
    return guarded([&] {
        if (auto st = need(s, "spec")) return st;
        BaseCaseReport r = check_base_case(s->spec, limits(lim));
        if (cb) {
            std::string w = r.whole.get_str(), u = r.upper.get_str(), l = r.lower.get_str();
            std::string uc = r.upper_clp.get_str(), lc = r.lower_clp.get_str();
            offhex_base_record rec{w.c_str(), u.c_str(), l.c_str(), uc.c_str(), lc.c_str(), r.factors ? 1 : 0,
                                   r.matches ? 1 : 0};
            cb(&rec, user);
        }
        return OFFHEX_OK;
    });
}

size_t offhex_recurrence_count(void) { return recurrence_table().size(); }

const char* offhex_recurrence_id(size_t i)
{
    return i < recurrence_table().size() ? recurrence_table()[i].id : nullptr;
}

const char* offhex_recurrence_condition(size_t i)
{
    return i < recurrence_table().size() ? condition_name(recurrence_table()[i].condition) : nullptr;
}

const char* offhex_recurrence_variant(size_t i)
{
    if (i >= recurrence_table().size()) return nullptr;
    return recurrence_table()[i].variant == KuoVariant::Thm51 ? "5.1" : "5.2";
}

const char* offhex_recurrence_term(size_t i, int k)
{
    if (i >= recurrence_table().size() || k < 0 || k >= 6) return nullptr;
    return recurrence_table()[i].terms[k];
}

const char* offhex_recurrence_note(size_t i)
{
    return i < recurrence_table().size() ? recurrence_table()[i].note : nullptr;
}

offhex_status offhex_recurrence_check(const char* id, const offhex_spec* s, const offhex_limits* lim,
                                      offhex_recur_cb cb, void* user)
{
    return guarded([&] {
        if (auto st = need(id && s, "id/spec")) return st;
        RecurrenceReport r = check_recurrence(find_recurrence(id), s->spec, limits(lim));
        if (cb) {
            std::string terms[6], counts[6];
            offhex_recur_record rec{};
            for (int k = 0; k < 6; k++) {
                terms[k] = r.specs[k].to_string();
                counts[k] = r.counts[k].get_str();
                rec.terms[k] = terms[k].c_str();
                rec.counts[k] = counts[k].c_str();
            }
            std::string lhs = r.lhs.get_str(), rhs = r.rhs.get_str();
            rec.id = r.id.c_str();
            rec.lhs = lhs.c_str();
            rec.rhs = rhs.c_str();
            rec.equal = r.equal ? 1 : 0;
            cb(&rec, user);
        }
        return OFFHEX_OK;
    });
}

offhex_status offhex_kuo_random(uint64_t seed, int* holds, char** description)
{
    return guarded([&] {
        if (auto st = need(holds, "holds")) return st;
        KuoCase k = random_kuo_case(seed);
        *holds = check_kuo_generic(k.graph, k.u, k.v, k.w, k.s, k.variant) ? 1 : 0;
        if (description) *description = dup(k.description);
        return OFFHEX_OK;
    });
}

}  // extern "C"
