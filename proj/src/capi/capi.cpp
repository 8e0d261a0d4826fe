#include "fintopo/fintopo.h"

#include <cstring>
#include <new>
#include <string>

#include "core/cots.hpp"
#include "core/enumeration.hpp"
#include "core/format.hpp"
#include "core/interval.hpp"
#include "core/maps.hpp"
#include "core/operators.hpp"
#include "core/properties.hpp"
#include "core/space.hpp"

using namespace fintopo;

struct ft_space {
    Space s;
};
struct ft_map {
    PointFunction f;
};
struct ft_multi {
    Multifunction m;
    ft_space src_view, dst_view;
};
struct ft_pwl {
    PiecewiseLinear f;
};
struct ft_quotient {
    CotsQuotient q;
    ft_space space_view;
};
struct ft_classes {
    std::vector<enumeration::TopologyClass> classes;
    std::vector<ft_space> views;
};
struct ft_enum {
    std::vector<Preorder> preorders;
    std::vector<std::string> labels;
    bool t0_only = false;
    std::size_t next = 0;
};

namespace {

thread_local std::string g_last_error;

ft_status status_of(errc c) {
    switch (c) {
        case errc::invalid_argument: return FT_ERR_INVALID_ARGUMENT;
        case errc::parse: return FT_ERR_PARSE;
        case errc::missing_empty_or_full: return FT_ERR_MISSING_EMPTY_OR_FULL;
        case errc::not_closed_under_union: return FT_ERR_NOT_CLOSED_UNDER_UNION;
        case errc::not_closed_under_intersection:
            return FT_ERR_NOT_CLOSED_UNDER_INTERSECTION;
        case errc::not_reflexive: return FT_ERR_NOT_REFLEXIVE;
        case errc::not_transitive: return FT_ERR_NOT_TRANSITIVE;
        case errc::point_not_in_own_neighborhood:
            return FT_ERR_POINT_NOT_IN_OWN_NEIGHBORHOOD;
        case errc::inconsistent_base: return FT_ERR_INCONSISTENT_BASE;
        case errc::not_t0: return FT_ERR_NOT_T0;
        case errc::n_out_of_range: return FT_ERR_N_OUT_OF_RANGE;
        case errc::out_of_domain: return FT_ERR_OUT_OF_DOMAIN;
        case errc::target_not_one_dimensional_t0:
            return FT_ERR_TARGET_NOT_ONE_DIMENSIONAL_T0;
        case errc::empty_image: return FT_ERR_EMPTY_IMAGE;
        case errc::family_too_large: return FT_ERR_FAMILY_TOO_LARGE;
        case errc::internal: return FT_ERR_INTERNAL;
    }
    return FT_ERR_INTERNAL;
}

template <typename Fn>
ft_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return FT_OK;
    } catch (const domain_error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const parse_error& e) {
        g_last_error = e.what();
        return FT_ERR_PARSE;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return FT_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FT_ERR_INTERNAL;
    }
}

ft_status require(bool ok, const char* msg) {
    if (ok) return FT_OK;
    g_last_error = msg;
    return FT_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::vector<std::string> label_vector(int n, const char* const* labels) {
    std::vector<std::string> out;
    if (!labels) return out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.emplace_back(labels[i]);
    return out;
}

std::vector<PointSet> set_vector(const uint64_t* sets, std::size_t count) {
    std::vector<PointSet> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(PointSet{sets[i]});
    return out;
}

PointSet clip(const ft_space* sp, uint64_t set) {
    return PointSet{set} & sp->s.universe();
}

void fill_verdict(const maps::MultiVerdict& v, ft_multi_verdict* out) {
    out->holds = v.holds ? 1 : 0;
    out->point = v.point;
    out->via_point = v.via_point;
    out->target_point = v.target_point;
    out->got = v.got.bits;
    out->bound = v.bound.bits;
}

}  // namespace

extern "C" {

const char* ft_status_name(ft_status status) {
    switch (status) {
        case FT_OK: return "ok";
        case FT_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case FT_ERR_PARSE: return "parse_error";
        case FT_ERR_MISSING_EMPTY_OR_FULL: return "missing_empty_or_full";
        case FT_ERR_NOT_CLOSED_UNDER_UNION: return "not_closed_under_union";
        case FT_ERR_NOT_CLOSED_UNDER_INTERSECTION: return "not_closed_under_intersection";
        case FT_ERR_NOT_REFLEXIVE: return "not_reflexive";
        case FT_ERR_NOT_TRANSITIVE: return "not_transitive";
        case FT_ERR_POINT_NOT_IN_OWN_NEIGHBORHOOD:
            return "point_not_in_own_neighborhood";
        case FT_ERR_INCONSISTENT_BASE: return "inconsistent_base";
        case FT_ERR_NOT_T0: return "not_t0";
        case FT_ERR_N_OUT_OF_RANGE: return "n_out_of_range";
        case FT_ERR_OUT_OF_DOMAIN: return "out_of_domain";
        case FT_ERR_TARGET_NOT_ONE_DIMENSIONAL_T0:
            return "target_not_one_dimensional_t0";
        case FT_ERR_EMPTY_IMAGE: return "empty_image";
        case FT_ERR_FAMILY_TOO_LARGE: return "family_too_large";
        case FT_ERR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

const char* ft_last_error(void) { return g_last_error.c_str(); }

/* ---- space construction -------------------------------------------- */

ft_status ft_space_parse(const char* text, ft_space** out) {
    if (auto st = require(text && out, "null argument")) return st;
    return guarded([&] { *out = new ft_space{format::parse_space(text)}; });
}

ft_status ft_space_from_opens(int n, const uint64_t* opens, size_t count,
                              const char* const* labels, ft_space** out) {
    if (auto st = require(opens && out, "null argument")) return st;
    return guarded([&] {
        *out = new ft_space{
            Space::from_opens(n, set_vector(opens, count), label_vector(n, labels))};
    });
}

ft_status ft_space_from_minbase(int n, const uint64_t* min_nbhds,
                                const char* const* labels, ft_space** out) {
    if (auto st = require(min_nbhds && out && n >= 0, "null argument")) return st;
    return guarded([&] {
        *out = new ft_space{Space::from_minbase(
            n, set_vector(min_nbhds, static_cast<std::size_t>(n)),
            label_vector(n, labels))};
    });
}

ft_status ft_space_from_order(int n, const uint64_t* geq_rows,
                              const char* const* labels, ft_space** out) {
    if (auto st = require(geq_rows && out && n >= 0, "null argument")) return st;
    return guarded([&] {
        Preorder p{n, set_vector(geq_rows, static_cast<std::size_t>(n))};
        *out = new ft_space{Space::from_preorder(p, label_vector(n, labels))};
    });
}

void ft_space_free(ft_space* sp) { delete sp; }

/* ---- space inspection ----------------------------------------------- */

int ft_space_size(const ft_space* sp) { return sp ? sp->s.size() : 0; }

const char* ft_space_label(const ft_space* sp, int point) {
    if (!sp || point < 0 || point >= sp->s.size()) return "";
    return sp->s.label(point).c_str();
}

int ft_space_point(const ft_space* sp, const char* label) {
    if (!sp || !label) return -1;
    return sp->s.point(label);
}

uint64_t ft_space_universe(const ft_space* sp) {
    return sp ? sp->s.universe().bits : 0;
}

uint64_t ft_space_min_nbhd(const ft_space* sp, int point) {
    if (!sp || point < 0 || point >= sp->s.size()) return 0;
    return sp->s.min_nbhd(point).bits;
}

uint64_t ft_space_point_closure(const ft_space* sp, int point) {
    if (!sp || point < 0 || point >= sp->s.size()) return 0;
    return sp->s.point_closure(point).bits;
}

int ft_space_leq(const ft_space* sp, int x, int y) {
    if (!sp || x < 0 || y < 0 || x >= sp->s.size() || y >= sp->s.size()) return 0;
    return sp->s.leq(x, y) ? 1 : 0;
}

size_t ft_space_open_count(const ft_space* sp) {
    return sp ? sp->s.opens().size() : 0;
}

uint64_t ft_space_open_at(const ft_space* sp, size_t i) {
    if (!sp || i >= sp->s.opens().size()) return 0;
    return sp->s.opens()[i].bits;
}

int ft_space_is_open(const ft_space* sp, uint64_t set) {
    return sp && sp->s.is_open(clip(sp, set)) ? 1 : 0;
}

int ft_space_is_closed(const ft_space* sp, uint64_t set) {
    return sp && sp->s.is_closed(clip(sp, set)) ? 1 : 0;
}

size_t ft_space_minbase_count(const ft_space* sp) {
    return sp ? sp->s.minimal_base().size() : 0;
}

uint64_t ft_space_minbase_at(const ft_space* sp, size_t i) {
    if (!sp) return 0;
    const auto base = sp->s.minimal_base();
    return i < base.size() ? base[i].bits : 0;
}

ft_status ft_space_subspace(const ft_space* sp, uint64_t set, ft_space** out) {
    if (auto st = require(sp && out, "null argument")) return st;
    return guarded([&] { *out = new ft_space{sp->s.subspace(clip(sp, set))}; });
}

char* ft_space_format_opens(const ft_space* sp) {
    return sp ? dup_string(format::format_space_opens(sp->s)) : nullptr;
}

char* ft_space_format_minbase(const ft_space* sp) {
    return sp ? dup_string(format::format_space_minbase(sp->s)) : nullptr;
}

char* ft_space_hasse_dot(const ft_space* sp) {
    return sp ? dup_string(format::hasse_dot(sp->s)) : nullptr;
}

ft_status ft_space_parse_set(const ft_space* sp, const char* text, uint64_t* out) {
    if (auto st = require(sp && text && out, "null argument")) return st;
    return guarded([&] { *out = format::parse_point_set(sp->s, text).bits; });
}

char* ft_space_set_to_string(const ft_space* sp, uint64_t set) {
    return sp ? dup_string(format::set_to_string(sp->s, clip(sp, set))) : nullptr;
}

void ft_string_free(char* s) { delete[] s; }

/* ---- set operators ---------------------------------------------------- */

#define FT_SET_OP(name, fn)                                      \
    uint64_t name(const ft_space* sp, uint64_t set) {            \
        if (!sp) return 0;                                       \
        return fn(sp->s, clip(sp, set)).bits;                    \
    }

FT_SET_OP(ft_closure, ops::closure)
FT_SET_OP(ft_closure_definitional, ops::closure_def)
FT_SET_OP(ft_interior, ops::interior)
FT_SET_OP(ft_interior_definitional, ops::interior_def)
FT_SET_OP(ft_boundary, ops::boundary)
FT_SET_OP(ft_boundary_definitional, ops::boundary_def)
FT_SET_OP(ft_exterior, ops::exterior)
FT_SET_OP(ft_exterior_definitional, ops::exterior_def)
FT_SET_OP(ft_derived_set, ops::derived_set)
FT_SET_OP(ft_derived_set_definitional, ops::derived_set_def)
FT_SET_OP(ft_closure_of_interior, ops::closure_of_interior)
FT_SET_OP(ft_interior_of_closure, ops::interior_of_closure)

#undef FT_SET_OP

ft_status ft_classify_set(const ft_space* sp, uint64_t set, ft_set_class* out) {
    if (auto st = require(sp && out, "null argument")) return st;
    return guarded([&] {
        const auto c = ops::classify_set(sp->s, clip(sp, set));
        *out = ft_set_class{c.open,       c.closed,        c.clopen,
                            c.semiopen,   c.preopen,       c.gamma_open,
                            c.dense,      c.codense,       c.nowhere_dense,
                            c.dense_in_itself, c.no_isolated_points};
    });
}

/* ---- whole-space classification --------------------------------------- */

ft_status ft_space_report_get(const ft_space* sp, ft_space_report* out) {
    if (auto st = require(sp && out, "null argument")) return st;
    return guarded([&] {
        const auto r = props::report(sp->s);
        ft_space_report rep{};
        rep.t0 = r.t0;
        rep.t1 = r.t1;
        rep.t_half = r.t_half;
        rep.discrete = r.discrete;
        rep.indiscrete = r.indiscrete;
        rep.submaximal = r.submaximal;
        rep.connected = r.connected;
        rep.cots = r.cots;
        rep.dim_inductive = r.dim_inductive;
        rep.has_height = r.height.has_value();
        rep.height = r.height.value_or(0);
        rep.open_points = r.open_points.bits;
        rep.closed_points = r.closed_points.bits;
        rep.isolated_points = r.isolated_points.bits;
        rep.component_count = static_cast<int32_t>(r.components.size());
        *out = rep;
    });
}

uint64_t ft_space_component(const ft_space* sp, int index) {
    if (!sp || index < 0) return 0;
    const auto comps = props::connected_components(sp->s);
    if (static_cast<std::size_t>(index) >= comps.size()) return 0;
    return comps[static_cast<std::size_t>(index)].bits;
}

/* ---- homeomorphism and enumeration ------------------------------------ */

char* ft_space_canonical_hex(const ft_space* sp) {
    if (!sp) return nullptr;
    return dup_string(enumeration::canonical_hex(enumeration::canonical_form(sp->s)));
}

ft_status ft_homeomorphic(const ft_space* a, const ft_space* b, int* out) {
    if (auto st = require(a && b && out, "null argument")) return st;
    return guarded([&] { *out = enumeration::is_homeomorphic(a->s, b->s) ? 1 : 0; });
}

ft_status ft_count_labeled(int n, int allow_large, uint64_t* out) {
    if (auto st = require(out != nullptr, "null argument")) return st;
    return guarded([&] { *out = enumeration::count_labeled(n, allow_large != 0); });
}

ft_status ft_enum_create(int n, int t0_only, int allow_large, ft_enum** out) {
    if (auto st = require(out != nullptr, "null argument")) return st;
    return guarded([&] {
        auto e = std::make_unique<ft_enum>();
        e->t0_only = t0_only != 0;
        for (int i = 0; i < n; ++i)
            e->labels.push_back(std::string(1, static_cast<char>('a' + i)));
        enumeration::enumerate_preorders(
            n, [&](const Preorder& p) { e->preorders.push_back(p); },
            allow_large != 0);
        *out = e.release();
    });
}

int ft_enum_next(ft_enum* e, ft_space** out) {
    if (!e || !out) return 0;
    while (e->next < e->preorders.size()) {
        const Preorder& p = e->preorders[e->next++];
        if (e->t0_only && !p.is_antisymmetric()) continue;
        *out = new ft_space{Space::from_preorder(p, e->labels)};
        return 1;
    }
    return 0;
}

void ft_enum_free(ft_enum* e) { delete e; }

ft_status ft_enum_classes(int n, int t0_only, int allow_large, ft_classes** out) {
    if (auto st = require(out != nullptr, "null argument")) return st;
    return guarded([&] {
        auto c = std::make_unique<ft_classes>();
        c->classes = enumeration::enumerate_classes(n, t0_only != 0, allow_large != 0);
        c->views.reserve(c->classes.size());
        for (const auto& cls : c->classes) c->views.push_back(ft_space{cls.representative});
        *out = c.release();
    });
}

size_t ft_classes_count(const ft_classes* c) { return c ? c->classes.size() : 0; }

const ft_space* ft_classes_representative(const ft_classes* c, size_t i) {
    if (!c || i >= c->views.size()) return nullptr;
    return &c->views[i];
}

uint64_t ft_classes_labeled_count(const ft_classes* c, size_t i) {
    if (!c || i >= c->classes.size()) return 0;
    return c->classes[i].labeled_count;
}

char* ft_classes_canonical_hex(const ft_classes* c, size_t i) {
    if (!c || i >= c->classes.size()) return nullptr;
    return dup_string(enumeration::canonical_hex(c->classes[i].form));
}

void ft_classes_free(ft_classes* c) { delete c; }

/* ---- functions between spaces ------------------------------------------ */

ft_status ft_map_create(const ft_space* src, const ft_space* dst, const int* image,
                        ft_map** out) {
    if (auto st = require(src && dst && image && out, "null argument")) return st;
    return guarded([&] {
        std::vector<int> img(image, image + src->s.size());
        *out = new ft_map{PointFunction(src->s, dst->s, std::move(img))};
    });
}

ft_status ft_map_parse(const ft_space* src, const ft_space* dst, const char* text,
                       ft_map** out) {
    if (auto st = require(src && dst && text && out, "null argument")) return st;
    return guarded([&] {
        *out = new ft_map{format::parse_point_map(src->s, dst->s, text)};
    });
}

void ft_map_free(ft_map* f) { delete f; }

int ft_map_apply(const ft_map* f, int x) {
    if (!f || x < 0 || x >= f->f.source().size()) return -1;
    return f->f(x);
}

ft_status ft_map_is_continuous(const ft_map* f, int* out) {
    if (auto st = require(f && out, "null argument")) return st;
    return guarded([&] { *out = maps::is_continuous(f->f) ? 1 : 0; });
}

ft_status ft_map_is_continuous_minbase(const ft_map* f, int* out) {
    if (auto st = require(f && out, "null argument")) return st;
    return guarded([&] { *out = maps::continuous_minbase(f->f) ? 1 : 0; });
}

ft_status ft_map_is_continuous_preimage(const ft_map* f, int* out) {
    if (auto st = require(f && out, "null argument")) return st;
    return guarded([&] { *out = maps::continuous_preimage(f->f) ? 1 : 0; });
}

ft_status ft_map_is_open(const ft_map* f, int* out) {
    if (auto st = require(f && out, "null argument")) return st;
    return guarded([&] { *out = maps::is_open_map(f->f) ? 1 : 0; });
}

ft_status ft_map_is_closed(const ft_map* f, int* out) {
    if (auto st = require(f && out, "null argument")) return st;
    return guarded([&] { *out = maps::is_closed_map(f->f) ? 1 : 0; });
}

ft_status ft_map_classify(const ft_map* f, ft_map_class* out) {
    if (auto st = require(f && out, "null argument")) return st;
    return guarded([&] {
        const auto c = maps::continuity_class(f->f);
        const auto o = maps::openness_class(f->f);
        *out = ft_map_class{c.continuous, c.precontinuous, c.semicontinuous,
                            c.gamma_continuous, o.open, o.preopen, o.semiopen,
                            o.gamma_open};
    });
}

ft_status ft_map_open_theorem(const ft_map* f, ft_open_map_theorem* out) {
    if (auto st = require(f && out, "null argument")) return st;
    return guarded([&] {
        const auto r = maps::check_open_map_theorem(f->f);
        *out = ft_open_map_theorem{r.hypotheses_hold, r.is_open};
    });
}

/* ---- multifunctions ----------------------------------------------------- */

ft_status ft_multi_create(const ft_space* src, const ft_space* dst,
                          const uint64_t* image, ft_multi** out) {
    if (auto st = require(src && dst && image && out, "null argument")) return st;
    return guarded([&] {
        Multifunction m(src->s, dst->s,
                        set_vector(image, static_cast<std::size_t>(src->s.size())));
        *out = new ft_multi{std::move(m), ft_space{src->s}, ft_space{dst->s}};
    });
}

ft_status ft_multi_parse(const ft_space* src, const ft_space* dst, const char* text,
                         ft_multi** out) {
    if (auto st = require(src && dst && text && out, "null argument")) return st;
    return guarded([&] {
        Multifunction m = format::parse_multi_map(src->s, dst->s, text);
        *out = new ft_multi{std::move(m), ft_space{src->s}, ft_space{dst->s}};
    });
}

void ft_multi_free(ft_multi* f) { delete f; }

uint64_t ft_multi_apply(const ft_multi* f, int x) {
    if (!f || x < 0 || x >= f->m.source().size()) return 0;
    return f->m(x).bits;
}

const ft_space* ft_multi_source(const ft_multi* f) {
    return f ? &f->src_view : nullptr;
}

const ft_space* ft_multi_target(const ft_multi* f) {
    return f ? &f->dst_view : nullptr;
}

int ft_multi_is_single_valued(const ft_multi* f) {
    if (!f) return 0;
    for (int x = 0; x < f->m.source().size(); ++x)
        if (f->m(x).count() != 1) return 0;
    return 1;
}

ft_status ft_multi_as_map(const ft_multi* f, ft_map** out) {
    if (auto st = require(f && out, "null argument")) return st;
    return guarded([&] { *out = new ft_map{maps::as_function(f->m)}; });
}

ft_status ft_multi_usc(const ft_multi* f, ft_multi_verdict* out) {
    if (auto st = require(f && out, "null argument")) return st;
    return guarded([&] { fill_verdict(maps::is_usc(f->m), out); });
}

ft_status ft_multi_lsc(const ft_multi* f, ft_multi_verdict* out) {
    if (auto st = require(f && out, "null argument")) return st;
    return guarded([&] { fill_verdict(maps::is_lsc(f->m), out); });
}

/* ---- interval quotient --------------------------------------------------- */

ft_status ft_pwl_parse(const char* text, ft_pwl** out) {
    if (auto st = require(text && out, "null argument")) return st;
    return guarded([&] { *out = new ft_pwl{PiecewiseLinear::parse(text)}; });
}

void ft_pwl_free(ft_pwl* f) { delete f; }

ft_status ft_pwl_eval(const ft_pwl* f, const char* x, char** out) {
    if (auto st = require(f && x && out, "null argument")) return st;
    return guarded([&] {
        *out = dup_string(format_rational(f->f.evaluate(parse_rational(x))));
    });
}

char* ft_pwl_to_string(const ft_pwl* f) {
    return f ? dup_string(f->f.to_string()) : nullptr;
}

ft_status ft_quotient_parse(const char* cuts, ft_quotient** out) {
    if (auto st = require(cuts && out, "null argument")) return st;
    return guarded([&] {
        CotsQuotient q = CotsQuotient::parse(cuts);
        ft_space view{q.space()};
        *out = new ft_quotient{std::move(q), std::move(view)};
    });
}

void ft_quotient_free(ft_quotient* q) { delete q; }

const ft_space* ft_quotient_space(const ft_quotient* q) {
    return q ? &q->space_view : nullptr;
}

ft_status ft_quotient_project_point(const ft_quotient* q, const char* x, int* out) {
    if (auto st = require(q && x && out, "null argument")) return st;
    return guarded([&] {
        *out = q->q.project_point(parse_rational(x)).lowest();
    });
}

ft_status ft_quotient_induced(const ft_quotient* q, const ft_pwl* f, ft_multi** out) {
    if (auto st = require(q && f && out, "null argument")) return st;
    return guarded([&] {
        Multifunction m = q->q.induced(f->f);
        *out = new ft_multi{std::move(m), ft_space{q->q.space()}, ft_space{q->q.space()}};
    });
}

} /* extern "C" */
