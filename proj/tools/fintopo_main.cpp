// fintopo command-line front end.  Talks to the shared library strictly
// through the C API in fintopo/fintopo.h; all formatting (text and JSON)
// happens here.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fintopo/fintopo.h"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_domain = 1;
constexpr int exit_usage = 2;

struct SpaceDel { void operator()(ft_space* p) const { ft_space_free(p); } };
struct MapDel { void operator()(ft_map* p) const { ft_map_free(p); } };
struct MultiDel { void operator()(ft_multi* p) const { ft_multi_free(p); } };
struct PwlDel { void operator()(ft_pwl* p) const { ft_pwl_free(p); } };
struct QuotDel { void operator()(ft_quotient* p) const { ft_quotient_free(p); } };
struct EnumDel { void operator()(ft_enum* p) const { ft_enum_free(p); } };
struct ClassesDel { void operator()(ft_classes* p) const { ft_classes_free(p); } };
using SpacePtr = std::unique_ptr<ft_space, SpaceDel>;
using MapPtr = std::unique_ptr<ft_map, MapDel>;
using MultiPtr = std::unique_ptr<ft_multi, MultiDel>;
using PwlPtr = std::unique_ptr<ft_pwl, PwlDel>;
using QuotPtr = std::unique_ptr<ft_quotient, QuotDel>;
using EnumPtr = std::unique_ptr<ft_enum, EnumDel>;
using ClassesPtr = std::unique_ptr<ft_classes, ClassesDel>;

// Domain failure carrying the exit code; caught in main.
struct cli_error {
    int code;
    std::string message;
};

[[noreturn]] void fail(ft_status st) {
    throw cli_error{exit_domain, std::string(ft_status_name(st)) + ": " + ft_last_error()};
}

void check(ft_status st) {
    if (st != FT_OK) fail(st);
}

std::string take(char* s) {
    std::string out = s ? s : "";
    ft_string_free(s);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cli_error{exit_domain, "cannot open '" + path + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SpacePtr load_space(const std::string& path) {
    ft_space* sp = nullptr;
    check(ft_space_parse(read_file(path).c_str(), &sp));
    return SpacePtr(sp);
}

std::string set_str(const ft_space* sp, uint64_t mask) {
    return take(ft_space_set_to_string(sp, mask));
}

json set_json(const ft_space* sp, uint64_t mask) {
    json arr = json::array();
    for (int i = 0; i < ft_space_size(sp); ++i)
        if ((mask >> i) & 1u) arr.push_back(ft_space_label(sp, i));
    return arr;
}

json space_json(const ft_space* sp) {
    json pts = json::array();
    for (int i = 0; i < ft_space_size(sp); ++i) pts.push_back(ft_space_label(sp, i));
    json opens = json::array();
    for (size_t i = 0; i < ft_space_open_count(sp); ++i)
        opens.push_back(set_json(sp, ft_space_open_at(sp, i)));
    return json{{"points", pts}, {"opens", opens}};
}

const char* yn(bool b) { return b ? "yes" : "no"; }

json report_json(const ft_space* sp, const ft_space_report& r) {
    json components = json::array();
    for (int i = 0; i < r.component_count; ++i)
        components.push_back(set_json(sp, ft_space_component(sp, i)));
    json out{{"t0", (bool)r.t0},
             {"t1", (bool)r.t1},
             {"t_half", (bool)r.t_half},
             {"discrete", (bool)r.discrete},
             {"indiscrete", (bool)r.indiscrete},
             {"submaximal", (bool)r.submaximal},
             {"connected", (bool)r.connected},
             {"cots", (bool)r.cots},
             {"dim", r.dim_inductive},
             {"open_points", set_json(sp, r.open_points)},
             {"closed_points", set_json(sp, r.closed_points)},
             {"isolated_points", set_json(sp, r.isolated_points)},
             {"components", components}};
    if (r.has_height)
        out["height"] = r.height;
    else
        out["height"] = nullptr;
    return out;
}

void print_report(const ft_space* sp, const ft_space_report& r) {
    std::printf("points (%d):", ft_space_size(sp));
    for (int i = 0; i < ft_space_size(sp); ++i)
        std::printf(" %s", ft_space_label(sp, i));
    std::printf("\nopen sets (%zu):", ft_space_open_count(sp));
    for (size_t i = 0; i < ft_space_open_count(sp); ++i)
        std::printf(" %s", set_str(sp, ft_space_open_at(sp, i)).c_str());
    std::printf("\nminimal base:");
    for (size_t i = 0; i < ft_space_minbase_count(sp); ++i)
        std::printf(" %s", set_str(sp, ft_space_minbase_at(sp, i)).c_str());
    std::printf("\nT0: %s   T1: %s   T1/2: %s\n", yn(r.t0), yn(r.t1), yn(r.t_half));
    std::printf("discrete: %s   indiscrete: %s   submaximal: %s\n", yn(r.discrete),
                yn(r.indiscrete), yn(r.submaximal));
    std::printf("connected: %s   COTS: %s\n", yn(r.connected), yn(r.cots));
    std::printf("dimension: %d\n", r.dim_inductive);
    if (r.has_height)
        std::printf("height: %d\n", r.height);
    else
        std::printf("height: n/a (not T0)\n");
    std::printf("open points: %s\n", set_str(sp, r.open_points).c_str());
    std::printf("closed points: %s\n", set_str(sp, r.closed_points).c_str());
    std::printf("isolated points: %s\n", set_str(sp, r.isolated_points).c_str());
    std::printf("components (%d):", r.component_count);
    for (int i = 0; i < r.component_count; ++i)
        std::printf(" %s", set_str(sp, ft_space_component(sp, i)).c_str());
    std::printf("\n");
}

// ---- subcommands -----------------------------------------------------

int cmd_validate(const std::string& file, bool as_json) {
    SpacePtr sp = load_space(file);
    if (as_json) {
        json out{{"valid", true}, {"space", space_json(sp.get())}};
        std::printf("%s\n", out.dump(2).c_str());
    } else {
        std::printf("valid: %d points, %zu open sets\n", ft_space_size(sp.get()),
                    ft_space_open_count(sp.get()));
        std::printf("%s", take(ft_space_format_opens(sp.get())).c_str());
    }
    return exit_ok;
}

int cmd_info(const std::string& file, bool as_json) {
    SpacePtr sp = load_space(file);
    ft_space_report r;
    check(ft_space_report_get(sp.get(), &r));
    if (as_json) {
        json out{{"space", space_json(sp.get())}, {"report", report_json(sp.get(), r)}};
        std::printf("%s\n", out.dump(2).c_str());
    } else {
        print_report(sp.get(), r);
    }
    return exit_ok;
}

struct SetOp {
    const char* key;
    const char* label;
    uint64_t (*order)(const ft_space*, uint64_t);
    uint64_t (*definitional)(const ft_space*, uint64_t);
};

const SetOp set_ops[] = {
    {"cl", "closure", ft_closure, ft_closure_definitional},
    {"int", "interior", ft_interior, ft_interior_definitional},
    {"bd", "boundary", ft_boundary, ft_boundary_definitional},
    {"ext", "exterior", ft_exterior, ft_exterior_definitional},
    {"der", "derived_set", ft_derived_set, ft_derived_set_definitional},
    {"clint", "closure_of_interior", ft_closure_of_interior, nullptr},
    {"intcl", "interior_of_closure", ft_interior_of_closure, nullptr},
};

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

json class_json(const ft_set_class& c) {
    return json{{"open", (bool)c.open},
                {"closed", (bool)c.closed},
                {"clopen", (bool)c.clopen},
                {"semiopen", (bool)c.semiopen},
                {"preopen", (bool)c.preopen},
                {"gamma_open", (bool)c.gamma_open},
                {"dense", (bool)c.dense},
                {"codense", (bool)c.codense},
                {"nowhere_dense", (bool)c.nowhere_dense},
                {"dense_in_itself", (bool)c.dense_in_itself},
                {"no_isolated_points", (bool)c.no_isolated_points}};
}

int cmd_set(const std::string& file, const std::string& set_literal,
            const std::string& show, bool as_json) {
    SpacePtr sp = load_space(file);
    uint64_t a = 0;
    check(ft_space_parse_set(sp.get(), set_literal.c_str(), &a));

    std::vector<std::string> wanted = split_list(show);
    auto want = [&](const char* key, const char* label) {
        if (wanted.empty()) return true;
        for (const auto& w : wanted)
            if (w == key || w == label) return true;
        return false;
    };

    json results;
    if (!as_json) std::printf("set: %s\n", set_str(sp.get(), a).c_str());
    for (const SetOp& op : set_ops) {
        if (!want(op.key, op.label)) continue;
        const uint64_t via_order = op.order(sp.get(), a);
        if (op.definitional) {
            // a mismatch between the two routes is an internal error
            const uint64_t via_def = op.definitional(sp.get(), a);
            if (via_def != via_order)
                throw cli_error{exit_domain,
                                std::string("internal error: order and definitional "
                                            "paths disagree for ") +
                                    op.label};
        }
        if (as_json)
            results[op.label] = set_json(sp.get(), via_order);
        else
            std::printf("%s: %s\n", op.label, set_str(sp.get(), via_order).c_str());
    }
    bool classify = want("class", "classification");
    if (classify) {
        ft_set_class c;
        check(ft_classify_set(sp.get(), a, &c));
        if (as_json) {
            results["classification"] = class_json(c);
        } else {
            std::printf(
                "classification: open=%s closed=%s clopen=%s semiopen=%s preopen=%s "
                "gamma_open=%s dense=%s codense=%s nowhere_dense=%s "
                "dense_in_itself=%s no_isolated_points=%s\n",
                yn(c.open), yn(c.closed), yn(c.clopen), yn(c.semiopen), yn(c.preopen),
                yn(c.gamma_open), yn(c.dense), yn(c.codense), yn(c.nowhere_dense),
                yn(c.dense_in_itself), yn(c.no_isolated_points));
        }
    }
    if (!as_json) std::printf("(order and definitional paths agree)\n");
    if (as_json) {
        json out{{"space", space_json(sp.get())},
                 {"set", set_json(sp.get(), a)},
                 {"results", results}};
        std::printf("%s\n", out.dump(2).c_str());
    }
    return exit_ok;
}

int cmd_map(const std::string& src_file, const std::string& dst_file,
            const std::string& literal, const std::string& checks, bool as_json) {
    SpacePtr src = load_space(src_file);
    SpacePtr dst = load_space(dst_file);
    ft_map* fp = nullptr;
    check(ft_map_parse(src.get(), dst.get(), literal.c_str(), &fp));
    MapPtr f(fp);

    std::vector<std::string> wanted = split_list(checks);
    auto want = [&](const char* key) {
        if (wanted.empty()) return key != std::string("theorem");  // theorem opt-in
        for (const auto& w : wanted)
            if (w == key) return true;
        return false;
    };

    json out{{"map", literal}};
    if (want("continuous") || want("class")) {
        int minbase = 0, preimage = 0;
        check(ft_map_is_continuous_minbase(f.get(), &minbase));
        check(ft_map_is_continuous_preimage(f.get(), &preimage));
        if (minbase != preimage)
            throw cli_error{exit_domain,
                            "internal error: continuity paths disagree"};
        out["continuous"] = (bool)minbase;
        if (!as_json)
            std::printf("continuous: %s   (minimal-base and preimage paths agree)\n",
                        yn(minbase));
    }
    if (want("class")) {
        ft_map_class c;
        check(ft_map_classify(f.get(), &c));
        out["continuity"] = json{{"continuous", (bool)c.continuous},
                                 {"precontinuous", (bool)c.precontinuous},
                                 {"semicontinuous", (bool)c.semicontinuous},
                                 {"gamma_continuous", (bool)c.gamma_continuous}};
        out["openness"] = json{{"open", (bool)c.open},
                               {"preopen", (bool)c.preopen},
                               {"semiopen", (bool)c.semiopen},
                               {"gamma_open", (bool)c.gamma_open}};
        if (!as_json) {
            std::printf("continuity: precontinuous=%s semicontinuous=%s gamma=%s\n",
                        yn(c.precontinuous), yn(c.semicontinuous),
                        yn(c.gamma_continuous));
            std::printf("openness: open=%s preopen=%s semiopen=%s gamma=%s\n",
                        yn(c.open), yn(c.preopen), yn(c.semiopen), yn(c.gamma_open));
        }
    }
    if (want("open")) {
        int open = 0, closed = 0;
        check(ft_map_is_open(f.get(), &open));
        check(ft_map_is_closed(f.get(), &closed));
        out["open_map"] = (bool)open;
        out["closed_map"] = (bool)closed;
        if (!as_json)
            std::printf("open map: %s   closed map: %s\n", yn(open), yn(closed));
    }
    if (want("theorem")) {
        ft_open_map_theorem t;
        check(ft_map_open_theorem(f.get(), &t));
        out["open_map_theorem"] = json{{"hypotheses_hold", (bool)t.hypotheses_hold},
                                       {"is_open", (bool)t.is_open}};
        if (!as_json)
            std::printf("open-map theorem: hypotheses=%s open=%s\n",
                        yn(t.hypotheses_hold), yn(t.is_open));
    }
    if (as_json) std::printf("%s\n", out.dump(2).c_str());
    return exit_ok;
}

json verdict_json(const ft_space* src, const ft_space* dst,
                  const ft_multi_verdict& v) {
    json out{{"holds", (bool)v.holds}};
    if (!v.holds) {
        json witness{{"point", ft_space_label(src, v.point)},
                     {"got", set_json(dst, v.got)},
                     {"bound", set_json(dst, v.bound)}};
        if (v.via_point >= 0) witness["via_point"] = ft_space_label(src, v.via_point);
        if (v.target_point >= 0)
            witness["target_point"] = ft_space_label(dst, v.target_point);
        out["witness"] = witness;
    }
    return out;
}

void print_verdict(const char* name, const ft_space* src, const ft_space* dst,
                   const ft_multi_verdict& v) {
    if (v.holds) {
        std::printf("%s: yes\n", name);
        return;
    }
    std::printf("%s: no   witness x=%s", name, ft_space_label(src, v.point));
    if (v.via_point >= 0) std::printf(" x'=%s", ft_space_label(src, v.via_point));
    if (v.target_point >= 0) std::printf(" y=%s", ft_space_label(dst, v.target_point));
    std::printf("  got %s not within %s\n", set_str(dst, v.got).c_str(),
                set_str(dst, v.bound).c_str());
}

int cmd_multi(const std::string& src_file, const std::string& dst_file,
              const std::string& literal, const std::string& checks, bool as_json) {
    SpacePtr src = load_space(src_file);
    SpacePtr dst = load_space(dst_file);
    ft_multi* mp = nullptr;
    check(ft_multi_parse(src.get(), dst.get(), literal.c_str(), &mp));
    MultiPtr f(mp);

    std::vector<std::string> wanted = split_list(checks);
    auto want = [&](const char* key) {
        if (wanted.empty()) return true;
        for (const auto& w : wanted)
            if (w == key) return true;
        return false;
    };

    json out{{"map", literal}};
    if (want("usc")) {
        ft_multi_verdict v;
        check(ft_multi_usc(f.get(), &v));
        out["usc"] = verdict_json(src.get(), dst.get(), v);
        if (!as_json) print_verdict("U.S.C", src.get(), dst.get(), v);
    }
    if (want("lsc")) {
        ft_multi_verdict v;
        check(ft_multi_lsc(f.get(), &v));
        out["lsc"] = verdict_json(src.get(), dst.get(), v);
        if (!as_json) print_verdict("L.S.C", src.get(), dst.get(), v);
    }
    if (as_json) std::printf("%s\n", out.dump(2).c_str());
    return exit_ok;
}

int cmd_quotient(const std::string& cuts, const std::string& pwl,
                 const std::string& eval_at, bool as_json) {
    ft_quotient* qp = nullptr;
    check(ft_quotient_parse(cuts.c_str(), &qp));
    QuotPtr q(qp);
    ft_pwl* fp = nullptr;
    check(ft_pwl_parse(pwl.c_str(), &fp));
    PwlPtr f(fp);
    const ft_space* sp = ft_quotient_space(q.get());

    if (!eval_at.empty()) {
        char* val = nullptr;
        check(ft_pwl_eval(f.get(), eval_at.c_str(), &val));
        const std::string v = take(val);
        if (as_json) {
            json out{{"x", eval_at}, {"f_of_x", v}};
            std::printf("%s\n", out.dump(2).c_str());
        } else {
            std::printf("f(%s) = %s\n", eval_at.c_str(), v.c_str());
        }
        return exit_ok;
    }

    ft_multi* gp = nullptr;
    check(ft_quotient_induced(q.get(), f.get(), &gp));
    MultiPtr g(gp);

    ft_multi_verdict usc, lsc;
    check(ft_multi_usc(g.get(), &usc));
    check(ft_multi_lsc(g.get(), &lsc));
    const bool single = ft_multi_is_single_valued(g.get()) != 0;
    int continuous = -1;
    if (single) {
        ft_map* as_map = nullptr;
        check(ft_multi_as_map(g.get(), &as_map));
        MapPtr h(as_map);
        check(ft_map_is_continuous(h.get(), &continuous));
    }

    if (as_json) {
        json gj;
        for (int y = 0; y < ft_space_size(sp); ++y)
            gj[ft_space_label(sp, y)] = set_json(sp, ft_multi_apply(g.get(), y));
        json out{{"cuts", cuts},
                 {"pwl", take(ft_pwl_to_string(f.get()))},
                 {"space", space_json(sp)},
                 {"g", gj},
                 {"usc", verdict_json(sp, sp, usc)},
                 {"lsc", verdict_json(sp, sp, lsc)},
                 {"single_valued", single},
                 {"continuous", continuous < 0 ? json(nullptr) : json((bool)continuous)}};
        std::printf("%s\n", out.dump(2).c_str());
    } else {
        std::printf("cuts: %s\npwl: %s\n", cuts.c_str(),
                    take(ft_pwl_to_string(f.get())).c_str());
        std::printf("%s", take(ft_space_format_minbase(sp)).c_str());
        for (int y = 0; y < ft_space_size(sp); ++y)
            std::printf("g(%s) = %s\n", ft_space_label(sp, y),
                        set_str(sp, ft_multi_apply(g.get(), y)).c_str());
        print_verdict("U.S.C", sp, sp, usc);
        print_verdict("L.S.C", sp, sp, lsc);
        std::printf("single-valued: %s\n", yn(single));
        if (single) std::printf("continuous as point function: %s\n", yn(continuous));
    }
    return exit_ok;
}

bool report_filter(const ft_space* sp, const ft_space_report& r,
                   const std::vector<std::string>& filters) {
    for (const auto& f : filters) {
        bool negate = !f.empty() && f[0] == '!';
        const std::string key = negate ? f.substr(1) : f;
        const auto eq = key.find('=');
        bool value;
        if (eq != std::string::npos) {
            const std::string name = key.substr(0, eq);
            const int num = std::atoi(key.substr(eq + 1).c_str());
            if (name == "dim")
                value = r.dim_inductive == num;
            else if (name == "height")
                value = r.has_height && r.height == num;
            else if (name == "n")
                value = ft_space_size(sp) == num;
            else
                throw cli_error{exit_usage, "unknown filter '" + name + "'"};
        } else if (key == "t0") value = r.t0;
        else if (key == "t1") value = r.t1;
        else if (key == "t_half") value = r.t_half;
        else if (key == "discrete") value = r.discrete;
        else if (key == "indiscrete") value = r.indiscrete;
        else if (key == "submaximal") value = r.submaximal;
        else if (key == "connected") value = r.connected;
        else if (key == "cots") value = r.cots;
        else throw cli_error{exit_usage, "unknown filter '" + key + "'"};
        if (value == negate) return false;
    }
    return true;
}

int cmd_enumerate(int n, bool t0_only, bool classes, const std::string& filter,
                  bool force_large, bool as_json) {
    const std::vector<std::string> filters = split_list(filter);
    if (classes) {
        ft_classes* cp = nullptr;
        check(ft_enum_classes(n, t0_only ? 1 : 0, force_large ? 1 : 0, &cp));
        ClassesPtr cls(cp);
        json arr = json::array();
        uint64_t total = 0;
        size_t shown = 0;
        for (size_t i = 0; i < ft_classes_count(cls.get()); ++i) {
            const ft_space* rep = ft_classes_representative(cls.get(), i);
            ft_space_report r;
            check(ft_space_report_get(rep, &r));
            if (!report_filter(rep, r, filters)) continue;
            ++shown;
            total += ft_classes_labeled_count(cls.get(), i);
            if (as_json) {
                arr.push_back(json{
                    {"canonical", take(ft_classes_canonical_hex(cls.get(), i))},
                    {"labeled_count", ft_classes_labeled_count(cls.get(), i)},
                    {"space", space_json(rep)},
                    {"report", report_json(rep, r)}});
            } else {
                std::printf("# class %zu  labeled_count %llu  canonical %s\n", shown,
                            (unsigned long long)ft_classes_labeled_count(cls.get(), i),
                            take(ft_classes_canonical_hex(cls.get(), i)).c_str());
                std::printf("%s\n", take(ft_space_format_opens(rep)).c_str());
            }
        }
        if (as_json) {
            json out{{"n", n}, {"t0", t0_only}, {"classes", arr}};
            std::printf("%s\n", out.dump(2).c_str());
        } else {
            std::printf("# classes: %zu  labeled total: %llu\n", shown,
                        (unsigned long long)total);
        }
        return exit_ok;
    }

    ft_enum* ep = nullptr;
    check(ft_enum_create(n, t0_only ? 1 : 0, force_large ? 1 : 0, &ep));
    EnumPtr en(ep);
    json arr = json::array();
    unsigned long long count = 0;
    ft_space* raw = nullptr;
    while (ft_enum_next(en.get(), &raw)) {
        SpacePtr sp(raw);
        ft_space_report r;
        check(ft_space_report_get(sp.get(), &r));
        if (!report_filter(sp.get(), r, filters)) continue;
        ++count;
        if (as_json) {
            arr.push_back(space_json(sp.get()));
        } else {
            std::printf("# topology %llu\n%s\n", count,
                        take(ft_space_format_opens(sp.get())).c_str());
        }
    }
    if (as_json) {
        json out{{"n", n}, {"t0", t0_only}, {"count", count}, {"spaces", arr}};
        std::printf("%s\n", out.dump(2).c_str());
    } else {
        std::printf("# total: %llu\n", count);
    }
    return exit_ok;
}

int cmd_hasse(const std::string& file) {
    SpacePtr sp = load_space(file);
    std::printf("%s", take(ft_space_hasse_dot(sp.get())).c_str());
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fintopo — computing with finite topological spaces"};
    app.require_subcommand(1);

    std::function<int()> run;

    std::string file, set_literal, show, map_literal, checks;
    std::string src_file, dst_file, cuts, pwl, eval_at, filter;
    bool as_json = false, t0_only = false, classes = false, force_large = false;
    int n = 3;

    auto* validate = app.add_subcommand("validate", "parse and validate a space file");
    validate->add_option("file", file)->required();
    validate->add_flag("--json", as_json);
    validate->callback([&] { run = [&] { return cmd_validate(file, as_json); }; });

    auto* info = app.add_subcommand("info", "whole-space classification report");
    info->add_option("file", file)->required();
    info->add_flag("--json", as_json);
    info->callback([&] { run = [&] { return cmd_info(file, as_json); }; });

    auto* set = app.add_subcommand("set", "set operators and classification");
    set->add_option("file", file)->required();
    set->add_option("--set", set_literal, "subset literal, e.g. \"{y z}\"")->required();
    set->add_option("--show", show,
                    "comma list: cl,int,bd,ext,der,clint,intcl,class (default all)");
    set->add_flag("--json", as_json);
    set->callback([&] { run = [&] { return cmd_set(file, set_literal, show, as_json); }; });

    auto* map = app.add_subcommand("map", "point-function checks");
    map->add_option("src", src_file)->required();
    map->add_option("dst", dst_file)->required();
    map->add_option("--map", map_literal, "e.g. \"x:x y:z z:y\"")->required();
    map->add_option("--check", checks,
                    "comma list: continuous,class,open,theorem (default all but theorem)");
    map->add_flag("--json", as_json);
    map->callback([&] {
        run = [&] { return cmd_map(src_file, dst_file, map_literal, checks, as_json); };
    });

    auto* multi = app.add_subcommand("multi", "multifunction U.S.C/L.S.C checks");
    multi->add_option("src", src_file)->required();
    multi->add_option("dst", dst_file)->required();
    multi->add_option("--map", map_literal, "e.g. \"a:{a b} b:{a}\"")->required();
    multi->add_option("--check", checks, "comma list: usc,lsc (default both)");
    multi->add_flag("--json", as_json);
    multi->callback([&] {
        run = [&] { return cmd_multi(src_file, dst_file, map_literal, checks, as_json); };
    });

    auto* quotient =
        app.add_subcommand("quotient", "interval quotient onto a finite COTS");
    quotient->add_option("--cuts", cuts, "e.g. \"0,1/2,1\"")->required();
    quotient->add_option("--pwl", pwl, "breakpoint:value pairs, e.g. \"0:3/4 1/4:1/4 1:1/2\"")
        ->required();
    quotient->add_option("--eval", eval_at, "just evaluate f at a rational");
    quotient->add_flag("--json", as_json);
    quotient->callback([&] { run = [&] { return cmd_quotient(cuts, pwl, eval_at, as_json); }; });

    auto* enumerate = app.add_subcommand("enumerate", "all topologies on n points");
    enumerate->add_option("--n", n, "number of points (1..5)")->required();
    enumerate->add_flag("--t0", t0_only, "only T0 topologies");
    enumerate->add_flag("--classes", classes, "group up to homeomorphism");
    enumerate->add_option("--filter", filter,
                          "comma list, e.g. dim=1,submaximal,!connected");
    enumerate->add_flag("--force-large", force_large, "allow n = 6");
    enumerate->add_flag("--json", as_json);
    enumerate->callback([&] {
        run = [&] { return cmd_enumerate(n, t0_only, classes, filter, force_large, as_json); };
    });

    auto* hasse = app.add_subcommand("hasse", "DOT digraph of the covering relation");
    hasse->add_option("file", file)->required();
    hasse->callback([&] { run = [&] { return cmd_hasse(file); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        return run();
    } catch (const cli_error& e) {
        std::fprintf(stderr, "error: %s\n", e.message.c_str());
        return e.code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return exit_domain;
    }
}
