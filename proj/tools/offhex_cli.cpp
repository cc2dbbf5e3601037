// Command-line front end; talks to the library only through offhex.h.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "offhex/offhex.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0, kExitUsage = 2, kExitResource = 3, kExitMismatch = 4;

struct Output {
    bool json = false;
    bool csv = false;
};

struct SpecPtr {
    offhex_spec* p = nullptr;
    ~SpecPtr() { offhex_spec_free(p); }
};

std::string take(char* s)
{
    std::string out = s ? s : "";
    offhex_string_free(s);
    return out;
}

int exit_for(offhex_status s)
{
    if (s == OFFHEX_OK) return kExitOk;
    if (s == OFFHEX_E_RESOURCE_LIMIT) return kExitResource;
    if (s == OFFHEX_E_INTERNAL) return 1;
    return kExitUsage;
}

int report_error(offhex_status s)
{
    std::cerr << "error: " << offhex_status_name(s) << ": " << offhex_last_error() << "\n";
    return exit_for(s);
}

double ms_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

void print_csv(const std::vector<std::string>& fields)
{
    for (std::size_t i = 0; i < fields.size(); i++) std::cout << (i ? "," : "") << csv_field(fields[i]);
    std::cout << "\n";
}

// ---- count ----

int cmd_count(const std::string& text, const std::string& method, const offhex_limits& lim, const std::string& svg,
              const Output& out)
{
    SpecPtr spec;
    if (auto st = offhex_spec_parse(text.c_str(), &spec.p)) return report_error(st);
    std::string canon;
    {
        char* s = nullptr;
        if (auto st = offhex_spec_to_string(spec.p, &s)) return report_error(st);
        canon = take(s);
    }
    if (!svg.empty()) {
        char* s = nullptr;
        if (auto st = offhex_region_svg(spec.p, &s)) return report_error(st);
        std::ofstream(svg) << take(s);
    }
    struct Rec {
        std::string method, count, status;
        double ms;
    };
    std::vector<Rec> recs;
    auto run = [&](const std::string& m) -> offhex_status {
        auto t0 = std::chrono::steady_clock::now();
        char* c = nullptr;
        offhex_status st = m == "formula" ? offhex_count_formula(spec.p, &c) : offhex_count_enumerate(spec.p, &lim, &c);
        if (st == OFFHEX_OK) recs.push_back({m, take(c), "OK", ms_since(t0)});
        return st;
    };
    if (method == "formula" || method == "enumerate") {
        if (auto st = run(method)) return report_error(st);
    } else {
        if (auto st = run("formula")) return report_error(st);
        if (auto st = run("enumerate")) return report_error(st);
        std::string status = recs[0].count == recs[1].count ? "MATCH" : "MISMATCH";
        for (auto& r : recs) r.status = status;
    }
    bool mismatch = recs.back().status == "MISMATCH";
    if (out.json) {
        json arr = json::array();
        for (auto& r : recs)
            arr.push_back({{"spec", canon}, {"method", r.method}, {"count", r.count}, {"ms", r.ms}, {"status", r.status}});
        std::cout << arr.dump() << "\n";
    } else if (out.csv) {
        print_csv({"spec", "method", "count", "ms", "status"});
        for (auto& r : recs) print_csv({canon, r.method, r.count, std::to_string(r.ms), r.status});
    } else {
        for (auto& r : recs) std::cout << r.method << "\t" << r.count << "\t" << r.status << "\n";
    }
    return mismatch ? kExitMismatch : kExitOk;
}

// ---- verify / sweep ----

struct SweepState {
    const Output* out;
    const offhex_limits* lim;
    bool list_all;
    json arr = json::array();
    int base_checked = 0, base_failed = 0;
    bool resource = false;
    std::string error;
};

void on_base(const offhex_base_record* r, void* user)
{
    auto* b = static_cast<json*>(user);
    *b = {{"whole", r->whole}, {"upper", r->upper}, {"lower", r->lower}, {"upper_clp", r->upper_clp},
          {"lower_clp", r->lower_clp}, {"factors", r->factors != 0}, {"matches", r->matches != 0}};
}

void on_check(const offhex_check_record* r, void* user)
{
    auto* st = static_cast<SweepState*>(user);
    static const char* names[] = {"PASS", "FAIL", "SKIP"};
    json rec = {{"spec", r->spec}, {"status", names[r->status]}, {"formula", r->formula}, {"brute", r->brute},
                {"reason", r->reason}, {"pi_clean", r->pi_clean != 0}, {"ms", r->ms}};
    if (r->status != OFFHEX_SKIP) {
        SpecPtr spec;
        int x = 1, z = 1;
        if (offhex_spec_parse(r->spec, &spec.p) == OFFHEX_OK &&
            offhex_spec_params(spec.p, &x, nullptr, &z, nullptr, nullptr, nullptr) == OFFHEX_OK &&
            (x == 0 || z == 0)) {
            json base;
            offhex_status bs = offhex_base_case(spec.p, st->lim, on_base, &base);
            if (bs == OFFHEX_OK) {
                st->base_checked++;
                if (!base["factors"].get<bool>() || !base["matches"].get<bool>()) st->base_failed++;
                rec["base_case"] = base;
            } else {
                st->base_checked++;
                st->base_failed++;
                rec["base_case"] = {{"error", std::string(offhex_status_name(bs)) + ": " + offhex_last_error()}};
            }
        }
    }
    if (r->reason && std::string(r->reason).rfind("ResourceLimit", 0) == 0) st->resource = true;
    bool show = st->list_all || r->status == OFFHEX_FAIL ||
                (rec.contains("base_case") && !(rec["base_case"].value("factors", false) && rec["base_case"].value("matches", false)));
    if (st->out->json) {
        if (show) st->arr.push_back(rec);
    } else if (st->out->csv) {
        if (show)
            print_csv({r->spec, names[r->status], r->formula, r->brute, r->reason, r->pi_clean ? "1" : "0",
                       std::to_string(r->ms)});
    } else if (show) {
        std::cout << names[r->status] << "\t" << r->spec;
        if (r->status == OFFHEX_PASS) std::cout << "\t" << r->brute;
        if (r->status == OFFHEX_FAIL) std::cout << "\tformula=" << r->formula << " brute=" << r->brute;
        if (*r->reason) std::cout << "\t" << r->reason;
        if (rec.contains("base_case")) std::cout << "\tbase=" << rec["base_case"].dump();
        std::cout << "\n";
    }
}

int cmd_sweep(const offhex_grid& grid, const offhex_limits& lim, const Output& out, bool list_all)
{
    SweepState st{&out, &lim, list_all};
    if (out.csv) print_csv({"spec", "status", "formula", "brute", "reason", "pi_clean", "ms"});
    int pass = 0, failed = 0, skip = 0;
    auto t0 = std::chrono::steady_clock::now();
    if (auto s = offhex_sweep(&grid, &lim, on_check, &st, &pass, &failed, &skip)) return report_error(s);
    if (out.json) {
        std::cout << st.arr.dump() << "\n";
    } else if (!out.csv) {
        std::cout << "pass " << pass << " fail " << failed << " skip " << skip;
        if (st.base_checked) std::cout << " base-cases " << st.base_checked - st.base_failed << "/" << st.base_checked;
        std::cout << " (" << static_cast<long>(ms_since(t0)) << " ms)\n";
    }
    if (failed || st.base_failed) return kExitMismatch;
    if (st.resource) return kExitResource;
    return kExitOk;
}

// ---- recur ----

void on_recur(const offhex_recur_record* r, void* user)
{
    auto* j = static_cast<json*>(user);
    json terms = json::array();
    for (int k = 0; k < 6; k++) terms.push_back({{"spec", r->terms[k]}, {"count", r->counts[k]}});
    *j = {{"id", r->id}, {"terms", terms}, {"lhs", r->lhs}, {"rhs", r->rhs}, {"equal", r->equal != 0}};
}

int cmd_recur(const std::string& id, const std::string& text, bool list, const offhex_limits& lim, const Output& out)
{
    if (list) {
        json arr = json::array();
        for (size_t i = 0; i < offhex_recurrence_count(); i++) {
            if (out.json) {
                json terms = json::array();
                for (int k = 0; k < 6; k++) terms.push_back(offhex_recurrence_term(i, k));
                arr.push_back({{"id", offhex_recurrence_id(i)}, {"condition", offhex_recurrence_condition(i)},
                               {"kuo", offhex_recurrence_variant(i)}, {"terms", terms},
                               {"note", offhex_recurrence_note(i)}});
            } else {
                std::cout << offhex_recurrence_id(i) << "\t" << offhex_recurrence_condition(i) << "\tThm "
                          << offhex_recurrence_variant(i);
                if (*offhex_recurrence_note(i)) std::cout << "\t" << offhex_recurrence_note(i);
                std::cout << "\n";
            }
        }
        if (out.json) std::cout << arr.dump() << "\n";
        return kExitOk;
    }
    if (id.empty() || text.empty()) {
        std::cerr << "error: recur needs an id and a spec (or --list)\n";
        return kExitUsage;
    }
    SpecPtr spec;
    if (auto st = offhex_spec_parse(text.c_str(), &spec.p)) return report_error(st);
    json rep;
    if (auto st = offhex_recurrence_check(id.c_str(), spec.p, &lim, on_recur, &rep)) return report_error(st);
    if (out.json) {
        std::cout << rep.dump() << "\n";
    } else {
        for (int k = 0; k < 6; k++)
            std::cout << "T" << k + 1 << "\t" << rep["terms"][k]["spec"].get<std::string>() << "\t"
                      << rep["terms"][k]["count"].get<std::string>() << "\n";
        std::cout << "T1*T2 = " << rep["lhs"].get<std::string>() << "\nT3*T4 + T5*T6 = " << rep["rhs"].get<std::string>()
                  << "\nequal " << (rep["equal"].get<bool>() ? "true" : "false") << "\n";
    }
    return rep["equal"].get<bool>() ? kExitOk : kExitMismatch;
}

// ---- selftest ----

struct SelfTest {
    int failures = 0;
    void check(bool ok, const std::string& what)
    {
        std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
        if (!ok) failures++;
    }
};

// Calls f(&out) and returns the string, or "error".
template <class F>
std::string str_or(F&& f)
{
    char* s = nullptr;
    return f(&s) == OFFHEX_OK ? take(s) : std::string("error");
}

int cmd_selftest(uint64_t seed, const offhex_limits& lim)
{
    SelfTest t;
    t.check(str_or([](char** s) { return offhex_count_hexagon(2, 2, 2, s); }) == "20", "hexagon(2,2,2) has 20 tilings");
    int seq[] = {1, 1, 1};
    t.check(str_or([&](char** s) { return offhex_clp_count(seq, 3, s); }) == "2", "s(1,1,1) = 2");
    t.check(str_or([&](char** s) { return offhex_count_semihexagon(seq, 3, s); }) == "2", "S(1,1,1) has 2 tilings");

    const char* example = "E:1 x=2,y=1,z=4 a=1,2 c=3,2 b=2,1,1";
    {
        SpecPtr spec;
        offhex_spec_parse(example, &spec.p);
        std::string f = str_or([&](char** s) { return offhex_count_formula(spec.p, s); });
        std::string e = str_or([&](char** s) { return offhex_count_enumerate(spec.p, &lim, s); });
        t.check(f == e && f != "error", std::string("formula = enumeration on ") + example);
    }
    {
        SpecPtr spec;
        char* s = nullptr;
        t.check(offhex_spec_parse("E:1 x=1,y=0,z=2 a= c= b=", &spec.p) == OFFHEX_OK &&
                    offhex_count_enumerate(spec.p, &lim, &s) == OFFHEX_E_PARITY,
                "parity violation is reported");
    }
    struct R {
        const char* id;
        const char* spec;
    } recs[] = {{"E1-le", "E:1 x=2,y=2,z=2 a=1,2 c=3,2 b=3,1"}, {"K8bar-ge", "Kbar:8 x=3,y=2,z=2 a=3,2 c=2,1 b=2,2"}};
    for (auto& r : recs) {
        SpecPtr spec;
        json rep;
        bool ok = offhex_spec_parse(r.spec, &spec.p) == OFFHEX_OK &&
                  offhex_recurrence_check(r.id, spec.p, &lim, on_recur, &rep) == OFFHEX_OK && rep["equal"].get<bool>();
        t.check(ok, std::string("recurrence ") + r.id + " at " + r.spec);
    }
    int kuo_ok = 0;
    for (uint64_t i = 0; i < 20; i++) {
        int holds = 0;
        if (offhex_kuo_random(seed + i, &holds, nullptr) == OFFHEX_OK && holds) kuo_ok++;
    }
    t.check(kuo_ok == 20, "Kuo condensation on 20 random graphs (seed " + std::to_string(seed) + ")");
    std::cout << (t.failures ? "selftest FAILED" : "selftest passed") << "\n";
    return t.failures ? kExitMismatch : kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact lozenge-tiling counts for hexagons with three collinear ferns"};
    app.require_subcommand(1);

    Output out;
    uint64_t max_states = 0;
    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", out.json, "JSON output");
        sub->add_flag("--csv", out.csv, "CSV output");
        sub->add_option("--limit-states", max_states, "Oracle memo state cap (0 = default)");
    };

    std::string spec_text, method = "both", svg;
    auto* count = app.add_subcommand("count", "Count tilings of one region");
    count->add_option("spec", spec_text, "Region, e.g. \"E:1 x=2,y=1,z=4 a=1,2 c=3,2 b=2,1,1\"")->required();
    count->add_option("--method", method, "formula, enumerate or both")
        ->check(CLI::IsMember({"formula", "enumerate", "both"}));
    count->add_option("--svg", svg, "Write the region as SVG");
    add_common(count);

    offhex_grid grid;
    offhex_grid_default(&grid);
    std::string families = "all";
    auto add_grid = [&](CLI::App* sub) {
        sub->add_option("--families", families, "Comma separated families, or all");
        sub->add_option("--min-x", grid.min_x);
        sub->add_option("--max-x", grid.max_x);
        sub->add_option("--min-z", grid.min_z);
        sub->add_option("--max-z", grid.max_z);
        sub->add_option("--max-fern", grid.max_fern_entry, "Largest fern entry");
        sub->add_option("--max-fern-len", grid.max_fern_len, "Most entries per fern");
        sub->add_option("--y-extra", grid.y_extra, "y runs from its minimum to minimum + this");
        add_common(sub);
    };
    auto* verify = app.add_subcommand("verify", "Check formulas against enumeration; prints failures and a summary");
    add_grid(verify);
    auto* sweep = app.add_subcommand("sweep", "Like verify, but reports every instance");
    add_grid(sweep);

    std::string rec_id, rec_spec;
    bool rec_list = false;
    auto* recur = app.add_subcommand("recur", "Check one condensation recurrence");
    recur->add_option("id", rec_id, "Recurrence id, see --list");
    recur->add_option("spec", rec_spec, "Subject region");
    recur->add_flag("--list", rec_list, "List the recurrence table");
    add_common(recur);

    uint64_t seed = 20240611;
    auto* selftest = app.add_subcommand("selftest", "Quick end-to-end checks");
    selftest->add_option("--rng-seed", seed, "Seed for the random condensation graphs");
    selftest->add_option("--limit-states", max_states, "Oracle memo state cap (0 = default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }
    if (out.json && out.csv) {
        std::cerr << "error: --json and --csv are exclusive\n";
        return kExitUsage;
    }
    offhex_limits lim{max_states};
    if (count->parsed()) return cmd_count(spec_text, method, lim, svg, out);
    if (verify->parsed() || sweep->parsed()) {
        grid.families = families.c_str();
        return cmd_sweep(grid, lim, out, sweep->parsed());
    }
    if (recur->parsed()) return cmd_recur(rec_id, rec_spec, rec_list, lim, out);
    if (selftest->parsed()) return cmd_selftest(seed, lim);
    return kExitUsage;
}
