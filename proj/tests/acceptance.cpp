// Acceptance run: one PASS/FAIL line per criterion. Exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "offhex/errors.hpp"
#include "offhex/formulas.hpp"
#include "offhex/verification.hpp"

using namespace offhex;

namespace {

// Time limits in seconds, per criterion.
constexpr double kLimit1 = 5, kLimit2 = 30, kLimit3 = 120, kLimit4 = 900, kLimit5 = 600, kLimit6 = 300, kLimit8 = 120;
constexpr int kMinPerFamily = 10;
constexpr int kKuoGraphs = 100;
constexpr std::uint64_t kKuoSeed = 20240611;
constexpr int kMinRows = 16, kPointsPerRow = 3;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double s() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); }
};

int failures = 0;
long pi_evaluations = 0, pi_unclean = 0;

void line(int n, bool ok, double secs, double limit, const std::string& detail)
{
    bool pass = ok && secs < limit;
    if (!pass) failures++;
    std::printf("criterion %d: %s  %s  (%.1f s, limit %.0f s)\n", n, pass ? "PASS" : "FAIL", detail.c_str(), secs, limit);
    std::fflush(stdout);
}

void criterion1()
{
    Timer t;
    int ok = 0, n = 0;
    for (int a = 1; a <= 3; a++)
        for (int b = 1; b <= 3; b++)
            for (int c = 1; c <= 3; c++, n++)
                ok += count_tilings(build_hexagon(a, b, c)) == pp_box(a, b, c);
    bool ref = count_tilings(build_hexagon(2, 2, 2)) == 20;
    line(1, ok == n && ref, t.s(), kLimit1,
         "MacMahon " + std::to_string(ok) + "/" + std::to_string(n) + ", PP(2,2,2) = 20 " + (ref ? "yes" : "no"));
}

void criterion2()
{
    Timer t;
    int ok = 0, n = 0;
    std::vector<int> seq;
    std::function<void()> rec = [&] {
        n++;
        ok += clp_count(seq) == count_tilings(build_dented_semihexagon(seq));
        if (seq.size() == 5) return;
        for (int v = 0; v <= 2; v++) {
            seq.push_back(v);
            rec();
            seq.pop_back();
        }
    };
    rec();
    bool ref = clp_count({1, 1, 1}) == 2;
    line(2, ok == n && ref, t.s(), kLimit2,
         "semihexagon sequences " + std::to_string(ok) + "/" + std::to_string(n) + ", s(1,1,1) = 2 " + (ref ? "yes" : "no"));
}

void criterion3()
{
    Timer t;
    std::ostringstream d;
    bool ok = true;
    for (int f = 0; f < 7; f++) {
        int pass = 0, fail = 0, skip = 0;
        for (int x = 0; x <= 4; x++)
            for (int y = 0; y <= 4; y++)
                for (int z = 0; z <= 4; z++)
                    for (int m = 0; m <= 2; m++) {
                        SpecialFnReport r = check_special_fn(SpecialFn(f), x, y, z, m);
                        if (r.status == CheckStatus::Skip) {
                            skip++;
                            continue;
                        }
                        pi_evaluations++;
                        pi_unclean += !r.pi_clean;
                        (r.status == CheckStatus::Pass ? pass : fail)++;
                    }
        ok = ok && fail == 0 && pass > 0;
        d << special_fn_name(SpecialFn(f)) << " " << pass << "/" << pass + fail << " ";
    }
    line(3, ok, t.s(), kLimit3, d.str() + "(parity or undefined points skipped)");
}

void criterion4()
{
    Timer t;
    SweepGrid grid;  // x, z in 0..3, y in [min, min+1], ferns of <= 2 entries from {0,1,2}
    std::map<Family, int> valid;
    std::map<std::pair<Family, int>, int> per_row;
    SweepSummary sum = sweep(grid, {}, [&](const CrossCheckReport& r) {
        if (r.status == CheckStatus::Skip) return;
        pi_evaluations++;
        pi_unclean += !r.pi_clean;
        if (r.status == CheckStatus::Pass) {
            valid[r.spec.family]++;
            per_row[{r.spec.family, r.spec.position}]++;
        }
    });
    int thin = 0;
    for (const auto& row : theorem_table())
        if (per_row[{row.family, row.position}] < kMinPerFamily) thin++;
    int min_family = 1 << 30;
    for (auto [f, n] : valid) min_family = std::min(min_family, n);
    bool ok = sum.fail == 0 && valid.size() == 8 && min_family >= kMinPerFamily && thin == 0 && per_row.size() == 30;
    line(4, ok, t.s(), kLimit4,
         "30 rows: pass " + std::to_string(sum.pass) + " fail " + std::to_string(sum.fail) + " skip " +
             std::to_string(sum.skip) + ", fewest passes per family " + std::to_string(min_family));
}

// Small deterministic parameter points satisfying the row's condition.
std::vector<RegionSpec> recurrence_points(const RecurrenceSpec& rec, int want)
{
    static const std::vector<FernSeq> ferns = {{1}, {2, 1}, {1, 1}, {2}, {1, 2}, {3}, {1, 1, 1}};
    RegionSpec proto = recurrence_subject(rec, RegionSpec{});
    std::vector<RegionSpec> out;
    for (int x = 2; x <= 3 && (int)out.size() < want; x++)
        for (int z = 2; z <= 3 && (int)out.size() < want; z++) {
            if (!parity_ok(proto.family, x, z)) continue;
            for (std::size_t i = 0; i < ferns.size() && (int)out.size() < want; i++) {
                const FernSeq& a = ferns[i];
                const FernSeq& b = ferns[(i + 3 * x + z) % ferns.size()];
                const FernSeq& c = ferns[(i + 1) % ferns.size()];
                for (const auto& [aa, bb] : {std::pair{a, b}, std::pair{b, a}, std::pair{a, a}}) {
                    if (!condition_holds(rec.condition, aa.total(), bb.total())) continue;
                    RegionSpec s = proto;
                    s.x = x, s.z = z, s.a = aa, s.b = bb, s.c = c;
                    s.y = y_min(s.family, s.position, aa.total(), bb.total()) + 1 + (int)(out.size() % 2);
                    try {
                        build_region(s);
                        for (const auto& term : rec.terms) build_region(instantiate_term(term, s));
                    } catch (const Error&) {
                        continue;
                    }
                    out.push_back(s);
                    break;
                }
            }
        }
    return out;
}

void criterion5()
{
    Timer t;
    int kuo_ok = 0;
    for (int i = 0; i < kKuoGraphs; i++) {
        KuoCase k = random_kuo_case(kKuoSeed + i);
        kuo_ok += check_kuo_generic(k.graph, k.u, k.v, k.w, k.s, k.variant);
    }
    bool fig1 = check_recurrence(find_recurrence("E1-le"), parse_region_spec("E:1 x=2,y=2,z=2 a=1,2 c=3,2 b=3,1")).equal;
    bool fig2 =
        check_recurrence(find_recurrence("K8bar-ge"), parse_region_spec("Kbar:8 x=3,y=2,z=2 a=3,2 c=2,1 b=2,2")).equal;
    std::map<Family, int> rows_per_group;
    std::set<KuoVariant> variants;
    int held = 0, failed = 0, thin = 0;
    std::string failed_ids;
    for (const auto& rec : recurrence_table()) {
        auto pts = recurrence_points(rec, kPointsPerRow);
        if ((int)pts.size() < kPointsPerRow) {
            thin++;
            continue;
        }
        bool all = true;
        for (const auto& p : pts) all = all && check_recurrence(rec, p).equal;
        if (all) {
            held++;
            rows_per_group[recurrence_subject(rec, RegionSpec{}).family]++;
            variants.insert(rec.variant);
        } else {
            failed++;
            failed_ids += failed_ids.empty() ? rec.id : std::string(",") + rec.id;
        }
    }
    int min_group = rows_per_group.size() == 8 ? 1 << 30 : 0;
    for (auto [f, n] : rows_per_group) min_group = std::min(min_group, n);
    bool ok = kuo_ok == kKuoGraphs && fig1 && fig2 && held >= kMinRows && min_group >= 2 && variants.size() == 2;
    std::cout << "  recurrence rows failing at one or more points: " << (failed_ids.empty() ? "none" : failed_ids) << "\n";
    line(5, ok, t.s(), kLimit5,
         "Kuo graphs " + std::to_string(kuo_ok) + "/" + std::to_string(kKuoGraphs) + ", figure instances " +
             (fig1 && fig2 ? "hold" : "FAIL") + ", rows holding at " + std::to_string(kPointsPerRow) + " points " +
             std::to_string(held) + "/" + std::to_string(recurrence_table().size()) + " (" + std::to_string(failed) +
             " fail, " + std::to_string(thin) + " without points), fewest rows per family " + std::to_string(min_group));
}

// Which branch of the minimal-y reduction applies.
std::string reduction_case(const RegionSpec& s)
{
    PositionOffset off = position_offset(s.family, s.position);
    int a = s.a.total(), b = s.b.total(), j = off.j();
    if (off.upper() && (a >= b || !off.lower() || is_barred(s.family)))
        return a >= b ? "1a" : b - a >= j ? "1b" : "1c";
    return a <= b ? "2a" : a - b >= j ? "2b" : "2c";
}

void criterion6()
{
    Timer t;
    // y is set to its minimum for the reductions.
    const char* reduce[] = {
        "E:1 x=2,z=2 a=2,1 c=1 b=1,1",  "G:3 x=1,z=1 a=2,2 c=1,1 b=1,2", "Fbar:4 x=2,z=1 a=1,2 c=1 b=2",
        "Kbar:6 x=1,z=2 a=3 c=1 b=1,1", "E:2 x=2,z=2 a=1 c=1,1 b=2,2",   "K:8 x=1,z=2 a=1 c=2 b=1,2",
        "Gbar:3 x=1,z=1 a=1 c=1 b=2,1", "F:5 x=2,z=1 a=1 c=1 b=3,1",     "E:3 x=2,z=2 a=1,1 c=1 b=2,1",
        "K:7 x=1,z=2 a=1,1 c=1 b=2,1",  "Fbar:6 x=1,z=2 a=1 c=2 b=2",    "K:2 x=2,z=1 a=1 c=2,1 b=2,1",
        "E:5 x=2,z=2 a=1,1 c=1 b=2,1",  "F:8 x=1,z=2 a=1 c=1,1 b=1",     "K:3 x=2,z=1 a=3,1 c=1 b=1",
        "E:6 x=2,z=2 a=2,1 c=1 b=1",    "G:1 x=1,z=1 a=2 c=1 b=1",       "K:3 x=2,z=1 a=2,1 c=1 b=1,1",
        "F:2 x=1,z=2 a=2,1 c=1 b=2",    "G:8 x=2,z=2 a=2 c=1,1 b=1",     "E:4 x=2,z=2 a=1 c=1 b=1,1",
        "Ebar:4 x=2,z=2 a=3 c=1 b=1",   "G:6 x=1,z=1 a=3 c=1 b=1",       "K:1 x=2,z=1 a=2 c=1 b=1",
    };
    const char* zeros[] = {
        "E:2 x=2,y=1,z=2 a=0,2,1 c=1 b=1",  "E:2 x=2,y=1,z=2 a=1,0,2 c=1 b=1",  "K:4 x=2,y=1,z=1 a=1 c=0,1,2 b=0,1,1",
        "Gbar:5 x=2,y=2,z=2 a=0,1,0,1 c=2,0,1 b=2", "F:3 x=1,y=1,z=2 a=2 c=1 b=1,0,1,1",
    };
    int ok = 0, n = 0;
    std::map<std::string, int> cases;
    std::string bad;
    for (const char* text : reduce) {
        std::string full = text;
        full.insert(full.find("z="), "y=0,");
        RegionSpec s = parse_region_spec(full);
        s.y = y_min(s.family, s.position, s.a.total(), s.b.total());
        std::string label;
        bool good = false;
        try {
            build_region(s);
            label = reduction_case(s);
            RegionSpec r = reduce_y_minimal(s);
            bool rotated = label[0] == '2';
            good = r.family == toggled_bar(s.family) && (r.position == s.position) != rotated &&
                   h_parameter(r) < h_parameter(s) && count_tilings(build_region(s)) == count_tilings(build_region(r));
        } catch (const Error& e) {
            label = e.what();
        }
        n++;
        if (good) {
            ok++;
            cases[label]++;
        } else {
            bad += " [" + s.to_string() + ": " + label + "]";
        }
    }
    for (const char* text : zeros) {
        n++;
        RegionSpec s = parse_region_spec(text);
        RegionSpec r = normalize_zero_triangles(s);
        if (count_tilings(build_region(s)) == count_tilings(build_region(r)) && h_parameter(r) <= h_parameter(s)) ok++;
        else bad += std::string(" [") + text + "]";
    }
    bool refused = false;
    try {
        reduce_y_minimal(parse_region_spec("E:1 x=2,y=1,z=2 a=2,1 c=1 b=1,1"));
    } catch (const Error& e) {
        refused = e.kind() == ErrorKind::YNotMinimal;
    }
    if (!bad.empty()) std::cout << "  lemma instances failing:" << bad << "\n";
    std::string spread;
    for (auto [c, k] : cases) spread += " " + c + ":" + std::to_string(k);
    line(6, ok == n && cases.size() == 6 && refused, t.s(), kLimit6,
         "instances " + std::to_string(ok) + "/" + std::to_string(n) + ", reduction cases" + spread +
             ", YNotMinimal raised " + (refused ? "yes" : "no"));
}

void criterion7()
{
    line(7, pi_unclean == 0 && pi_evaluations > 0, 0, 1,
         "formula evaluations with leftover pi or a fraction: " + std::to_string(pi_unclean) + " of " +
             std::to_string(pi_evaluations));
}

void criterion8()
{
    Timer t;
    auto ferns = fern_grid(2, 2);
    int ok = 0, n = 0, skipped = 0;
    for (const auto& row : theorem_table())
        for (int k = 0; k <= 3; k++)
            for (int side = 0; side < 2; side++) {
                int x = side ? k : 0, z = side ? 0 : k;
                if ((side && k == 0) || !parity_ok(row.family, x, z)) continue;
                for (const auto& a : ferns)
                    for (const auto& b : ferns)
                        for (const auto& c : ferns) {
                            RegionSpec s{row.family, row.position, x, 0, z, a, c, b};
                            s.y = y_min(s.family, s.position, a.total(), b.total()) + 1;
                            try {
                                build_region(s);
                            } catch (const Error&) {
                                skipped++;
                                continue;
                            }
                            n++;
                            BaseCaseReport r = check_base_case(s);
                            ok += r.factors && r.matches;
                        }
            }
    line(8, ok == n && n > 0, t.s(), kLimit8,
         "x = 0 or z = 0 instances splitting into semihexagons " + std::to_string(ok) + "/" + std::to_string(n) +
             " (" + std::to_string(skipped) + " not constructible)");
}

}  // namespace

int main()
{
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    std::printf("%s\n", failures ? "ACCEPTANCE FAILED" : "ACCEPTANCE PASSED");
    return failures ? 1 : 0;
}
