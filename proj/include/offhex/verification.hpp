#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "offhex/counting.hpp"
#include "offhex/formulas.hpp"
#include "offhex/regions.hpp"

namespace offhex {

// ---- Kuo condensation on arbitrary bipartite graphs ----

enum class KuoVariant { Thm51, Thm52 };

struct KuoVertex {
    bool left = true;  // colour class: left = V1
    int index = 0;
};

// u, v, w, s must lie on a common face in this cyclic order (not checked).
// Thm51: u, w in V1 and v, s in V2;  M(G)M(G-uvws) = M(G-uv)M(G-ws) + M(G-us)M(G-vw).
// Thm52: u, v in V1 and w, s in V2;  M(G-us)M(G-vw) = M(G)M(G-uvws) + M(G-uw)M(G-vs).
struct KuoReport {
    BigCount full, all4, p1, p2, q1, q2;  // M(G), M(G-uvws), then the two product pairs
    bool holds = false;
};

KuoReport kuo_identity(const BipartiteGraph& g, KuoVertex u, KuoVertex v, KuoVertex w, KuoVertex s,
                       KuoVariant variant, const CountLimits& lim = {});
bool check_kuo_generic(const BipartiteGraph& g, KuoVertex u, KuoVertex v, KuoVertex w, KuoVertex s,
                       KuoVariant variant, const CountLimits& lim = {});

// Grid graph rows x cols with some inner edges dropped; V1 = cells with even i+j.
struct KuoCase {
    BipartiteGraph graph;
    KuoVertex u, v, w, s;
    KuoVariant variant;
    std::string description;
};

KuoCase random_kuo_case(std::uint64_t seed);

// ---- recurrence table ----

enum class Condition { ALtB, ALeB, AEqB, AGeB, AGtB };
const char* condition_name(Condition c);
bool condition_holds(Condition c, int a, int b);

// Six terms of T1*T2 = T3*T4 + T5*T6. Each term reads
//   FAMILY POSITION [dx, dy, dz] (fern; fern; fern)
// e.g. "K1[x,y-1,z-1](b+;c~;a)"; family codes E F G K and Eb Fb Gb Kb,
// position 0 is the central region. Fern suffixes: + adds a 1 at the end,
// ~ is the bar transform, <> the arrow transform; a 0 prefix prepends a zero.
struct RecurrenceSpec {
    const char* id;
    Condition condition;
    KuoVariant variant;
    std::array<const char*, 6> terms;
    const char* note;  // empty unless the printed form was amended
};

const std::vector<RecurrenceSpec>& recurrence_table();
const RecurrenceSpec& find_recurrence(const std::string& id);  // throws UnknownId

// The region the recurrence is about (family and position from its id).
RegionSpec recurrence_subject(const RecurrenceSpec& rec, const RegionSpec& base);
RegionSpec instantiate_term(const std::string& term, const RegionSpec& base);

struct RecurrenceReport {
    std::string id;
    std::array<RegionSpec, 6> specs;
    std::array<BigCount, 6> counts;
    BigCount lhs, rhs;
    bool equal = false;
};

// base is the subject region; its family and position must match the id.
RecurrenceReport check_recurrence(const RecurrenceSpec& rec, const RegionSpec& base, const CountLimits& lim = {});

// ---- formula against oracle ----

enum class CheckStatus { Pass, Fail, Skip };
const char* check_status_name(CheckStatus s);

struct CrossCheckReport {
    RegionSpec spec;
    CheckStatus status = CheckStatus::Skip;
    std::string formula;  // decimal, empty when not evaluated
    std::string brute;
    std::string reason;   // skip reason or failure detail
    bool pi_clean = true; // formula value had no leftover pi and was integral
    double ms = 0;
};

CrossCheckReport cross_check(const RegionSpec& spec, const CountLimits& lim = {});

struct SweepGrid {
    std::vector<std::pair<Family, int>> rows;  // empty = every theorem row
    int max_x = 3, max_z = 3;
    int min_x = 0, min_z = 0;
    int max_fern_entry = 2;
    int max_fern_len = 2;
    int y_extra = 1;  // y from its minimum to minimum + y_extra
};

struct SweepSummary {
    std::vector<CrossCheckReport> reports;
    int pass = 0, fail = 0, skip = 0;
};

// All ferns with at most max_len entries from 0..max_entry, up to padding.
std::vector<FernSeq> fern_grid(int max_entry, int max_len);

SweepSummary sweep(const SweepGrid& grid, const CountLimits& lim = {},
                   const std::function<void(const CrossCheckReport&)>& on_report = {});

// ---- special functions against cored hexagons ----

// The hexagon with a triangular hole whose tilings the function counts.
TriRegion special_fn_region(SpecialFn f, int x, int y, int z, int m);

struct SpecialFnReport {
    SpecialFn fn = SpecialFn::Phi;
    int x = 0, y = 0, z = 0, m = 0;
    CheckStatus status = CheckStatus::Skip;
    std::string formula, brute, reason;
    bool pi_clean = true;
};

SpecialFnReport check_special_fn(SpecialFn f, int x, int y, int z, int m, const CountLimits& lim = {});

// ---- base cases ----

// For x = 0 or z = 0 the region splits along the fern line into two dented
// semihexagons (after forced lozenges); counts are compared to clp_count.
struct BaseCaseReport {
    RegionSpec spec;
    BigCount whole, upper, lower;
    std::vector<int> upper_seq, lower_seq;
    BigCount upper_clp, lower_clp;
    bool factors = false;   // whole == upper * lower
    bool matches = false;   // both parts equal their semihexagon counts
};

BaseCaseReport check_base_case(const RegionSpec& spec, const CountLimits& lim = {});

}  // namespace offhex
