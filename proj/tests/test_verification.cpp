#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "offhex/errors.hpp"
#include "offhex/verification.hpp"

using namespace offhex;

namespace {

// Cycle on 2n vertices, left i joined to right i and right i-1.
BipartiteGraph cycle(int n)
{
    BipartiteGraph g;
    g.left = g.right = n;
    g.adj.resize(n);
    for (int i = 0; i < n; i++) g.adj[i] = {i, (i + n - 1) % n};
    return g;
}

}  // namespace

TEST_CASE("Kuo identity on a hexagonal face")
{
    // Around the 6-cycle: L0 R0 L1 R1 L2 R2.
    BipartiteGraph g = cycle(3);
    KuoVertex L0{true, 0}, R0{false, 0}, L1{true, 1}, R1{false, 1};
    KuoReport r = kuo_identity(g, L0, R0, L1, R1, KuoVariant::Thm51);
    CHECK(r.full == 2);
    CHECK(r.holds);
    CHECK(check_kuo_generic(g, L0, L1, R1, KuoVertex{false, 2}, KuoVariant::Thm52));
}

TEST_CASE("Kuo identity needs the right colour pattern")
{
    BipartiteGraph g = cycle(3);
    KuoVertex L0{true, 0}, L1{true, 1}, L2{true, 2}, R0{false, 0};
    try {
        kuo_identity(g, L0, L1, L2, R0, KuoVariant::Thm51);
        FAIL("expected ColorPatternViolation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ColorPatternViolation);
    }
}

TEST_CASE("random Kuo cases hold and are reproducible")
{
    for (std::uint64_t seed = 1; seed <= 20; seed++) {
        KuoCase k = random_kuo_case(seed);
        CHECK(random_kuo_case(seed).description == k.description);
        CHECK_MESSAGE(check_kuo_generic(k.graph, k.u, k.v, k.w, k.s, k.variant), k.description);
    }
}

TEST_CASE("recurrences at their reference instances")
{
    RecurrenceReport e = check_recurrence(find_recurrence("E1-le"), parse_region_spec("E:1 x=2,y=2,z=2 a=1,2 c=3,2 b=3,1"));
    CHECK(e.equal);
    CHECK(e.lhs == e.rhs);
    RecurrenceReport k =
        check_recurrence(find_recurrence("K8bar-ge"), parse_region_spec("Kbar:8 x=3,y=2,z=2 a=3,2 c=2,1 b=2,2"));
    CHECK(k.equal);
}

TEST_CASE("recurrence misuse is reported")
{
    try {
        find_recurrence("Z9-lt");
        FAIL("expected UnknownId");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownId);
    }
    try {
        check_recurrence(find_recurrence("E1-le"), parse_region_spec("E:1 x=2,y=2,z=2 a=3,2 c=1 b=1"));
        FAIL("expected ConditionMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ConditionMismatch);
    }
}

TEST_CASE("recurrence table shape")
{
    CHECK(recurrence_table().size() == 66);
    for (const auto& rec : recurrence_table())
        for (const char* t : rec.terms) CHECK(std::string(t).find('[') != std::string::npos);
}

TEST_CASE("formula against enumeration")
{
    for (const char* text : {"E:1 x=2,y=2,z=2 a=1,2 c=3,2 b=3,1", "F:3 x=1,y=0,z=2 a= c=1 b=",
                             "Gbar:5 x=2,y=2,z=2 a=1,1 c=1,1 b=1,1"}) {
        CrossCheckReport r = cross_check(parse_region_spec(text));
        CHECK_MESSAGE(r.status == CheckStatus::Pass, text, " ", r.reason);
        CHECK(r.formula == r.brute);
        CHECK(r.pi_clean);
    }
}

TEST_CASE("sweeps")
{
    SweepGrid empty;
    empty.rows = {{Family::E, 1}};
    empty.min_x = 3;
    empty.max_x = 2;
    CHECK(sweep(empty).reports.empty());

    SweepGrid small;
    small.rows = {{Family::K, 2}};
    small.max_x = small.max_z = 1;
    small.max_fern_entry = small.max_fern_len = 1;
    SweepSummary s = sweep(small);
    CHECK(s.fail == 0);
    CHECK(s.pass > 0);
    CHECK(s.pass + s.fail + s.skip == (int)s.reports.size());
}

TEST_CASE("fern grid")
{
    CHECK(fern_grid(0, 0).size() == 1);
    CHECK(fern_grid(2, 1).size() == 4);
    CHECK(fern_grid(2, 2).size() == 10);
}

TEST_CASE("special functions count their cored hexagons")
{
    for (int f = 0; f < 7; f++) {
        int pass = 0;
        for (int x = 0; x <= 3; x++)
            for (int m = 0; m <= 2; m++) {
                SpecialFnReport r = check_special_fn(SpecialFn(f), x, 2, 2, m);
                CHECK(r.status != CheckStatus::Fail);
                pass += r.status == CheckStatus::Pass;
            }
        CHECK_MESSAGE(pass > 0, special_fn_name(SpecialFn(f)));
    }
}

TEST_CASE("base cases split into semihexagons")
{
    BaseCaseReport r = check_base_case(parse_region_spec("E:1 x=0,y=2,z=2 a=1 c=1 b=1"));
    CHECK(r.factors);
    CHECK(r.matches);
    CHECK(r.whole == r.upper * r.lower);
}
