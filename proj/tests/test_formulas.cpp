#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "offhex/errors.hpp"
#include "offhex/formulas.hpp"

using namespace offhex;

TEST_CASE("hyperfactorials")
{
    CHECK(hyperfactorial(0L).to_count() == 1);
    CHECK(hyperfactorial(1L).to_count() == 1);
    CHECK(hyperfactorial(4L).to_count() == 12);
    CHECK(hyperfactorial(5L).to_count() == 288);
    HyperValue h = hyperfactorial(HalfInt::half(3));
    CHECK(h.pi_half_exp != 0);
    CHECK_FALSE(h.is_count());
    // Half-integer parts cancel in a ratio of matching shape.
    HyperValue r = hyperfactorial(HalfInt::half(5)) / hyperfactorial(HalfInt::half(3));
    CHECK(r.pi_half_exp == hyperfactorial(HalfInt::half(1)).pi_half_exp);
}

TEST_CASE("MacMahon box formula")
{
    CHECK(pp_box(0, 3, 4) == 1);
    CHECK(pp_box(1, 1, 1) == 2);
    CHECK(pp_box(2, 2, 2) == 20);
    CHECK(pp_box(3, 3, 3) == 980);
    for (int a = 0; a <= 4; a++)
        for (int b = 0; b <= 4; b++)
            for (int c = 0; c <= 4; c++) {
                CHECK(pp_box(a, b, c) == pp_box(b, a, c));
                CHECK(pp_box(a, b, c) == pp_box(c, b, a));
            }
}

TEST_CASE("semihexagon counts")
{
    CHECK(clp_count({}) == 1);
    CHECK(clp_count({1, 1, 1}) == 2);
    CHECK(clp_count({0, 2}) == 1);
    for (int a = 0; a <= 3; a++)
        for (int b = 0; b <= 3; b++) CHECK(clp_count({a, b}) == count_tilings(build_dented_semihexagon({a, b})));
}

TEST_CASE("special functions at reference points")
{
    CHECK(p1(2, 2, 2, 2) == 24);
    CHECK(p2(1, 1, 1, 0) == 9);
    CHECK(q2(1, 1, 1, 1) == 22);
    CHECK(phi(2, 2, 2, 0).to_count() == 20);
    CHECK(phi(3, 3, 3, 0).to_count() == 980);
}

TEST_CASE("theorem values are counts on supported rows")
{
    for (const auto& row : theorem_table()) {
        RegionSpec s{row.family, row.position, 2, 0, 2, {1}, {1}, {1}};
        if (!parity_ok(s.family, s.x, s.z)) s.x = 1;
        s.y = y_min(s.family, s.position, 1, 1) + 1;
        HyperValue v = theorem_value(s);
        CHECK_MESSAGE(v.is_count(), s.to_string());
    }
}

TEST_CASE("expression evaluator")
{
    RegionSpec s = parse_region_spec("E:1 x=3,y=2,z=1 a=2,1 c=1 b=1");
    CHECK(eval_expr("x+y+z", s).as_integer() == 6);
    CHECK(eval_expr("h", s).as_integer() == 2);
    CHECK(eval_expr("M", s).as_integer() == 3);
    CHECK(eval_expr("mn", s).as_integer() == 1);
    CHECK(eval_expr("oa", s).as_integer() == 2);
    CHECK(eval_expr("ea", s).as_integer() == 1);
}
