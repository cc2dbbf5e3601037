#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "offhex/counting.hpp"
#include "offhex/errors.hpp"
#include "offhex/regions.hpp"
#include "offhex/verification.hpp"

using namespace offhex;

namespace {

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::Parse;
}

BigCount count(const RegionSpec& s) { return count_tilings(build_region(s)); }

}  // namespace

TEST_CASE("fern transforms")
{
    FernSeq f{1, 2, 3};
    CHECK(f.size() == 4);
    CHECK(f.total() == 6);
    CHECK(f.odd_sum() == 4);
    CHECK(f.even_sum() == 2);
    CHECK(fern_bar(fern_bar(f)) == f);
    CHECK(fern_bar(f).total() == f.total());
    CHECK(fern_plus_one_last(f).total() == f.total() + 1);
    CHECK(fern_plus_one_last(FernSeq{}).entries() == std::vector<int>{0, 1});
    CHECK(fern_arrow(f).total() == f.total());
    CHECK(fern_prepend_zero(f).entries().front() == 0);
    CHECK(fern_prepend_zero(f).odd_sum() == f.even_sum());
}

TEST_CASE("spec text round trip")
{
    for (const char* text : {"E:1 x=2,y=2,z=2 a=1,2 c=3,2 b=3,1", "Kbar:8 x=3,y=2,z=2 a=3,2 c=2,1 b=2,2",
                             "G:5 x=1,y=0,z=1 a= c= b="}) {
        RegionSpec s = parse_region_spec(text);
        CHECK(parse_region_spec(s.to_string()) == s);
    }
    CHECK(kind_of([] { parse_region_spec("Q:1 x=1,y=1,z=1 a= c= b="); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_region_spec("E:1 x=1,y=1"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { build_region(parse_region_spec("E:9 x=2,y=1,z=2 a=1 c=1 b=1")); }) ==
          ErrorKind::PositionUnsupported);
}

TEST_CASE("regions are balanced with quasi-perimeter bounded below")
{
    auto ferns = fern_grid(2, 2);
    int built = 0;
    for (Family f : {Family::E, Family::F, Family::G, Family::K, Family::EBar, Family::FBar, Family::GBar,
                     Family::KBar})
        for (int p : supported_positions(f))
            for (int x = 0; x <= 2; x++)
                for (int z = 0; z <= 2; z++) {
                    if (!parity_ok(f, x, z)) continue;
                    for (std::size_t i = 0; i < ferns.size(); i += 5) {
                        RegionSpec s{f, p, x, 0, z, ferns[i], ferns[(i + 2) % ferns.size()], ferns[(i + 3) % ferns.size()]};
                        s.y = y_min(f, p, s.a.total(), s.b.total());
                        TriRegion r;
                        try {
                            r = build_region(s);
                        } catch (const Error& e) {
                            CHECK(e.kind() == ErrorKind::FernOverflow);
                            continue;
                        }
                        built++;
                        CHECK(balance(r).balanced());
                        CHECK(quasi_perimeter(s) >= 2 * x + 4 * z);
                        CHECK(h_parameter(s) == quasi_perimeter(s) + x + z);
                    }
                }
    CHECK(built > 100);
}

TEST_CASE("padding a fern with a trailing zero does not change the region")
{
    RegionSpec s = parse_region_spec("F:3 x=1,y=1,z=2 a=1 c=1 b=2");
    RegionSpec t = parse_region_spec("F:3 x=1,y=1,z=2 a=1,0 c=1,0 b=2,0");
    CHECK(build_region(s) == build_region(t));
}

TEST_CASE("y below its minimum is refused")
{
    RegionSpec s = parse_region_spec("E:1 x=2,y=0,z=2 a=1 c=1 b=1");
    s.y = y_min(s.family, s.position, 1, 1) - 1;
    CHECK(kind_of([&] { build_region(s); }) == ErrorKind::YBelowMinimum);
}

TEST_CASE("parity is enforced")
{
    CHECK(kind_of([] { build_region(parse_region_spec("E:1 x=1,y=1,z=2 a=1 c=1 b=1")); }) == ErrorKind::ParityViolation);
}

TEST_CASE("zero triangle elimination keeps the count")
{
    RegionSpec merge = parse_region_spec("E:2 x=2,y=1,z=2 a=1,0,2 c=1 b=1");
    RegionSpec m = normalize_zero_triangles(merge);
    CHECK(m.a.entries() == std::vector<int>{3, 0});
    CHECK(count(m) == count(merge));

    RegionSpec lead = parse_region_spec("E:2 x=2,y=1,z=2 a=0,2,1 c=1 b=1");
    RegionSpec l = normalize_zero_triangles(lead);
    CHECK(l.a.entries().front() != 0);
    CHECK(count(l) == count(lead));

    RegionSpec clean = parse_region_spec("E:2 x=2,y=1,z=2 a=2,1 c=1 b=1");
    CHECK(normalize_zero_triangles(clean) == clean);
}

TEST_CASE("reduction at minimal y")
{
    SUBCASE("upper position, a >= b")
    {
        RegionSpec s = parse_region_spec("E:1 x=2,y=0,z=2 a=2,1 c=1 b=1,1");
        RegionSpec r = reduce_y_minimal(s);
        CHECK(r.family == Family::EBar);
        CHECK(r.position == 1);
        CHECK(h_parameter(r) < h_parameter(s));
        CHECK(count(r) == count(s));
    }
    SUBCASE("lower position, a <= b")
    {
        RegionSpec s = parse_region_spec("K:2 x=2,y=0,z=1 a=1 c=2,1 b=2,1");
        RegionSpec r = reduce_y_minimal(s);
        CHECK(r.family == Family::KBar);
        CHECK(r.position == 6);
        CHECK(count(r) == count(s));
    }
    SUBCASE("negative minimal y")
    {
        RegionSpec s = parse_region_spec("E:2 x=2,y=-2,z=2 a=1 c=1,1 b=2,2");
        RegionSpec r = reduce_y_minimal(s);
        CHECK(h_parameter(r) < h_parameter(s));
        CHECK(count(r) == count(s));
    }
    SUBCASE("not minimal")
    {
        CHECK(kind_of([] { reduce_y_minimal(parse_region_spec("E:1 x=2,y=1,z=2 a=2,1 c=1 b=1,1")); }) ==
              ErrorKind::YNotMinimal);
    }
}

TEST_CASE("reduction keeps the count across a grid")
{
    auto ferns = fern_grid(2, 2);
    int checked = 0;
    for (Family f : {Family::E, Family::K, Family::GBar, Family::FBar})
        for (int p : supported_positions(f))
            for (std::size_t i = 0; i < ferns.size(); i += 3)
                for (std::size_t k = 1; k < ferns.size(); k += 4) {
                    RegionSpec s{f, p, 1, 0, 2, ferns[i], ferns[(i + 1) % ferns.size()], ferns[k]};
                    if (!parity_ok(f, s.x, s.z)) s.x = 2;
                    s.y = y_min(f, p, s.a.total(), s.b.total());
                    RegionSpec r = reduce_y_minimal(s);
                    CHECK_MESSAGE(count(r) == count(s), s.to_string());
                    checked++;
                }
    CHECK(checked > 50);
}
