#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "offhex/lattice.hpp"
#include "offhex/regions.hpp"

using namespace offhex;

TEST_CASE("neighbours have the opposite orientation and are mutual")
{
    for (int r = -2; r <= 2; r++)
        for (int c = -2; c <= 2; c++)
            for (TriCell t : {up_cell(r, c), down_cell(r, c)})
                for (TriCell n : neighbors(t)) {
                    CHECK(n.orient != t.orient);
                    auto back = neighbors(n);
                    CHECK(std::find(back.begin(), back.end(), t) != back.end());
                }
}

TEST_CASE("up cell neighbours")
{
    auto n = neighbors(up_cell(0, 0));
    std::sort(n.begin(), n.end());
    CHECK(n[0] == down_cell(-1, 0));
    CHECK(n[1] == down_cell(0, -1));
    CHECK(n[2] == down_cell(0, 0));
}

TEST_CASE("hexagons are balanced with the expected area")
{
    for (int a = 0; a <= 3; a++)
        for (int b = 0; b <= 3; b++)
            for (int c = 0; c <= 3; c++) {
                TriRegion h = build_hexagon(a, b, c);
                Balance bal = balance(h);
                CHECK(bal.balanced());
                CHECK(h.size() == std::size_t(2 * (a * b + b * c + c * a)));
            }
}

TEST_CASE("dual graph of a lozenge is a single edge")
{
    TriRegion r({up_cell(0, 0), down_cell(0, 0)});
    BipartiteGraph g = dual_graph(r);
    CHECK(g.left == 1);
    CHECK(g.right == 1);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("region set operations")
{
    TriRegion h = build_hexagon(1, 1, 1);
    CHECK(h.size() == 6);
    TriRegion moved = h.translated(3, -2);
    CHECK(moved.size() == 6);
    CHECK(moved.translated(-3, 2) == h);
    TriRegion less = h.minus({h.cells().front(), up_cell(50, 50)});
    CHECK(less.size() == 5);
    CHECK_FALSE(less.contains(h.cells().front()));
}

TEST_CASE("svg output mentions every cell")
{
    std::string svg = region_svg(build_hexagon(1, 1, 1));
    CHECK(svg.find("<svg") != std::string::npos);
    std::size_t polys = 0;
    for (std::size_t p = svg.find("<polygon"); p != std::string::npos; p = svg.find("<polygon", p + 1)) polys++;
    CHECK(polys == 6);
}
