#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "offhex/offhex.h"

namespace {

std::string take(char* s)
{
    std::string out = s ? s : "";
    offhex_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("parse, print and count")
{
    offhex_spec* s = nullptr;
    REQUIRE(offhex_spec_parse("E:1 x=2,y=2,z=2 a=1,2 c=3,2 b=3,1", &s) == OFFHEX_OK);
    char* text = nullptr;
    REQUIRE(offhex_spec_to_string(s, &text) == OFFHEX_OK);
    CHECK(take(text) == "E:1 x=2,y=2,z=2 a=1,2 c=3,2 b=3,1");
    int x, y, z, a, b, c;
    REQUIRE(offhex_spec_params(s, &x, &y, &z, &a, &b, &c) == OFFHEX_OK);
    CHECK(x == 2);
    CHECK(a == 3);
    CHECK(c == 5);
    char *e = nullptr, *f = nullptr;
    REQUIRE(offhex_count_enumerate(s, nullptr, &e) == OFFHEX_OK);
    REQUIRE(offhex_count_formula(s, &f) == OFFHEX_OK);
    CHECK(take(e) == take(f));
    int* cells = nullptr;
    size_t n = 0;
    REQUIRE(offhex_region_cells(s, &cells, &n) == OFFHEX_OK);
    CHECK(n > 0);
    long ups = 0;
    for (size_t i = 0; i < n; i++) ups += cells[3 * i + 2] == 0;
    CHECK(2 * ups == (long)n);
    offhex_cells_free(cells);
    offhex_spec_free(s);
}

TEST_CASE("error codes")
{
    offhex_spec* s = nullptr;
    CHECK(offhex_spec_parse("nonsense", &s) == OFFHEX_E_PARSE);
    CHECK(s == nullptr);
    CHECK(std::string(offhex_last_error()).size() > 0);
    CHECK(std::string(offhex_status_name(OFFHEX_E_PARSE)) == "Parse");
    CHECK(offhex_spec_parse(nullptr, &s) == OFFHEX_E_INVALID_ARGUMENT);
    CHECK(offhex_spec_parse("E:1 x=1,y=1,z=1 a= c= b=", nullptr) == OFFHEX_E_INVALID_ARGUMENT);

    REQUIRE(offhex_spec_parse("E:1 x=1,y=1,z=2 a=1 c=1 b=1", &s) == OFFHEX_OK);
    char* out = nullptr;
    CHECK(offhex_count_enumerate(s, nullptr, &out) == OFFHEX_E_PARITY);
    offhex_spec_free(s);

    REQUIRE(offhex_spec_parse("E:1 x=2,y=1,z=2 a=2,1 c=1 b=1,1", &s) == OFFHEX_OK);
    offhex_spec* r = nullptr;
    CHECK(offhex_reduce_y_minimal(s, &r) == OFFHEX_E_Y_NOT_MINIMAL);
    offhex_spec_free(s);

    REQUIRE(offhex_spec_parse("E:1 x=3,y=3,z=3 a=1 c=1 b=1", &s) == OFFHEX_OK);
    offhex_limits lim{2};
    CHECK(offhex_count_enumerate(s, &lim, &out) == OFFHEX_E_RESOURCE_LIMIT);
    offhex_spec_free(s);

    CHECK(offhex_recurrence_check("nope", nullptr, nullptr, nullptr, nullptr) == OFFHEX_E_INVALID_ARGUMENT);
}

TEST_CASE("plain counters")
{
    char* out = nullptr;
    REQUIRE(offhex_count_hexagon(2, 2, 2, &out) == OFFHEX_OK);
    CHECK(take(out) == "20");
    REQUIRE(offhex_pp_box(3, 3, 3, &out) == OFFHEX_OK);
    CHECK(take(out) == "980");
    int seq[] = {1, 1, 1};
    REQUIRE(offhex_clp_count(seq, 3, &out) == OFFHEX_OK);
    std::string clp = take(out);
    REQUIRE(offhex_count_semihexagon(seq, 3, &out) == OFFHEX_OK);
    CHECK(take(out) == clp);
    CHECK(offhex_count_hexagon(-1, 2, 2, &out) != OFFHEX_OK);
}

TEST_CASE("recurrence accessors")
{
    size_t n = offhex_recurrence_count();
    CHECK(n == 66);
    CHECK(offhex_recurrence_id(n) == nullptr);
    for (size_t i = 0; i < n; i++) {
        CHECK(offhex_recurrence_id(i) != nullptr);
        std::string v = offhex_recurrence_variant(i);
        CHECK((v == "5.1" || v == "5.2"));
    }
    offhex_spec* s = nullptr;
    REQUIRE(offhex_spec_parse("Kbar:8 x=3,y=2,z=2 a=3,2 c=2,1 b=2,2", &s) == OFFHEX_OK);
    int equal = -1;
    auto cb = [](const offhex_recur_record* r, void* user) { *static_cast<int*>(user) = r->equal; };
    REQUIRE(offhex_recurrence_check("K8bar-ge", s, nullptr, cb, &equal) == OFFHEX_OK);
    CHECK(equal == 1);
    CHECK(offhex_recurrence_check("Q1-lt", s, nullptr, cb, &equal) == OFFHEX_E_UNKNOWN_ID);
    offhex_spec_free(s);
}

TEST_CASE("cross check and Kuo through the C interface")
{
    offhex_spec* s = nullptr;
    REQUIRE(offhex_spec_parse("F:3 x=1,y=0,z=2 a= c=1 b=", &s) == OFFHEX_OK);
    int status = -1;
    auto cb = [](const offhex_check_record* r, void* user) { *static_cast<int*>(user) = r->status; };
    REQUIRE(offhex_cross_check(s, nullptr, cb, &status) == OFFHEX_OK);
    CHECK(status == OFFHEX_PASS);
    offhex_spec_free(s);

    int holds = 0;
    char* desc = nullptr;
    REQUIRE(offhex_kuo_random(5, &holds, &desc) == OFFHEX_OK);
    CHECK(holds == 1);
    offhex_string_free(desc);

    offhex_grid g;
    offhex_grid_default(&g);
    g.families = "E";
    g.max_x = g.max_z = 1;
    g.max_fern_entry = g.max_fern_len = 1;
    int pass = 0, fail = 0, skip = 0;
    REQUIRE(offhex_sweep(&g, nullptr, nullptr, nullptr, &pass, &fail, &skip) == OFFHEX_OK);
    CHECK(fail == 0);
    CHECK(pass > 0);
    g.families = "Q";
    CHECK(offhex_sweep(&g, nullptr, nullptr, nullptr, &pass, &fail, &skip) == OFFHEX_E_PARSE);
}
