#pragma once

#include <array>
#include <string>
#include <vector>

#include "offhex/lattice.hpp"

namespace offhex {

enum class Family { E, F, G, K, EBar, FBar, GBar, KBar };

bool is_barred(Family f);
Family unbarred(Family f);
Family toggled_bar(Family f);
const char* family_name(Family f);  // "E", ..., "Ebar", ...
Family parse_family(const std::string& s);

// Triangle side-lengths along a fern, stored with even length.
class FernSeq {
public:
    FernSeq() = default;
    FernSeq(std::initializer_list<int> v) : FernSeq(std::vector<int>(v)) {}
    explicit FernSeq(std::vector<int> v);

    const std::vector<int>& entries() const { return v_; }
    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    int operator[](std::size_t i) const { return v_[i]; }

    int odd_sum() const;   // 1-based odd positions
    int even_sum() const;
    int total() const { return odd_sum() + even_sum(); }
    // Empty fern as (0,0), so that formula sequences keep their shape.
    std::vector<int> padded() const;
    std::string to_string() const;  // comma separated

    bool operator==(const FernSeq& o) const { return v_ == o.v_; }

private:
    std::vector<int> v_;
};

FernSeq fern_plus_one_last(const FernSeq& f);
FernSeq fern_bar(const FernSeq& f);
FernSeq fern_arrow(const FernSeq& f);
FernSeq fern_prepend_zero(const FernSeq& f);

struct RegionSpec {
    Family family = Family::E;
    int position = 1;
    int x = 0, y = 0, z = 0;
    FernSeq a, c, b;

    std::string to_string() const;
    bool operator==(const RegionSpec& o) const = default;
};

RegionSpec parse_region_spec(const std::string& text);

// Offset of the middle fern's root from the centre of the auxiliary hexagon,
// in quarter units horizontally and half rows vertically.
struct PositionOffset {
    int dx4 = 0;
    int dh2 = 0;
    int j() const { return dh2 < 0 ? -dh2 : dh2; }
    bool upper() const { return dh2 >= 0; }
    bool lower() const { return dh2 <= 0; }
};

bool position_supported(Family f, int position);
PositionOffset position_offset(Family f, int position);  // throws PositionUnsupported
std::vector<int> supported_positions(Family f);           // off-central only, no 0
bool parity_ok(Family f, int x, int z);

// Smallest y for which the region exists.
int y_min(Family f, int position, int a, int b);

struct RegionGeometry {
    std::array<int, 6> sides{};  // N, NE, SE, S, SW, NW
    int ell = 0;                 // row of the fern line
    int left_col = 0, right_col = 0;
    int root_col = 0;
    int gap1 = 0, gap2 = 0;      // left fern to root, middle fern to right fern
    int j = 0;
};

RegionGeometry region_geometry(const RegionSpec& s);
TriRegion build_region(const RegionSpec& s);
inline TriRegion build_central(RegionSpec s)
{
    s.position = 0;
    return build_region(s);
}

// Quasi-perimeter p and the induction parameter p + x + z.
int quasi_perimeter(const RegionSpec& s);
int h_parameter(const RegionSpec& s);

// Hexagon with sides N, NE, SE, S, SW, NW clockwise from north, west vertex at origin.
TriRegion build_hexagon(const std::array<int, 6>& sides);
TriRegion build_hexagon(int a, int b, int c);

TriRegion build_dented_semihexagon(const std::vector<int>& seq);

enum class CoreOffset { Center, Left1, Left3Half };
// Sides x, y+m, z, x+m, y, z+m with an up-pointing m-triangle removed.
TriRegion build_cored_hexagon(int x, int y, int z, int m, CoreOffset off);
// Sides x+m, y, z+m, x, y+m, z with a down-pointing m-triangle whose top left
// corner sits at the given F-type position (1, 2 or 3).
TriRegion build_down_cored_hexagon(int x, int y, int z, int m, int position);
// Triangular hole of side m whose leftmost vertex sits (dx4/4, dh2/2) away from the centre.
TriRegion build_offset_cored_hexagon(int x, int y, int z, int m, int dx4, int dh2, bool up);

// Drops leading zero triangles from the side ferns and merges across interior zeros.
RegionSpec normalize_zero_triangles(const RegionSpec& s);

// For y at its minimum: an equal-count region of the paired (bar toggled)
// family with smaller p + x + z. Throws YNotMinimal otherwise.
RegionSpec reduce_y_minimal(const RegionSpec& s);

}  // namespace offhex
