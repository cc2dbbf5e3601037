#include "offhex/regions.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "offhex/errors.hpp"

namespace offhex {

// ---- families ----

bool is_barred(Family f)
{
    return f == Family::EBar || f == Family::FBar || f == Family::GBar || f == Family::KBar;
}

Family unbarred(Family f)
{
    switch (f) {
    case Family::EBar: return Family::E;
    case Family::FBar: return Family::F;
    case Family::GBar: return Family::G;
    case Family::KBar: return Family::K;
    default: return f;
    }
}

Family toggled_bar(Family f)
{
    switch (f) {
    case Family::E: return Family::EBar;
    case Family::F: return Family::FBar;
    case Family::G: return Family::GBar;
    case Family::K: return Family::KBar;
    default: return unbarred(f);
    }
}

const char* family_name(Family f)
{
    static const char* names[] = {"E", "F", "G", "K", "Ebar", "Fbar", "Gbar", "Kbar"};
    return names[static_cast<int>(f)];
}

Family parse_family(const std::string& s)
{
    std::string t;
    for (char ch : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    static const char* names[] = {"e", "f", "g", "k", "ebar", "fbar", "gbar", "kbar"};
    for (int i = 0; i < 8; i++)
        if (t == names[i]) return static_cast<Family>(i);
    throw Error(ErrorKind::Parse, "unknown family '" + s + "'");
}

// ---- ferns ----

FernSeq::FernSeq(std::vector<int> v) : v_(std::move(v))
{
    for (int e : v_)
        if (e < 0) throw Error(ErrorKind::Parse, "fern entries must be nonnegative");
    if (v_.size() % 2) v_.push_back(0);
}

int FernSeq::odd_sum() const
{
    int s = 0;
    for (std::size_t i = 0; i < v_.size(); i += 2) s += v_[i];
    return s;
}

int FernSeq::even_sum() const
{
    int s = 0;
    for (std::size_t i = 1; i < v_.size(); i += 2) s += v_[i];
    return s;
}

std::vector<int> FernSeq::padded() const
{
    if (v_.empty()) return {0, 0};
    return v_;
}

std::string FernSeq::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < v_.size(); i++) {
        if (i) out += ',';
        out += std::to_string(v_[i]);
    }
    return out;
}

FernSeq fern_plus_one_last(const FernSeq& f)
{
    auto v = f.padded();
    v.back() += 1;
    return FernSeq(std::move(v));
}

FernSeq fern_bar(const FernSeq& f)
{
    auto v = f.entries();
    std::reverse(v.begin(), v.end());
    return FernSeq(std::move(v));
}

FernSeq fern_arrow(const FernSeq& f)
{
    std::vector<int> v{0};
    v.insert(v.end(), f.entries().rbegin(), f.entries().rend());
    return FernSeq(std::move(v));
}

FernSeq fern_prepend_zero(const FernSeq& f)
{
    std::vector<int> v{0};
    v.insert(v.end(), f.entries().begin(), f.entries().end());
    return FernSeq(std::move(v));
}

// ---- spec text ----

std::string RegionSpec::to_string() const
{
    std::ostringstream o;
    o << family_name(family) << ':' << position << " x=" << x << ",y=" << y << ",z=" << z
      << " a=" << a.to_string() << " c=" << c.to_string() << " b=" << b.to_string();
    return o.str();
}

namespace {

int parse_int(const std::string& s)
{
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "bad integer '" + s + "'");
    }
    if (used != s.size()) throw Error(ErrorKind::Parse, "bad integer '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

FernSeq parse_fern(const std::string& csv)
{
    std::vector<int> v;
    if (!csv.empty())
        for (const auto& p : split(csv, ',')) v.push_back(parse_int(p));
    return FernSeq(std::move(v));
}

}  // namespace

RegionSpec parse_region_spec(const std::string& text)
{
    std::istringstream in(text);
    std::string head;
    if (!(in >> head)) throw Error(ErrorKind::Parse, "empty region spec");
    auto colon = head.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::Parse, "expected FAMILY:POSITION");
    RegionSpec s;
    s.family = parse_family(head.substr(0, colon));
    s.position = parse_int(head.substr(colon + 1));
    bool seen[3] = {false, false, false};
    std::string tok;
    while (in >> tok) {
        for (const auto& kv : split(tok, ',')) {
            // fern values are themselves comma separated, so only x/y/z are split here
            if (kv.empty()) continue;
            auto eq = kv.find('=');
            std::string key = eq == std::string::npos ? "" : kv.substr(0, eq);
            if (key == "a" || key == "b" || key == "c") {
                FernSeq f = parse_fern(tok.substr(tok.find('=') + 1));
                (key == "a" ? s.a : key == "b" ? s.b : s.c) = f;
                break;
            }
            if (key == "x" || key == "y" || key == "z") {
                int v = parse_int(kv.substr(eq + 1));
                int idx = key[0] - 'x';
                (idx == 0 ? s.x : idx == 1 ? s.y : s.z) = v;
                seen[idx] = true;
                continue;
            }
            throw Error(ErrorKind::Parse, "unexpected token '" + kv + "'");
        }
    }
    if (!seen[0] || !seen[1] || !seen[2]) throw Error(ErrorKind::Parse, "x, y and z are required");
    return s;
}

// ---- positions ----

namespace {

struct PosTable {
    int n;
    PositionOffset off[9];
};

// Index 0 is the central variant.
const PosTable kE = {7, {{0, 0}, {-4, 0}, {-2, 2}, {2, 2}, {4, 0}, {2, -2}, {-2, -2}}};
const PosTable kF = {9, {{-2, 0}, {0, -2}, {-4, -2}, {-6, 0}, {-4, 2}, {0, 2}, {4, 2}, {6, 0}, {4, -2}}};
const PosTable kG = {9, {{-1, 1}, {-3, -1}, {-5, 1}, {-3, 3}, {1, 3}, {3, 1}, {5, -1}, {3, -3}, {-1, -3}}};
const PosTable kK = {9, {{-1, -1}, {3, -1}, {1, -3}, {-3, -3}, {-5, -1}, {-3, 1}, {-1, 3}, {3, 3}, {5, 1}}};

const PosTable& table_for(Family f)
{
    switch (unbarred(f)) {
    case Family::E: return kE;
    case Family::F: return kF;
    case Family::G: return kG;
    default: return kK;
    }
}

}  // namespace

bool position_supported(Family f, int position)
{
    const auto& t = table_for(f);
    if (position < 0 || position >= t.n) return false;
    if (!is_barred(f)) return true;
    if (position == 0) return true;
    return t.off[position].dh2 >= 0;
}

PositionOffset position_offset(Family f, int position)
{
    if (!position_supported(f, position))
        throw Error(ErrorKind::PositionUnsupported,
                    std::string("position ") + std::to_string(position) + " is not defined for family " + family_name(f));
    // The barred K-type central region sits up and to the right.
    if (f == Family::KBar && position == 0) return {1, 1};
    return table_for(f).off[position];
}

std::vector<int> supported_positions(Family f)
{
    std::vector<int> out;
    for (int p = 1; p < table_for(f).n; p++)
        if (position_supported(f, p)) out.push_back(p);
    return out;
}

bool parity_ok(Family f, int x, int z)
{
    bool same = ((x - z) % 2) == 0;
    Family u = unbarred(f);
    return (u == Family::E || u == Family::G) ? same : !same;
}

int y_min(Family f, int position, int a, int b)
{
    PositionOffset p = position_offset(f, position);
    int lo = p.upper() ? std::max(std::min(0, a - b), -p.j()) : 0;
    int lo2 = p.lower() ? std::max(std::min(0, b - a), -p.j()) : 0;
    if (p.upper() && p.lower()) return std::max(lo, lo2);
    return p.upper() ? lo : lo2;
}

// ---- geometry ----

namespace {

bool in_hex(const std::array<int, 6>& s, int col, int row)
{
    int N = s[0], NE = s[1], SW = s[4], NW = s[5];
    return row >= -SW && row <= NW && col >= 0 && col + row >= 0 && col <= N + NE && col + row <= N + NW;
}

bool cell_in_hex(const std::array<int, 6>& s, const TriCell& t)
{
    int c = t.col, r = t.row;
    if (t.orient == Orient::Up)
        return in_hex(s, c, r) && in_hex(s, c + 1, r) && in_hex(s, c, r + 1);
    return in_hex(s, c + 1, r) && in_hex(s, c, r + 1) && in_hex(s, c + 1, r + 1);
}

std::vector<TriCell> hex_cells(const std::array<int, 6>& s)
{
    std::vector<TriCell> out;
    int N = s[0], NE = s[1], SW = s[4], NW = s[5];
    for (int r = -SW; r < NW; r++) {
        for (int c = std::max(0, -r) - 1; c <= N + NE; c++) {
            if (cell_in_hex(s, up_cell(r, c))) out.push_back(up_cell(r, c));
            if (cell_in_hex(s, down_cell(r, c))) out.push_back(down_cell(r, c));
        }
    }
    return out;
}

// Triangle of side k with a horizontal side [p, p+k] on row L.
void triangle_cells(std::vector<TriCell>& out, int L, int p, int k, bool up)
{
    for (int t = 0; t < k; t++) {
        if (up) {
            for (int c = p; c <= p + k - 1 - t; c++) out.push_back(up_cell(L + t, c));
            for (int c = p; c <= p + k - 2 - t; c++) out.push_back(down_cell(L + t, c));
        } else {
            for (int c = p + t; c <= p + k - 1; c++) out.push_back(down_cell(L - 1 - t, c));
            for (int c = p + t + 1; c <= p + k - 1; c++) out.push_back(up_cell(L - 1 - t, c));
        }
    }
}

// Alternating fern starting at column p; returns the end column.
int fern_cells(std::vector<TriCell>& out, int L, int p, const std::vector<int>& sizes, bool first_up)
{
    bool up = first_up;
    for (int k : sizes) {
        triangle_cells(out, L, p, k, up);
        p += k;
        up = !up;
    }
    return p;
}

}  // namespace

RegionGeometry region_geometry(const RegionSpec& s)
{
    const Family f = s.family;
    const bool bar = is_barred(f);
    if (s.x < 0 || s.z < 0) throw Error(ErrorKind::ParityViolation, "x and z must be nonnegative");
    if (!parity_ok(f, s.x, s.z))
        throw Error(ErrorKind::ParityViolation, std::string("parity of x and z does not fit family ") + family_name(f));
    PositionOffset pos = position_offset(f, s.position);
    const int a = s.a.total(), b = s.b.total(), c = s.c.total();
    const int oa = s.a.odd_sum(), ea = s.a.even_sum();
    const int ob = s.b.odd_sum(), eb = s.b.even_sum();
    const int oc = s.c.odd_sum(), ec = s.c.even_sum();
    const int ymin = y_min(f, s.position, a, b);
    if (s.y < ymin)
        throw Error(ErrorKind::YBelowMinimum, "y=" + std::to_string(s.y) + " is below the minimum " + std::to_string(ymin));
    const int j = pos.j(), y = s.y, x = s.x, z = s.z;
    const int amb = std::max(a - b, 0), bma = std::max(b - a, 0);

    std::array<int, 6> h0 = {x, z + j, z, x, z + j, z};
    std::array<int, 6> d;
    if (!bar)
        d = {ea + ob + oc + y + bma, b + c, b + c + y + amb, oa + eb + ec + y + amb, a, a + y + bma};
    else
        d = {oa + ob + oc, b + c, b + c + y + amb, ea + eb + ec + 2 * y + amb + bma, a + y + bma, a};
    RegionGeometry g;
    g.j = j;
    for (int i = 0; i < 6; i++) {
        g.sides[i] = h0[i] - d[i] + d[(i + 5) % 6] + d[(i + 1) % 6];
        if (g.sides[i] < 0) throw Error(ErrorKind::FernOverflow, "base hexagon has a negative side");
    }
    // West vertex of the auxiliary hexagon, then its centre, then the root.
    int X4 = 2 * (d[5] + d[4]) + 2 * (x + z) + j + pos.dx4;
    int h2 = 2 * (d[4] - d[5]) - j + pos.dh2;
    if (h2 % 2 != 0 || (X4 - h2) % 4 != 0)
        throw Error(ErrorKind::ParityViolation, "fern root is not a lattice point");
    g.ell = h2 / 2;
    g.root_col = (X4 - h2) / 4;
    const auto& S = g.sides;
    g.left_col = std::max(0, -g.ell);
    g.right_col = std::min(S[0] + S[1], S[0] + S[5] - g.ell);
    g.gap1 = g.root_col - g.left_col - a;
    g.gap2 = g.right_col - b - g.root_col - c;
    if (g.gap1 < 0 || g.gap2 < 0) throw Error(ErrorKind::FernOverflow, "ferns do not fit on their line");
    return g;
}

TriRegion build_region(const RegionSpec& s)
{
    RegionGeometry g = region_geometry(s);
    std::vector<TriCell> holes;
    fern_cells(holes, g.ell, g.left_col, s.a.entries(), is_barred(s.family));
    fern_cells(holes, g.ell, g.root_col, s.c.entries(), true);
    // The right fern is given right to left, its first triangle pointing up.
    std::vector<int> rb(s.b.entries().rbegin(), s.b.entries().rend());
    bool first_up = rb.size() % 2 == 1;
    fern_cells(holes, g.ell, g.right_col - s.b.total(), rb, first_up);
    for (const auto& t : holes)
        if (!cell_in_hex(g.sides, t)) throw Error(ErrorKind::FernOverflow, "fern leaves the base hexagon");
    int p = quasi_perimeter(s);
    if (p < 2 * s.x + 4 * s.z) throw Error(ErrorKind::FernOverflow, "quasi-perimeter bound violated");
    return TriRegion(hex_cells(g.sides), s.to_string()).minus(holes);
}

int quasi_perimeter(const RegionSpec& s)
{
    RegionGeometry g = region_geometry(s);
    int p = 0;
    for (int v : g.sides) p += v;
    return p;
}

int h_parameter(const RegionSpec& s) { return quasi_perimeter(s) + s.x + s.z; }

// ---- plain shapes ----

TriRegion build_hexagon(const std::array<int, 6>& s)
{
    for (int v : s)
        if (v < 0) throw Error(ErrorKind::NegativeArgument, "hexagon sides must be nonnegative");
    if (s[0] + s[1] != s[3] + s[4] || s[5] + s[4] != s[1] + s[2])
        throw Error(ErrorKind::Parse, "hexagon sides do not close up");
    return TriRegion(hex_cells(s));
}

TriRegion build_hexagon(int a, int b, int c) { return build_hexagon({a, b, c, a, b, c}); }

TriRegion build_dented_semihexagon(const std::vector<int>& seq)
{
    int o = 0, e = 0;
    for (std::size_t i = 0; i < seq.size(); i++) {
        if (seq[i] < 0) throw Error(ErrorKind::NegativeArgument, "semihexagon entries must be nonnegative");
        (i % 2 == 0 ? o : e) += seq[i];
    }
    std::vector<TriCell> cells, dents;
    for (int r = 0; r < o; r++) {
        for (int c = 0; c + r + 1 <= o + e; c++) cells.push_back(up_cell(r, c));
        for (int c = 0; c + r + 2 <= o + e; c++) cells.push_back(down_cell(r, c));
    }
    int p = 0;
    for (std::size_t i = 0; i < seq.size(); i++) {
        if (i % 2 == 0) triangle_cells(dents, 0, p, seq[i], true);
        p += seq[i];
    }
    return TriRegion(std::move(cells)).minus(dents);
}

TriRegion build_offset_cored_hexagon(int x, int y, int z, int m, int dx4, int dh2, bool up)
{
    if (x < 0 || y < 0 || z < 0 || m < 0) throw Error(ErrorKind::NegativeArgument, "negative cored hexagon parameter");
    int X4 = 2 * x + y + z + dx4, h2 = z - y + dh2;
    if (h2 % 2 != 0 || (X4 - h2) % 4 != 0)
        throw Error(ErrorKind::ParityViolation, "hole position is not a lattice point for this parity");
    std::vector<TriCell> hole;
    triangle_cells(hole, h2 / 2, (X4 - h2) / 4, m, up);
    std::array<int, 6> sides = up ? std::array<int, 6>{x, y + m, z, x + m, y, z + m}
                                   : std::array<int, 6>{x + m, y, z + m, x, y + m, z};
    return TriRegion(hex_cells(sides)).minus(hole);
}

TriRegion build_cored_hexagon(int x, int y, int z, int m, CoreOffset off)
{
    int dx4 = off == CoreOffset::Left1 ? -4 : off == CoreOffset::Left3Half ? -6 : 0;
    return build_offset_cored_hexagon(x, y, z, m, dx4, 0, true);
}

TriRegion build_down_cored_hexagon(int x, int y, int z, int m, int position)
{
    if (position < 1 || position > 3) throw Error(ErrorKind::PositionUnsupported, "down-cored hexagons use positions 1 to 3");
    PositionOffset p = kF.off[position];
    return build_offset_cored_hexagon(x, y, z, m, p.dx4, p.dh2, false);
}

// ---- zero triangles ----

namespace {

std::vector<int> merge_interior_zeros(std::vector<int> v)
{
    for (std::size_t i = 1; i + 1 < v.size();) {
        if (v[i] == 0) {
            v[i - 1] += v[i + 1];
            v.erase(v.begin() + i, v.begin() + i + 2);
        } else {
            i++;
        }
    }
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

int sum_of(const std::vector<int>& v)
{
    int t = 0;
    for (int e : v) t += e;
    return t;
}

// Drops a leading (0, k) pair; forced lozenges along the side absorb the k-triangle,
// which lengthens the y-sides by the drop in max(own - other, 0).
void drop_leading_zeros(std::vector<int>& v, int other, int& y)
{
    while (!v.empty() && v.front() == 0) {
        int before = std::max(sum_of(v) - other, 0);
        v.erase(v.begin(), v.begin() + std::min<std::size_t>(2, v.size()));
        y += before - std::max(sum_of(v) - other, 0);
    }
}

}  // namespace

RegionSpec normalize_zero_triangles(const RegionSpec& s)
{
    RegionSpec out = s;
    std::vector<int> a = s.a.entries(), b = s.b.entries();
    drop_leading_zeros(a, sum_of(b), out.y);
    drop_leading_zeros(b, sum_of(a), out.y);
    out.a = FernSeq(merge_interior_zeros(a));
    out.b = FernSeq(merge_interior_zeros(b));
    out.c = FernSeq(merge_interior_zeros(s.c.entries()));
    return out;
}

}  // namespace offhex

// ---- minimal y ----

namespace offhex {

namespace {

FernSeq fern_tail(const FernSeq& f)
{
    const auto& v = f.entries();
    if (v.empty()) return f;
    return FernSeq(std::vector<int>(v.begin() + 1, v.end()));
}

int first_entry(const FernSeq& f) { return f.empty() ? 0 : f[0]; }

// Position reached by a half turn about the centre.
int rotated_position(Family f, int position)
{
    if (unbarred(f) == Family::E) return (3 + position - 1) % 6 + 1;
    return (4 + position - 1) % 8 + 1;
}

}  // namespace

RegionSpec reduce_y_minimal(const RegionSpec& s)
{
    PositionOffset off = position_offset(s.family, s.position);
    const int a = s.a.total(), b = s.b.total(), j = off.j();
    const int ymin = y_min(s.family, s.position, a, b);
    if (s.y != ymin)
        throw Error(ErrorKind::YNotMinimal,
                    "y = " + std::to_string(s.y) + " is above its minimum " + std::to_string(ymin));
    RegionSpec out = s;
    out.family = toggled_bar(s.family);
    if (off.upper() && (a >= b || !off.lower() || is_barred(s.family))) {
        if (a >= b) {
            out.y = std::min(first_entry(s.a), a - b);
            out.a = fern_tail(s.a);
        } else if (b - a >= j) {
            out.y = std::min(first_entry(s.b), b - a) - j;
            out.c = fern_prepend_zero(s.c);
            out.b = fern_tail(s.b);
        } else {
            out.y = a - b;
            out.a = fern_tail(s.a);
        }
        return out;
    }
    out.position = rotated_position(s.family, s.position);
    if (a <= b) {
        out.y = std::min(first_entry(s.b), b - a);
        out.a = fern_tail(s.b);
        out.c = fern_bar(s.c);
        out.b = s.a;
    } else if (a - b >= j) {
        out.y = std::min(first_entry(s.a), a - b) - j;
        out.a = s.b;
        out.c = fern_arrow(s.c);
        out.b = fern_tail(s.a);
    } else {
        out.y = b - a;
        out.a = fern_tail(s.b);
        out.c = fern_bar(s.c);
        out.b = s.a;
    }
    return out;
}

}  // namespace offhex
