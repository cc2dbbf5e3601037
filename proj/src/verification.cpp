#include "offhex/verification.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "offhex/errors.hpp"

namespace offhex {

// ---- Kuo ----

namespace {

BipartiteGraph remove_vertices(const BipartiteGraph& g, const std::vector<KuoVertex>& del)
{
    std::vector<bool> dl(g.left, false), dr(g.right, false);
    for (const auto& v : del) (v.left ? dl : dr)[v.index] = true;
    std::vector<int> rmap(g.right, -1);
    BipartiteGraph h;
    for (std::size_t r = 0; r < g.right; r++)
        if (!dr[r]) rmap[r] = static_cast<int>(h.right++);
    for (std::size_t l = 0; l < g.left; l++) {
        if (dl[l]) continue;
        std::vector<int> nb;
        for (int r : g.adj[l])
            if (rmap[r] >= 0) nb.push_back(rmap[r]);
        h.adj.push_back(std::move(nb));
        h.left++;
    }
    return h;
}

void check_vertex(const BipartiteGraph& g, KuoVertex v)
{
    std::size_t n = v.left ? g.left : g.right;
    if (v.index < 0 || static_cast<std::size_t>(v.index) >= n)
        throw Error(ErrorKind::ColorPatternViolation, "Kuo vertex index out of range");
}

}  // namespace

KuoReport kuo_identity(const BipartiteGraph& g, KuoVertex u, KuoVertex v, KuoVertex w, KuoVertex s,
                       KuoVariant variant, const CountLimits& lim)
{
    for (auto t : {u, v, w, s}) check_vertex(g, t);
    if (g.left != g.right) throw Error(ErrorKind::ColorPatternViolation, "colour classes have different sizes");
    bool ok = variant == KuoVariant::Thm51 ? (u.left && !v.left && w.left && !s.left)
                                           : (u.left && v.left && !w.left && !s.left);
    if (!ok) throw Error(ErrorKind::ColorPatternViolation, "vertex colours do not fit the chosen Kuo variant");
    if ((u.left == v.left && u.index == v.index) || (w.left == s.left && w.index == s.index))
        throw Error(ErrorKind::ColorPatternViolation, "Kuo vertices must be distinct");
    auto M = [&](std::vector<KuoVertex> del) { return count_matchings(remove_vertices(g, del), lim); };
    KuoReport r;
    r.full = M({});
    r.all4 = M({u, v, w, s});
    if (variant == KuoVariant::Thm51) {
        r.p1 = M({u, v});
        r.p2 = M({w, s});
        r.q1 = M({u, s});
        r.q2 = M({v, w});
        r.holds = r.full * r.all4 == r.p1 * r.p2 + r.q1 * r.q2;
    } else {
        r.p1 = M({u, w});
        r.p2 = M({v, s});
        r.q1 = M({u, s});
        r.q2 = M({v, w});
        r.holds = r.q1 * r.q2 == r.full * r.all4 + r.p1 * r.p2;
    }
    return r;
}

bool check_kuo_generic(const BipartiteGraph& g, KuoVertex u, KuoVertex v, KuoVertex w, KuoVertex s,
                       KuoVariant variant, const CountLimits& lim)
{
    return kuo_identity(g, u, v, w, s, variant, lim).holds;
}

KuoCase random_kuo_case(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    int rows, cols;
    do {
        rows = pick(2, 6);
        cols = pick(2, 6);
    } while ((rows * cols) % 2 != 0 || rows * cols > 36 || rows + cols < 5);  // a 4-cycle cannot host u,v in V1 then w,s in V2
    // Vertex (i,j) is in V1 when i+j is even; index = rank within its class.
    auto id = [&](int i, int j) { return (i * cols + j) / 2; };
    auto inner = [&](int i1, int j1, int i2, int j2) {
        bool b1 = i1 == 0 || i1 == rows - 1 || j1 == 0 || j1 == cols - 1;
        bool b2 = i2 == 0 || i2 == rows - 1 || j2 == 0 || j2 == cols - 1;
        // An edge is on the outer cycle when both ends are on it and it runs along a side.
        bool along = (i1 == i2 && (i1 == 0 || i1 == rows - 1)) || (j1 == j2 && (j1 == 0 || j1 == cols - 1));
        return !(b1 && b2 && along);
    };
    KuoCase kc;
    kc.graph.left = kc.graph.right = static_cast<std::size_t>(rows * cols / 2);
    kc.graph.adj.assign(kc.graph.left, {});
    std::bernoulli_distribution drop(0.2);
    for (int i = 0; i < rows; i++)
        for (int j = 0; j < cols; j++) {
            if ((i + j) % 2 != 0) continue;
            const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
            for (int k = 0; k < 4; k++) {
                int i2 = i + di[k], j2 = j + dj[k];
                if (i2 < 0 || i2 >= rows || j2 < 0 || j2 >= cols) continue;
                if (inner(i, j, i2, j2) && drop(rng)) continue;
                kc.graph.adj[id(i, j)].push_back(id(i2, j2));
            }
        }
    // Outer cycle, clockwise from the top-left corner.
    std::vector<std::pair<int, int>> cyc;
    for (int j = 0; j < cols; j++) cyc.push_back({0, j});
    for (int i = 1; i < rows; i++) cyc.push_back({i, cols - 1});
    for (int j = cols - 2; j >= 0; j--) cyc.push_back({rows - 1, j});
    for (int i = rows - 2; i >= 1; i--) cyc.push_back({i, 0});
    kc.variant = pick(0, 1) ? KuoVariant::Thm52 : KuoVariant::Thm51;
    // Required colours in cyclic order.
    std::array<bool, 4> want = kc.variant == KuoVariant::Thm51 ? std::array<bool, 4>{true, false, true, false}
                                                               : std::array<bool, 4>{true, true, false, false};
    const int n = static_cast<int>(cyc.size());
    std::array<int, 4> at{};
    for (;;) {
        std::set<int> chosen;
        while (chosen.size() < 4) chosen.insert(pick(0, n - 1));
        std::vector<int> v(chosen.begin(), chosen.end());
        int rot = pick(0, 3);
        bool ok = true;
        for (int k = 0; k < 4; k++) {
            at[k] = v[(k + rot) % 4];
            auto [i, j] = cyc[at[k]];
            if (((i + j) % 2 == 0) != want[k]) ok = false;
        }
        if (ok) break;
    }
    auto vert = [&](int k) {
        auto [i, j] = cyc[at[k]];
        return KuoVertex{(i + j) % 2 == 0, id(i, j)};
    };
    kc.u = vert(0);
    kc.v = vert(1);
    kc.w = vert(2);
    kc.s = vert(3);
    kc.description = std::to_string(rows) + "x" + std::to_string(cols) + " grid, " +
                     (kc.variant == KuoVariant::Thm51 ? "Thm51" : "Thm52");
    return kc;
}

// ---- cross checks ----

const char* check_status_name(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
    }
    return "?";
}

CrossCheckReport cross_check(const RegionSpec& spec, const CountLimits& lim)
{
    CrossCheckReport rep;
    rep.spec = spec;
    auto t0 = std::chrono::steady_clock::now();
    auto done = [&] {
        rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return rep;
    };
    TriRegion region;
    try {
        region = build_region(spec);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ResourceLimit) throw;
        rep.reason = std::string(error_kind_name(e.kind())) + ": " + e.what();
        return done();
    }
    try {
        HyperValue v = theorem_value(spec);
        rep.pi_clean = v.pi_half_exp == 0 && v.is_count();
        rep.formula = v.is_count() ? v.to_count().get_str() : v.to_string();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NoTheoremRow) {
            rep.reason = std::string(error_kind_name(e.kind())) + ": " + e.what();
            return done();
        }
        rep.pi_clean = false;
        rep.formula.clear();
        rep.reason = std::string("formula: ") + e.what();
    }
    rep.brute = count_tilings(region, lim).get_str();
    rep.status = (!rep.formula.empty() && rep.pi_clean && rep.formula == rep.brute) ? CheckStatus::Pass
                                                                                    : CheckStatus::Fail;
    if (rep.status == CheckStatus::Fail && rep.reason.empty())
        rep.reason = "formula " + rep.formula + " but brute force " + rep.brute;
    return done();
}

std::vector<FernSeq> fern_grid(int max_entry, int max_len)
{
    std::set<std::vector<int>> seen;
    std::vector<FernSeq> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self) -> void {
        FernSeq f(cur);
        if (seen.insert(f.entries()).second) out.push_back(f);
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int v = 0; v <= max_entry; v++) {
            cur.push_back(v);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

SweepSummary sweep(const SweepGrid& grid, const CountLimits& lim,
                   const std::function<void(const CrossCheckReport&)>& on_report)
{
    std::vector<std::pair<Family, int>> rows = grid.rows;
    if (rows.empty())
        for (const auto& r : theorem_table()) rows.push_back({r.family, r.position});
    auto ferns = fern_grid(grid.max_fern_entry, grid.max_fern_len);
    SweepSummary sum;
    auto emit = [&](CrossCheckReport r) {
        if (r.status == CheckStatus::Pass) sum.pass++;
        else if (r.status == CheckStatus::Fail) sum.fail++;
        else sum.skip++;
        if (on_report) on_report(r);
        sum.reports.push_back(std::move(r));
    };
    for (auto [fam, pos] : rows) {
        for (int x = grid.min_x; x <= grid.max_x; x++)
            for (int z = grid.min_z; z <= grid.max_z; z++) {
                if (!parity_ok(fam, x, z)) {
                    CrossCheckReport r;
                    r.spec = RegionSpec{fam, pos, x, 0, z, {}, {}, {}};
                    r.reason = "ParityViolation: x and z parity does not fit the family";
                    emit(r);
                    continue;
                }
                for (const auto& a : ferns)
                    for (const auto& b : ferns)
                        for (const auto& c : ferns) {
                            int ym = y_min(fam, pos, a.total(), b.total());
                            for (int y = ym; y <= ym + grid.y_extra; y++)
                                emit(cross_check(RegionSpec{fam, pos, x, y, z, a, c, b}, lim));
                        }
            }
    }
    return sum;
}

// ---- special functions against cored hexagons ----

TriRegion special_fn_region(SpecialFn f, int x, int y, int z, int m)
{
    switch (f) {
    case SpecialFn::Phi: return build_cored_hexagon(x, y, z, m, CoreOffset::Left1);
    case SpecialFn::Psi: return build_cored_hexagon(x, y, z, m, CoreOffset::Left3Half);
    case SpecialFn::Theta: return build_offset_cored_hexagon(x, y, z, m, 0, -2, true);
    case SpecialFn::Lambda: return build_offset_cored_hexagon(x, y, z, m, -4, -2, true);
    case SpecialFn::ThetaPrime: return build_down_cored_hexagon(x, y, z, m, 1);
    case SpecialFn::LambdaPrime: return build_down_cored_hexagon(x, y, z, m, 2);
    case SpecialFn::PsiPrime: return build_down_cored_hexagon(x, y, z, m, 3);
    }
    throw Error(ErrorKind::Parse, "unknown special function");
}

SpecialFnReport check_special_fn(SpecialFn f, int x, int y, int z, int m, const CountLimits& lim)
{
    SpecialFnReport r;
    r.fn = f, r.x = x, r.y = y, r.z = z, r.m = m;
    HyperValue v;
    try {
        v = special_fn(f, x, y, z, m);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::ParityViolation && e.kind() != ErrorKind::NegativeArgument) throw;
        r.reason = std::string(error_kind_name(e.kind())) + ": " + e.what();
        return r;
    }
    BigCount brute;
    try {
        brute = count_tilings(special_fn_region(f, x, y, z, m), lim);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::ParityViolation) throw;
        r.reason = std::string("hole does not sit on the lattice: ") + e.what();
        return r;
    }
    r.brute = brute.get_str();
    r.formula = v.to_string();
    r.pi_clean = v.is_count();
    r.status = r.pi_clean && v.to_count() == brute ? CheckStatus::Pass : CheckStatus::Fail;
    return r;
}

// ---- base cases ----

namespace {

// Repeatedly removes a cell with a single neighbour together with that
// neighbour; only cells below the given row start a removal.
std::set<TriCell> strip_forced(const std::vector<TriCell>& cells, int below_row)
{
    std::set<TriCell> in(cells.begin(), cells.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = in.begin(); it != in.end();) {
            if (it->row >= below_row) {
                ++it;
                continue;
            }
            int cnt = 0;
            TriCell only{};
            for (const auto& n : neighbors(*it))
                if (in.count(n)) {
                    cnt++;
                    only = n;
                }
            if (cnt == 1) {
                TriCell t = *it;
                in.erase(only);
                it = in.upper_bound(t);
                in.erase(t);
                changed = true;
            } else {
                ++it;
            }
        }
    }
    return in;
}

constexpr int kAllRows = 1 << 30;

TriCell rotate_half(const TriCell& t)
{
    return {-t.row - 1, -t.col - 1, t.orient == Orient::Up ? Orient::Down : Orient::Up};
}

// Drops forced lozenges hanging below the base row r0, reads the dent
// sequence off row r0 and checks that, up to forced lozenges, the part is
// that dented semihexagon.
bool as_semihexagon(const std::vector<TriCell>& cells, int r0, std::vector<int>& seq)
{
    seq.clear();
    std::set<TriCell> in = strip_forced(cells, r0);
    if (in.empty()) return true;
    int top = r0;
    for (const auto& t : in) {
        if (t.row < r0) return false;
        top = std::max(top, t.row);
    }
    int cmin = kAllRows, width = 0;
    for (const auto& t : in)
        if (t.row == top) cmin = std::min(cmin, t.col);
    for (const auto& t : in)
        if (t.orient == Orient::Up) width = std::max(width, t.col - cmin + (t.row - r0) + 1);
    bool dent = true;
    int run = 0;
    for (int c = 0; c < width; c++) {
        bool present = in.count(up_cell(r0, cmin + c)) > 0;
        if (present == dent) {
            seq.push_back(run);
            run = 0;
            dent = !dent;
        }
        run++;
    }
    seq.push_back(run);
    std::vector<TriCell> mine(in.begin(), in.end()), ref;
    TriRegion semi = build_dented_semihexagon(seq);
    for (const auto& t : semi.cells()) ref.push_back({t.row + r0, t.col + cmin, t.orient});
    return strip_forced(mine, kAllRows) == strip_forced(ref, kAllRows);
}

}  // namespace

BaseCaseReport check_base_case(const RegionSpec& spec, const CountLimits& lim)
{
    if (spec.x != 0 && spec.z != 0)
        throw Error(ErrorKind::Parse, "base cases need x = 0 or z = 0");
    RegionGeometry g = region_geometry(spec);
    TriRegion whole = build_region(spec);
    BaseCaseReport rep;
    rep.spec = spec;
    rep.whole = count_tilings(whole, lim);

    std::set<TriCell> bump;
    // Up-pointing triangles standing on the two gaps between the ferns.
    auto add_bump = [&](int p, int k) {
        for (int t = 0; t < k; t++) {
            for (int c = p; c <= p + k - 1 - t; c++) bump.insert(up_cell(g.ell + t, c));
            for (int c = p; c <= p + k - 2 - t; c++) bump.insert(down_cell(g.ell + t, c));
        }
    };
    std::vector<TriCell> up, lo;
    auto split = [&] {
        up.clear();
        lo.clear();
        for (const auto& t : whole.cells()) (t.row >= g.ell && !bump.count(t) ? up : lo).push_back(t);
        return balance(TriRegion(up)).balanced() && balance(TriRegion(lo)).balanced();
    };
    if (!split()) {
        add_bump(g.left_col + spec.a.total(), g.gap1);
        add_bump(g.root_col + spec.c.total(), g.gap2);
        split();
    }
    rep.upper = count_tilings(TriRegion(up), lim);
    rep.lower = count_tilings(TriRegion(lo), lim);
    rep.factors = rep.whole == rep.upper * rep.lower;

    std::vector<TriCell> lo_rot;
    for (const auto& t : lo) lo_rot.push_back(rotate_half(t));
    bool ok_up = as_semihexagon(up, g.ell, rep.upper_seq);
    bool ok_lo = as_semihexagon(lo_rot, -g.ell, rep.lower_seq);
    rep.upper_clp = clp_count(rep.upper_seq);
    rep.lower_clp = clp_count(rep.lower_seq);
    rep.matches = ok_up && ok_lo && rep.upper_clp == rep.upper && rep.lower_clp == rep.lower;
    return rep;
}

}  // namespace offhex
