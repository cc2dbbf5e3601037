#include "offhex/counting.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <unordered_map>

#include "offhex/errors.hpp"

namespace offhex {

namespace {

using u128 = unsigned __int128;
constexpr int kCarryBit = 127;
constexpr int kMaxWidth = 126;

// Fixed-width unsigned integer, only addition is needed by the transfer matrix.
template <int L>
struct Fixed {
    std::array<std::uint64_t, L> w{};
    void add(const Fixed& o)
    {
        std::uint64_t c = 0;
        for (int i = 0; i < L; i++) {
            std::uint64_t s;
            bool c1 = __builtin_add_overflow(w[i], o.w[i], &s);
            bool c2 = __builtin_add_overflow(s, c, &s);
            w[i] = s;
            c = c1 || c2;
        }
    }
    static Fixed one()
    {
        Fixed f;
        f.w[0] = 1;
        return f;
    }
    BigCount to_big() const
    {
        BigCount r;
        mpz_import(r.get_mpz_t(), L, -1, sizeof(std::uint64_t), 0, 0, w.data());
        return r;
    }
};

struct Big {
    BigCount v;
    void add(const Big& o) { v += o.v; }
    static Big one() { return {BigCount(1)}; }
    BigCount to_big() const { return v; }
};

// Open addressing map from frontier key to count, insertion ordered.
template <class Num>
class FrontierMap {
public:
    void clear_for(std::size_t expect)
    {
        keys_.clear();
        vals_.clear();
        std::size_t cap = 16;
        while (cap < 2 * expect + 16) cap <<= 1;
        if (slots_.size() != cap) slots_.assign(cap, -1);
        else std::fill(slots_.begin(), slots_.end(), -1);
    }
    void add(u128 key, const Num& v)
    {
        if (2 * keys_.size() + 2 > slots_.size()) grow();
        std::size_t mask = slots_.size() - 1;
        std::size_t i = hash(key) & mask;
        while (slots_[i] >= 0) {
            if (keys_[slots_[i]] == key) {
                vals_[slots_[i]].add(v);
                return;
            }
            i = (i + 1) & mask;
        }
        slots_[i] = static_cast<std::int64_t>(keys_.size());
        keys_.push_back(key);
        vals_.push_back(v);
    }
    std::size_t size() const { return keys_.size(); }
    u128 key(std::size_t i) const { return keys_[i]; }
    const Num& val(std::size_t i) const { return vals_[i]; }

private:
    static std::size_t hash(u128 k)
    {
        std::uint64_t a = static_cast<std::uint64_t>(k), b = static_cast<std::uint64_t>(k >> 64);
        std::uint64_t h = a * 0x9E3779B97F4A7C15ULL ^ (b + 0x632BE59BD9B4E019ULL) * 0xC2B2AE3D27D4EB4FULL;
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
    void grow()
    {
        slots_.assign(slots_.size() * 2, -1);
        std::size_t mask = slots_.size() - 1;
        for (std::size_t k = 0; k < keys_.size(); k++) {
            std::size_t i = hash(keys_[k]) & mask;
            while (slots_[i] >= 0) i = (i + 1) & mask;
            slots_[i] = static_cast<std::int64_t>(k);
        }
    }
    std::vector<u128> keys_;
    std::vector<Num> vals_;
    std::vector<std::int64_t> slots_;
};

struct Layout {
    int rmin = 0, rows = 0, cmin = 0, width = 0;
    std::vector<u128> up, down;  // per row, bit c - cmin
    std::vector<int> lo, hi;     // column range used in each row
    long downs = 0;
};

Layout make_layout(const TriRegion& r)
{
    Layout L;
    const auto& cs = r.cells();
    int rmax = cs.front().row, cmax = cs.front().col;
    L.rmin = cs.front().row;
    L.cmin = cs.front().col;
    for (const auto& t : cs) {
        L.rmin = std::min(L.rmin, t.row);
        rmax = std::max(rmax, t.row);
        L.cmin = std::min(L.cmin, t.col);
        cmax = std::max(cmax, t.col);
    }
    L.rows = rmax - L.rmin + 1;
    L.width = cmax - L.cmin + 1;
    if (L.width > kMaxWidth)
        throw Error(ErrorKind::ResourceLimit, "region too wide for the transfer matrix");
    L.up.assign(L.rows + 1, 0);
    L.down.assign(L.rows + 1, 0);
    L.lo.assign(L.rows, L.width);
    L.hi.assign(L.rows, -1);
    for (const auto& t : cs) {
        int i = t.row - L.rmin, c = t.col - L.cmin;
        (t.orient == Orient::Up ? L.up : L.down)[i] |= u128(1) << c;
        L.lo[i] = std::min(L.lo[i], c);
        L.hi[i] = std::max(L.hi[i], c);
        if (t.orient == Orient::Down) L.downs++;
    }
    return L;
}

inline bool bit(u128 m, int c) { return c >= 0 && c < 127 && ((m >> c) & 1); }

template <class Num>
BigCount run_transfer(const Layout& L, const CountLimits& lim)
{
    const u128 carry = u128(1) << kCarryBit;
    FrontierMap<Num> cur, nxt;
    cur.clear_for(1);
    cur.add(0, Num::one());
    for (int i = 0; i < L.rows; i++) {
        const u128 up = L.up[i], down = L.down[i], above = L.up[i + 1];
        for (int c = L.lo[i]; c <= L.hi[i]; c++) {
            const u128 cb = u128(1) << c;
            const bool hasUp = bit(up, c), hasDown = bit(down, c);
            const bool upAbove = bit(above, c), upNext = bit(up, c + 1);
            nxt.clear_for(cur.size());
            for (std::size_t s = 0; s < cur.size(); s++) {
                u128 k = cur.key(s);
                const Num& v = cur.val(s);
                // Up(i,c)
                if (!hasUp) {
                    if (k & carry) continue;
                } else if (k & cb) {
                    if (k & carry) continue;
                    k &= ~cb;
                } else {
                    k ^= carry;
                }
                // Down(i,c)
                if (!hasDown) {
                    if (k & carry) continue;
                    nxt.add(k, v);
                } else if (k & carry) {
                    nxt.add(k & ~carry, v);
                } else {
                    if (upAbove) nxt.add(k | cb, v);
                    if (upNext) nxt.add(k | carry, v);
                }
            }
            if (nxt.size() > lim.max_states)
                throw Error(ErrorKind::ResourceLimit, "transfer matrix state limit exceeded");
            std::swap(cur, nxt);
        }
    }
    BigCount total = 0;
    for (std::size_t s = 0; s < cur.size(); s++)
        if (cur.key(s) == 0) total += cur.val(s).to_big();
    return total;
}

int max_row_width(const TriRegion& r)
{
    std::unordered_map<int, std::pair<int, int>> span;
    for (const auto& t : r.cells()) {
        auto it = span.find(t.row);
        if (it == span.end()) span[t.row] = {t.col, t.col};
        else {
            it->second.first = std::min(it->second.first, t.col);
            it->second.second = std::max(it->second.second, t.col);
        }
    }
    int w = 0;
    for (const auto& [row, s] : span)
        w = std::max(w, s.second - s.first + 1);
    return w;
}

}  // namespace

TriRegion rotate120(const TriRegion& r)
{
    std::vector<TriCell> out;
    out.reserve(r.size());
    for (const auto& t : r.cells()) {
        if (t.orient == Orient::Up) out.push_back(up_cell(t.col, -t.col - t.row - 1));
        else out.push_back(down_cell(t.col, -t.col - t.row - 2));
    }
    return TriRegion(std::move(out), r.label());
}

BigCount count_tilings(const TriRegion& region, const CountLimits& lim)
{
    if (region.empty()) return 1;
    if (!balance(region).balanced()) return 0;

    // Sweep along whichever lattice direction gives the narrowest rows.
    TriRegion best = region;
    int bestw = max_row_width(region);
    TriRegion rot = region;
    for (int k = 0; k < 2; k++) {
        rot = rotate120(rot);
        int w = max_row_width(rot);
        if (w < bestw) {
            bestw = w;
            best = rot;
        }
    }
    Layout L = make_layout(best);
    // Every down triangle offers at most two choices, so totals stay below 2^downs.
    int limbs = static_cast<int>((L.downs + 2) / 64 + 1);
    switch (limbs) {
    case 1: return run_transfer<Fixed<1>>(L, lim);
    case 2: return run_transfer<Fixed<2>>(L, lim);
    case 3: return run_transfer<Fixed<3>>(L, lim);
    case 4: return run_transfer<Fixed<4>>(L, lim);
    case 5:
    case 6: return run_transfer<Fixed<6>>(L, lim);
    case 7:
    case 8: return run_transfer<Fixed<8>>(L, lim);
    case 9:
    case 10:
    case 11:
    case 12: return run_transfer<Fixed<12>>(L, lim);
    case 13:
    case 14:
    case 15:
    case 16: return run_transfer<Fixed<16>>(L, lim);
    default: return run_transfer<Big>(L, lim);
    }
}

BigCount count_matchings(const BipartiteGraph& g, const CountLimits& lim)
{
    if (g.left != g.right) return 0;
    if (g.right > 64)
        throw Error(ErrorKind::ResourceLimit, "generic matcher supports at most 64 vertices per side");
    std::unordered_map<std::uint64_t, BigCount> memo;
    // Number of ways to match left vertices popcount(used).. given the used right set.
    auto rec = [&](auto&& self, std::uint64_t used) -> BigCount {
        std::size_t u = static_cast<std::size_t>(__builtin_popcountll(used));
        if (u == g.left) return 1;
        auto it = memo.find(used);
        if (it != memo.end()) return it->second;
        BigCount total = 0;
        for (int v : g.adj[u])
            if (!((used >> v) & 1)) total += self(self, used | (std::uint64_t(1) << v));
        if (memo.size() >= lim.max_states)
            throw Error(ErrorKind::ResourceLimit, "matching memo limit exceeded");
        memo.emplace(used, total);
        return total;
    };
    return rec(rec, 0);
}

}  // namespace offhex
