#pragma once

// Unit triangles of the triangular lattice.
// Lattice point (col,row) sits at x = col + row/2, y = row*sqrt(3)/2.
// Up(r,c) has corners (c,r),(c+1,r),(c,r+1); Down(r,c) has (c+1,r),(c,r+1),(c+1,r+1).

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace offhex {

enum class Orient : std::uint8_t { Up = 0, Down = 1 };

struct TriCell {
    int row = 0;
    int col = 0;
    Orient orient = Orient::Up;

    friend auto operator<=>(const TriCell&, const TriCell&) = default;
};

inline TriCell up_cell(int r, int c) { return {r, c, Orient::Up}; }
inline TriCell down_cell(int r, int c) { return {r, c, Orient::Down}; }

// The three edge-neighbours; they always have the opposite orientation.
std::array<TriCell, 3> neighbors(const TriCell& t);

class TriRegion {
public:
    TriRegion() = default;
    explicit TriRegion(std::vector<TriCell> cells, std::string label = {});

    const std::vector<TriCell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    bool contains(const TriCell& t) const;

    TriRegion translated(int drow, int dcol) const;
    // Remove the given cells; cells not present are ignored.
    TriRegion minus(const std::vector<TriCell>& holes) const;

    const std::string& label() const { return label_; }
    void set_label(std::string s) { label_ = std::move(s); }

    bool operator==(const TriRegion& o) const { return cells_ == o.cells_; }

private:
    std::vector<TriCell> cells_;  // sorted, unique
    std::string label_;
};

struct Balance {
    long ups = 0;
    long downs = 0;
    bool balanced() const { return ups == downs; }
};

Balance balance(const TriRegion& r);

// Planar dual restricted to a region. Left side = Up cells, right side = Down
// cells, both in sorted order.
struct BipartiteGraph {
    std::size_t left = 0;
    std::size_t right = 0;
    std::vector<std::vector<int>> adj;  // adj[u] = right neighbours of left vertex u

    std::size_t edge_count() const;
};

BipartiteGraph dual_graph(const TriRegion& r);

// Minimal SVG drawing, handy for eyeballing a region.
std::string region_svg(const TriRegion& r);

}  // namespace offhex
