#include "offhex/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace offhex {

std::array<TriCell, 3> neighbors(const TriCell& t)
{
    if (t.orient == Orient::Up)
        return {down_cell(t.row, t.col), down_cell(t.row, t.col - 1), down_cell(t.row - 1, t.col)};
    return {up_cell(t.row, t.col), up_cell(t.row, t.col + 1), up_cell(t.row + 1, t.col)};
}

TriRegion::TriRegion(std::vector<TriCell> cells, std::string label)
    : cells_(std::move(cells)), label_(std::move(label))
{
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool TriRegion::contains(const TriCell& t) const
{
    return std::binary_search(cells_.begin(), cells_.end(), t);
}

TriRegion TriRegion::translated(int drow, int dcol) const
{
    std::vector<TriCell> out;
    out.reserve(cells_.size());
    for (const auto& t : cells_)
        out.push_back({t.row + drow, t.col + dcol, t.orient});
    return TriRegion(std::move(out), label_);
}

TriRegion TriRegion::minus(const std::vector<TriCell>& holes) const
{
    std::vector<TriCell> h = holes;
    std::sort(h.begin(), h.end());
    std::vector<TriCell> out;
    out.reserve(cells_.size());
    std::set_difference(cells_.begin(), cells_.end(), h.begin(), h.end(), std::back_inserter(out));
    return TriRegion(std::move(out), label_);
}

Balance balance(const TriRegion& r)
{
    Balance b;
    for (const auto& t : r.cells())
        (t.orient == Orient::Up ? b.ups : b.downs)++;
    return b;
}

std::size_t BipartiteGraph::edge_count() const
{
    std::size_t n = 0;
    for (const auto& v : adj)
        n += v.size();
    return n;
}

BipartiteGraph dual_graph(const TriRegion& r)
{
    std::vector<TriCell> ups, downs;
    for (const auto& t : r.cells())
        (t.orient == Orient::Up ? ups : downs).push_back(t);
    BipartiteGraph g;
    g.left = ups.size();
    g.right = downs.size();
    g.adj.resize(ups.size());
    for (std::size_t i = 0; i < ups.size(); i++) {
        for (const auto& n : neighbors(ups[i])) {
            auto it = std::lower_bound(downs.begin(), downs.end(), n);
            if (it != downs.end() && *it == n)
                g.adj[i].push_back(static_cast<int>(it - downs.begin()));
        }
    }
    return g;
}

std::string region_svg(const TriRegion& r)
{
    const double s = 20.0, h = s * std::sqrt(3.0) / 2;
    int rmax = 0;
    double xmin = 0, xmax = 0;
    bool first = true;
    for (const auto& t : r.cells()) {
        double x = t.col + t.row / 2.0;
        if (first || t.row + 1 > rmax) rmax = t.row + 1;
        if (first || x < xmin) xmin = x;
        if (first || x + 1.5 > xmax) xmax = x + 1.5;
        first = false;
    }
    auto px = [&](double col, double row) {
        std::ostringstream o;
        o << (col + row / 2 - xmin) * s + 5 << ',' << (rmax - row) * h + 5;
        return o.str();
    };
    int rmin = rmax;
    for (const auto& t : r.cells())
        rmin = std::min(rmin, t.row);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (xmax - xmin) * s + 10
        << "\" height=\"" << (rmax - rmin) * h + 10 << "\">\n";
    for (const auto& t : r.cells()) {
        int c = t.col, w = t.row;
        std::string pts = t.orient == Orient::Up
            ? px(c, w) + " " + px(c + 1, w) + " " + px(c, w + 1)
            : px(c + 1, w) + " " + px(c, w + 1) + " " + px(c + 1, w + 1);
        out << "<polygon points=\"" << pts << "\" fill=\""
            << (t.orient == Orient::Up ? "#f4d8a8" : "#a8c8f4") << "\" stroke=\"#555\" stroke-width=\"0.5\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace offhex
