#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "doorways/sturmian.hpp"

namespace doorways {

namespace {

// A line y = -slope*x + offset; the square's bottom and top edges are the
// lines with slope 0 and offsets 0 and 1.
struct Line {
    std::int64_t slope;
    std::int64_t offset;

    Rational at(const Rational& x) const { return Rational(Rational(offset) - Rational(slope) * x); }
};

struct Trapezoid {
    std::size_t lower;  // index into the slab's boundary list
    std::size_t upper;
    std::size_t cell;   // union-find node
};

class DisjointSets {
  public:
    std::size_t add() {
        parent_.push_back(parent_.size());
        return parent_.size() - 1;
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

  private:
    std::vector<std::size_t> parent_;
};

Rational cross(const Point& o, const Point& a, const Point& b) {
    return Rational((a.alpha - o.alpha) * (b.beta - o.beta) - (a.beta - o.beta) * (b.alpha - o.alpha));
}

// Counter-clockwise hull without collinear points.
std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.alpha != b.alpha ? a.alpha < b.alpha : a.beta < b.beta;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && sgn(cross(hull[k - 2], hull[k - 1], p)) <= 0) --k;
        hull[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower && sgn(cross(hull[k - 2], hull[k - 1], pts[i])) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

std::vector<Line> arrangement_lines(std::size_t n) {
    std::vector<Line> lines;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t b = 1; b <= i; ++b) {
            lines.push_back({static_cast<std::int64_t>(i), static_cast<std::int64_t>(b)});
        }
    }
    return lines;
}

}  // namespace

std::vector<PPartitionCell> partition_p(std::size_t n, std::size_t bound) {
    if (n > bound) throw ResourceLimit("partition size " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
    if (n == 0) throw PreconditionViolated("partition_p needs n >= 1");

    const std::vector<Line> lines = arrangement_lines(n);
    const Line bottom{0, 0};
    const Line top{0, 1};

    // Every x where the vertical order of the lines inside the square can
    // change: crossings of two lines and the ends of each segment.
    std::set<Rational> xs{Rational(0), Rational(1)};
    for (const auto& l : lines) {
        xs.insert(make_rational(to_big(l.offset - 1), to_big(l.slope)));
        xs.insert(make_rational(to_big(l.offset), to_big(l.slope)));
    }
    for (std::size_t a = 0; a < lines.size(); ++a) {
        for (std::size_t b = a + 1; b < lines.size(); ++b) {
            if (lines[a].slope == lines[b].slope) continue;
            const Rational x = make_rational(to_big(lines[b].offset - lines[a].offset),
                                             to_big(lines[b].slope - lines[a].slope));
            if (x > 0 && x < 1) xs.insert(x);
        }
    }
    const std::vector<Rational> cuts(xs.begin(), xs.end());

    DisjointSets sets;
    std::vector<std::vector<Point>> corners;  // per union-find node
    std::vector<Rational> prev_right;         // boundary heights of the previous slab at its right edge
    std::vector<Trapezoid> prev_traps;

    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        const Rational& x0 = cuts[s];
        const Rational& x1 = cuts[s + 1];
        const Rational mid((x0 + x1) / 2);

        std::vector<const Line*> bounds{&bottom};
        for (const auto& l : lines) {
            const Rational y = l.at(mid);
            if (y > 0 && y < 1) bounds.push_back(&l);
        }
        bounds.push_back(&top);
        std::sort(bounds.begin() + 1, bounds.end() - 1,
                  [&](const Line* a, const Line* b) { return a->at(mid) < b->at(mid); });

        std::vector<Rational> left;
        std::vector<Rational> right;
        for (const Line* l : bounds) {
            left.push_back(l->at(x0));
            right.push_back(l->at(x1));
        }

        std::vector<Trapezoid> traps;
        for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
            const std::size_t node = sets.add();
            corners.push_back({{x0, left[k]}, {x1, right[k]}, {x1, right[k + 1]}, {x0, left[k + 1]}});
            traps.push_back({k, k + 1, node});
        }

        // Trapezoids meeting the shared vertical edge in a segment of
        // positive length lie in the same cell; no line can pass between
        // them without crossing one of their interiors.
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < prev_traps.size() && j < traps.size()) {
            const Rational& a_lo = prev_right[prev_traps[i].lower];
            const Rational& a_hi = prev_right[prev_traps[i].upper];
            const Rational& b_lo = left[traps[j].lower];
            const Rational& b_hi = left[traps[j].upper];
            if (std::min(a_hi, b_hi) > std::max(a_lo, b_lo)) sets.unite(prev_traps[i].cell, traps[j].cell);
            if (a_hi < b_hi) {
                ++i;
            } else {
                ++j;
            }
        }

        prev_right = std::move(right);
        prev_traps = std::move(traps);
    }

    std::map<std::size_t, std::vector<Point>> by_cell;
    for (std::size_t node = 0; node < corners.size(); ++node) {
        auto& pts = by_cell[sets.find(node)];
        pts.insert(pts.end(), corners[node].begin(), corners[node].end());
    }

    std::vector<PPartitionCell> cells;
    cells.reserve(by_cell.size());
    for (auto& [root, pts] : by_cell) {
        std::vector<Point> hull = convex_hull(std::move(pts));
        Rational sa(0);
        Rational sb(0);
        for (const auto& p : hull) {
            sa += p.alpha;
            sb += p.beta;
        }
        const Rational count(static_cast<long>(hull.size()));
        Point witness{Rational(sa / count), Rational(sb / count)};
        Word word = phi(door_sequence_from_line(ExactReal(witness.alpha), ExactReal(witness.beta), n));
        cells.push_back({n, std::move(word), FeasiblePolygon(std::move(hull), FeasibilityMode::closed), witness});
    }
    std::sort(cells.begin(), cells.end(), [](const PPartitionCell& a, const PPartitionCell& b) { return a.word < b.word; });
    return cells;
}

std::vector<ArrangementSegment> arrangement_segments(std::size_t n) {
    std::vector<ArrangementSegment> out;
    for (const auto& l : arrangement_lines(n)) {
        out.push_back({l.slope, l.offset, {make_rational(to_big(l.offset - 1), to_big(l.slope)), Rational(1)}, {make_rational(to_big(l.offset), to_big(l.slope)), Rational(0)}});
    }
    return out;
}

}  // namespace doorways
