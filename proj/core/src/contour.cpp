#include <array>
#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "hcflink/errors.hpp"
#include "hcflink/explore.hpp"

namespace hcflink::explore {
namespace {

// Lattice edges are identified by (orientation, i, j). Orientation 0 runs
// along the loss axis from (i, j) to (i+1, j); orientation 1 runs along the
// power axis from (i, j) to (i, j+1).
struct Edge {
    int orientation;
    std::size_t i;
    std::size_t j;
};

struct Segment {
    std::uint64_t from;
    std::uint64_t to;
};

class ContourTracer {
public:
    ContourTracer(const SweepGrid& grid, const std::vector<double>& values, double level)
        : grid_(grid), values_(values), level_(level), nx_(grid.losses.size()), ny_(grid.powers.size()) {}

    std::vector<Polyline> trace() {
        if (nx_ < 2 || ny_ < 2) {
            return {};
        }
        for (std::size_t i = 0; i + 1 < nx_; ++i) {
            for (std::size_t j = 0; j + 1 < ny_; ++j) {
                march_cell(i, j);
            }
        }
        return join();
    }

private:
    double value(std::size_t i, std::size_t j) const { return values_[grid_.index(i, j)]; }
    bool above(std::size_t i, std::size_t j) const { return value(i, j) > level_; }

    std::uint64_t key(const Edge& e) const {
        return (static_cast<std::uint64_t>(e.orientation) * nx_ + e.i) * ny_ + e.j;
    }

    void add_segment(const Edge& a, const Edge& b) {
        const std::uint64_t ka = key(a);
        const std::uint64_t kb = key(b);
        points_.try_emplace(ka, crossing(a));
        points_.try_emplace(kb, crossing(b));
        const std::size_t id = segments_.size();
        segments_.push_back({ka, kb});
        incident_[ka].push_back(id);
        incident_[kb].push_back(id);
    }

    ContourPoint crossing(const Edge& e) const {
        const std::size_t i2 = e.orientation == 0 ? e.i + 1 : e.i;
        const std::size_t j2 = e.orientation == 0 ? e.j : e.j + 1;
        const double v1 = value(e.i, e.j);
        const double v2 = value(i2, j2);
        const double t = (level_ - v1) / (v2 - v1);
        return {grid_.losses[e.i] + t * (grid_.losses[i2] - grid_.losses[e.i]),
                grid_.powers[e.j] + t * (grid_.powers[j2] - grid_.powers[e.j])};
    }

    void march_cell(std::size_t i, std::size_t j) {
        const bool a = above(i, j);          // (loss_i,   power_j)
        const bool b = above(i + 1, j);      // (loss_i+1, power_j)
        const bool c = above(i + 1, j + 1);  // (loss_i+1, power_j+1)
        const bool d = above(i, j + 1);      // (loss_i,   power_j+1)

        const Edge bottom{0, i, j};
        const Edge right{1, i + 1, j};
        const Edge top{0, i, j + 1};
        const Edge left{1, i, j};

        std::array<Edge, 4> crossed{};
        int n = 0;
        if (a != b) crossed[n++] = bottom;
        if (b != c) crossed[n++] = right;
        if (c != d) crossed[n++] = top;
        if (d != a) crossed[n++] = left;

        if (n == 2) {
            add_segment(crossed[0], crossed[1]);
        } else if (n == 4) {
            const double centre = 0.25 * (value(i, j) + value(i + 1, j) + value(i + 1, j + 1) + value(i, j + 1));
            if ((centre > level_) == a) {
                add_segment(bottom, right);
                add_segment(top, left);
            } else {
                add_segment(left, bottom);
                add_segment(right, top);
            }
        }
    }

    std::vector<Polyline> join() {
        std::vector<bool> used(segments_.size(), false);
        std::vector<Polyline> lines;

        const auto walk = [&](std::size_t first, std::uint64_t start) {
            Polyline line{points_.at(start)};
            std::uint64_t at = start;
            std::size_t seg = first;
            while (true) {
                used[seg] = true;
                at = segments_[seg].from == at ? segments_[seg].to : segments_[seg].from;
                line.push_back(points_.at(at));
                std::size_t next = segments_.size();
                for (std::size_t candidate : incident_.at(at)) {
                    if (!used[candidate]) {
                        next = candidate;
                        break;
                    }
                }
                if (next == segments_.size()) {
                    break;
                }
                seg = next;
            }
            lines.push_back(std::move(line));
        };

        // Open lines start at boundary crossings (degree one).
        for (std::size_t s = 0; s < segments_.size(); ++s) {
            if (used[s]) {
                continue;
            }
            for (std::uint64_t end : {segments_[s].from, segments_[s].to}) {
                if (!used[s] && incident_.at(end).size() == 1) {
                    walk(s, end);
                }
            }
        }
        // Whatever remains forms closed loops.
        for (std::size_t s = 0; s < segments_.size(); ++s) {
            if (!used[s]) {
                walk(s, segments_[s].from);
            }
        }
        return lines;
    }

    const SweepGrid& grid_;
    const std::vector<double>& values_;
    double level_;
    std::size_t nx_;
    std::size_t ny_;
    std::vector<Segment> segments_;
    std::unordered_map<std::uint64_t, ContourPoint> points_;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> incident_;
};

}  // namespace

std::vector<Polyline> extract_contour(const SweepGrid& grid, Field field, double level) {
    const auto& values = field == Field::gsnr ? grid.gsnr_db : grid.throughput_tbps;
    if (values.size() != grid.losses.size() * grid.powers.size()) {
        throw DataError("extract_contour: field size does not match grid axes");
    }
    if (!std::isfinite(level)) {
        throw DomainError("extract_contour: level must be finite");
    }
    for (double v : values) {
        if (std::isnan(v)) {
            throw DataError("extract_contour: grid contains NaN cells");
        }
    }
    return ContourTracer(grid, values, level).trace();
}

}  // namespace hcflink::explore
