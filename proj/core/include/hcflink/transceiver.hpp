#pragma once

#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hcflink {

/// Shannon capacity of a dual-polarisation channel derated by a fixed SNR gap.
struct ShannonGapModel {
    double gap_db = 0.0;
    double max_rate_gbps = std::numeric_limits<double>::infinity();

    bool operator==(const ShannonGapModel&) const = default;
};

/// Measured or digitised rate-vs-GSNR curve, interpolated piecewise-linearly
/// and clamped outside its range.
struct TabulatedModel {
    struct Point {
        double gsnr_db;
        double net_rate_gbps;
        bool operator==(const Point&) const = default;
    };
    std::vector<Point> points;

    bool operator==(const TabulatedModel&) const = default;
};

using TransceiverModel = std::variant<ShannonGapModel, TabulatedModel>;

void validate(const TransceiverModel& model);

/// Net information rate of one channel in Gb/s.
double channel_net_rate(const TransceiverModel& model, double gsnr_db, double symbol_rate_hz);

/// Reads "gsnr_db,net_rate_gbps" lines; '#' starts a comment. Throws
/// DataError with the line number on malformed or non-monotone input.
TabulatedModel parse_transceiver_table(std::istream& in);
TabulatedModel load_transceiver_table(const std::string& path);

}  // namespace hcflink
