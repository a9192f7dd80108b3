#include "hcflink/transceiver.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <string_view>

#include "hcflink/errors.hpp"
#include "hcflink/units.hpp"

namespace hcflink {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view text, double& out) {
    text = trim(text);
    if (text.empty()) {
        return false;
    }
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return ec == std::errc() && ptr == end && std::isfinite(out);
}

void validate_points(const std::vector<TabulatedModel::Point>& points) {
    if (points.empty()) {
        throw DataError("transceiver table is empty");
    }
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (!(points[i].gsnr_db > points[i - 1].gsnr_db)) {
            throw DataError("transceiver table GSNR values must be strictly increasing");
        }
        if (points[i].net_rate_gbps < points[i - 1].net_rate_gbps) {
            throw DataError("transceiver table rates must be nondecreasing");
        }
    }
}

struct RateVisitor {
    double gsnr_db;
    double symbol_rate_hz;

    double operator()(const ShannonGapModel& m) const {
        const double snr = units::db_to_linear(gsnr_db - m.gap_db);
        const double rate = 2.0 * symbol_rate_hz * std::log2(1.0 + snr) * 1e-9;
        return std::min(rate, m.max_rate_gbps);
    }

    double operator()(const TabulatedModel& m) const {
        const auto& pts = m.points;
        if (gsnr_db <= pts.front().gsnr_db) {
            return pts.front().net_rate_gbps;
        }
        if (gsnr_db >= pts.back().gsnr_db) {
            return pts.back().net_rate_gbps;
        }
        const auto upper = std::upper_bound(pts.begin(), pts.end(), gsnr_db,
                                            [](double g, const auto& p) { return g < p.gsnr_db; });
        const auto lower = upper - 1;
        const double t = (gsnr_db - lower->gsnr_db) / (upper->gsnr_db - lower->gsnr_db);
        return lower->net_rate_gbps + t * (upper->net_rate_gbps - lower->net_rate_gbps);
    }
};

}  // namespace

void validate(const TransceiverModel& model) {
    if (const auto* gap = std::get_if<ShannonGapModel>(&model)) {
        if (!(gap->gap_db >= 0.0) || !std::isfinite(gap->gap_db)) {
            throw DomainError("shannon-gap transceiver: gap_db must be finite and >= 0");
        }
        if (!(gap->max_rate_gbps > 0.0)) {
            throw DomainError("shannon-gap transceiver: max_rate_gbps must be positive");
        }
    } else {
        validate_points(std::get<TabulatedModel>(model).points);
    }
}

double channel_net_rate(const TransceiverModel& model, double gsnr_db, double symbol_rate_hz) {
    if (!std::isfinite(gsnr_db)) {
        throw DomainError("channel_net_rate: GSNR must be finite");
    }
    if (!(symbol_rate_hz > 0.0)) {
        throw DomainError("channel_net_rate: symbol rate must be positive");
    }
    return std::visit(RateVisitor{gsnr_db, symbol_rate_hz}, model);
}

TabulatedModel parse_transceiver_table(std::istream& in) {
    TabulatedModel table;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        view = trim(view);
        if (view.empty()) {
            continue;
        }
        const auto comma = view.find(',');
        TabulatedModel::Point p{};
        if (comma == std::string_view::npos || !parse_double(view.substr(0, comma), p.gsnr_db) ||
            !parse_double(view.substr(comma + 1), p.net_rate_gbps)) {
            throw DataError("transceiver table line " + std::to_string(line_no) +
                            ": expected 'gsnr_db,net_rate_gbps'");
        }
        if (!table.points.empty() && !(p.gsnr_db > table.points.back().gsnr_db)) {
            throw DataError("transceiver table line " + std::to_string(line_no) +
                            ": GSNR values must be strictly increasing");
        }
        if (!table.points.empty() && p.net_rate_gbps < table.points.back().net_rate_gbps) {
            throw DataError("transceiver table line " + std::to_string(line_no) +
                            ": rates must be nondecreasing");
        }
        table.points.push_back(p);
    }
    validate_points(table.points);
    return table;
}

TabulatedModel load_transceiver_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open transceiver table '" + path + "'", path);
    }
    return parse_transceiver_table(in);
}

}  // namespace hcflink
