#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "hcflink/errors.hpp"
#include "hcflink/explore.hpp"

namespace hcflink::explore {
namespace {

std::vector<double> linspace(double lo, double hi, int steps) {
    std::vector<double> values(static_cast<std::size_t>(steps));
    if (steps == 1) {
        values[0] = lo;
        return values;
    }
    for (int k = 0; k < steps; ++k) {
        values[static_cast<std::size_t>(k)] = lo + (hi - lo) * k / (steps - 1);
    }
    values.back() = hi;
    return values;
}

void check_axis(double lo, double hi, int steps, const char* name) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw DomainError(std::string("sweep.") + name + " bounds must be finite");
    }
    if (steps < 1) {
        throw DomainError(std::string("sweep.") + name + "_steps must be >= 1");
    }
    if (steps == 1 ? lo != hi : !(lo < hi)) {
        throw DomainError(std::string("sweep.") + name +
                          "_min must be < max (or equal to it for a single step)");
    }
}

}  // namespace

void validate(const GridSpec& grid) {
    check_axis(grid.loss_min, grid.loss_max, grid.loss_steps, "loss");
    check_axis(grid.power_min, grid.power_max, grid.power_steps, "power");
    if (!(grid.loss_min > 0.0)) {
        throw DomainError("sweep.loss_min must be positive");
    }
}

std::string to_string(Field field) { return field == Field::gsnr ? "gsnr" : "throughput"; }

Field field_from_string(const std::string& name) {
    if (name == "gsnr") {
        return Field::gsnr;
    }
    if (name == "throughput") {
        return Field::throughput;
    }
    throw DomainError("unknown contour field '" + name + "' (expected gsnr or throughput)");
}

SweepGrid sweep_grid(const LinkPlan& plan, const TransceiverModel& trx, const GridSpec& grid,
                     bool include_rbs, unsigned threads) {
    validate(grid);
    validate(plan);
    validate(trx);

    SweepGrid out;
    out.losses = linspace(grid.loss_min, grid.loss_max, grid.loss_steps);
    out.powers = linspace(grid.power_min, grid.power_max, grid.power_steps);
    const std::size_t cells = out.losses.size() * out.powers.size();
    out.gsnr_db.assign(cells, 0.0);
    out.throughput_tbps.assign(cells, 0.0);

    const int n_channels = channels_in_band(plan.band_hz, plan.channel_spacing_hz);
    const auto evaluate_row = [&](std::size_t i) {
        for (std::size_t j = 0; j < out.powers.size(); ++j) {
            const OperatingPoint op{out.losses[i], out.powers[j]};
            const SnrBudget budget = link_gsnr(plan, op, include_rbs);
            const double rate = channel_net_rate(trx, budget.gsnr_db, plan.symbol_rate_hz);
            out.gsnr_db[out.index(i, j)] = budget.gsnr_db;
            out.throughput_tbps[out.index(i, j)] = plan.n_fibers_per_direction * n_channels * rate * 1e-3;
        }
    };

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min<unsigned>(threads, static_cast<unsigned>(out.losses.size()));
    if (threads <= 1) {
        for (std::size_t i = 0; i < out.losses.size(); ++i) {
            evaluate_row(i);
        }
        return out;
    }

    std::atomic<std::size_t> next_row{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            workers.emplace_back([&] {
                for (std::size_t i = next_row++; i < out.losses.size(); i = next_row++) {
                    try {
                        evaluate_row(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) {
                            failure = std::current_exception();
                        }
                        return;
                    }
                }
            });
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

}  // namespace hcflink::explore
