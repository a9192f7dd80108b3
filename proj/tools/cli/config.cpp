#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <variant>

#include <fmt/format.h>

namespace hcflink::cli {
namespace {

using Json = nlohmann::ordered_json;

template <typename T>
using Ref = std::function<T&(RunConfig&)>;

/// Returns an empty string when the value is acceptable.
template <typename T>
using Check = std::function<std::string(const T&)>;

template <typename T>
struct Field {
    Ref<T> ref;
    Check<T> check;
};

using AnyField = std::variant<Field<double>, Field<int>, Field<bool>, Field<std::string>,
                              Field<std::vector<double>>>;

struct Entry {
    std::string path;
    AnyField field;
};

std::string positive(const double& x) { return std::isfinite(x) && x > 0.0 ? "" : "must be positive"; }
std::string nonnegative(const double& x) { return std::isfinite(x) && x >= 0.0 ? "" : "must be >= 0"; }
std::string nonpositive(const double& x) { return std::isfinite(x) && x <= 0.0 ? "" : "must be <= 0"; }
std::string finite(const double& x) { return std::isfinite(x) ? "" : "must be finite"; }
std::string nonzero(const double& x) { return std::isfinite(x) && x != 0.0 ? "" : "must be nonzero"; }
std::string at_least_one(const double& x) { return std::isfinite(x) && x >= 1.0 ? "" : "must be >= 1"; }
std::string count_ge1(const int& n) { return n >= 1 ? "" : "must be >= 1"; }
std::string count_ge0(const int& n) { return n >= 0 ? "" : "must be >= 0"; }
std::string any_bool(const bool&) { return ""; }
std::string any_string(const std::string&) { return ""; }
std::string positive_list(const std::vector<double>& v) {
    if (v.empty()) return "must list at least one value";
    for (double x : v) {
        if (!(std::isfinite(x) && x > 0.0)) return "values must be positive";
    }
    return "";
}
std::string finite_list(const std::vector<double>& v) {
    for (double x : v) {
        if (!std::isfinite(x)) return "values must be finite";
    }
    return "";
}
std::string one_of(const std::string& value, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (value == a) return "";
    }
    std::string joined;
    for (const char* a : allowed) joined += (joined.empty() ? "" : ", ") + std::string(a);
    return "must be one of: " + joined;
}

template <typename T>
Entry entry(std::string path, Ref<T> ref, Check<T> check) {
    return Entry{std::move(path), Field<T>{std::move(ref), std::move(check)}};
}

const std::vector<Entry>& schema() {
    static const std::vector<Entry> entries = [] {
        std::vector<Entry> e;
        // fiber
        e.push_back(entry<double>("fiber.loss_db_per_km", [](RunConfig& c) -> double& { return c.plan.fiber.loss_db_per_km; }, positive));
        e.push_back(entry<double>("fiber.dispersion_ps_nm_km", [](RunConfig& c) -> double& { return c.plan.fiber.dispersion_ps_nm_km; }, nonzero));
        e.push_back(entry<double>("fiber.gamma_per_W_km", [](RunConfig& c) -> double& { return c.plan.fiber.gamma_per_W_km; }, nonnegative));
        e.push_back(entry<double>("fiber.imi_db_per_km", [](RunConfig& c) -> double& { return c.plan.fiber.imi_db_per_km; }, nonpositive));
        e.push_back(entry<double>("fiber.backscatter_db_per_km", [](RunConfig& c) -> double& { return c.plan.fiber.backscatter_db_per_km; }, nonpositive));
        e.push_back(entry<double>("fiber.group_index", [](RunConfig& c) -> double& { return c.plan.fiber.group_index; }, at_least_one));
        e.push_back(entry<double>("fiber.scf_group_index", [](RunConfig& c) -> double& { return c.scf_group_index; }, at_least_one));
        // span
        e.push_back(entry<double>("span.length_km", [](RunConfig& c) -> double& { return c.plan.span_length_km; }, positive));
        // link
        e.push_back(entry<double>("link.total_length_km", [](RunConfig& c) -> double& { return c.plan.total_length_km; }, positive));
        e.push_back(entry<double>("link.band_hz", [](RunConfig& c) -> double& { return c.plan.band_hz; }, positive));
        e.push_back(entry<double>("link.channel_spacing_hz", [](RunConfig& c) -> double& { return c.plan.channel_spacing_hz; }, positive));
        e.push_back(entry<double>("link.symbol_rate_hz", [](RunConfig& c) -> double& { return c.plan.symbol_rate_hz; }, positive));
        e.push_back(entry<int>("link.n_fibers_per_direction", [](RunConfig& c) -> int& { return c.plan.n_fibers_per_direction; }, count_ge0));
        // amplifier
        e.push_back(entry<double>("amplifier.noise_figure_db", [](RunConfig& c) -> double& { return c.plan.amp.noise_figure_db; }, positive));
        e.push_back(entry<double>("amplifier.total_output_power_dbm", [](RunConfig& c) -> double& { return c.plan.amp.total_output_power_dbm; }, finite));
        e.push_back(entry<double>("amplifier.pre_input_loss_db", [](RunConfig& c) -> double& { return c.plan.amp.pre_input_loss_db; }, nonnegative));
        e.push_back(entry<double>("amplifier.post_output_loss_db", [](RunConfig& c) -> double& { return c.plan.amp.post_output_loss_db; }, nonnegative));
        // transceiver
        e.push_back(entry<std::string>("transceiver.model", [](RunConfig& c) -> std::string& { return c.transceiver.model; },
                                       [](const std::string& s) { return one_of(s, {"shannon_gap", "tabulated"}); }));
        e.push_back(entry<double>("transceiver.gap_db", [](RunConfig& c) -> double& { return c.transceiver.gap_db; }, nonnegative));
        e.push_back(entry<bool>("transceiver.calibrate", [](RunConfig& c) -> bool& { return c.transceiver.calibrate; }, any_bool));
        e.push_back(entry<double>("transceiver.max_rate_gbps", [](RunConfig& c) -> double& { return c.transceiver.max_rate_gbps; }, nonnegative));
        e.push_back(entry<std::string>("transceiver.table", [](RunConfig& c) -> std::string& { return c.transceiver.table; }, any_string));
        e.push_back(entry<double>("transceiver.calibration_target_tbps", [](RunConfig& c) -> double& { return c.transceiver.calibration_target_tbps; }, positive));
        e.push_back(entry<double>("transceiver.calibration_loss_db_per_km", [](RunConfig& c) -> double& { return c.transceiver.calibration_loss_db_per_km; }, positive));
        e.push_back(entry<double>("transceiver.calibration_power_dbm", [](RunConfig& c) -> double& { return c.transceiver.calibration_power_dbm; }, finite));
        e.push_back(entry<bool>("transceiver.calibration_include_rbs", [](RunConfig& c) -> bool& { return c.transceiver.calibration_include_rbs; }, any_bool));
        // powerfeed
        e.push_back(entry<double>("powerfeed.feed_current_a", [](RunConfig& c) -> double& { return c.powerfeed.feed_current_a; }, positive));
        e.push_back(entry<double>("powerfeed.cable_resistance_ohm_per_km", [](RunConfig& c) -> double& { return c.powerfeed.cable_resistance_ohm_per_km; }, positive));
        e.push_back(entry<double>("powerfeed.repeater_power_w", [](RunConfig& c) -> double& { return c.powerfeed.repeater_power_w; }, positive));
        e.push_back(entry<double>("powerfeed.supply_limit_w", [](RunConfig& c) -> double& { return c.powerfeed.supply_limit_w; }, positive));
        // sweep
        e.push_back(entry<double>("sweep.loss_min", [](RunConfig& c) -> double& { return c.sweep.grid.loss_min; }, positive));
        e.push_back(entry<double>("sweep.loss_max", [](RunConfig& c) -> double& { return c.sweep.grid.loss_max; }, positive));
        e.push_back(entry<int>("sweep.loss_steps", [](RunConfig& c) -> int& { return c.sweep.grid.loss_steps; }, count_ge1));
        e.push_back(entry<double>("sweep.power_min", [](RunConfig& c) -> double& { return c.sweep.grid.power_min; }, finite));
        e.push_back(entry<double>("sweep.power_max", [](RunConfig& c) -> double& { return c.sweep.grid.power_max; }, finite));
        e.push_back(entry<int>("sweep.power_steps", [](RunConfig& c) -> int& { return c.sweep.grid.power_steps; }, count_ge1));
        e.push_back(entry<double>("sweep.target_tbps", [](RunConfig& c) -> double& { return c.sweep.target_tbps; }, positive));
        e.push_back(entry<bool>("sweep.include_rbs", [](RunConfig& c) -> bool& { return c.sweep.include_rbs; }, any_bool));
        e.push_back(entry<std::vector<double>>("sweep.curve_losses_db_per_km", [](RunConfig& c) -> std::vector<double>& { return c.sweep.curve_losses_db_per_km; }, positive_list));
        e.push_back(entry<double>("sweep.span_min_km", [](RunConfig& c) -> double& { return c.sweep.span_min_km; }, positive));
        e.push_back(entry<double>("sweep.span_max_km", [](RunConfig& c) -> double& { return c.sweep.span_max_km; }, positive));
        e.push_back(entry<int>("sweep.span_points", [](RunConfig& c) -> int& { return c.sweep.span_points; }, count_ge1));
        e.push_back(entry<double>("sweep.solver_power_low_dbm", [](RunConfig& c) -> double& { return c.sweep.solver.power_low_dbm; }, finite));
        e.push_back(entry<double>("sweep.solver_power_high_dbm", [](RunConfig& c) -> double& { return c.sweep.solver.power_high_dbm; }, finite));
        e.push_back(entry<double>("sweep.solver_tolerance_db", [](RunConfig& c) -> double& { return c.sweep.solver.tolerance_db; }, positive));
        e.push_back(entry<int>("sweep.solver_max_iterations", [](RunConfig& c) -> int& { return c.sweep.solver.max_iterations; }, count_ge1));
        e.push_back(entry<int>("sweep.threads", [](RunConfig& c) -> int& { return c.sweep.threads; }, count_ge0));
        e.push_back(entry<std::string>("sweep.contour_field", [](RunConfig& c) -> std::string& { return c.sweep.contour_field; },
                                       [](const std::string& s) { return one_of(s, {"gsnr", "throughput"}); }));
        e.push_back(entry<std::vector<double>>("sweep.levels", [](RunConfig& c) -> std::vector<double>& { return c.sweep.levels; }, finite_list));
        return e;
    }();
    return entries;
}

const Entry* find_entry(std::string_view path) {
    for (const auto& e : schema()) {
        if (e.path == path) return &e;
    }
    return nullptr;
}

std::set<std::string> section_names() {
    std::set<std::string> names;
    for (const auto& e : schema()) names.insert(e.path.substr(0, e.path.find('.')));
    return names;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view text) {
    text = trim(text);
    if (text.empty()) return std::nullopt;
    if (text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value)) return std::nullopt;
    return value;
}

std::optional<int> parse_int(std::string_view text) {
    text = trim(text);
    if (text.empty()) return std::nullopt;
    int value = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) return std::nullopt;
    return value;
}

std::optional<bool> parse_bool(std::string_view text) {
    text = trim(text);
    if (text == "true") return true;
    if (text == "false") return false;
    return std::nullopt;
}

std::optional<std::string> parse_string(std::string_view text) {
    text = trim(text);
    if (text.size() >= 2 && text.front() == '"') {
        if (text.back() != '"') return std::nullopt;
        return std::string(text.substr(1, text.size() - 2));
    }
    if (text.find('"') != std::string_view::npos) return std::nullopt;
    return std::string(text);
}

std::optional<std::vector<double>> parse_list(std::string_view text) {
    text = trim(text);
    if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
        text = trim(text.substr(1, text.size() - 2));
    }
    std::vector<double> values;
    if (text.empty()) return values;
    while (true) {
        const auto comma = text.find(',');
        const auto value = parse_number(text.substr(0, comma));
        if (!value) return std::nullopt;
        values.push_back(*value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return values;
}

const char* type_name(const AnyField& field) {
    return std::visit(
        [](const auto& f) -> const char* {
            using T = std::decay_t<decltype(f.ref(std::declval<RunConfig&>()))>;
            if constexpr (std::is_same_v<T, double>) return "number";
            else if constexpr (std::is_same_v<T, int>) return "integer";
            else if constexpr (std::is_same_v<T, bool>) return "boolean (true/false)";
            else if constexpr (std::is_same_v<T, std::string>) return "string";
            else return "comma-separated list of numbers";
        },
        field);
}

/// Assigns a raw text value; returns false on a type mismatch.
bool assign_text(RunConfig& config, const Entry& e, std::string_view raw) {
    return std::visit(
        [&](const auto& f) -> bool {
            using T = std::decay_t<decltype(f.ref(config))>;
            std::optional<T> parsed;
            if constexpr (std::is_same_v<T, double>) parsed = parse_number(raw);
            else if constexpr (std::is_same_v<T, int>) parsed = parse_int(raw);
            else if constexpr (std::is_same_v<T, bool>) parsed = parse_bool(raw);
            else if constexpr (std::is_same_v<T, std::string>) parsed = parse_string(raw);
            else parsed = parse_list(raw);
            if (!parsed) return false;
            f.ref(config) = std::move(*parsed);
            return true;
        },
        e.field);
}

bool assign_json(RunConfig& config, const Entry& e, const Json& value) {
    return std::visit(
        [&](const auto& f) -> bool {
            using T = std::decay_t<decltype(f.ref(config))>;
            if constexpr (std::is_same_v<T, double>) {
                if (!value.is_number()) return false;
                f.ref(config) = value.template get<double>();
            } else if constexpr (std::is_same_v<T, int>) {
                if (!value.is_number_integer()) return false;
                f.ref(config) = value.template get<int>();
            } else if constexpr (std::is_same_v<T, bool>) {
                if (!value.is_boolean()) return false;
                f.ref(config) = value.template get<bool>();
            } else if constexpr (std::is_same_v<T, std::string>) {
                if (!value.is_string()) return false;
                f.ref(config) = value.template get<std::string>();
            } else {
                if (!value.is_array()) return false;
                std::vector<double> list;
                for (const auto& item : value) {
                    if (!item.is_number()) return false;
                    list.push_back(item.template get<double>());
                }
                f.ref(config) = std::move(list);
            }
            return true;
        },
        e.field);
}

void check_fields(const RunConfig& config, const std::map<std::string, int>& lines,
                  std::vector<ConfigIssue>& issues) {
    RunConfig copy = config;
    const auto line_of = [&](const std::string& key) {
        const auto it = lines.find(key);
        return it == lines.end() ? 0 : it->second;
    };
    for (const auto& e : schema()) {
        const std::string problem =
            std::visit([&](const auto& f) { return f.check(f.ref(copy)); }, e.field);
        if (!problem.empty()) {
            issues.push_back({ConfigIssue::Kind::invariant, line_of(e.path), e.path, e.path + " " + problem});
        }
    }

    const auto cross = [&](bool ok, const std::string& key, const std::string& message) {
        if (!ok) issues.push_back({ConfigIssue::Kind::invariant, line_of(key), key, message});
    };
    const auto& plan = config.plan;
    cross(!(plan.span_length_km > plan.total_length_km), "span.length_km",
          "span.length_km must not exceed link.total_length_km");
    cross(!(plan.channel_spacing_hz < plan.symbol_rate_hz), "link.channel_spacing_hz",
          "link.channel_spacing_hz must be >= link.symbol_rate_hz (no spectral overlap)");
    cross(!(plan.band_hz < plan.channel_spacing_hz), "link.band_hz",
          "link.band_hz must hold at least one channel");
    const auto& grid = config.sweep.grid;
    cross(grid.loss_steps == 1 ? grid.loss_min == grid.loss_max : grid.loss_min < grid.loss_max,
          "sweep.loss_min", "sweep.loss_min must be < sweep.loss_max (equal only with one step)");
    cross(grid.power_steps == 1 ? grid.power_min == grid.power_max : grid.power_min < grid.power_max,
          "sweep.power_min", "sweep.power_min must be < sweep.power_max (equal only with one step)");
    cross(config.sweep.span_points == 1 ? config.sweep.span_min_km <= config.sweep.span_max_km
                                        : config.sweep.span_min_km < config.sweep.span_max_km,
          "sweep.span_min_km", "sweep.span_min_km must be < sweep.span_max_km");
    cross(config.sweep.solver.power_low_dbm < config.sweep.solver.power_high_dbm, "sweep.solver_power_low_dbm",
          "sweep.solver_power_low_dbm must be < sweep.solver_power_high_dbm");
    cross(config.transceiver.model != "tabulated" || !config.transceiver.table.empty(), "transceiver.table",
          "transceiver.table must name a file when transceiver.model = tabulated");
}

RunConfig parse_text(std::string_view text) {
    RunConfig config;
    std::vector<ConfigIssue> issues;
    std::map<std::string, int> seen;
    const auto sections = section_names();
    std::string section;
    int line_no = 0;

    for (std::size_t pos = 0; pos <= text.size();) {
        const auto newline = text.find('\n', pos);
        std::string_view line = text.substr(pos, newline == std::string_view::npos ? text.npos : newline - pos);
        pos = newline == std::string_view::npos ? text.size() + 1 : newline + 1;
        ++line_no;

        // Strip comments outside double quotes.
        bool quoted = false;
        for (std::size_t k = 0; k < line.size(); ++k) {
            if (line[k] == '"') quoted = !quoted;
            if (line[k] == '#' && !quoted) {
                line = line.substr(0, k);
                break;
            }
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }

        if (line.front() == '[') {
            if (line.back() != ']') {
                issues.push_back({ConfigIssue::Kind::syntax, line_no, "", "malformed section header"});
                continue;
            }
            const std::string name(trim(line.substr(1, line.size() - 2)));
            if (!sections.contains(name)) {
                issues.push_back({ConfigIssue::Kind::unknown_key, line_no, name, "unknown section '" + name + "'"});
                section.clear();
                continue;
            }
            section = name;
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            issues.push_back({ConfigIssue::Kind::syntax, line_no, "", "expected 'key = value'"});
            continue;
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view raw = trim(line.substr(eq + 1));
        if (key.empty()) {
            issues.push_back({ConfigIssue::Kind::syntax, line_no, "", "missing key before '='"});
            continue;
        }
        std::string path = key;
        if (key.find('.') == std::string::npos) {
            if (section.empty()) {
                issues.push_back({ConfigIssue::Kind::syntax, line_no, key,
                                  "key '" + key + "' outside a [section]; use section.key"});
                continue;
            }
            path = section + "." + key;
        }
        const Entry* e = find_entry(path);
        if (e == nullptr) {
            issues.push_back({ConfigIssue::Kind::unknown_key, line_no, path, "unknown key '" + path + "'"});
            continue;
        }
        if (const auto [it, inserted] = seen.emplace(path, line_no); !inserted) {
            issues.push_back({ConfigIssue::Kind::syntax, line_no, path,
                              fmt::format("duplicate key '{}' (first set on line {})", path, it->second)});
            continue;
        }
        if (!assign_text(config, *e, raw)) {
            issues.push_back({ConfigIssue::Kind::type, line_no, path,
                              fmt::format("{}: expected {}, got '{}'", path, type_name(e->field), raw)});
        }
    }

    check_fields(config, seen, issues);
    if (!issues.empty()) throw ConfigError(std::move(issues));
    return config;
}

RunConfig parse_json(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        const auto prefix = text.substr(0, std::min<std::size_t>(e.byte, text.size()));
        const int line = 1 + static_cast<int>(std::count(prefix.begin(), prefix.end(), '\n'));
        throw ConfigError({{ConfigIssue::Kind::syntax, line, "", e.what()}});
    }
    if (!doc.is_object()) {
        throw ConfigError({{ConfigIssue::Kind::syntax, 1, "", "JSON configuration must be an object"}});
    }

    RunConfig config;
    std::vector<ConfigIssue> issues;
    const auto sections = section_names();
    for (const auto& [section, body] : doc.items()) {
        if (!sections.contains(section)) {
            issues.push_back({ConfigIssue::Kind::unknown_key, 0, section, "unknown section '" + section + "'"});
            continue;
        }
        if (!body.is_object()) {
            issues.push_back({ConfigIssue::Kind::type, 0, section, section + ": expected an object"});
            continue;
        }
        for (const auto& [key, value] : body.items()) {
            const std::string path = section + "." + key;
            const Entry* e = find_entry(path);
            if (e == nullptr) {
                issues.push_back({ConfigIssue::Kind::unknown_key, 0, path, "unknown key '" + path + "'"});
                continue;
            }
            if (!assign_json(config, *e, value)) {
                issues.push_back({ConfigIssue::Kind::type, 0, path,
                                  fmt::format("{}: expected {}, got {}", path, type_name(e->field), value.dump())});
            }
        }
    }
    check_fields(config, {}, issues);
    if (!issues.empty()) throw ConfigError(std::move(issues));
    return config;
}

std::string summarise(const std::vector<ConfigIssue>& issues) {
    std::string out;
    for (const auto& issue : issues) {
        if (!out.empty()) out += "; ";
        if (issue.line > 0) out += fmt::format("line {}: ", issue.line);
        out += issue.message;
    }
    return out;
}

}  // namespace

std::string to_string(ConfigIssue::Kind kind) {
    switch (kind) {
        case ConfigIssue::Kind::syntax: return "syntax";
        case ConfigIssue::Kind::unknown_key: return "unknown_key";
        case ConfigIssue::Kind::type: return "type";
        case ConfigIssue::Kind::invariant: return "invariant";
    }
    return "unknown";
}

ConfigError::ConfigError(std::vector<ConfigIssue> issues)
    : std::runtime_error(summarise(issues)), issues_(std::move(issues)) {}

RunConfig parse_config(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        return parse_json(text);
    }
    return parse_text(text);
}

void validate(const RunConfig& config) {
    std::vector<ConfigIssue> issues;
    check_fields(config, {}, issues);
    if (!issues.empty()) throw ConfigError(std::move(issues));
}

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    return fmt::format("{}", value);
}

nlohmann::ordered_json config_to_json(const RunConfig& config) {
    Json doc = Json::object();
    RunConfig copy = config;
    for (const auto& e : schema()) {
        const auto dot = e.path.find('.');
        const std::string section = e.path.substr(0, dot);
        const std::string key = e.path.substr(dot + 1);
        std::visit([&](const auto& f) { doc[section][key] = f.ref(copy); }, e.field);
    }
    return doc;
}

std::vector<std::string> config_to_lines(const RunConfig& config) {
    std::vector<std::string> lines;
    RunConfig copy = config;
    for (const auto& e : schema()) {
        std::visit(
            [&](const auto& f) {
                using T = std::decay_t<decltype(f.ref(copy))>;
                const T& value = f.ref(copy);
                std::string text;
                if constexpr (std::is_same_v<T, double>) text = format_number(value);
                else if constexpr (std::is_same_v<T, int>) text = std::to_string(value);
                else if constexpr (std::is_same_v<T, bool>) text = value ? "true" : "false";
                else if constexpr (std::is_same_v<T, std::string>) text = "\"" + value + "\"";
                else {
                    for (double v : value) text += (text.empty() ? "" : ",") + format_number(v);
                }
                lines.push_back(e.path + " = " + text);
            },
            e.field);
    }
    return lines;
}

std::vector<std::string> config_keys() {
    std::vector<std::string> keys;
    for (const auto& e : schema()) keys.push_back(e.path);
    return keys;
}

}  // namespace hcflink::cli
