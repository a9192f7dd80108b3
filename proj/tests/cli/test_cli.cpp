#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "cli/report.hpp"
#include "hcflink/errors.hpp"

using namespace hcflink;
using namespace hcflink::cli;

namespace {

// Small grid so contour tests stay fast.
RunConfig small_config() {
    RunConfig config;
    config.sweep.grid = explore::GridSpec{0.045, 0.085, 9, 14.0, 25.0, 12};
    config.sweep.span_points = 5;
    return config;
}

ConfigError expect_config_error(std::string_view text) {
    try {
        const RunConfig config = parse_config(text);
        validate(config);
    } catch (const ConfigError& e) {
        return e;
    }
    FAIL("expected ConfigError");
    return ConfigError({});
}

std::vector<std::string> data_lines(const std::string& csv) {
    std::vector<std::string> out;
    std::istringstream in(csv);
    for (std::string line; std::getline(in, line);)
        if (!line.empty() && line[0] != '#') out.push_back(line);
    return out;
}

std::size_t count(const std::string& haystack, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
    return n;
}

std::filesystem::path data_file(const std::string& name) {
    return std::filesystem::path(HCFLINK_TEST_DATA_DIR) / name;
}

}  // namespace

TEST_CASE("config: empty document yields defaults") {
    CHECK(parse_config("") == RunConfig{});
    CHECK(parse_config("# only a comment\n\n") == RunConfig{});
    CHECK(parse_config("{}") == RunConfig{});
}

TEST_CASE("config: sectioned and dotted overrides") {
    const RunConfig a = parse_config("[span]\nlength_km = 170\n");
    RunConfig expected;
    expected.plan.span_length_km = 170.0;
    CHECK(a == expected);

    const RunConfig b = parse_config("span.length_km = 170  # trailing comment\n");
    CHECK(b == expected);

    const RunConfig c = parse_config(R"({"span": {"length_km": 170}})");
    CHECK(c == expected);

    const RunConfig lists = parse_config("[sweep]\ncurve_losses_db_per_km = 0.05, 0.07\nlevels = 900,1000\n");
    CHECK(lists.sweep.curve_losses_db_per_km == std::vector<double>{0.05, 0.07});
    CHECK(lists.sweep.levels == std::vector<double>{900.0, 1000.0});
}

TEST_CASE("config: errors name the key and line") {
    SUBCASE("negative length is an invariant violation") {
        const ConfigError e = expect_config_error("[link]\ntotal_length_km = -1\n");
        const auto& issues = e.issues();
        REQUIRE_FALSE(issues.empty());
        const bool named = std::any_of(issues.begin(), issues.end(), [](const ConfigIssue& issue) {
            return issue.key == "link.total_length_km" && issue.kind == ConfigIssue::Kind::invariant;
        });
        CHECK(named);
    }
    SUBCASE("unknown key") {
        const ConfigError e = expect_config_error("[fiber]\nloss = 0.06\n");
        REQUIRE(e.issues().size() == 1);
        CHECK(e.issues()[0].kind == ConfigIssue::Kind::unknown_key);
        CHECK(e.issues()[0].line == 2);
        CHECK(e.issues()[0].key == "fiber.loss");
    }
    SUBCASE("syntax error carries its line") {
        const ConfigError e = expect_config_error("[fiber]\n\nthis line has no equals\n");
        REQUIRE_FALSE(e.issues().empty());
        CHECK(e.issues()[0].kind == ConfigIssue::Kind::syntax);
        CHECK(e.issues()[0].line == 3);
    }
    SUBCASE("type error") {
        const ConfigError e = expect_config_error("[fiber]\nloss_db_per_km = abc\n");
        REQUIRE(e.issues().size() == 1);
        CHECK(e.issues()[0].kind == ConfigIssue::Kind::type);
        CHECK(e.issues()[0].key == "fiber.loss_db_per_km");
    }
    SUBCASE("every issue is reported, not just the first") {
        const ConfigError e = expect_config_error("[fiber]\nloss_db_per_km = abc\nbogus = 1\n");
        CHECK(e.issues().size() == 2);
    }
    SUBCASE("duplicate key") {
        const ConfigError e = expect_config_error("span.length_km = 1\nspan.length_km = 2\n");
        REQUIRE_FALSE(e.issues().empty());
        CHECK(e.issues()[0].line == 2);
    }
    SUBCASE("malformed JSON") {
        const ConfigError e = expect_config_error("{\"span\": ");
        REQUIRE_FALSE(e.issues().empty());
        CHECK(e.issues()[0].kind == ConfigIssue::Kind::syntax);
    }
}

TEST_CASE("config: echo lines parse back to the same config") {
    RunConfig config = small_config();
    config.plan.fiber.loss_db_per_km = 0.0612345678901;
    config.sweep.levels = {950.5, 1000.0};
    std::string text;
    for (const auto& line : config_to_lines(config)) text += line + "\n";
    CHECK(parse_config(text) == config);
    CHECK(parse_config(config_to_json(config).dump()) == config);
    CHECK(config_to_lines(config).size() == config_keys().size());
}

TEST_CASE("format_number round-trips and keeps at least 9 significant digits") {
    for (double v : {0.1, 1.0 / 3.0, 6600.0, 1.4534145723312746e-06, 28.48066554224026, -65.0, 1e-300}) {
        const std::string s = format_number(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
    CHECK(format_number(1.0 / 3.0).size() >= 11);
}

TEST_CASE("JSON report round trip for every command") {
    const RunConfig config = small_config();
    for (const char* name : {"budget", "contour", "span-curve", "rbs", "powerfeed", "latency"}) {
        CAPTURE(name);
        const Report report = run_command(command_from_string(name), config);
        CHECK(command_name(report.payload) == name);
        const Report back = report_from_json(nlohmann::ordered_json::parse(render_json(report)));
        CHECK(back == report);
        CHECK(render_json(back) == render_json(report));
    }
}

TEST_CASE("CSV shape") {
    RunConfig config = small_config();
    config.sweep.grid = explore::GridSpec{0.05, 0.07, 2, 18.0, 22.0, 2};
    const Report report = run_command(Command::contour, config);
    const auto rows = data_lines(render_csv(report));
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == "loss_db_per_km,edfa_power_dbm,gsnr_db,throughput_tbps");
}

TEST_CASE("outputs are deterministic and echo the configuration") {
    const RunConfig config = small_config();
    for (const char* name : {"budget", "contour", "span-curve", "rbs", "powerfeed", "latency"}) {
        CAPTURE(name);
        const Command cmd = command_from_string(name);
        const Report a = run_command(cmd, config);
        const Report b = run_command(cmd, config);
        CHECK(render_csv(a) == render_csv(b));
        CHECK(render_json(a) == render_json(b));

        const std::string csv = render_csv(a);
        const std::string json = render_json(a);
        for (const auto& key : config_keys()) {
            CHECK(csv.find("# " + key + " = ") != std::string::npos);
        }
        CHECK(nlohmann::ordered_json::parse(json).contains("config"));
    }

    // Thread count must not leak into values.
    RunConfig one = config;
    one.sweep.threads = 1;
    RunConfig many = config;
    many.sweep.threads = 4;
    const auto grid_one = std::get<ContourResult>(run_command(Command::contour, one).payload).grid;
    const auto grid_many = std::get<ContourResult>(run_command(Command::contour, many).payload).grid;
    CHECK(grid_one == grid_many);
}

TEST_CASE("SVG contains one polyline per extracted line and echoes the config") {
    const RunConfig config = small_config();
    const Report report = run_command(Command::contour, config);
    const auto& result = std::get<ContourResult>(report.payload);
    std::size_t lines = 0;
    for (const auto& level : result.contours) lines += level.lines.size();
    CHECK(lines > 0);

    const std::string svg = render_svg(report);
    CHECK(count(svg, "<polyline class=\"contour\"") == lines);
    CHECK(svg.find("<metadata>") != std::string::npos);
    CHECK(svg.find("link.total_length_km") != std::string::npos);

    CHECK_THROWS(render_svg(run_command(Command::rbs, config)));
    CHECK(render_svg(report) == svg);
}

TEST_CASE("flags override the configuration and show in the echo") {
    const RunConfig config = small_config();
    Flags flags;
    flags.include_rbs = true;
    flags.target_tbps = 900.0;
    flags.levels = std::vector<double>{900.0};
    flags.field = "gsnr";
    const RunConfig applied = apply_flags(config, flags);
    CHECK(applied.sweep.include_rbs);
    CHECK(applied.sweep.target_tbps == 900.0);
    CHECK(applied.sweep.contour_field == "gsnr");

    const Report report = run_command(Command::span_curve, config, flags);
    CHECK(report.config.sweep.target_tbps == 900.0);
    CHECK(render_csv(report).find("# sweep.target_tbps = 900") != std::string::npos);
}

TEST_CASE("calibrated gap is recorded in the report") {
    const Report report = run_command(Command::budget, RunConfig{});
    REQUIRE(report.transceiver.has_value());
    const auto* shannon = std::get_if<ShannonGapModel>(&*report.transceiver);
    REQUIRE(shannon != nullptr);
    CHECK(shannon->gap_db == doctest::Approx(4.640121712601398).epsilon(1e-9));
    const auto& budget = std::get<BudgetResult>(report.payload);
    CHECK(budget.throughput_tbps == doctest::Approx(1000.0).epsilon(1e-6));
}

TEST_CASE("tabulated transceiver via --trx-table") {
    Flags flags;
    flags.trx_table = data_file("trx_table.csv").string();
    const Report report = run_command(Command::budget, RunConfig{}, flags);
    REQUIRE(report.transceiver.has_value());
    CHECK(std::holds_alternative<TabulatedModel>(*report.transceiver));
    CHECK(report.config.transceiver.model == "tabulated");
    const auto& budget = std::get<BudgetResult>(report.payload);
    CHECK(budget.channel_rate_gbps > 500.0);
    CHECK(budget.channel_rate_gbps < 700.0);

    flags.trx_table = data_file("bad_trx_table.csv").string();
    CHECK_THROWS_AS(run_command(Command::budget, RunConfig{}, flags), ConfigError);
}

TEST_CASE("exceptions map to exit codes") {
    auto code_of = [](auto thrower) {
        try {
            thrower();
        } catch (...) {
            return describe_current_exception().first;
        }
        return -1;
    };
    CHECK(code_of([] { throw ConfigError({{ConfigIssue::Kind::type, 1, "a.b", "x"}}); }) == kConfigError);
    CHECK(code_of([] { throw DomainError("x"); }) == kConfigError);
    CHECK(code_of([] { throw InfeasibleError("x", 1.0, 2.0); }) == kInfeasible);
    CHECK(code_of([] { throw IoError("x", "/nope"); }) == kIoError);
    CHECK(code_of([] { throw std::logic_error("x"); }) == kInternalError);

    CHECK(code_of([] { (void)read_file("/definitely/not/here.cfg"); }) == kIoError);
    CHECK(code_of([] {
              write_outputs(run_command(Command::latency, RunConfig{}), Format::csv, "/definitely/not/here.csv");
          }) == kIoError);

    RunConfig impossible;
    impossible.transceiver.calibration_target_tbps = 1e6;
    CHECK(code_of([&] { (void)run_command(Command::budget, impossible); }) == kInfeasible);

    try {
        throw InfeasibleError("bracket", 5.0, 30.0);
    } catch (...) {
        const auto doc = describe_current_exception().second;
        CHECK(doc.dump().find("infeasible") != std::string::npos);
    }
}

TEST_CASE("span curve with no feasible point is flagged") {
    Flags flags;
    flags.target_tbps = 1e6;
    const Report report = run_command(Command::span_curve, small_config(), flags);
    CHECK(nothing_solved(report));
    CHECK_FALSE(nothing_solved(run_command(Command::span_curve, small_config())));
}
