#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cheeger/errors.hpp"
#include "cheeger/formulas.hpp"
#include "cheeger/solver.hpp"
#include "cheeger/sturm_liouville.hpp"
#include "cheeger/surface.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_number(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
    return buf;
}

// Round every float in the payload to the requested significant digits so
// repeated invocations print identical bytes at any precision setting.
ordered_json round_numbers(const ordered_json& j, int digits) {
    if (j.is_number_float()) {
        return ordered_json(std::strtod(format_number(j.get<double>(), digits).c_str(), nullptr));
    }
    if (j.is_object()) {
        ordered_json out = ordered_json::object();
        for (auto it = j.begin(); it != j.end(); ++it) {
            out[it.key()] = round_numbers(it.value(), digits);
        }
        return out;
    }
    if (j.is_array()) {
        ordered_json out = ordered_json::array();
        for (const auto& v : j) out.push_back(round_numbers(v, digits));
        return out;
    }
    return j;
}

void emit(const std::string& payload, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw cheeger::Error("cannot open output file '" + output_path + "'");
    out << payload;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cheeger::ParseError("cannot read input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cheeger constants of finite-area hyperbolic surfaces and the omega(h) "
                 "Sturm-Liouville toolkit"};
    app.require_subcommand(1);
    // --h is a documented option name, so help must not claim the short -h.
    app.set_help_flag("--help", "Print this help message and exit");

    int digits = 9;
    std::string output_path;
    app.add_option("--digits", digits, "Significant digits for numeric output")
        ->capture_default_str()
        ->check(CLI::Range(1, 17));
    app.add_option("-o,--output", output_path, "Write the payload to a file instead of stdout");

    auto* solve_cmd = app.add_subcommand("solve", "Compute the Cheeger constant of a surface");
    std::string input_path;
    bool disk_embeddable = false, no_prune = false, no_post_check = false, evaluations = false;
    solve_cmd->add_option("file", input_path, "surface description (JSON)")->required();
    solve_cmd->add_flag("--disk-embeddable", disk_embeddable,
                        "apply the half-area disk post-check");
    solve_cmd->add_flag("--no-prune", no_prune, "disable branch-and-bound budget tightening");
    solve_cmd->add_flag("--no-post-check", no_post_check, "skip the disk/annulus post-check");
    solve_cmd->add_flag("--evaluations", evaluations, "include the per-splitting audit trail");

    auto* ratio_cmd = app.add_subcommand("ratio", "Evaluate closed-form isoperimetric ratios");
    ratio_cmd->require_subcommand(1);
    double r = 0.0, l0 = 0.0, area = 0.0, side_a = 0.0, side_b = 0.0;
    auto* disk_cmd = ratio_cmd->add_subcommand("disk", "hyperbolic disk of radius r");
    disk_cmd->add_option("--r", r, "radius")->required();
    auto* annulus_cmd = ratio_cmd->add_subcommand("annulus", "collar around a geodesic");
    annulus_cmd->add_option("--l0", l0, "geodesic length")->required();
    annulus_cmd->add_option("--area", area, "annulus area")->required();
    auto* horocusp_cmd = ratio_cmd->add_subcommand("horocusp", "horocusp neighborhood");
    auto* torus_cmd = ratio_cmd->add_subcommand("torus", "flat torus / Klein bottle, a <= b");
    torus_cmd->add_option("--a", side_a, "shorter side")->required();
    torus_cmd->add_option("--b", side_b, "longer side")->required();

    auto* sl_lambda_cmd = app.add_subcommand("sl-lambda", "First eigenvalue of omega(h)");
    double h_param = 0.0;
    sl_lambda_cmd->add_option("--h", h_param, "Cheeger parameter")->required();

    auto* sl_invert_cmd = app.add_subcommand("sl-invert", "Invert lambda1 over h");
    double lambda_target = 0.0;
    sl_invert_cmd->add_option("--lambda", lambda_target, "eigenvalue target")->required();

    auto* sl_scan_cmd = app.add_subcommand("sl-scan", "lambda1 over a uniform h grid");
    double h_min = 0.0, h_max = 0.0;
    int steps = 0;
    bool csv = false;
    sl_scan_cmd->add_option("--min", h_min, "grid start")->required();
    sl_scan_cmd->add_option("--max", h_max, "grid end")->required();
    sl_scan_cmd->add_option("--steps", steps, "number of grid points")->required();
    sl_scan_cmd->add_flag("--csv", csv, "emit CSV (h,lambda1) instead of JSON");

    auto* bounds_cmd = app.add_subcommand("bounds", "Spectral bound pair at a given h");
    double h_bounds = 0.0;
    bounds_cmd->add_option("--h", h_bounds, "Cheeger parameter")->required();

    auto* selberg_cmd =
        app.add_subcommand("selberg-test", "Compare eigenvalue-derived Cheeger lower bounds "
                                           "against the 0.4402 ceiling");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << std::flush;
        return 2;
    }

    try {
        std::string payload;

        if (*solve_cmd) {
            cheeger::SolveOptions options;
            options.disk_embeddable = disk_embeddable;
            options.pruning = !no_prune;
            options.post_check = !no_post_check;
            options.record_evaluations = evaluations;
            const auto surface = cheeger::parse_surface(read_file(input_path));
            const auto result = cheeger::solve(surface, options);
            const auto doc = ordered_json::parse(cheeger::result_to_json(result));
            payload = round_numbers(doc, digits).dump(2) + "\n";
        } else if (*ratio_cmd) {
            double value = 0.0;
            if (*disk_cmd) value = cheeger::disk_ratio(r);
            if (*annulus_cmd) value = cheeger::annulus_ratio(l0, area);
            if (*horocusp_cmd) value = cheeger::horocusp_ratio();
            if (*torus_cmd) value = cheeger::flat_torus_cheeger(side_a, side_b);
            payload = format_number(value, digits) + "\n";
        } else if (*sl_lambda_cmd) {
            ordered_json doc;
            doc["h"] = h_param;
            doc["lambda1"] = cheeger::sl::lambda1(h_param);
            payload = round_numbers(doc, digits).dump(2) + "\n";
        } else if (*sl_invert_cmd) {
            ordered_json doc;
            doc["lambda"] = lambda_target;
            doc["h"] = cheeger::sl::invert_lambda1(lambda_target);
            payload = round_numbers(doc, digits).dump(2) + "\n";
        } else if (*sl_scan_cmd) {
            const auto scan = cheeger::sl::monotonicity_scan(h_min, h_max, steps);
            if (csv) {
                std::string text = "h,lambda1\n";
                for (const auto& pt : scan.points) {
                    text += format_number(pt.h, 12) + "," + format_number(pt.lambda1, 12) + "\n";
                }
                payload = text;
            } else {
                ordered_json doc;
                doc["points"] = ordered_json::array();
                for (const auto& pt : scan.points) {
                    ordered_json jp;
                    jp["h"] = pt.h;
                    jp["lambda1"] = pt.lambda1;
                    doc["points"].push_back(std::move(jp));
                }
                doc["strictly_increasing"] = scan.strictly_increasing;
                payload = round_numbers(doc, digits).dump(2) + "\n";
            }
        } else if (*bounds_cmd) {
            const auto bounds = cheeger::sl::classical_bounds(h_bounds);
            ordered_json doc;
            doc["h"] = h_bounds;
            doc["lambda_lower_cheeger"] = bounds.lambda_lower_cheeger;
            doc["lambda_upper_buser"] = bounds.lambda_upper_buser;
            doc["lambda_upper_agol"] = bounds.lambda_upper_agol;
            payload = round_numbers(doc, digits).dump(2) + "\n";
        } else if (*selberg_cmd) {
            const auto report = cheeger::sl::selberg_test();
            ordered_json doc;
            doc["lower_bounds"]["kim_sarnak"] = report.kim_sarnak_bound;
            doc["lower_bounds"]["selberg"] = report.selberg_bound;
            doc["ceiling"] = report.ceiling;
            doc["verdict"] = report.consistent ? "CONSISTENT" : "INCONSISTENT";
            payload = round_numbers(doc, digits).dump(2) + "\n";
        }

        emit(payload, output_path);
        return 0;
    } catch (const cheeger::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cheeger::ValidationError& e) {
        std::cerr << "error: invalid surface description, " << e.what() << "\n";
        return 2;
    } catch (const cheeger::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cheeger::NoCandidateError& e) {
        // An empty candidate set means the description is incomplete.
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cheeger::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
