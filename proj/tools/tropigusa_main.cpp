#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "tropigusa/cli.hpp"

namespace {

int fail(int code, const std::string& error_code, const std::string& message) {
    tropigusa::json err = {{"error", {{"code", error_code}, {"message", message}}}};
    std::cout << err.dump(2) << "\n";
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tropical Igusa invariants, genus-2 reduction types and torsion tropicalizations"};
    app.require_subcommand(1);

    std::string input_path, out_dir, format = "json", unit_str;
    app.add_option("--input", input_path, "input JSON document")->required();
    app.add_option("--out", out_dir, "directory for the report and artifacts (DOT/CSV)");
    app.add_option("--format", format, "what to print on stdout: json, dot or csv")
        ->check(CLI::IsMember({"json", "dot", "csv"}));
    app.add_option("--unit", unit_str, "subdivision unit override (exact rational)");

    for (const char* name : {"invariants", "classify", "skeleton", "graphjac", "tropcycle",
                             "tropgenus2", "scan"})
        app.add_subcommand(name)->fallthrough();

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();

    tropigusa::json input;
    try {
        std::ifstream in(input_path);
        if (!in) return fail(2, "InputNotFound", "cannot open input file: " + input_path);
        input = tropigusa::json::parse(in);
    } catch (const tropigusa::json::exception& e) {
        return fail(2, "InvalidJson", e.what());
    }

    try {
        std::optional<tropigusa::Rational> unit;
        if (!unit_str.empty()) unit = tropigusa::parse_rational(unit_str);

        tropigusa::ArtifactMap artifacts;
        tropigusa::json report = tropigusa::run_command(command, input, &artifacts, unit);

        if (!out_dir.empty()) {
            std::filesystem::create_directories(out_dir);
            std::ofstream(std::filesystem::path(out_dir) / "report.json")
                << report.dump(2) << "\n";
            for (const auto& [name, content] : artifacts)
                std::ofstream(std::filesystem::path(out_dir) / name) << content;
        }

        if (format == "json") {
            std::cout << report.dump(2) << "\n";
        } else {
            std::string want = format == "dot" ? ".dot" : ".csv";
            bool found = false;
            for (const auto& [name, content] : artifacts)
                if (name.size() > want.size() &&
                    name.compare(name.size() - want.size(), want.size(), want) == 0) {
                    std::cout << content;
                    found = true;
                    break;
                }
            if (!found)
                return fail(2, "NoSuchArtifact",
                            "command '" + command + "' produces no " + format + " output");
        }
        return 0;
    } catch (const tropigusa::parse_error& e) {
        return fail(2, e.code(), e.what());
    } catch (const tropigusa::json::exception& e) {
        return fail(2, "InvalidInput", e.what());
    } catch (const tropigusa::domain_error& e) {
        return fail(1, e.code(), e.what());
    } catch (const std::exception& e) {
        return fail(1, "InternalError", e.what());
    }
}
