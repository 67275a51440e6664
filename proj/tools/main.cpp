#include "quiverkit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw quiverkit::Error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quiverkit: finite quivers, group actions and their invariants"};
    app.require_subcommand(1);

    std::string input, output;
    std::vector<std::string> names;
    bool strict = false, relaxed = false;

    const std::vector<std::string> commands{
        "build", "verify-action", "quotient",   "skew",    "coset",        "relation",
        "classify", "roundtrip",  "iso",        "components", "ktheory",  "presentation",
        "report"};
    for (const auto& c : commands) {
        auto* sub = app.add_subcommand(c);
        sub->add_option("--input", input, "workspace JSON document")->required();
        sub->add_option("--name", names,
                        "object or construction name (repeat for commands taking two)");
        sub->add_option("--output", output, "also write the JSON report to this file");
        sub->add_flag("--strict", strict, "strict measure-system mode for quivers");
        sub->add_flag("--relaxed", relaxed, "permit source-fiberless vertices");
    }

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        if (strict && relaxed) throw quiverkit::SchemaError("--strict conflicts with --relaxed");
        auto ws = quiverkit::parse_document(slurp(input), input, !relaxed);
        auto result = quiverkit::run_command(ws, command, names);

        const std::string text = result.report.dump(2) + "\n";
        std::cout << text;
        if (!output.empty()) {
            std::ofstream out(output, std::ios::binary);
            if (!out) throw quiverkit::Error("cannot open output file: " + output);
            out << text;
        }
        if (!result.human.empty()) std::cerr << result.human << "\n";
        return result.exit_code;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
