// cusp-atlas: command-line front end.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "cusp_atlas/errors.hpp"

namespace {

constexpr int kExitSchema = 2;
constexpr int kExitDomain = 3;
constexpr int kExitInvariant = 4;
constexpr int kDefaultBound = 20;

int effective_bound(int requested) {
    if (const char* env = std::getenv("CUSP_ATLAS_BOUND")) {
        try {
            const int cap = std::stoi(env);
            if (cap >= 0) return std::min(requested, cap);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring CUSP_ATLAS_BOUND=" << env << '\n';
        }
    }
    return requested;
}

std::string read_all(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) throw cusp_atlas::DomainError("cannot open input file " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int report(bool as_json, const char* kind, const std::string& pointer, const std::string& message, int code) {
    if (as_json) {
        nlohmann::json err{{"error", {{"kind", kind}, {"message", message}}}};
        if (!pointer.empty()) err["error"]["pointer"] = pointer;
        std::cout << err.dump(2) << '\n';
    }
    std::cerr << "error (" << kind << ")" << (pointer.empty() ? "" : " at " + pointer) << ": " << message << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace cusp_atlas;
    CLI::App app{"Dual-side combinatorics of the local Langlands correspondence for classical groups"};
    std::string command_name;
    std::optional<std::string> input;
    int bound = kDefaultBound;
    bool as_json = false;
    app.add_option("command", command_name,
                   "validate | springer | support | cuspidal-test | reducibility | bernstein | hecke | enumerate | "
                   "selfcheck")
        ->required();
    app.add_option("--input", input, "JSON input file, or - for stdin (default: stdin; selfcheck: none)");
    app.add_option("--bound", bound, "enumeration size bound (capped by CUSP_ATLAS_BOUND)")
        ->check(CLI::NonNegativeNumber);
    app.add_flag("--json", as_json, "print JSON instead of text");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitSchema;
    }

    const auto command = io::command_from_string(command_name);
    if (!command) return report(as_json, "schema", "", "unknown command '" + command_name + "'", kExitSchema);

    try {
        io::json document = io::json::object();
        if (input || *command != io::Command::Selfcheck) {
            const std::string text = read_all(input.value_or("-"));
            try {
                document = io::json::parse(text);
            } catch (const io::json::parse_error& e) {
                return report(as_json, "schema", "/", std::string("malformed JSON: ") + e.what(), kExitSchema);
            }
        }
        const io::JobSpec job = io::parse_input(*command, document);
        const io::RunResult result = io::run(job, effective_bound(bound));
        if (as_json)
            std::cout << result.output.dump(2) << '\n';
        else
            std::cout << io::render_text(result.output);
        return result.status;
    } catch (const SchemaError& e) {
        return report(as_json, "schema", e.pointer(), e.what(), kExitSchema);
    } catch (const DomainError& e) {
        return report(as_json, "domain", "", e.what(), kExitDomain);
    } catch (const InvariantError& e) {
        return report(as_json, "invariant", "", e.what(), kExitInvariant);
    } catch (const std::exception& e) {
        return report(as_json, "internal", "", e.what(), kExitInvariant);
    }
}
