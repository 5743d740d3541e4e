#pragma once

#include <colorhom/hochschild.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace colorhom {

// Problem description as parsed from a spec file: names resolved and scalars
// parsed, but no axiom checked yet, so that deliberately broken inputs still
// load and the validate command can point at the broken axiom.
struct ModuleSpec {
    std::string name;
    bool bimodule = false;
    std::vector<ModuleBasisElement> basis;
    std::vector<ExactMatrix> act;
    std::vector<ExactMatrix> ract;
};

struct SpecOptions {
    int n_max = 3;
    int p_max = 3;
    int word_len = 3;
    std::optional<std::vector<GroupElement>> degree_window;
};

struct ProblemSpec {
    GroupSpec group;
    Bicharacter chi;
    std::vector<LieBasisElement> basis;
    std::vector<BracketEntry> brackets;
    std::vector<ModuleSpec> modules;
    SpecOptions options;
};

// Parse failure, carrying the JSON pointer of the offending node; syntax
// errors carry an explicit position instead.
struct SpecError : std::runtime_error {
    SpecError(std::string ptr, const std::string& message,
              std::optional<std::pair<int, int>> pos = std::nullopt)
        : std::runtime_error(message), pointer(std::move(ptr)), position(pos) {}
    std::string pointer;
    std::optional<std::pair<int, int>> position;  // 1-based line, column
};

// Maps JSON pointers to 1-based line/column positions by rescanning the
// document text. Keys and values are recorded separately; lookups fall back
// to the nearest recorded ancestor.
class JsonLocator {
public:
    explicit JsonLocator(const std::string& text);
    std::pair<int, int> locate(const std::string& pointer) const;

private:
    std::map<std::string, std::pair<int, int>> keys_, values_;
};

ProblemSpec parse_spec(const std::string& text);
std::string serialize_spec(const ProblemSpec& spec);

// "name:line:col: message" with the position resolved through the locator.
std::string format_spec_error(const std::string& text, const SpecError& err,
                              const std::string& name);

ColorLieAlgebra build_lie(const ProblemSpec& spec);

struct RunFlags {
    std::optional<int> n_max, p_max, word_len;
    // "all" clears the window from the file; anything else is parsed as a
    // JSON list of group elements.
    std::optional<std::string> degree_window;
    bool pretty = false;
    std::string dump_dir;
};

struct RunResult {
    int status = 0;
    std::string output;
};

// Dispatches one of validate, hopf-check, koszul-check, lie-cohomology,
// hochschild, compare. Output is a JSON document (aligned text with pretty);
// identical spec and flags produce identical bytes. Status 0 means every
// check passed and the computation completed.
RunResult run_command(const std::string& command, const ProblemSpec& spec,
                      const RunFlags& flags);

}  // namespace colorhom
