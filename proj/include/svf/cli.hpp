#pragma once

// Command-line front end.
//
//   svf report   TYPE [--levi L] --phi W [--assume-alpha-eq] [--assume-faithful] [--json]
//   svf theorem4 TYPE [--levi L] --phi W [--assume-alpha-eq] [--assume-faithful] [--json]
//   svf theorem5 TYPE [--levi L] [--json]
//   svf model-check vect --m N | hatd TYPE | chevalley TYPE | file PATH  [--export] [--json]
//   svf compare MODEL MODEL [--json]      MODEL = vect:N | hatd:TYPE | chevalley:TYPE | file:PATH
//
// L is a comma-separated list of 1-based simple-root indices, "none" (Borel,
// the default) or "all". W is a weight in fundamental-weight coordinates.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace svf {

struct ProblemSpec {
    std::string command;
    std::vector<std::string> positional;  // type, or model kind and argument
    std::string levi = "none";
    std::optional<std::string> phi;
    bool assume_alpha_eq = false;
    bool assume_faithful = false;
    std::optional<int> m;
    bool export_model = false;
    bool json = false;

    friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// Throws InvalidInput with a usage message on malformed arguments. Type,
/// levi and weight strings are canonicalized (but not validated against
/// each other; run does that).
ProblemSpec parse(const std::vector<std::string>& args);

/// Canonical argument string; parse(split(render(s))) == s.
std::string render(const ProblemSpec& spec);

/// 0 on a computed result (negative verdicts included), 2 on bad input,
/// 3 on an internal invariant violation.
int run(const ProblemSpec& spec, std::ostream& out, std::ostream& err);

/// parse + run with the exit-code mapping above.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace svf
