#pragma once

// Machine-readable reports shared by the command-line tool and the Python
// module. Keys come out sorted, so equal inputs give byte-identical output.

#include "sgalg/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sgalg {

enum class Command { Analyze, Ideal, Groebner, Hilbert, Resolution, Extend, Verify };

/// Parses a subcommand name; throws Error for unknown names.
Command parse_command(const std::string& name);
std::string to_string(Command c);

/// Integers that fit int64 become JSON numbers, larger ones strings.
nlohmann::json integer_json(const Integer& v);
nlohmann::json vector_json(const IntegerVector& v);

/// Generators of the defining ideal as text; the gluing binomial reads y^mu - x^lambda.
std::vector<std::string> ideal_generator_strings(const SemigroupFamily& f);

nlohmann::json family_json(const SemigroupFamily& f);
nlohmann::json check_json(const Check& c);

/// Sections computed for `command`, plus the checks that back them.
nlohmann::json build_report(const SemigroupFamily& f, Command command,
                            const ReportOptions& options = {});

/// True when every entry of report["checks"] passed.
bool checks_passed(const nlohmann::json& report);

/// Human-readable rendering of a report built by build_report.
std::string render_text(const nlohmann::json& report);

}  // namespace sgalg
