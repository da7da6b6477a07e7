#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "saf/framework.hpp"
#include "saf/initial.hpp"
#include "saf/semantics.hpp"

namespace saf::io {

enum class Format { tgf, apx, json };

std::string_view to_string(Format f);
/// "tgf", "apx" or "json", any case.
std::optional<Format> parse_format(std::string_view text);
/// Guess from a file name suffix.
std::optional<Format> format_of_path(std::string_view path);

// Parsers throw ParseError with the offending line (and column where known).

/// One label per line, a line "#", then one "src dst" pair per line. Blank
/// lines are ignored and repeated attack lines collapse into one.
Framework parse_tgf(std::string_view text);
/// Statements "arg(x)." and "att(x,y)." in any order, any number per line.
/// "%" starts a comment running to the end of the line.
Framework parse_apx(std::string_view text);
/// {"arguments":[labels], "attacks":[[src,dst], ...]}
Framework parse_framework_json(std::string_view text);
Framework parse(std::string_view text, Format format);

// Emitters list labels in index order and attacks sorted by label pair.
// Labels that cannot be written in the target grammar raise ContractViolation.

std::string emit_tgf(const Framework& f);
std::string emit_apx(const Framework& f);
std::string emit_framework_json(const Framework& f);
std::string emit(const Framework& f, Format format);

// JSON records. Label arrays follow index order; lists of sets follow the
// ArgSet order.

nlohmann::json to_json(const Framework& f);
Framework framework_from_json(const nlohmann::json& j);

nlohmann::json labels_json(const Framework& f, const ArgSet& s);
ArgSet set_from_json(const Framework& f, const nlohmann::json& j);

/// {"semantics": code, "steps":[{"select":[..],"class":".."}], "extension":[..]}
/// Specs that are not presets also carry "alpha" and "beta".
nlohmann::json to_json(const Framework& f, const SerialisationSequence& seq);
SerialisationSequence sequence_from_json(const Framework& f, const nlohmann::json& j);

/// {"semantics": code, "extensions": [[..], ...]}
nlohmann::json extensions_json(const Framework& f, const SemanticsSpec& spec, std::vector<ArgSet> sets);
std::vector<ArgSet> extensions_from_json(const Framework& f, const nlohmann::json& j);

/// {"initial_sets": [{"set":[..], "class":"..", "conflicts":[[..]], "scc": n}]}
nlohmann::json to_json(const Framework& f, const std::vector<initial::InitialSetInfo>& infos);
std::vector<initial::InitialSetInfo> initial_sets_from_json(const Framework& f, const nlohmann::json& j);

/// Pretty-printed with two-space indentation and sorted keys.
std::string dump(const nlohmann::json& j);
/// Parses JSON text, mapping syntax errors to ParseError with line and column.
nlohmann::json parse_json_text(std::string_view text);

std::string_view to_string(Selection alpha);
std::string_view to_string(Termination beta);
std::optional<Selection> parse_selection(std::string_view text);
std::optional<Termination> parse_termination(std::string_view text);

}  // namespace saf::io
