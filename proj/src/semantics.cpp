#include "saf/semantics.hpp"

#include <algorithm>
#include <cctype>

namespace saf {

std::string_view to_string(InitialClass c) {
    switch (c) {
        case InitialClass::unattacked: return "unattacked";
        case InitialClass::unchallenged: return "unchallenged";
        case InitialClass::challenged: return "challenged";
    }
    return "?";
}

std::optional<InitialClass> parse_initial_class(std::string_view text) {
    if (text == "unattacked") return InitialClass::unattacked;
    if (text == "unchallenged") return InitialClass::unchallenged;
    if (text == "challenged") return InitialClass::challenged;
    return std::nullopt;
}

bool selects(Selection alpha, InitialClass c) {
    switch (alpha) {
        case Selection::all: return true;
        case Selection::unattacked_only: return c == InitialClass::unattacked;
        case Selection::unattacked_or_unchallenged: return c != InitialClass::challenged;
    }
    return false;
}

namespace presets {

SemanticsSpec admissible() { return {Selection::all, Termination::always, "admissible"}; }
SemanticsSpec complete() { return {Selection::all, Termination::no_unattacked, "complete"}; }
SemanticsSpec grounded() { return {Selection::unattacked_only, Termination::no_unattacked, "grounded"}; }
SemanticsSpec stable() { return {Selection::all, Termination::empty_framework, "stable"}; }
SemanticsSpec preferred() { return {Selection::all, Termination::no_initial, "preferred"}; }
SemanticsSpec strongly_admissible() { return {Selection::unattacked_only, Termination::always, "strongly-admissible"}; }
SemanticsSpec unchallenged() {
    return {Selection::unattacked_or_unchallenged, Termination::no_unattacked_or_unchallenged, "unchallenged"};
}

namespace {

struct Entry {
    std::string_view code;
    SemanticsSpec (*make)();
};

constexpr Entry table[] = {
    {"ad", admissible},  {"co", complete},  {"gr", grounded},           {"st", stable},
    {"pr", preferred},   {"sa", strongly_admissible}, {"uc", unchallenged},
};

}  // namespace

std::optional<SemanticsSpec> from_code(std::string_view code) {
    std::string lower(code);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    for (const auto& e : table) {
        SemanticsSpec s = e.make();
        if (lower == e.code || lower == s.name) return s;
    }
    return std::nullopt;
}

std::string code_of(const SemanticsSpec& spec) {
    for (const auto& e : table)
        if (e.make() == spec) return std::string(e.code);
    return "custom";
}

}  // namespace presets
}  // namespace saf
