#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "saf/arg_set.hpp"

namespace saf {

enum class InitialClass { unattacked, unchallenged, challenged };

/// "unattacked" / "unchallenged" / "challenged".
std::string_view to_string(InitialClass c);
std::optional<InitialClass> parse_initial_class(std::string_view text);

/// Which initial-set classes may be selected in a transition.
enum class Selection { all, unattacked_only, unattacked_or_unchallenged };

/// When a reachable state counts as a finished extension.
enum class Termination { always, no_unattacked, empty_framework, no_initial, no_unattacked_or_unchallenged };

bool selects(Selection alpha, InitialClass c);

struct SemanticsSpec {
    Selection alpha = Selection::all;
    Termination beta = Termination::always;
    std::string name;

    friend bool operator==(const SemanticsSpec& a, const SemanticsSpec& b) {
        return a.alpha == b.alpha && a.beta == b.beta;
    }
};

namespace presets {
SemanticsSpec admissible();
SemanticsSpec complete();
SemanticsSpec grounded();
SemanticsSpec stable();
SemanticsSpec preferred();
SemanticsSpec strongly_admissible();
/// Exhaustively adds unattacked and unchallenged initial sets. The name
/// "unchallenged" is this project's label, not an established one.
SemanticsSpec unchallenged();

/// Accepts the short codes ad, co, gr, st, pr, sa, uc (any case) and the
/// preset names.
std::optional<SemanticsSpec> from_code(std::string_view code);
/// Two-letter lower-case code of a preset, or "custom".
std::string code_of(const SemanticsSpec& spec);
}  // namespace presets

struct SequenceStep {
    ArgSet selection;
    InitialClass cls;

    friend bool operator==(const SequenceStep&, const SequenceStep&) = default;
};

/// An extension written as pairwise disjoint initial-set selections over
/// successive reducts.
struct SerialisationSequence {
    std::vector<SequenceStep> steps;
    ArgSet extension;
    SemanticsSpec spec;

    friend bool operator==(const SerialisationSequence& a, const SerialisationSequence& b) {
        return a.steps == b.steps && a.extension == b.extension && a.spec == b.spec;
    }
};

}  // namespace saf
