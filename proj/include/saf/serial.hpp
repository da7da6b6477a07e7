#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "saf/framework.hpp"
#include "saf/initial.hpp"
#include "saf/semantics.hpp"

namespace saf::serial {

/// A state (AF', S) of the serialisation transition system. The current
/// reduct is represented by its argument set in base indices.
class SerialisationState {
public:
    const Framework& base() const { return *base_; }
    const std::shared_ptr<const Framework>& base_ptr() const { return base_; }
    const ArgSet& remaining() const { return remaining_; }
    const ArgSet& accumulated() const { return accumulated_; }
    const std::vector<SequenceStep>& history() const { return history_; }

    /// The current reduct as a stand-alone framework.
    Projection reduct_framework() const { return project(*base_, remaining_); }

    /// The history as a sequence tagged with `spec`.
    SerialisationSequence sequence(const SemanticsSpec& spec) const;

private:
    friend SerialisationState init_state(std::shared_ptr<const Framework> f);
    friend SerialisationState step(const SerialisationState& state, const ArgSet& selection);

    std::shared_ptr<const Framework> base_;
    ArgSet remaining_;
    ArgSet accumulated_;
    std::vector<SequenceStep> history_;
};

/// Why a selection was refused by `step`.
enum class Rejection { empty, wrong_arity, outside_reduct, not_admissible, not_minimal };

class InvalidSelection : public std::invalid_argument {
public:
    InvalidSelection(Rejection reason, const std::string& what) : std::invalid_argument(what), reason_(reason) {}
    Rejection reason() const { return reason_; }

private:
    Rejection reason_;
};

SerialisationState init_state(std::shared_ptr<const Framework> f);

/// Initial sets of the current reduct allowed by `alpha`, in base indices,
/// classified with respect to the reduct.
std::vector<initial::InitialSetInfo> choices(const SerialisationState& state, Selection alpha);

/// Commits to an initial set of the current reduct. The class of the
/// selection is not checked against any selection function here.
/// Throws InvalidSelection naming the failed check.
SerialisationState step(const SerialisationState& state, const ArgSet& selection);

bool is_terminal(const SerialisationState& state, Termination beta);

/// Evaluates `beta` on a reduct whose classified initial sets are `infos`.
bool is_terminal(Termination beta, const ArgSet& remaining, const std::vector<initial::InitialSetInfo>& infos);

/// Checks every state invariant; returns a description of the first one that
/// fails.
std::optional<std::string> check_invariants(const SerialisationState& state);

struct Extension {
    ArgSet set;
    SerialisationSequence witness;
};

/// E^{alpha,beta}(f): accumulated sets of reachable terminal states, each
/// with the first sequence found that reaches it, sorted by set.
std::vector<Extension> enumerate_extensions(const Framework& f, const SemanticsSpec& spec,
                                            const initial::EnumerationOptions& opts = {});

}  // namespace saf::serial
