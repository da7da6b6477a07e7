#include "saf/serial.hpp"

#include <map>
#include <unordered_set>

namespace saf::serial {

namespace {

struct StateKey {
    ArgSet remaining;
    ArgSet accumulated;
    friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& k) const { return k.remaining.hash() * 31 + k.accumulated.hash(); }
};

// Class of an initial set of f|within, found without enumerating every
// component: only components holding an attacker can host a conflicting set.
InitialClass classify(const Framework& f, const ArgSet& within, const ArgSet& s) {
    const ArgSet attackers = minus_set(f, s, within);
    if (attackers.empty()) return InitialClass::unattacked;
    const SccDecomposition scc = sccs(f, within);
    std::vector<bool> seen(scc.components.size(), false);
    bool challenged = false;
    attackers.for_each([&](std::size_t b) {
        const std::size_t id = scc.component_of[b];
        if (challenged || seen[id]) return;
        seen[id] = true;
        for (const auto& t : initial::initial_sets_in_component(f, within, scc.components[id]))
            if (plus_set(f, t).intersects(s)) challenged = true;
    });
    return challenged ? InitialClass::challenged : InitialClass::unchallenged;
}

}  // namespace

SerialisationSequence SerialisationState::sequence(const SemanticsSpec& spec) const {
    return {history_, accumulated_, spec};
}

SerialisationState init_state(std::shared_ptr<const Framework> f) {
    if (!f) throw ContractViolation("init_state requires a framework");
    SerialisationState s;
    s.remaining_ = f->all();
    s.accumulated_ = f->none();
    s.base_ = std::move(f);
    return s;
}

std::vector<initial::InitialSetInfo> choices(const SerialisationState& state, Selection alpha) {
    auto infos = initial::enumerate_initial_sets(state.base(), state.remaining());
    std::erase_if(infos, [&](const auto& info) { return !selects(alpha, info.cls); });
    return infos;
}

SerialisationState step(const SerialisationState& state, const ArgSet& selection) {
    const Framework& f = state.base();
    if (selection.arity() != f.size())
        throw InvalidSelection(Rejection::wrong_arity, "selection does not belong to this framework");
    if (selection.empty()) throw InvalidSelection(Rejection::empty, "selection is empty; initial sets are non-empty");
    if (!selection.is_subset_of(state.remaining())) {
        throw InvalidSelection(Rejection::outside_reduct, "selection " + f.format(selection - state.remaining()) +
                                                              " is not part of the current reduct");
    }
    if (!is_admissible(f, selection, state.remaining()))
        throw InvalidSelection(Rejection::not_admissible,
                               "selection " + f.format(selection) + " is not admissible in the current reduct");
    if (!initial::is_initial(f, selection, state.remaining()))
        throw InvalidSelection(Rejection::not_minimal, "selection " + f.format(selection) +
                                                           " is not minimal: it has a smaller non-empty admissible subset");

    SerialisationState next = state;
    next.history_.push_back({selection, classify(f, state.remaining(), selection)});
    next.accumulated_ |= selection;
    next.remaining_ = reduct_arguments(f, selection, state.remaining());
    return next;
}

bool is_terminal(Termination beta, const ArgSet& remaining, const std::vector<initial::InitialSetInfo>& infos) {
    auto none_of_class = [&](auto pred) {
        for (const auto& info : infos)
            if (pred(info.cls)) return false;
        return true;
    };
    switch (beta) {
        case Termination::always: return true;
        case Termination::no_unattacked:
            return none_of_class([](InitialClass c) { return c == InitialClass::unattacked; });
        case Termination::empty_framework: return remaining.empty();
        case Termination::no_initial: return infos.empty();
        case Termination::no_unattacked_or_unchallenged:
            return none_of_class([](InitialClass c) { return c != InitialClass::challenged; });
    }
    return false;
}

bool is_terminal(const SerialisationState& state, Termination beta) {
    switch (beta) {
        case Termination::always: return true;
        case Termination::empty_framework: return state.remaining().empty();
        case Termination::no_unattacked: {
            // Unattacked arguments of the reduct are exactly its unattacked initial sets.
            const Framework& f = state.base();
            bool found = false;
            state.remaining().for_each([&](std::size_t a) {
                if (!f.attackers_of(a).intersects(state.remaining())) found = true;
            });
            return !found;
        }
        default: return is_terminal(beta, state.remaining(), initial::enumerate_initial_sets(state.base(), state.remaining()));
    }
}

std::optional<std::string> check_invariants(const SerialisationState& state) {
    const Framework& f = state.base();
    const ArgSet& acc = state.accumulated();
    const ArgSet& rem = state.remaining();
    if (acc.intersects(rem)) return "accumulated and remaining overlap";
    if ((acc | plus_set(f, acc) | rem) != f.all()) return "accumulated, its attacked arguments and remaining do not cover the framework";
    if (!is_admissible(f, acc)) return "accumulated set is not admissible";
    ArgSet replay_remaining = f.all();
    ArgSet replay_acc = f.none();
    for (const auto& st : state.history()) {
        if (!initial::is_initial(f, st.selection, replay_remaining))
            return "history selection " + f.format(st.selection) + " was not initial in its reduct";
        replay_acc |= st.selection;
        replay_remaining = reduct_arguments(f, st.selection, replay_remaining);
    }
    if (replay_acc != acc || replay_remaining != rem) return "history does not replay to the current state";
    return std::nullopt;
}

std::vector<Extension> enumerate_extensions(const Framework& f, const SemanticsSpec& spec,
                                            const initial::EnumerationOptions& opts) {
    std::unordered_set<StateKey, StateKeyHash> visited;
    std::map<ArgSet, SerialisationSequence> found;
    std::vector<SequenceStep> path;

    auto explore = [&](auto&& self, const ArgSet& remaining, const ArgSet& acc) -> void {
        if (!visited.insert({remaining, acc}).second) return;
        const auto infos = initial::enumerate_initial_sets(f, remaining, opts);
        if (is_terminal(spec.beta, remaining, infos)) found.try_emplace(acc, SerialisationSequence{path, acc, spec});
        for (const auto& info : infos) {
            if (!selects(spec.alpha, info.cls)) continue;
            path.push_back({info.set, info.cls});
            self(self, reduct_arguments(f, info.set, remaining), acc | info.set);
            path.pop_back();
        }
    };
    explore(explore, f.all(), f.none());

    std::vector<Extension> out;
    out.reserve(found.size());
    for (auto& [set, seq] : found) out.push_back({set, std::move(seq)});
    return out;
}

}  // namespace saf::serial
