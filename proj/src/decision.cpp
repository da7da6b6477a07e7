#include "saf/decision.hpp"

#include <algorithm>

#include "saf/initial.hpp"

namespace saf::decision {

std::string_view to_string(Task t) {
    switch (t) {
        case Task::ver: return "VER";
        case Task::exists: return "EXISTS";
        case Task::unique: return "UNIQUE";
        case Task::cred: return "CRED";
        case Task::skept: return "SKEPT";
    }
    return "?";
}

std::string_view to_string(Family f) {
    switch (f) {
        case Family::initial: return "IS";
        case Family::unattacked: return "IS-UA";
        case Family::unchallenged: return "IS-UC";
        case Family::challenged: return "IS-CH";
    }
    return "?";
}

void TaskQuery::validate() const {
    switch (task) {
        case Task::ver:
            if (!set || argument) throw ContractViolation("VER takes a set subject");
            break;
        case Task::cred:
        case Task::skept:
            if (!argument || set) throw ContractViolation("CRED and SKEPT take an argument subject");
            break;
        case Task::exists:
        case Task::unique:
            if (set || argument) throw ContractViolation("EXISTS and UNIQUE take no subject");
            break;
    }
}

Decider::Decider(const Framework& f)
    : f_(f),
      scc_(sccs(f)),
      sets_(scc_.components.size()),
      plus_(scc_.components.size()),
      attacked_memo_(f.size()),
      member_memo_(f.size()) {}

const std::vector<ArgSet>& Decider::component_sets(std::size_t id) {
    if (!sets_[id]) sets_[id] = initial::initial_sets_in_component(f_, f_.all(), scc_.components[id]);
    return *sets_[id];
}

const std::vector<ArgSet>& Decider::component_plus(std::size_t id) {
    if (!plus_[id]) {
        std::vector<ArgSet> p;
        for (const auto& s : component_sets(id)) p.push_back(plus_set(f_, s));
        plus_[id] = std::move(p);
    }
    return *plus_[id];
}

std::vector<ArgSet> Decider::initial_sets() {
    std::vector<ArgSet> out;
    for (std::size_t id = 0; id < scc_.components.size(); ++id)
        for (const auto& s : component_sets(id)) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

ArgSet Decider::unattacked_arguments() const {
    ArgSet out(f_.size());
    for (std::size_t a = 0; a < f_.size(); ++a)
        if (f_.attackers_of(a).empty()) out.insert(a);
    return out;
}

bool Decider::some_initial_set_attacks(const ArgSet& s) {
    const ArgSet attackers = minus_set(f_, s);
    std::vector<bool> seen(scc_.components.size(), false);
    bool hit = false;
    attackers.for_each([&](std::size_t b) {
        const std::size_t id = scc_.component_of[b];
        if (hit || seen[id]) return;
        seen[id] = true;
        for (const auto& p : component_plus(id))
            if (p.intersects(s)) hit = true;
    });
    return hit;
}

bool Decider::attacked_by_initial_set(std::size_t a) {
    auto& memo = attacked_memo_.at(a);
    if (!memo) {
        ArgSet single(f_.size());
        single.insert(a);
        memo = some_initial_set_attacks(single);
    }
    return *memo;
}

bool Decider::in_initial_set(std::size_t a) {
    auto& memo = member_memo_.at(a);
    if (!memo) {
        const auto& sets = component_sets(scc_.component_of[a]);
        memo = std::any_of(sets.begin(), sets.end(), [&](const ArgSet& s) { return s.contains(a); });
    }
    return *memo;
}

const ArgSet& Decider::unchallenged_core() {
    if (!core_) {
        // Members of some initial set that no initial set attacks ...
        ArgSet m(f_.size());
        for (std::size_t a = 0; a < f_.size(); ++a)
            if (!attacked_by_initial_set(a) && in_initial_set(a)) m.insert(a);
        // ... minus the unattacked ones; the result is conflict-free.
        const ArgSet m_prime = m - unattacked_arguments();
        core_ = initial::maximal_admissible_subset(f_, m_prime);
    }
    return *core_;
}

bool Decider::verify(const ArgSet& s, Family family) {
    if (s.arity() != f_.size()) throw ContractViolation("argument set arity does not match framework size");
    if (!initial::is_initial(f_, s)) return false;
    switch (family) {
        case Family::initial: return true;
        case Family::unattacked: return minus_set(f_, s).empty();
        case Family::unchallenged: return !minus_set(f_, s).empty() && !some_initial_set_attacks(s);
        case Family::challenged: return some_initial_set_attacks(s);
    }
    return false;
}

bool Decider::exists(Family family) {
    switch (family) {
        case Family::initial:
            for (std::size_t id = 0; id < scc_.components.size(); ++id)
                if (!component_sets(id).empty()) return true;
            return false;
        case Family::unattacked: return !unattacked_arguments().empty();
        case Family::unchallenged: return !unchallenged_core().empty();
        case Family::challenged:
            for (std::size_t id = 0; id < scc_.components.size(); ++id) {
                const auto& sets = component_sets(id);
                const auto& plus = component_plus(id);
                for (std::size_t i = 0; i < sets.size(); ++i)
                    for (std::size_t j = 0; j < sets.size(); ++j)
                        if (i != j && plus[i].intersects(sets[j])) return true;
            }
            return false;
    }
    return false;
}

bool Decider::unique(Family family) {
    switch (family) {
        case Family::initial: {
            std::size_t count = 0;
            for (std::size_t id = 0; id < scc_.components.size() && count < 2; ++id) count += component_sets(id).size();
            return count == 1;
        }
        case Family::unattacked: return unattacked_arguments().size() == 1;
        case Family::unchallenged: {
            const ArgSet& core = unchallenged_core();
            if (core.empty()) return false;
            // Arguments whose removal destroys every admissible subset of the
            // core form the only candidate.
            ArgSet essential(f_.size());
            core.for_each([&](std::size_t a) {
                if (initial::maximal_admissible_subset(f_, core.without(a)).empty()) essential.insert(a);
            });
            if (essential.empty()) return false;
            return initial::is_initial(f_, essential);
        }
        case Family::challenged:
            // Challenged initial sets come in mutually attacking pairs.
            return false;
    }
    return false;
}

bool Decider::credulous(std::size_t a, Family family) {
    if (a >= f_.size()) throw ContractViolation("argument index out of range");
    const std::size_t id = scc_.component_of[a];
    switch (family) {
        case Family::initial: return in_initial_set(a);
        case Family::unattacked: return f_.attackers_of(a).empty();
        case Family::unchallenged: {
            const ArgSet& core = unchallenged_core();
            if (!core.contains(a)) return false;
            for (const auto& s : component_sets(id))
                if (s.contains(a) && s.is_subset_of(core)) return true;
            return false;
        }
        case Family::challenged:
            for (const auto& s : component_sets(id))
                if (s.contains(a) && some_initial_set_attacks(s)) return true;
            return false;
    }
    return false;
}

bool Decider::skeptical(std::size_t a, Family family) {
    if (a >= f_.size()) throw ContractViolation("argument index out of range");
    switch (family) {
        case Family::initial:
            for (std::size_t id = 0; id < scc_.components.size(); ++id)
                for (const auto& s : component_sets(id))
                    if (!s.contains(a)) return false;
            return true;
        case Family::unattacked: {
            const ArgSet u = unattacked_arguments();
            return u.empty() || (u.size() == 1 && u.contains(a));
        }
        case Family::unchallenged: {
            const ArgSet& core = unchallenged_core();
            if (core.empty()) return true;
            return initial::maximal_admissible_subset(f_, core.without(a)).empty();
        }
        case Family::challenged:
            for (std::size_t id = 0; id < scc_.components.size(); ++id)
                for (const auto& s : component_sets(id))
                    if (!s.contains(a) && some_initial_set_attacks(s)) return false;
            return true;
    }
    return false;
}

bool Decider::answer(const TaskQuery& q) {
    q.validate();
    switch (q.task) {
        case Task::ver: return verify(*q.set, q.family);
        case Task::exists: return exists(q.family);
        case Task::unique: return unique(q.family);
        case Task::cred: return credulous(*q.argument, q.family);
        case Task::skept: return skeptical(*q.argument, q.family);
    }
    return false;
}

bool verify(const Framework& f, const ArgSet& s, Family family) { return Decider(f).verify(s, family); }
bool exists(const Framework& f, Family family) { return Decider(f).exists(family); }
bool unique(const Framework& f, Family family) { return Decider(f).unique(family); }
bool credulous(const Framework& f, std::size_t a, Family family) { return Decider(f).credulous(a, family); }
bool skeptical(const Framework& f, std::size_t a, Family family) { return Decider(f).skeptical(a, family); }

}  // namespace saf::decision
