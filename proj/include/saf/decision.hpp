#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "saf/framework.hpp"

namespace saf::decision {

enum class Task { ver, exists, unique, cred, skept };

/// The initial-set family a task ranges over.
enum class Family { initial, unattacked, unchallenged, challenged };

std::string_view to_string(Task t);
std::string_view to_string(Family f);

struct TaskQuery {
    Task task;
    Family family;
    std::optional<ArgSet> set;            // Ver
    std::optional<std::size_t> argument;  // Cred, Skept

    /// Throws ContractViolation when the subject does not fit the task.
    void validate() const;
};

/// Answers decision tasks over one framework. Initial sets of each strongly
/// connected component are searched at most once and shared between queries.
class Decider {
public:
    explicit Decider(const Framework& f);

    bool verify(const ArgSet& s, Family family);
    bool exists(Family family);
    bool unique(Family family);
    bool credulous(std::size_t a, Family family);
    /// Vacuously true when the family is empty.
    bool skeptical(std::size_t a, Family family);

    bool answer(const TaskQuery& q);

    /// The unchallenged core: the maximal admissible subset of the attacked arguments that are
    /// members of some initial set and attacked by none. Every unchallenged
    /// initial set lies inside it, and every initial set inside it is
    /// unchallenged.
    const ArgSet& unchallenged_core();

    /// Whether some initial set attacks `a`.
    bool attacked_by_initial_set(std::size_t a);
    /// Whether `a` belongs to some initial set.
    bool in_initial_set(std::size_t a);

    /// All initial sets (unclassified), sorted.
    std::vector<ArgSet> initial_sets();

private:
    const std::vector<ArgSet>& component_sets(std::size_t id);
    const std::vector<ArgSet>& component_plus(std::size_t id);
    bool some_initial_set_attacks(const ArgSet& s);
    ArgSet unattacked_arguments() const;

    const Framework& f_;
    SccDecomposition scc_;
    std::vector<std::optional<std::vector<ArgSet>>> sets_;
    std::vector<std::optional<std::vector<ArgSet>>> plus_;
    std::vector<std::optional<bool>> attacked_memo_;
    std::vector<std::optional<bool>> member_memo_;
    std::optional<ArgSet> core_;
};

bool verify(const Framework& f, const ArgSet& s, Family family);
bool exists(const Framework& f, Family family);
bool unique(const Framework& f, Family family);
bool credulous(const Framework& f, std::size_t a, Family family);
bool skeptical(const Framework& f, std::size_t a, Family family);

}  // namespace saf::decision
