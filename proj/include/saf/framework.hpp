#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "saf/arg_set.hpp"

namespace saf {

struct Attack {
    std::size_t from;
    std::size_t to;

    friend auto operator<=>(const Attack&, const Attack&) = default;
};

/// Immutable abstract argumentation framework over dense argument indices.
///
/// Labels are unique and non-empty; their order defines the index order. The
/// attack relation is kept both as a sorted pair list and as attacker /
/// attacked adjacency rows.
class Framework {
public:
    Framework() = default;

    /// Throws ContractViolation on duplicate or empty labels, out-of-range
    /// endpoints, or duplicate attack pairs.
    Framework(std::vector<std::string> names, std::vector<Attack> attacks);

    /// Convenience constructor from label pairs.
    static Framework from_labels(std::vector<std::string> names,
                                 const std::vector<std::pair<std::string, std::string>>& attacks);

    std::size_t size() const { return names_.size(); }
    bool empty() const { return names_.empty(); }

    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t a) const { return names_.at(a); }

    std::optional<std::size_t> find(std::string_view label) const;
    /// Throws ContractViolation for unknown labels.
    std::size_t index_of(std::string_view label) const;

    const std::vector<Attack>& attacks() const { return attacks_; }
    bool attacks(std::size_t from, std::size_t to) const { return attacked_by_.at(from).contains(to); }

    /// Arguments b with b -> a.
    const ArgSet& attackers_of(std::size_t a) const { return attackers_.at(a); }
    /// Arguments b with a -> b.
    const ArgSet& attacked_by(std::size_t a) const { return attacked_by_.at(a); }

    ArgSet all() const { return ArgSet::full(size()); }
    ArgSet none() const { return ArgSet(size()); }

    /// Builds a set from labels; throws ContractViolation for unknown labels.
    ArgSet set_of(std::initializer_list<std::string_view> labels) const;
    ArgSet set_of(const std::vector<std::string>& labels) const;

    /// Member labels in index order.
    std::vector<std::string> labels(const ArgSet& s) const;
    /// "[a,b,c]" in index order.
    std::string format(const ArgSet& s) const;

    friend bool operator==(const Framework& a, const Framework& b) {
        return a.names_ == b.names_ && a.attacks_ == b.attacks_;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<Attack> attacks_;
    std::vector<ArgSet> attackers_;
    std::vector<ArgSet> attacked_by_;
};

/// A framework restricted to a subset of a parent framework's arguments,
/// together with the index correspondence to the parent.
struct Projection {
    static constexpr std::size_t dropped = ArgSet::npos;

    Framework framework;
    std::vector<std::size_t> to_parent;    // new index -> parent index
    std::vector<std::size_t> from_parent;  // parent index -> new index, or `dropped`

    /// Maps a set of the projected framework to parent indices.
    ArgSet lift(const ArgSet& s) const;
    /// Maps a parent set to projected indices, discarding dropped arguments.
    ArgSet lower(const ArgSet& s) const;
};

// Primitive relations. Every `s` must have arity f.size(); otherwise a
// ContractViolation is thrown. The `within` overloads evaluate the relation in
// the projection f|within while keeping f's indices.

ArgSet plus_set(const Framework& f, const ArgSet& s);
ArgSet plus_set(const Framework& f, const ArgSet& s, const ArgSet& within);
ArgSet minus_set(const Framework& f, const ArgSet& s);
ArgSet minus_set(const Framework& f, const ArgSet& s, const ArgSet& within);

bool is_conflict_free(const Framework& f, const ArgSet& s);
bool defends(const Framework& f, const ArgSet& s, std::size_t a);
bool defends(const Framework& f, const ArgSet& s, std::size_t a, const ArgSet& within);

/// F_AF(s): every argument defended by s.
ArgSet characteristic(const Framework& f, const ArgSet& s);
ArgSet characteristic(const Framework& f, const ArgSet& s, const ArgSet& within);

bool is_admissible(const Framework& f, const ArgSet& s);
bool is_admissible(const Framework& f, const ArgSet& s, const ArgSet& within);

Projection project(const Framework& f, const ArgSet& x);

/// The s-reduct: the projection on everything outside s and s+.
Projection reduct(const Framework& f, const ArgSet& s);
/// Arguments of the s-reduct of f|within, in f's indices.
ArgSet reduct_arguments(const Framework& f, const ArgSet& s, const ArgSet& within);

/// SCC partition. Component ids follow a topological order of the
/// condensation: an attack between different components always goes from a
/// lower id to a higher id.
struct SccDecomposition {
    std::vector<std::size_t> component_of;  // indexed by argument; npos outside `within`
    std::vector<ArgSet> components;
};

SccDecomposition sccs(const Framework& f);
SccDecomposition sccs(const Framework& f, const ArgSet& within);

}  // namespace saf
