#pragma once

#include <cstddef>
#include <vector>

#include "saf/framework.hpp"
#include "saf/semantics.hpp"

namespace saf::initial {

/// An initial set with its class, the initial sets attacking it, and the id of
/// its strongly connected component.
struct InitialSetInfo {
    ArgSet set;
    InitialClass cls;
    std::vector<ArgSet> conflicts;
    std::size_t scc_id;
};

struct MaximalAdmissible {
    ArgSet set;
    /// Number of shrinking rounds X -> F(X) ∩ X; never exceeds |s|.
    std::size_t iterations;
};

/// The unique ⊆-maximal admissible subset of the conflict-free set `s`,
/// computed as the greatest fixed point of X -> F(X) ∩ X from `s`.
/// Throws ContractViolation if `s` is not conflict-free.
ArgSet maximal_admissible_subset(const Framework& f, const ArgSet& s);
MaximalAdmissible maximal_admissible_subset_traced(const Framework& f, const ArgSet& s, const ArgSet& within);

/// Whether some admissible subset of the conflict-free `s` contains `a`.
/// Throws ContractViolation if `a` is not in `s` or `s` has a conflict.
bool has_admissible_subset_containing(const Framework& f, const ArgSet& s, std::size_t a);

/// Polynomial initial-set test: s is non-empty, admissible, and for no pair
/// a != b in s does s \ {b} contain an admissible set with a.
bool is_initial(const Framework& f, const ArgSet& s);
bool is_initial(const Framework& f, const ArgSet& s, const ArgSet& within);

struct EnumerationOptions {
    /// Worker threads for per-component search; 1 runs inline.
    unsigned threads = 1;
};

/// All initial sets of f, classified, sorted by the ArgSet order.
std::vector<InitialSetInfo> enumerate_initial_sets(const Framework& f, const EnumerationOptions& opts = {});

/// Initial sets of the projection f|within, reported in f's indices. Class,
/// conflicts and component ids refer to f|within.
std::vector<InitialSetInfo> enumerate_initial_sets(const Framework& f, const ArgSet& within,
                                                   const EnumerationOptions& opts = {});

/// Unclassified initial sets of f|within that lie inside the given strongly
/// connected component of f|within, sorted.
std::vector<ArgSet> initial_sets_in_component(const Framework& f, const ArgSet& within, const ArgSet& component);

/// Canonical serialisation sequence of an admissible set: at each reduct the
/// selected initial set is the one inside the remaining part of `e` with the
/// lowest class (unattacked, unchallenged, challenged), ties broken by the
/// ArgSet order. Throws ContractViolation if `e` is not admissible.
SerialisationSequence decompose(const Framework& f, const ArgSet& e);

}  // namespace saf::initial
