#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "saf/framework.hpp"
#include "saf/semantics.hpp"

// Brute-force reference semantics. Nothing here calls into the solver
// modules; predicates are re-derived from the definitions on an adjacency
// matrix built from the attack list.
namespace saf::oracle {

enum class Sigma { CF, ADM, CO, GR, ST, PR, SST, ID, SA, EAGER, IS };

std::string_view to_string(Sigma s);
std::optional<Sigma> parse_sigma(std::string_view code);

inline constexpr std::size_t default_bound = 20;

struct Options {
    /// Largest framework accepted; never above 62 regardless of this value.
    std::size_t bound = default_bound;
};

/// Every admissible set, sorted. Throws BoundExceeded.
std::vector<ArgSet> all_admissible(const Framework& f, const Options& opts = {});

/// Extensions of `sigma`, sorted. GR, ID and EAGER return one set.
std::vector<ArgSet> extensions(const Framework& f, Sigma sigma, const Options& opts = {});

struct ClassifiedSet {
    ArgSet set;
    InitialClass cls;
    friend bool operator==(const ClassifiedSet&, const ClassifiedSet&) = default;
};

/// Minimal non-empty admissible sets, classified by direct attack checks
/// among them.
std::vector<ClassifiedSet> initial_sets_bruteforce(const Framework& f, const Options& opts = {});

}  // namespace saf::oracle
