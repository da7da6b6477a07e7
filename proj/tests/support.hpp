#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "saf/framework.hpp"
#include "saf/reductions.hpp"

namespace saf::testing {

std::string fixture_path(const std::string& name);
std::string read_file(const std::string& path);
/// Parses a file under tests/fixtures, choosing the format by suffix.
Framework load_fixture(const std::string& name);

/// "a".."z", then "a26", "a27", ...
std::string label(std::size_t i);
std::vector<std::string> labels(std::size_t n);

/// Visits every directed graph (self-loops allowed) on 0..max_n arguments.
/// The callback may return false to stop early.
void for_each_digraph(std::size_t max_n, const std::function<bool(const Framework&)>& visit);

/// Number of graphs `for_each_digraph` visits.
std::uint64_t digraph_count(std::size_t max_n);

/// `count` frameworks with 1..max_n arguments; each has its own attack
/// density drawn uniformly from [0,1] and every ordered pair (self-loops
/// included) is an attack with that probability.
std::vector<Framework> random_corpus(std::size_t count, std::size_t max_n, std::uint64_t seed);

Framework random_framework(std::mt19937_64& rng, std::size_t n, double density);

/// Label-insensitive graph isomorphism by brute force; small frameworks only.
bool isomorphic(const Framework& f, const Framework& g);

/// Every clause of three distinct literals over `atoms` atoms, as sorted
/// literal triples. Clauses holding a literal and its complement are included.
std::vector<reductions::Clause> all_clauses(std::size_t atoms);

reductions::Cnf3 random_cnf(std::mt19937_64& rng, std::size_t atoms, std::size_t clauses);

// Test-local reference model over bitmasks, written straight from the
// definitions on an adjacency matrix. Frameworks up to 16 arguments.
struct Reference {
    explicit Reference(const Framework& f);
    std::size_t n;
    std::vector<std::uint32_t> attackers;  // bit b of attackers[a]: b attacks a
    std::vector<std::uint32_t> victims;    // bit b of victims[a]: a attacks b

    bool conflict_free(std::uint32_t s) const;
    bool admissible(std::uint32_t s) const;
    std::vector<std::uint32_t> admissible_sets() const;
    /// Minimal non-empty admissible sets.
    std::vector<std::uint32_t> initial_sets() const;
    bool attacks(std::uint32_t s, std::uint32_t t) const;
    ArgSet to_set(std::uint32_t mask) const;
    std::uint32_t to_mask(const ArgSet& s) const;
};

}  // namespace saf::testing
