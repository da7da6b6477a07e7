#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "saf/framework.hpp"

namespace saf::reductions {

struct Literal {
    std::size_t atom;
    bool positive;
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

/// A propositional formula in CNF with exactly three distinct literals per
/// clause.
struct Cnf3 {
    std::vector<std::string> atoms;
    std::vector<Clause> clauses;

    /// Throws ContractViolation on out-of-range atoms, repeated literals in a
    /// clause, or duplicate/empty atom names.
    void validate() const;
};

/// Argument labels used by the generated framework.
namespace labels {
inline constexpr std::string_view phi = "phi";
inline constexpr std::string_view phi_tilde = "phi~";
inline constexpr std::string_view psi = "psi";
std::string clause(std::size_t i);  // "C1", "C2", ...
std::string literal(const Cnf3& phi, Literal l);  // "a" or "-a"
}  // namespace labels

/// The framework AF'_phi: clauses attack phi, literals attack the clauses they
/// occur in, complementary literals attack each other, phi~ attacks every
/// literal, and phi -> phi~, phi <-> psi. Arguments are ordered phi, phi~,
/// psi, C1..Cn, then a, -a for each atom in order.
Framework cnf3_to_af(const Cnf3& phi);

inline constexpr std::size_t sat_bound = 20;

/// Exhaustive satisfiability check. Throws BoundExceeded above `sat_bound`
/// atoms.
bool sat_bruteforce(const Cnf3& phi);

/// DIMACS input: optional "c" comment lines, a header "p cnf <atoms>
/// <clauses>", then one clause per line as three non-zero integers and a
/// terminating 0. Atoms are named x1, x2, ... Throws ParseError.
Cnf3 parse_dimacs(std::string_view text);

}  // namespace saf::reductions
