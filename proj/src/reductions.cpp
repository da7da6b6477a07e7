#include "saf/reductions.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <unordered_set>

namespace saf::reductions {

void Cnf3::validate() const {
    std::unordered_set<std::string> seen;
    for (const auto& a : atoms) {
        if (a.empty()) throw ContractViolation("empty atom name");
        if (!seen.insert(a).second) throw ContractViolation("duplicate atom name '" + a + "'");
    }
    for (std::size_t i = 0; i < clauses.size(); ++i) {
        const auto& c = clauses[i];
        for (const auto& l : c)
            if (l.atom >= atoms.size())
                throw ContractViolation("clause " + std::to_string(i + 1) + " refers to an unknown atom");
        if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2])
            throw ContractViolation("clause " + std::to_string(i + 1) + " repeats a literal");
    }
}

namespace labels {

std::string clause(std::size_t i) { return "C" + std::to_string(i + 1); }

std::string literal(const Cnf3& phi, Literal l) {
    return (l.positive ? "" : "-") + phi.atoms.at(l.atom);
}

}  // namespace labels

Framework cnf3_to_af(const Cnf3& phi) {
    phi.validate();
    std::vector<std::string> names{std::string(labels::phi), std::string(labels::phi_tilde), std::string(labels::psi)};
    const std::size_t first_clause = names.size();
    for (std::size_t i = 0; i < phi.clauses.size(); ++i) names.push_back(labels::clause(i));
    const std::size_t first_literal = names.size();
    for (std::size_t a = 0; a < phi.atoms.size(); ++a) {
        names.push_back(labels::literal(phi, {a, true}));
        names.push_back(labels::literal(phi, {a, false}));
    }
    auto lit = [&](Literal l) { return first_literal + 2 * l.atom + (l.positive ? 0 : 1); };
    constexpr std::size_t p = 0, pt = 1, ps = 2;

    std::set<Attack> attacks;
    for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
        attacks.insert({first_clause + i, p});
        for (const auto& l : phi.clauses[i]) attacks.insert({lit(l), first_clause + i});
    }
    for (std::size_t a = 0; a < phi.atoms.size(); ++a) {
        const std::size_t pos = lit({a, true}), neg = lit({a, false});
        attacks.insert({pos, neg});
        attacks.insert({neg, pos});
        attacks.insert({pt, pos});
        attacks.insert({pt, neg});
    }
    attacks.insert({p, pt});
    attacks.insert({p, ps});
    attacks.insert({ps, p});
    return Framework(std::move(names), {attacks.begin(), attacks.end()});
}

bool sat_bruteforce(const Cnf3& phi) {
    phi.validate();
    const std::size_t m = phi.atoms.size();
    if (m > sat_bound) throw BoundExceeded(m, sat_bound);
    for (std::uint64_t assignment = 0; assignment < (std::uint64_t{1} << m); ++assignment) {
        bool all = std::all_of(phi.clauses.begin(), phi.clauses.end(), [&](const Clause& c) {
            return std::any_of(c.begin(), c.end(),
                               [&](const Literal& l) { return (((assignment >> l.atom) & 1u) != 0) == l.positive; });
        });
        if (all) return true;
    }
    return false;
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

long long to_int(const std::string& tok, std::size_t line) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) throw ParseError(line, 0, "expected an integer, got '" + tok + "'");
    return v;
}

}  // namespace

Cnf3 parse_dimacs(std::string_view text) {
    Cnf3 phi;
    bool header = false;
    std::size_t expected_clauses = 0;
    std::istringstream in{std::string(text)};
    std::size_t line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        const auto tok = tokens(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (header) throw ParseError(line_no, 1, "duplicate header");
            if (tok.size() != 4 || tok[1] != "cnf") throw ParseError(line_no, 1, "expected 'p cnf <atoms> <clauses>'");
            const long long atoms = to_int(tok[2], line_no);
            const long long clauses = to_int(tok[3], line_no);
            if (atoms < 0 || clauses < 0) throw ParseError(line_no, 1, "negative count in header");
            for (long long a = 1; a <= atoms; ++a) phi.atoms.push_back("x" + std::to_string(a));
            expected_clauses = static_cast<std::size_t>(clauses);
            header = true;
            continue;
        }
        if (!header) throw ParseError(line_no, 1, "clause before the 'p cnf' header");
        if (tok.size() != 4 || tok[3] != "0")
            throw ParseError(line_no, 1, "a clause is exactly three non-zero literals followed by 0");
        Clause c;
        for (std::size_t k = 0; k < 3; ++k) {
            const long long v = to_int(tok[k], line_no);
            if (v == 0) throw ParseError(line_no, 1, "literal 0 inside a clause");
            const auto atom = static_cast<std::size_t>(v < 0 ? -v : v);
            if (atom > phi.atoms.size()) throw ParseError(line_no, 1, "literal refers to atom " + tok[k] + " beyond the header count");
            c[k] = {atom - 1, v > 0};
        }
        if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) throw ParseError(line_no, 1, "clause repeats a literal");
        phi.clauses.push_back(c);
    }
    if (!header) throw ParseError(line_no, 0, "missing 'p cnf' header");
    if (phi.clauses.size() != expected_clauses) {
        throw ParseError(line_no, 0, "header announces " + std::to_string(expected_clauses) + " clauses, found " +
                                         std::to_string(phi.clauses.size()));
    }
    return phi;
}

}  // namespace saf::reductions
