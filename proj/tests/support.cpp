#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "saf/io.hpp"

#ifndef SAF_FIXTURE_DIR
#error "SAF_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace saf::testing {

std::string fixture_path(const std::string& name) { return std::string(SAF_FIXTURE_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Framework load_fixture(const std::string& name) {
    const auto format = io::format_of_path(name);
    if (!format) throw std::runtime_error("no format for " + name);
    return io::parse(read_file(fixture_path(name)), *format);
}

std::string label(std::size_t i) {
    if (i < 26) return std::string(1, static_cast<char>('a' + i));
    return "a" + std::to_string(i);
}

std::vector<std::string> labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(label(i));
    return out;
}

void for_each_digraph(std::size_t max_n, const std::function<bool(const Framework&)>& visit) {
    for (std::size_t n = 0; n <= max_n; ++n) {
        const std::size_t pairs = n * n;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            std::vector<Attack> attacks;
            for (std::size_t k = 0; k < pairs; ++k)
                if ((mask >> k) & 1u) attacks.push_back({k / n, k % n});
            if (!visit(Framework(labels(n), std::move(attacks)))) return;
        }
    }
}

std::uint64_t digraph_count(std::size_t max_n) {
    std::uint64_t total = 0;
    for (std::size_t n = 0; n <= max_n; ++n) total += std::uint64_t{1} << (n * n);
    return total;
}

Framework random_framework(std::mt19937_64& rng, std::size_t n, double density) {
    std::bernoulli_distribution edge(density);
    std::vector<Attack> attacks;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (edge(rng)) attacks.push_back({a, b});
    return Framework(labels(n), std::move(attacks));
}

std::vector<Framework> random_corpus(std::size_t count, std::size_t max_n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size(1, max_n);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    std::vector<Framework> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = size(rng);
        out.push_back(random_framework(rng, n, density(rng)));
    }
    return out;
}

bool isomorphic(const Framework& f, const Framework& g) {
    const std::size_t n = f.size();
    if (n != g.size() || f.attacks().size() != g.attacks().size()) return false;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool same = std::all_of(f.attacks().begin(), f.attacks().end(),
                                [&](const Attack& a) { return g.attacks(perm[a.from], perm[a.to]); });
        if (same) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<reductions::Clause> all_clauses(std::size_t atoms) {
    std::vector<reductions::Literal> lits;
    for (std::size_t a = 0; a < atoms; ++a) {
        lits.push_back({a, true});
        lits.push_back({a, false});
    }
    std::vector<reductions::Clause> out;
    for (std::size_t i = 0; i < lits.size(); ++i)
        for (std::size_t j = i + 1; j < lits.size(); ++j)
            for (std::size_t k = j + 1; k < lits.size(); ++k) out.push_back({lits[i], lits[j], lits[k]});
    return out;
}

reductions::Cnf3 random_cnf(std::mt19937_64& rng, std::size_t atoms, std::size_t clauses) {
    const auto pool = all_clauses(atoms);
    if (pool.empty()) throw std::invalid_argument("three distinct literals need at least two atoms");
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    reductions::Cnf3 phi;
    for (std::size_t a = 0; a < atoms; ++a) phi.atoms.push_back("x" + std::to_string(a + 1));
    for (std::size_t c = 0; c < clauses; ++c) phi.clauses.push_back(pool[pick(rng)]);
    return phi;
}

Reference::Reference(const Framework& f) : n(f.size()), attackers(f.size(), 0), victims(f.size(), 0) {
    if (n > 16) throw std::runtime_error("reference model limited to 16 arguments");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (f.attacks(b, a)) {
                attackers[a] |= 1u << b;
                victims[b] |= 1u << a;
            }
}

bool Reference::conflict_free(std::uint32_t s) const {
    for (std::size_t a = 0; a < n; ++a)
        if ((s >> a & 1u) && (attackers[a] & s)) return false;
    return true;
}

bool Reference::admissible(std::uint32_t s) const {
    if (!conflict_free(s)) return false;
    std::uint32_t hit = 0;
    for (std::size_t a = 0; a < n; ++a)
        if (s >> a & 1u) hit |= victims[a];
    for (std::size_t a = 0; a < n; ++a)
        if ((s >> a & 1u) && (attackers[a] & ~hit)) return false;
    return true;
}

std::vector<std::uint32_t> Reference::admissible_sets() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < (1u << n); ++s)
        if (admissible(s)) out.push_back(s);
    return out;
}

std::vector<std::uint32_t> Reference::initial_sets() const {
    const auto adm = admissible_sets();
    std::vector<std::uint32_t> out;
    for (auto s : adm) {
        if (!s) continue;
        bool minimal = true;
        for (auto t : adm) minimal = minimal && !(t && t != s && (t & s) == t);
        if (minimal) out.push_back(s);
    }
    return out;
}

bool Reference::attacks(std::uint32_t s, std::uint32_t t) const {
    for (std::size_t a = 0; a < n; ++a)
        if ((s >> a & 1u) && (victims[a] & t)) return true;
    return false;
}

ArgSet Reference::to_set(std::uint32_t mask) const {
    ArgSet s(n);
    for (std::size_t a = 0; a < n; ++a)
        if (mask >> a & 1u) s.insert(a);
    return s;
}

std::uint32_t Reference::to_mask(const ArgSet& s) const {
    std::uint32_t m = 0;
    s.for_each([&](std::size_t a) { m |= 1u << a; });
    return m;
}

}  // namespace saf::testing
