#include "saf/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

namespace saf::oracle {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t hard_limit = 62;

bool has(Mask m, std::size_t i) { return (m >> i) & 1u; }
bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

class Naive {
public:
    Naive(const Framework& f, const Options& opts) : n_(f.size()), att_(n_, std::vector<char>(n_, 0)) {
        const std::size_t bound = std::min(opts.bound, hard_limit);
        if (n_ > bound) throw BoundExceeded(n_, bound);
        for (const auto& a : f.attacks()) att_[a.from][a.to] = 1;
    }

    std::size_t n() const { return n_; }
    Mask full() const { return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }

    Mask plus(Mask s) const {
        Mask out = 0;
        for (std::size_t a = 0; a < n_; ++a)
            if (has(s, a))
                for (std::size_t b = 0; b < n_; ++b)
                    if (att_[a][b]) out |= Mask{1} << b;
        return out;
    }

    bool conflict_free(Mask s) const {
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                if (has(s, a) && has(s, b) && att_[a][b]) return false;
        return true;
    }

    // For every a attacking b there is c in s attacking a.
    bool defends(Mask s, std::size_t b) const {
        for (std::size_t a = 0; a < n_; ++a) {
            if (!att_[a][b]) continue;
            bool countered = false;
            for (std::size_t c = 0; c < n_ && !countered; ++c) countered = has(s, c) && att_[c][a];
            if (!countered) return false;
        }
        return true;
    }

    bool admissible(Mask s) const {
        if (!conflict_free(s)) return false;
        for (std::size_t a = 0; a < n_; ++a)
            if (has(s, a) && !defends(s, a)) return false;
        return true;
    }

    bool complete(Mask s) const {
        for (std::size_t a = 0; a < n_; ++a)
            if (!has(s, a) && defends(s, a)) return false;
        return true;
    }

    bool attacks(Mask s, Mask t) const { return (plus(s) & t) != 0; }
    bool attacked(Mask s) const {
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                if (has(s, b) && att_[a][b]) return true;
        return false;
    }

    // Conflict-free sets by include/exclude recursion with pruning.
    std::vector<Mask> conflict_free_sets() const {
        std::vector<Mask> out;
        auto rec = [&](auto&& self, std::size_t i, Mask cur) -> void {
            if (i == n_) {
                out.push_back(cur);
                return;
            }
            self(self, i + 1, cur);
            Mask with = cur | (Mask{1} << i);
            if (conflict_free(with)) self(self, i + 1, with);
        };
        rec(rec, 0, 0);
        return out;
    }

    std::vector<Mask> admissible_sets() const {
        std::vector<Mask> out;
        for (Mask s : conflict_free_sets())
            if (admissible(s)) out.push_back(s);
        return out;
    }

    // E is strongly admissible iff E is admissible and E is empty or every
    // a in E is defended by a strongly admissible subset of E \ {a}.
    bool strongly_admissible(Mask e, std::unordered_map<Mask, bool>& memo) const {
        if (auto it = memo.find(e); it != memo.end()) return it->second;
        bool result = admissible(e);
        for (std::size_t a = 0; a < n_ && result; ++a) {
            if (!has(e, a)) continue;
            const Mask rest = e & ~(Mask{1} << a);
            bool supported = false;
            // Walk every subset of rest, including the empty set.
            for (Mask sub = rest;; sub = (sub - 1) & rest) {
                if (defends(sub, a) && strongly_admissible(sub, memo)) {
                    supported = true;
                    break;
                }
                if (sub == 0) break;
            }
            result = supported;
        }
        memo.emplace(e, result);
        return result;
    }

private:
    std::size_t n_;
    std::vector<std::vector<char>> att_;
};

std::vector<Mask> maximal_elements(const std::vector<Mask>& family) {
    std::vector<Mask> out;
    for (Mask s : family) {
        bool maximal = true;
        for (Mask t : family)
            if (t != s && subset(s, t)) maximal = false;
        if (maximal) out.push_back(s);
    }
    return out;
}

// The maximal admissible set contained in every member of `family`.
Mask greatest_admissible_below_all(const Naive& nv, const std::vector<Mask>& adm, const std::vector<Mask>& family) {
    Mask bound = nv.full();
    for (Mask s : family) bound &= s;
    std::vector<Mask> inside;
    for (Mask s : adm)
        if (subset(s, bound)) inside.push_back(s);
    // The admissible subsets of a conflict-free set are closed under union,
    // so the maximal element is unique.
    auto best = std::max_element(inside.begin(), inside.end(),
                                 [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
    return *best;
}

std::vector<ArgSet> to_sets(std::size_t n, const std::vector<Mask>& masks) {
    std::vector<ArgSet> out;
    out.reserve(masks.size());
    for (Mask m : masks) {
        ArgSet s(n);
        for (std::size_t i = 0; i < n; ++i)
            if (has(m, i)) s.insert(i);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Mask> initial_masks(const std::vector<Mask>& adm) {
    std::vector<Mask> out;
    for (Mask s : adm) {
        if (s == 0) continue;
        bool minimal = true;
        for (Mask t : adm)
            if (t != 0 && t != s && subset(t, s)) minimal = false;
        if (minimal) out.push_back(s);
    }
    return out;
}

}  // namespace

std::string_view to_string(Sigma s) {
    switch (s) {
        case Sigma::CF: return "CF";
        case Sigma::ADM: return "ADM";
        case Sigma::CO: return "CO";
        case Sigma::GR: return "GR";
        case Sigma::ST: return "ST";
        case Sigma::PR: return "PR";
        case Sigma::SST: return "SST";
        case Sigma::ID: return "ID";
        case Sigma::SA: return "SA";
        case Sigma::EAGER: return "EAGER";
        case Sigma::IS: return "IS";
    }
    return "?";
}

std::optional<Sigma> parse_sigma(std::string_view code) {
    for (Sigma s : {Sigma::CF, Sigma::ADM, Sigma::CO, Sigma::GR, Sigma::ST, Sigma::PR, Sigma::SST, Sigma::ID,
                    Sigma::SA, Sigma::EAGER, Sigma::IS})
        if (code == to_string(s)) return s;
    if (code == "AD") return Sigma::ADM;
    if (code == "EG") return Sigma::EAGER;
    return std::nullopt;
}

std::vector<ArgSet> all_admissible(const Framework& f, const Options& opts) {
    Naive nv(f, opts);
    return to_sets(nv.n(), nv.admissible_sets());
}

std::vector<ArgSet> extensions(const Framework& f, Sigma sigma, const Options& opts) {
    Naive nv(f, opts);
    if (sigma == Sigma::CF) return to_sets(nv.n(), nv.conflict_free_sets());

    const std::vector<Mask> adm = nv.admissible_sets();
    std::vector<Mask> out;
    auto filter = [&](auto pred) {
        for (Mask s : adm)
            if (pred(s)) out.push_back(s);
    };
    auto preferred = [&] { return maximal_elements(adm); };
    auto semi_stable = [&] {
        std::vector<Mask> res;
        for (Mask s : adm) {
            const Mask range = s | nv.plus(s);
            bool maximal = true;
            for (Mask t : adm) {
                const Mask other = t | nv.plus(t);
                if (other != range && subset(range, other)) maximal = false;
            }
            if (maximal) res.push_back(s);
        }
        return res;
    };

    switch (sigma) {
        case Sigma::ADM: out = adm; break;
        case Sigma::CO: filter([&](Mask s) { return nv.complete(s); }); break;
        case Sigma::GR: {
            std::vector<Mask> co;
            for (Mask s : adm)
                if (nv.complete(s)) co.push_back(s);
            for (Mask s : co) {
                bool least = true;
                for (Mask t : co) least = least && subset(s, t);
                if (least) out.push_back(s);
            }
            break;
        }
        case Sigma::ST: filter([&](Mask s) { return (s | nv.plus(s)) == nv.full(); }); break;
        case Sigma::PR: out = preferred(); break;
        case Sigma::SST: out = semi_stable(); break;
        case Sigma::ID: out.push_back(greatest_admissible_below_all(nv, adm, preferred())); break;
        case Sigma::EAGER: out.push_back(greatest_admissible_below_all(nv, adm, semi_stable())); break;
        case Sigma::SA: {
            std::unordered_map<Mask, bool> memo;
            filter([&](Mask s) { return nv.strongly_admissible(s, memo); });
            break;
        }
        case Sigma::IS: out = initial_masks(adm); break;
        case Sigma::CF: break;
    }
    return to_sets(nv.n(), out);
}

std::vector<ClassifiedSet> initial_sets_bruteforce(const Framework& f, const Options& opts) {
    Naive nv(f, opts);
    const std::vector<Mask> is = initial_masks(nv.admissible_sets());
    std::vector<ClassifiedSet> out;
    for (Mask s : is) {
        InitialClass cls = InitialClass::unchallenged;
        if (!nv.attacked(s)) {
            cls = InitialClass::unattacked;
        } else {
            for (Mask t : is)
                if (t != s && nv.attacks(t, s)) cls = InitialClass::challenged;
        }
        ArgSet set(nv.n());
        for (std::size_t i = 0; i < nv.n(); ++i)
            if (has(s, i)) set.insert(i);
        out.push_back({std::move(set), cls});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.set < b.set; });
    return out;
}

}  // namespace saf::oracle
