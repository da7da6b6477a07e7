#include "saf/initial.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_set>

namespace saf::initial {

namespace {

void require_arity(const Framework& f, const ArgSet& s) {
    if (s.arity() != f.size()) throw ContractViolation("argument set arity does not match framework size");
}

// Depth-first defense-closure search for admissible sets inside one component.
// Every admissible set found is minimal along its branch; global minimality is
// re-checked by the caller.
class ComponentSearch {
public:
    ComponentSearch(const Framework& f, const ArgSet& within, const ArgSet& component)
        : f_(f), within_(within), candidates_(f.size()) {
        component.for_each([&](std::size_t a) {
            if (f.attacks(a, a)) return;
            if ((f.attackers_of(a) & within).is_subset_of(component)) candidates_.insert(a);
        });
    }

    std::vector<ArgSet> run() {
        candidates_.for_each([&](std::size_t seed) {
            seed_ = seed;
            ArgSet s(f_.size());
            s.insert(seed);
            expand(s);
        });
        return std::move(found_);
    }

private:
    void expand(const ArgSet& s) {
        if (!visited_.insert(s).second) return;
        const ArgSet plus = plus_set(f_, s);
        const ArgSet undefended = minus_set(f_, s, within_) - plus;
        const std::size_t b = undefended.first();
        if (b == ArgSet::npos) {
            found_.push_back(s);
            return;
        }
        // Any admissible superset must counter-attack b with one of its members.
        const ArgSet defenders = f_.attackers_of(b) & candidates_;
        for (std::size_t c = defenders.next_from(seed_); c != ArgSet::npos; c = defenders.next_from(c + 1)) {
            if (plus.contains(c) || f_.attacked_by(c).intersects(s)) continue;
            expand(s.with(c));
        }
    }

    const Framework& f_;
    const ArgSet& within_;
    ArgSet candidates_;
    std::size_t seed_ = 0;
    std::unordered_set<ArgSet> visited_;
    std::vector<ArgSet> found_;
};

std::vector<ArgSet> search_component(const Framework& f, const ArgSet& within, const ArgSet& component) {
    std::vector<ArgSet> out;
    for (auto& s : ComponentSearch(f, within, component).run())
        if (is_initial(f, s, within)) out.push_back(std::move(s));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

ArgSet maximal_admissible_subset(const Framework& f, const ArgSet& s) {
    return maximal_admissible_subset_traced(f, s, f.all()).set;
}

MaximalAdmissible maximal_admissible_subset_traced(const Framework& f, const ArgSet& s, const ArgSet& within) {
    require_arity(f, s);
    if (!is_conflict_free(f, s)) throw ContractViolation("maximal admissible subset requires a conflict-free set");
    if (!s.is_subset_of(within)) throw ContractViolation("set is not contained in the framework restriction");
    MaximalAdmissible out{s, 0};
    while (true) {
        ArgSet next = characteristic(f, out.set, within) & out.set;
        if (next == out.set) return out;
        out.set = std::move(next);
        ++out.iterations;
    }
}

bool has_admissible_subset_containing(const Framework& f, const ArgSet& s, std::size_t a) {
    require_arity(f, s);
    if (!s.contains(a)) throw ContractViolation("argument is not a member of the set");
    return maximal_admissible_subset(f, s).contains(a);
}

bool is_initial(const Framework& f, const ArgSet& s) {
    return is_initial(f, s, f.all());
}

bool is_initial(const Framework& f, const ArgSet& s, const ArgSet& within) {
    require_arity(f, s);
    if (s.empty() || !is_admissible(f, s, within)) return false;
    bool minimal = true;
    s.for_each([&](std::size_t b) {
        if (!minimal) return;
        // One fixed-point run per removed b answers the question for every a.
        const ArgSet reduced = maximal_admissible_subset_traced(f, s.without(b), within).set;
        s.for_each([&](std::size_t a) {
            if (a != b && reduced.contains(a)) minimal = false;
        });
    });
    return minimal;
}

std::vector<ArgSet> initial_sets_in_component(const Framework& f, const ArgSet& within, const ArgSet& component) {
    require_arity(f, within);
    require_arity(f, component);
    return search_component(f, within, component);
}

std::vector<InitialSetInfo> enumerate_initial_sets(const Framework& f, const EnumerationOptions& opts) {
    return enumerate_initial_sets(f, f.all(), opts);
}

std::vector<InitialSetInfo> enumerate_initial_sets(const Framework& f, const ArgSet& within,
                                                   const EnumerationOptions& opts) {
    require_arity(f, within);
    const SccDecomposition scc = sccs(f, within);
    const std::size_t k = scc.components.size();
    std::vector<std::vector<ArgSet>> per_component(k);

    const unsigned workers = std::min<unsigned>(std::max(1u, opts.threads), static_cast<unsigned>(k));
    if (workers <= 1) {
        for (std::size_t id = 0; id < k; ++id) per_component[id] = search_component(f, within, scc.components[id]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t id = next++; id < k; id = next++)
                    per_component[id] = search_component(f, within, scc.components[id]);
            });
        }
        for (auto& t : pool) t.join();
    }

    std::vector<InitialSetInfo> out;
    for (std::size_t id = 0; id < k; ++id)
        for (auto& s : per_component[id]) out.push_back({std::move(s), InitialClass::unattacked, {}, id});

    std::vector<ArgSet> plus;
    plus.reserve(out.size());
    for (const auto& info : out) plus.push_back(plus_set(f, info.set));

    for (std::size_t i = 0; i < out.size(); ++i) {
        auto& info = out[i];
        for (std::size_t j = 0; j < out.size(); ++j)
            if (j != i && plus[j].intersects(info.set)) info.conflicts.push_back(out[j].set);
        std::sort(info.conflicts.begin(), info.conflicts.end());
        if (!info.conflicts.empty())
            info.cls = InitialClass::challenged;
        else if (!minus_set(f, info.set, within).empty())
            info.cls = InitialClass::unchallenged;
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.set < b.set; });
    return out;
}

SerialisationSequence decompose(const Framework& f, const ArgSet& e) {
    require_arity(f, e);
    if (!is_admissible(f, e)) throw ContractViolation("decompose requires an admissible set");
    SerialisationSequence seq;
    seq.extension = e;
    seq.spec = presets::admissible();

    ArgSet remaining = f.all();
    ArgSet rest = e;
    while (!rest.empty()) {
        const InitialSetInfo* best = nullptr;
        const auto infos = enumerate_initial_sets(f, remaining);
        for (const auto& info : infos) {
            if (!info.set.is_subset_of(rest)) continue;
            if (!best || info.cls < best->cls || (info.cls == best->cls && info.set < best->set)) best = &info;
        }
        // An admissible remainder always contains an initial set of the reduct.
        if (!best) throw ContractViolation("admissible remainder without an initial subset");
        seq.steps.push_back({best->set, best->cls});
        remaining = reduct_arguments(f, best->set, remaining);
        rest -= best->set;
    }
    return seq;
}

}  // namespace saf::initial
