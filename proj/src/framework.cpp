#include "saf/framework.hpp"

#include <algorithm>

namespace saf {

namespace {

void require_arity(const Framework& f, const ArgSet& s) {
    if (s.arity() != f.size()) throw ContractViolation("argument set arity does not match framework size");
}

}  // namespace

Framework::Framework(std::vector<std::string> names, std::vector<Attack> attacks)
    : names_(std::move(names)), attacks_(std::move(attacks)) {
    const std::size_t n = names_.size();
    index_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (names_[i].empty()) throw ContractViolation("empty argument label");
        if (!index_.emplace(names_[i], i).second) throw ContractViolation("duplicate argument label '" + names_[i] + "'");
    }
    std::sort(attacks_.begin(), attacks_.end());
    if (std::adjacent_find(attacks_.begin(), attacks_.end()) != attacks_.end())
        throw ContractViolation("duplicate attack pair");
    attackers_.assign(n, ArgSet(n));
    attacked_by_.assign(n, ArgSet(n));
    for (const auto& at : attacks_) {
        if (at.from >= n || at.to >= n) throw ContractViolation("attack endpoint out of range");
        attacked_by_[at.from].insert(at.to);
        attackers_[at.to].insert(at.from);
    }
}

Framework Framework::from_labels(std::vector<std::string> names,
                                 const std::vector<std::pair<std::string, std::string>>& attacks) {
    std::unordered_map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < names.size(); ++i) idx.emplace(names[i], i);
    std::vector<Attack> pairs;
    pairs.reserve(attacks.size());
    for (const auto& [from, to] : attacks) {
        auto a = idx.find(from);
        auto b = idx.find(to);
        if (a == idx.end() || b == idx.end()) throw ContractViolation("attack refers to unknown argument");
        pairs.push_back({a->second, b->second});
    }
    return Framework(std::move(names), std::move(pairs));
}

std::optional<std::size_t> Framework::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t Framework::index_of(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw ContractViolation("unknown argument '" + std::string(label) + "'");
}

ArgSet Framework::set_of(std::initializer_list<std::string_view> labels) const {
    ArgSet s(size());
    for (auto l : labels) s.insert(index_of(l));
    return s;
}

ArgSet Framework::set_of(const std::vector<std::string>& labels) const {
    ArgSet s(size());
    for (const auto& l : labels) s.insert(index_of(l));
    return s;
}

std::vector<std::string> Framework::labels(const ArgSet& s) const {
    require_arity(*this, s);
    std::vector<std::string> out;
    s.for_each([&](std::size_t i) { out.push_back(names_[i]); });
    return out;
}

std::string Framework::format(const ArgSet& s) const {
    std::string out = "[";
    bool first = true;
    for (const auto& l : labels(s)) {
        if (!first) out += ',';
        out += l;
        first = false;
    }
    return out + "]";
}

ArgSet Projection::lift(const ArgSet& s) const {
    if (s.arity() != framework.size()) throw ContractViolation("set does not belong to the projected framework");
    ArgSet out(from_parent.size());
    s.for_each([&](std::size_t i) { out.insert(to_parent[i]); });
    return out;
}

ArgSet Projection::lower(const ArgSet& s) const {
    if (s.arity() != from_parent.size()) throw ContractViolation("set does not belong to the parent framework");
    ArgSet out(framework.size());
    s.for_each([&](std::size_t i) {
        if (from_parent[i] != dropped) out.insert(from_parent[i]);
    });
    return out;
}

ArgSet plus_set(const Framework& f, const ArgSet& s) {
    require_arity(f, s);
    ArgSet out(f.size());
    s.for_each([&](std::size_t a) { out |= f.attacked_by(a); });
    return out;
}

ArgSet plus_set(const Framework& f, const ArgSet& s, const ArgSet& within) {
    return plus_set(f, s) & within;
}

ArgSet minus_set(const Framework& f, const ArgSet& s) {
    require_arity(f, s);
    ArgSet out(f.size());
    s.for_each([&](std::size_t a) { out |= f.attackers_of(a); });
    return out;
}

ArgSet minus_set(const Framework& f, const ArgSet& s, const ArgSet& within) {
    return minus_set(f, s) & within;
}

bool is_conflict_free(const Framework& f, const ArgSet& s) {
    return !plus_set(f, s).intersects(s);
}

bool defends(const Framework& f, const ArgSet& s, std::size_t a) {
    return defends(f, s, a, f.all());
}

bool defends(const Framework& f, const ArgSet& s, std::size_t a, const ArgSet& within) {
    if (a >= f.size()) throw ContractViolation("argument index out of range");
    return (f.attackers_of(a) & within).is_subset_of(plus_set(f, s));
}

ArgSet characteristic(const Framework& f, const ArgSet& s) {
    return characteristic(f, s, f.all());
}

ArgSet characteristic(const Framework& f, const ArgSet& s, const ArgSet& within) {
    require_arity(f, within);
    const ArgSet plus = plus_set(f, s);
    ArgSet out(f.size());
    within.for_each([&](std::size_t a) {
        if ((f.attackers_of(a) & within).is_subset_of(plus)) out.insert(a);
    });
    return out;
}

bool is_admissible(const Framework& f, const ArgSet& s) {
    return is_admissible(f, s, f.all());
}

bool is_admissible(const Framework& f, const ArgSet& s, const ArgSet& within) {
    require_arity(f, s);
    if (!s.is_subset_of(within)) return false;
    const ArgSet plus = plus_set(f, s);
    if (plus.intersects(s)) return false;
    return minus_set(f, s, within).is_subset_of(plus);
}

Projection project(const Framework& f, const ArgSet& x) {
    require_arity(f, x);
    Projection p;
    p.from_parent.assign(f.size(), Projection::dropped);
    std::vector<std::string> names;
    x.for_each([&](std::size_t a) {
        p.from_parent[a] = p.to_parent.size();
        p.to_parent.push_back(a);
        names.push_back(f.name(a));
    });
    std::vector<Attack> attacks;
    for (const auto& at : f.attacks()) {
        if (x.contains(at.from) && x.contains(at.to)) attacks.push_back({p.from_parent[at.from], p.from_parent[at.to]});
    }
    p.framework = Framework(std::move(names), std::move(attacks));
    return p;
}

Projection reduct(const Framework& f, const ArgSet& s) {
    return project(f, reduct_arguments(f, s, f.all()));
}

ArgSet reduct_arguments(const Framework& f, const ArgSet& s, const ArgSet& within) {
    require_arity(f, within);
    return within - s - plus_set(f, s);
}

SccDecomposition sccs(const Framework& f) {
    return sccs(f, f.all());
}

SccDecomposition sccs(const Framework& f, const ArgSet& within) {
    require_arity(f, within);
    const std::size_t n = f.size();
    constexpr std::size_t unvisited = ArgSet::npos;

    // Iterative Tarjan over the subgraph induced by `within`.
    std::vector<std::size_t> number(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<ArgSet> finished;  // reverse topological order
    std::size_t counter = 0;

    struct Frame {
        std::size_t vertex;
        std::size_t cursor;  // next successor index to look at
    };
    std::vector<Frame> call;

    within.for_each([&](std::size_t root) {
        if (number[root] != unvisited) return;
        call.push_back({root, 0});
        number[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& fr = call.back();
            const ArgSet& succ = f.attacked_by(fr.vertex);
            std::size_t w = succ.next_from(fr.cursor);
            while (w != ArgSet::npos && !within.contains(w)) w = succ.next_from(w + 1);
            if (w != ArgSet::npos) {
                fr.cursor = w + 1;
                if (number[w] == unvisited) {
                    number[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[fr.vertex] = std::min(low[fr.vertex], number[w]);
                }
                continue;
            }
            const std::size_t v = fr.vertex;
            call.pop_back();
            if (!call.empty()) low[call.back().vertex] = std::min(low[call.back().vertex], low[v]);
            if (low[v] == number[v]) {
                ArgSet comp(n);
                std::size_t x;
                do {
                    x = stack.back();
                    stack.pop_back();
                    on_stack[x] = false;
                    comp.insert(x);
                } while (x != v);
                finished.push_back(std::move(comp));
            }
        }
    });

    SccDecomposition out;
    out.component_of.assign(n, ArgSet::npos);
    out.components.assign(finished.rbegin(), finished.rend());
    for (std::size_t id = 0; id < out.components.size(); ++id)
        out.components[id].for_each([&](std::size_t a) { out.component_of[a] = id; });
    return out;
}

}  // namespace saf
