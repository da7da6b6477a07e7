// Acceptance run: one PASS/FAIL line per criterion, each against its own time
// limit. Pass criterion numbers as arguments to run a subset.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "saf/decision.hpp"
#include "saf/framework.hpp"
#include "saf/initial.hpp"
#include "saf/io.hpp"
#include "saf/oracle.hpp"
#include "saf/reductions.hpp"
#include "saf/serial.hpp"
#include "support.hpp"

using namespace saf;
using saf::testing::load_fixture;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
    void check(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }
};

using LabelSet = std::set<std::string>;
using LabelFamily = std::set<LabelSet>;

LabelSet as_labels(const Framework& f, const ArgSet& s) {
    auto v = f.labels(s);
    return {v.begin(), v.end()};
}

LabelFamily as_family(const Framework& f, const std::vector<ArgSet>& sets) {
    LabelFamily out;
    for (const auto& s : sets) out.insert(as_labels(f, s));
    return out;
}

std::string show(const LabelFamily& fam) {
    std::string out = "{";
    for (const auto& s : fam) {
        out += "{";
        for (const auto& l : s) out += l + (l == *s.rbegin() ? "" : ",");
        out += "}";
    }
    return out + "}";
}

// Labels and label-pair attacks, so frameworks compare independently of index
// order.
struct Shape {
    LabelSet args;
    std::set<std::pair<std::string, std::string>> attacks;
    friend bool operator==(const Shape&, const Shape&) = default;
};

Shape shape(const Framework& f) {
    Shape s;
    for (const auto& n : f.names()) s.args.insert(n);
    for (const auto& a : f.attacks()) s.attacks.insert({f.name(a.from), f.name(a.to)});
    return s;
}

Shape shape(const std::vector<std::string>& args, const std::vector<std::pair<std::string, std::string>>& attacks) {
    return {{args.begin(), args.end()}, {attacks.begin(), attacks.end()}};
}

std::vector<ArgSet> sets_of(const std::vector<initial::InitialSetInfo>& infos) {
    std::vector<ArgSet> out;
    for (const auto& i : infos) out.push_back(i.set);
    return out;
}

// Initial sets split by class.
std::map<InitialClass, std::vector<ArgSet>> triple(const Framework& f) {
    std::map<InitialClass, std::vector<ArgSet>> out{
        {InitialClass::unattacked, {}}, {InitialClass::unchallenged, {}}, {InitialClass::challenged, {}}};
    for (const auto& info : initial::enumerate_initial_sets(f)) out[info.cls].push_back(info.set);
    return out;
}

const std::vector<Framework>& random_corpus() {
    static const std::vector<Framework> corpus = saf::testing::random_corpus(500, 8, 20240611);
    return corpus;
}

// Runs `check` on every framework of the exhaustive corpus (n <= 4) and then
// on the random corpus; stops at the first failure.
void over_corpus(Outcome& out, bool with_random, const std::function<void(const Framework&, Outcome&)>& check) {
    saf::testing::for_each_digraph(4, [&](const Framework& f) {
        check(f, out);
        return out.ok;
    });
    if (!with_random) return;
    for (const auto& f : random_corpus()) {
        if (!out.ok) return;
        check(f, out);
    }
}

std::string where(const Framework& f) { return " on " + io::dump(io::to_json(f)); }

// ---------------------------------------------------------------------------

Outcome fixture_af0() {
    Outcome out;
    const Framework f = load_fixture("af0.tgf");

    const auto infos = initial::enumerate_initial_sets(f);
    out.check(as_family(f, sets_of(infos)) == LabelFamily{{"f"}, {"h"}, {"d", "j"}, {"e", "i"}},
              "initial sets " + show(as_family(f, sets_of(infos))));
    const std::map<LabelSet, std::pair<InitialClass, LabelFamily>> expected{
        {{"h"}, {InitialClass::unattacked, {}}},
        {{"f"}, {InitialClass::unchallenged, {}}},
        {{"d", "j"}, {InitialClass::challenged, {{"e", "i"}}}},
        {{"e", "i"}, {InitialClass::challenged, {{"d", "j"}}}},
    };
    for (const auto& info : infos) {
        auto it = expected.find(as_labels(f, info.set));
        if (it == expected.end()) continue;
        out.check(info.cls == it->second.first, "class of " + f.format(info.set));
        out.check(as_family(f, info.conflicts) == it->second.second, "conflicts of " + f.format(info.set));
    }

    LabelFamily with_e;
    for (const auto& ext : serial::enumerate_extensions(f, presets::admissible()))
        if (ext.set.contains(f.index_of("e"))) with_e.insert(as_labels(f, ext.set));
    const LabelFamily s1_to_s8{{"b", "e", "f", "h", "i"}, {"b", "e", "f", "i"}, {"b", "e", "h", "i"}, {"e", "f", "h", "i"},
                               {"b", "e", "i"},           {"f", "e", "i"},      {"h", "e", "i"},      {"e", "i"}};
    out.check(with_e == s1_to_s8, "admissible sets containing e " + show(with_e));

    const ArgSet target = f.set_of({"b", "e", "f", "h", "i"});
    const auto seq = initial::decompose(f, target);
    ArgSet united = f.none();
    for (const auto& s : seq.steps) united |= s.selection;
    out.check(united == target && seq.extension == target, "decomposition does not union to the extension");
    const std::vector<LabelSet> order{{"h"}, {"f"}, {"e", "i"}, {"b"}};
    out.check(seq.steps.size() == order.size(), "decomposition length");

    const std::vector<Shape> reducts{
        shape({"a", "b", "c", "d", "e", "f", "i", "j"},
              {{"a", "a"}, {"a", "f"}, {"f", "a"}, {"c", "b"}, {"d", "c"}, {"i", "j"}, {"j", "e"}, {"e", "d"}, {"d", "i"}, {"i", "c"}}),
        shape({"b", "c", "d", "e", "i", "j"},
              {{"c", "b"}, {"d", "c"}, {"i", "j"}, {"j", "e"}, {"e", "d"}, {"d", "i"}, {"i", "c"}}),
        shape({"b"}, {}),
        shape({}, {}),
    };
    auto state = serial::init_state(std::make_shared<const Framework>(f));
    for (std::size_t k = 0; k < seq.steps.size() && k < order.size(); ++k) {
        out.check(as_labels(f, seq.steps[k].selection) == order[k], "step " + std::to_string(k + 1) + " selects " +
                                                                       f.format(seq.steps[k].selection));
        state = serial::step(state, seq.steps[k].selection);
        out.check(shape(state.reduct_framework().framework) == reducts[k],
                  "reduct after step " + std::to_string(k + 1));
    }
    return out;
}

Outcome fixture_af1() {
    Outcome out;
    const Framework f = load_fixture("af1.apx");
    auto family = [](const Framework& g) { return as_family(g, sets_of(initial::enumerate_initial_sets(g))); };
    out.check(family(f) == LabelFamily{{"a", "c"}, {"b", "d"}, {"e"}}, "initial sets " + show(family(f)));
    const Framework after_e = reduct(f, f.set_of({"e"})).framework;
    out.check(family(after_e) == LabelFamily{{"c"}}, "after {e}: " + show(family(after_e)));
    const Framework after_c = reduct(after_e, after_e.set_of({"c"})).framework;
    out.check(family(after_c) == LabelFamily{{"a"}}, "after {e},{c}: " + show(family(after_c)));
    return out;
}

Outcome serialisability() {
    Outcome out;
    const std::vector<std::pair<SemanticsSpec, oracle::Sigma>> pairs{
        {presets::admissible(), oracle::Sigma::ADM}, {presets::complete(), oracle::Sigma::CO},
        {presets::grounded(), oracle::Sigma::GR},    {presets::stable(), oracle::Sigma::ST},
        {presets::preferred(), oracle::Sigma::PR},   {presets::strongly_admissible(), oracle::Sigma::SA},
    };
    over_corpus(out, true, [&](const Framework& f, Outcome& o) {
        for (const auto& [spec, sigma] : pairs) {
            std::vector<ArgSet> got;
            for (auto& e : serial::enumerate_extensions(f, spec)) got.push_back(std::move(e.set));
            if (got != oracle::extensions(f, sigma)) {
                o.fail(spec.name + " differs" + where(f));
                return;
            }
            if (sigma == oracle::Sigma::GR && got.size() != 1) o.fail("grounded is not unique" + where(f));
        }
    });
    return out;
}

Outcome non_serialisable_witnesses() {
    Outcome out;
    const Framework af2 = load_fixture("af2.tgf"), af3 = load_fixture("af3.tgf");
    out.check(triple(af2) == triple(af3), "AF2 and AF3 initial-set triples differ");
    out.check(triple(af2)[InitialClass::unchallenged] == std::vector<ArgSet>{af2.set_of({"b"}), af2.set_of({"e"})},
              "AF2 unchallenged sets");
    out.check(saf::testing::isomorphic(reduct(af2, af2.set_of({"e"})).framework, reduct(af3, af3.set_of({"e"})).framework),
              "reducts after {e} are not isomorphic");
    out.check(oracle::extensions(af2, oracle::Sigma::ID) == std::vector<ArgSet>{af2.set_of({"b"})}, "ideal of AF2");
    out.check(oracle::extensions(af3, oracle::Sigma::ID) == std::vector<ArgSet>{af3.set_of({"b", "e"})}, "ideal of AF3");

    const Framework af4 = load_fixture("af4.apx"), af5 = load_fixture("af5.apx"), af6 = load_fixture("af6.apx");
    out.check(triple(af4) == triple(af5) && triple(af5) == triple(af6), "AF4/AF5/AF6 initial-set triples differ");
    out.check(triple(af4)[InitialClass::challenged] == std::vector<ArgSet>{af4.set_of({"a"}), af4.set_of({"b"})},
              "AF4 challenged sets");
    auto sst = [](const Framework& f) { return as_family(f, oracle::extensions(f, oracle::Sigma::SST)); };
    out.check(sst(af4) == LabelFamily{{"a", "c"}, {"b"}}, "semi-stable of AF4 " + show(sst(af4)));
    out.check(sst(af5) == LabelFamily{{"b"}}, "semi-stable of AF5 " + show(sst(af5)));
    out.check(sst(af6) == LabelFamily{{"a"}, {"b"}}, "semi-stable of AF6 " + show(sst(af6)));
    return out;
}

Outcome unchallenged_semantics() {
    Outcome out;
    const Framework af7 = load_fixture("af7.json");
    std::vector<ArgSet> uc;
    for (auto& e : serial::enumerate_extensions(af7, presets::unchallenged())) uc.push_back(e.set);
    out.check(as_family(af7, uc) == LabelFamily{{"d", "f"}}, "unchallenged extensions of AF7 " + show(as_family(af7, uc)));
    out.check(oracle::extensions(af7, oracle::Sigma::ID) == std::vector<ArgSet>{af7.none()}, "ideal of AF7");
    out.check(as_family(af7, oracle::extensions(af7, oracle::Sigma::PR)) ==
                  LabelFamily{{"a", "e"}, {"a", "d", "f"}, {"b", "e"}, {"b", "d", "f"}},
              "preferred of AF7");
    for (const auto& f : random_corpus()) {
        if (!out.ok) break;
        const ArgSet ideal = oracle::extensions(f, oracle::Sigma::ID).front();
        const auto preferred = oracle::extensions(f, oracle::Sigma::PR);
        for (const auto& e : serial::enumerate_extensions(f, presets::unchallenged())) {
            out.check(ideal.is_subset_of(e.set), "ideal not contained in " + f.format(e.set) + where(f));
            out.check(std::any_of(preferred.begin(), preferred.end(), [&](const ArgSet& p) { return e.set.is_subset_of(p); }),
                      f.format(e.set) + " is in no preferred extension" + where(f));
        }
    }
    return out;
}

Outcome decision_suite() {
    using decision::Family;
    Outcome out;
    const std::vector<Family> families{Family::initial, Family::unattacked, Family::unchallenged, Family::challenged};
    over_corpus(out, false, [&](const Framework& f, Outcome& o) {
        const auto classified = oracle::initial_sets_bruteforce(f);
        decision::Decider d(f);
        for (Family fam : families) {
            std::vector<ArgSet> members;
            for (const auto& c : classified)
                if (fam == Family::initial || static_cast<int>(c.cls) + 1 == static_cast<int>(fam)) members.push_back(c.set);
            const std::string tag = std::string(decision::to_string(fam)) + where(f);

            if (d.exists(fam) != !members.empty()) o.fail("EXISTS " + tag);
            if (d.unique(fam) != (members.size() == 1)) o.fail("UNIQUE " + tag);
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << f.size()); ++m) {
                ArgSet s = f.none();
                for (std::size_t i = 0; i < f.size(); ++i)
                    if ((m >> i) & 1u) s.insert(i);
                const bool expected = std::find(members.begin(), members.end(), s) != members.end();
                if (d.verify(s, fam) != expected) o.fail("VER " + f.format(s) + " " + tag);
            }
            for (std::size_t a = 0; a < f.size(); ++a) {
                const bool cred = std::any_of(members.begin(), members.end(), [&](const ArgSet& s) { return s.contains(a); });
                const bool skept = std::all_of(members.begin(), members.end(), [&](const ArgSet& s) { return s.contains(a); });
                if (d.credulous(a, fam) != cred) o.fail("CRED " + f.name(a) + " " + tag);
                if (d.skeptical(a, fam) != skept) o.fail("SKEPT " + f.name(a) + " " + tag);
            }
        }
        if (d.unique(Family::challenged)) o.fail("UNIQUE IS-CH holds" + where(f));
    });
    return out;
}

Outcome reduction_property() {
    using reductions::Cnf3;
    Outcome out;
    auto check = [&](const Cnf3& phi) {
        const Framework f = reductions::cnf3_to_af(phi);
        const ArgSet psi = f.set_of({"psi"});
        const bool sat = reductions::sat_bruteforce(phi);
        decision::Decider d(f);
        const bool challenged = d.verify(psi, decision::Family::challenged);
        const bool unchallenged = d.verify(psi, decision::Family::unchallenged);
        if (sat != challenged || !sat != unchallenged) {
            std::string text;
            for (const auto& c : phi.clauses) {
                text += "{";
                for (const auto& l : c) text += reductions::labels::literal(phi, l) + " ";
                text += "}";
            }
            out.fail("mismatch for " + text);
        }
    };

    const auto pool = saf::testing::all_clauses(3);
    Cnf3 base;
    base.atoms = {"x1", "x2", "x3"};
    std::size_t formulas = 0;
    // Every set of at most four distinct clauses.
    std::function<void(std::size_t, Cnf3&)> grow = [&](std::size_t from, Cnf3& phi) {
        check(phi);
        ++formulas;
        if (phi.clauses.size() == 4 || !out.ok) return;
        for (std::size_t i = from; i < pool.size(); ++i) {
            phi.clauses.push_back(pool[i]);
            grow(i + 1, phi);
            phi.clauses.pop_back();
        }
    };
    grow(0, base);
    out.check(formulas == 6196 || !out.ok, "enumerated " + std::to_string(formulas) + " formulas");

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> clause_count(1, 5);
    for (int i = 0; i < 200 && out.ok; ++i) check(saf::testing::random_cnf(rng, 4, clause_count(rng)));

    const auto fig8 = reductions::parse_dimacs(saf::testing::read_file(saf::testing::fixture_path("fig8.cnf")));
    const Framework f8 = reductions::cnf3_to_af(fig8);
    // phi, phi~, psi, three clauses, six literals.
    out.check(f8.size() == 12, "sample formula framework size");
    out.check(decision::verify(f8, f8.set_of({"psi"}), decision::Family::challenged),
              "{psi} is not challenged for the sample formula");
    return out;
}

Outcome fixed_point() {
    Outcome out;
    auto check = [&](const Framework& f, Outcome& o) {
        const auto adm = oracle::all_admissible(f);
        for (const auto& s : oracle::extensions(f, oracle::Sigma::CF)) {
            // Largest admissible subset by enumeration.
            ArgSet best = f.none();
            for (const auto& a : adm)
                if (a.is_subset_of(s) && a.size() > best.size()) best = a;
            for (const auto& a : adm)
                if (a.is_subset_of(s) && !a.is_subset_of(best)) o.fail("no greatest admissible subset of " + f.format(s));
            const auto traced = initial::maximal_admissible_subset_traced(f, s, f.all());
            if (traced.set != best) o.fail("fixed point of " + f.format(s) + where(f));
            if (traced.iterations > s.size()) o.fail("too many rounds for " + f.format(s) + where(f));
        }
    };
    over_corpus(out, false, check);
    for (const auto& f : random_corpus()) {
        if (!out.ok) break;
        if (f.size() <= 5) check(f, out);
    }
    return out;
}

Outcome structural_invariants() {
    Outcome out;
    over_corpus(out, true, [&](const Framework& f, Outcome& o) {
        const auto infos = initial::enumerate_initial_sets(f);
        const auto scc = sccs(f);
        std::set<ArgSet> all;
        for (const auto& i : infos) all.insert(i.set);

        for (const auto& info : infos) {
            const ArgSet& s = info.set;
            const std::size_t id = scc.component_of[s.first()];
            const ArgSet& comp = scc.components[id];
            if (!s.is_subset_of(comp)) o.fail("initial set spans components" + where(f));
            if (info.cls == InitialClass::unattacked && comp.size() != 1) o.fail("unattacked set in a large component" + where(f));
            if (info.cls != InitialClass::unattacked && comp.size() < 2) o.fail("attacked set in a trivial component" + where(f));
            for (const auto& c : info.conflicts) {
                if (!c.is_subset_of(comp)) o.fail("conflict crosses components" + where(f));
                auto other = std::find_if(infos.begin(), infos.end(), [&](const auto& i) { return i.set == c; });
                if (other == infos.end() ||
                    std::find(other->conflicts.begin(), other->conflicts.end(), s) == other->conflicts.end())
                    o.fail("asymmetric conflict" + where(f));
            }

            // Propagation to the reduct by s.
            const Framework red = reduct(f, s).framework;
            const auto red_infos = initial::enumerate_initial_sets(red);
            std::set<LabelSet> red_sets;
            LabelSet red_union;
            for (const auto& ri : red_infos) {
                red_sets.insert(as_labels(red, ri.set));
                for (const auto& l : red.labels(ri.set)) red_union.insert(l);
            }
            for (const auto& other : infos) {
                if (other.set == s) continue;
                const LabelSet labels = as_labels(f, other.set);
                if (other.cls == InitialClass::unattacked) {
                    auto hit = std::find_if(red_infos.begin(), red_infos.end(),
                                            [&](const auto& ri) { return as_labels(red, ri.set) == labels; });
                    if (hit == red_infos.end() || hit->cls != InitialClass::unattacked)
                        o.fail("unattacked set lost in reduct" + where(f));
                }
                const bool conflicting = std::find(info.conflicts.begin(), info.conflicts.end(), other.set) != info.conflicts.end();
                if (conflicting && red_sets.count(labels)) o.fail("conflicting set survives reduct" + where(f));
                if (!conflicting && std::none_of(labels.begin(), labels.end(), [&](const auto& l) { return red_union.count(l); }))
                    o.fail("non-conflicting set vanishes from reduct" + where(f));
            }
        }

        // Initial sets of each component projection, filtered by outside
        // attackers, are exactly the initial sets of f.
        std::set<ArgSet> rebuilt;
        for (const auto& comp : scc.components) {
            const Projection p = project(f, comp);
            for (const auto& info : initial::enumerate_initial_sets(p.framework)) {
                const ArgSet lifted = p.lift(info.set);
                const bool inside = minus_set(f, lifted).is_subset_of(comp);
                if (inside != all.count(lifted)) o.fail("component characterisation fails for " + f.format(lifted) + where(f));
                if (inside) rebuilt.insert(lifted);
            }
        }
        if (rebuilt != all) o.fail("component characterisation misses sets" + where(f));
    });
    return out;
}

Outcome round_trips() {
    Outcome out;
    std::vector<Framework> frameworks;
    for (const char* name : {"af0.tgf", "af1.apx", "af2.tgf", "af3.tgf", "af4.apx", "af5.apx", "af6.apx", "af7.json"})
        frameworks.push_back(load_fixture(name));
    const auto fig8 = reductions::parse_dimacs(saf::testing::read_file(saf::testing::fixture_path("fig8.cnf")));
    frameworks.push_back(reductions::cnf3_to_af(fig8));
    for (const auto& f : saf::testing::random_corpus(100, 12, 99)) frameworks.push_back(f);

    for (const auto& f : frameworks) {
        for (auto format : {io::Format::tgf, io::Format::apx, io::Format::json}) {
            const std::string text = io::emit(f, format);
            const Framework back = io::parse(text, format);
            out.check(back == f, std::string(io::to_string(format)) + " round trip" + where(f));
            out.check(io::emit(back, format) == text, std::string(io::to_string(format)) + " re-emit differs" + where(f));
        }
        if (f.size() > 12) continue;
        const auto infos = initial::enumerate_initial_sets(f);
        const auto infos_back = io::initial_sets_from_json(f, io::parse_json_text(io::dump(io::to_json(f, infos))));
        out.check(infos_back.size() == infos.size(), "initial set record size");
        for (std::size_t i = 0; i < infos.size() && i < infos_back.size(); ++i) {
            out.check(infos_back[i].set == infos[i].set && infos_back[i].cls == infos[i].cls &&
                          infos_back[i].conflicts == infos[i].conflicts && infos_back[i].scc_id == infos[i].scc_id,
                      "initial set record" + where(f));
        }
        const auto exts = serial::enumerate_extensions(f, presets::preferred());
        std::vector<ArgSet> sets;
        for (const auto& e : exts) {
            sets.push_back(e.set);
            const auto seq_back = io::sequence_from_json(f, io::parse_json_text(io::dump(io::to_json(f, e.witness))));
            out.check(seq_back == e.witness, "sequence record" + where(f));
        }
        const auto ext_back = io::extensions_from_json(
            f, io::parse_json_text(io::dump(io::extensions_json(f, presets::preferred(), sets))));
        out.check(ext_back == sets, "extension record" + where(f));
    }
    return out;
}

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {1, "AF0 initial sets, admissible sets containing e, decomposition replay", 1, fixture_af0},
        {2, "AF1 initial sets across successive reducts", 1, fixture_af1},
        {3, "serialised presets equal reference semantics on both corpora", 300, serialisability},
        {4, "ideal and semi-stable witnesses share initial-set triples", 1, non_serialisable_witnesses},
        {5, "unchallenged preset between ideal and preferred", 60, unchallenged_semantics},
        {6, "decision tasks agree with reference answers on the exhaustive corpus", 300, decision_suite},
        {7, "3-CNF reduction links satisfiability to the class of {psi}", 120, reduction_property},
        {8, "fixed point yields the maximal admissible subset within |s| rounds", 60, fixed_point},
        {9, "component containment, characterisation, conflicts and reduct propagation", 300, structural_invariants},
        {10, "TGF/APX/JSON round trips", 60, round_trips},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

    int failures = 0;
    for (const auto& c : criteria) {
        if (!only.empty() && !only.count(c.id)) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (out.ok && seconds > c.limit_seconds) out.fail("time limit exceeded");
        if (!out.ok) ++failures;
        std::printf("%s criterion %2d  %-75s %8.2f s (limit %g s)%s%s\n", out.ok ? "PASS" : "FAIL", c.id, c.title, seconds,
                    c.limit_seconds, out.ok ? "" : "  -- ", out.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
