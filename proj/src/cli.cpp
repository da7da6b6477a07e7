#include "saf/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "saf/decision.hpp"
#include "saf/http.hpp"
#include "saf/initial.hpp"
#include "saf/io.hpp"
#include "saf/oracle.hpp"
#include "saf/reductions.hpp"
#include "saf/serial.hpp"

namespace saf::cli {

namespace {

using nlohmann::json;

struct Config {
    std::string task;
    std::string input;
    std::string format;
    std::string argument;
    std::optional<std::string> set;
    std::optional<std::size_t> bound;
    unsigned threads = 1;
    bool json = false;
    std::string host = "127.0.0.1";
    int port = 8080;
    std::string static_dir;
};

// Operational failure reported to the user; exits with status 2.
struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Kind { serial, reference, initial, decompose, classify, gen_cnf, serve };

struct Task {
    Kind kind;
    std::string op;  // SE, EE, DC, DS, VER, EXISTS, UNIQUE
    SemanticsSpec spec;
    oracle::Sigma sigma = oracle::Sigma::ADM;
    decision::Family family = decision::Family::initial;
};

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
    return s;
}

Task parse_task(const std::string& raw) {
    const std::string code = upper(raw);
    if (code == "DECOMPOSE") return {Kind::decompose, code, {}};
    if (code == "CLASSIFY") return {Kind::classify, code, {}};
    if (code == "GEN-CNF") return {Kind::gen_cnf, code, {}};
    if (code == "SERVE") return {Kind::serve, code, {}};

    const auto dash = code.find('-');
    const std::string op = code.substr(0, dash);
    const std::string rest = dash == std::string::npos ? "" : code.substr(dash + 1);
    auto fail = [&] { return Failure("unknown task '" + raw + "'"); };

    if (rest == "IS" || rest.rfind("IS-", 0) == 0) {
        static const std::map<std::string, decision::Family> families{{"IS", decision::Family::initial},
                                                                      {"IS-UA", decision::Family::unattacked},
                                                                      {"IS-UC", decision::Family::unchallenged},
                                                                      {"IS-CH", decision::Family::challenged}};
        static const std::set<std::string> ops{"EE", "VER", "EXISTS", "UNIQUE", "DC", "DS"};
        auto fam = families.find(rest);
        if (fam == families.end() || !ops.count(op)) throw fail();
        Task t{Kind::initial, op, {}};
        t.family = fam->second;
        return t;
    }
    if (op != "SE" && op != "EE" && op != "DC" && op != "DS") throw fail();
    if (auto spec = presets::from_code(rest)) return {Kind::serial, op, *spec};
    static const std::map<std::string, oracle::Sigma> reference{
        {"ID", oracle::Sigma::ID}, {"SST", oracle::Sigma::SST}, {"EG", oracle::Sigma::EAGER}, {"CF", oracle::Sigma::CF}};
    auto sigma = reference.find(rest);
    if (sigma == reference.end()) throw fail();
    Task t{Kind::reference, op, {}};
    t.sigma = sigma->second;
    return t;
}

std::string read_input(const std::string& path, std::istream& in) {
    if (path.empty()) throw Failure("no input file given");
    if (path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Failure("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << file.rdbuf();
    return ss.str();
}

io::Format input_format(const Config& cfg) {
    if (!cfg.format.empty()) {
        auto f = io::parse_format(cfg.format);
        if (!f) throw Failure("unknown format '" + cfg.format + "'");
        return *f;
    }
    if (auto f = io::format_of_path(cfg.input)) return *f;
    throw Failure("cannot tell the input format of '" + cfg.input + "'; pass --format");
}

ArgSet parse_set(const Framework& f, const std::string& text) {
    ArgSet s = f.none();
    std::istringstream in(text);
    for (std::string label; std::getline(in, label, ',');) {
        label.erase(0, label.find_first_not_of(" \t"));
        label.erase(label.find_last_not_of(" \t") + 1);
        if (label.empty()) continue;
        auto idx = f.find(label);
        if (!idx) throw Failure("unknown argument '" + label + "'");
        s.insert(*idx);
    }
    return s;
}

std::size_t argument_of(const Framework& f, const Config& cfg, const std::string& op) {
    if (cfg.argument.empty()) throw Failure(op + " needs --arg");
    auto idx = f.find(cfg.argument);
    if (!idx) throw Failure("unknown argument '" + cfg.argument + "'");
    return *idx;
}

ArgSet set_of(const Framework& f, const Config& cfg, const std::string& op) {
    if (!cfg.set) throw Failure(op + " needs --set");
    return parse_set(f, *cfg.set);
}

std::size_t oracle_bound(const Config& cfg) {
    if (cfg.bound) return *cfg.bound;
    if (const char* env = std::getenv("SAF_BOUND")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end == env || *end != '\0') throw Failure("SAF_BOUND is not a number: '" + std::string(env) + "'");
        return v;
    }
    return oracle::default_bound;
}

void answer(std::ostream& out, const Config& cfg, bool yes) {
    if (cfg.json) {
        out << json{{"task", upper(cfg.task)}, {"answer", yes}}.dump() << "\n";
    } else {
        out << (yes ? "YES" : "NO") << "\n";
    }
}

// Shared by SE/EE/DC/DS over a sorted list of extensions.
void report_extensions(std::ostream& out, const Config& cfg, const Task& t, const Framework& f,
                       const std::vector<ArgSet>& exts, const std::string& semantics) {
    if (t.op == "EE" || t.op == "SE") {
        const std::size_t shown = t.op == "SE" ? std::min<std::size_t>(1, exts.size()) : exts.size();
        if (cfg.json) {
            json list = json::array();
            for (std::size_t i = 0; i < shown; ++i) list.push_back(io::labels_json(f, exts[i]));
            out << io::dump({{"semantics", semantics}, {"extensions", std::move(list)}}) << "\n";
        } else if (shown == 0 && t.op == "SE") {
            out << "NO\n";
        } else {
            for (std::size_t i = 0; i < shown; ++i) out << f.format(exts[i]) << "\n";
        }
        return;
    }
    const std::size_t a = argument_of(f, cfg, t.op);
    auto has = [&](const ArgSet& s) { return s.contains(a); };
    answer(out, cfg, t.op == "DC" ? std::any_of(exts.begin(), exts.end(), has) : std::all_of(exts.begin(), exts.end(), has));
}

void run_initial(std::ostream& out, const Config& cfg, const Task& t, const Framework& f) {
    decision::Decider d(f);
    if (t.op == "EE") {
        auto infos = initial::enumerate_initial_sets(f, initial::EnumerationOptions{cfg.threads});
        std::erase_if(infos, [&](const initial::InitialSetInfo& i) {
            return t.family != decision::Family::initial && static_cast<int>(i.cls) + 1 != static_cast<int>(t.family);
        });
        if (cfg.json) {
            out << io::dump(io::to_json(f, infos)) << "\n";
        } else {
            for (const auto& i : infos) out << f.format(i.set) << "\n";
        }
    } else if (t.op == "VER") {
        answer(out, cfg, d.verify(set_of(f, cfg, t.op), t.family));
    } else if (t.op == "EXISTS") {
        answer(out, cfg, d.exists(t.family));
    } else if (t.op == "UNIQUE") {
        answer(out, cfg, d.unique(t.family));
    } else if (t.op == "DC") {
        answer(out, cfg, d.credulous(argument_of(f, cfg, t.op), t.family));
    } else {
        answer(out, cfg, d.skeptical(argument_of(f, cfg, t.op), t.family));
    }
}

int serve(std::ostream& out, const Config& cfg) {
    service::Options opts;
    opts.enumeration.threads = cfg.threads;
    service::ExplainService svc(opts);
    service::ServerOptions server_opts{cfg.host, cfg.port, std::nullopt};
    if (!cfg.static_dir.empty()) server_opts.static_dir = cfg.static_dir;
    service::HttpServer server(svc, server_opts);
    const int port = server.bind();
    out << "listening on http://" << cfg.host << ":" << port << std::endl;
    server.run();
    return 0;
}

int execute(const Config& cfg, std::ostream& out, std::istream& in) {
    const Task t = parse_task(cfg.task);
    if (t.kind == Kind::serve) return serve(out, cfg);

    const std::string text = read_input(cfg.input, in);
    if (t.kind == Kind::gen_cnf) {
        io::Format target = io::Format::tgf;
        if (!cfg.format.empty()) {
            auto fmt = io::parse_format(cfg.format);
            if (!fmt) throw Failure("unknown format '" + cfg.format + "'");
            target = *fmt;
        }
        if (cfg.json) target = io::Format::json;
        out << io::emit(reductions::cnf3_to_af(reductions::parse_dimacs(text)), target);
        return 0;
    }

    const Framework f = io::parse(text, input_format(cfg));
    switch (t.kind) {
        case Kind::serial: {
            std::vector<ArgSet> exts;
            for (auto& e : serial::enumerate_extensions(f, t.spec, initial::EnumerationOptions{cfg.threads})) exts.push_back(std::move(e.set));
            report_extensions(out, cfg, t, f, exts, presets::code_of(t.spec));
            break;
        }
        case Kind::reference: {
            const auto exts = oracle::extensions(f, t.sigma, {oracle_bound(cfg)});
            std::string code(oracle::to_string(t.sigma));
            std::transform(code.begin(), code.end(), code.begin(), [](unsigned char c) { return std::tolower(c); });
            report_extensions(out, cfg, t, f, exts, code);
            break;
        }
        case Kind::initial: run_initial(out, cfg, t, f); break;
        case Kind::decompose: {
            const ArgSet e = set_of(f, cfg, t.op);
            if (!is_admissible(f, e)) throw Failure(f.format(e) + " is not admissible");
            out << io::dump(io::to_json(f, initial::decompose(f, e))) << "\n";
            break;
        }
        case Kind::classify: {
            const auto infos = initial::enumerate_initial_sets(f, initial::EnumerationOptions{cfg.threads});
            if (cfg.json) {
                out << io::dump(io::to_json(f, infos)) << "\n";
                break;
            }
            for (const auto& i : infos) {
                out << f.format(i.set) << " " << to_string(i.cls);
                if (!i.conflicts.empty()) {
                    out << " conflicts";
                    for (const auto& c : i.conflicts) out << " " << f.format(c);
                }
                out << "\n";
            }
            break;
        }
        case Kind::gen_cnf:
        case Kind::serve: break;
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    Config cfg;
    CLI::App app{"Initial sets, serialisation and decision tasks for abstract argumentation frameworks", "saf"};
    app.add_option("-p,--task", cfg.task,
                   "Task code: {SE,EE,DC,DS}-{AD,CO,GR,ST,PR,SA,UC,ID,SST,EG,CF}, "
                   "{EE,VER,EXISTS,UNIQUE,DC,DS}-IS[-UA|-UC|-CH], DECOMPOSE, CLASSIFY, GEN-CNF, SERVE")
        ->required();
    app.add_option("input", cfg.input, "Input file, '-' for standard input");
    app.add_option("-f,--file", cfg.input, "Input file, '-' for standard input");
    app.add_option("--format", cfg.format, "tgf, apx or json (input; output format for GEN-CNF)");
    app.add_option("-a,--arg", cfg.argument, "Argument label for DC and DS tasks");
    app.add_option("--set", cfg.set, "Comma-separated labels for VER and DECOMPOSE");
    app.add_option("--bound", cfg.bound, "Largest framework the reference semantics accept (default 20, or SAF_BOUND)");
    app.add_option("--threads", cfg.threads, "Worker threads for initial-set search")->check(CLI::PositiveNumber);
    app.add_flag("--json", cfg.json, "Print JSON records");
    app.add_option("--host", cfg.host, "SERVE: address to bind");
    app.add_option("--port", cfg.port, "SERVE: port, 0 picks a free one")->check(CLI::Range(0, 65535));
    app.add_option("--static-dir", cfg.static_dir, "SERVE: directory with the browser bundle");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        return execute(cfg, out, in);
    } catch (const ParseError& e) {
        err << "saf: parse error: " << e.what() << "\n";
    } catch (const BoundExceeded& e) {
        err << "saf: " << e.what() << "; raise it with --bound or SAF_BOUND\n";
    } catch (const std::exception& e) {
        err << "saf: " << e.what() << "\n";
    }
    return 2;
}

}  // namespace saf::cli
