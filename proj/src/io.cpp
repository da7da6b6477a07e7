#include "saf/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <unordered_map>

namespace saf::io {

using nlohmann::json;

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

bool space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

struct Token {
    std::string text;
    std::size_t column;
};

std::vector<Token> split_line(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && space(line[i])) ++i;
        if (i == line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && !space(line[i])) ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

// Attack pairs sorted by (source label, target label).
std::vector<Attack> sorted_by_label(const Framework& f) {
    std::vector<Attack> out = f.attacks();
    std::sort(out.begin(), out.end(), [&](const Attack& a, const Attack& b) {
        return std::tie(f.name(a.from), f.name(a.to)) < std::tie(f.name(b.from), f.name(b.to));
    });
    return out;
}

// Collects labels and attacks while parsing; duplicate attacks collapse.
class Builder {
public:
    bool add_argument(const std::string& label) {
        if (!index_.emplace(label, names_.size()).second) return false;
        names_.push_back(label);
        return true;
    }
    std::optional<std::size_t> find(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    void add_attack(std::size_t a, std::size_t b) { attacks_.insert({a, b}); }
    Framework build() { return Framework(std::move(names_), {attacks_.begin(), attacks_.end()}); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
    std::set<Attack> attacks_;
};

}  // namespace

std::string_view to_string(Format f) {
    switch (f) {
        case Format::tgf: return "tgf";
        case Format::apx: return "apx";
        case Format::json: return "json";
    }
    return "?";
}

std::optional<Format> parse_format(std::string_view text) {
    const std::string t = lower(text);
    if (t == "tgf") return Format::tgf;
    if (t == "apx") return Format::apx;
    if (t == "json") return Format::json;
    return std::nullopt;
}

std::optional<Format> format_of_path(std::string_view path) {
    const auto dot = path.rfind('.');
    if (dot == std::string_view::npos) return std::nullopt;
    return parse_format(path.substr(dot + 1));
}

// ---- TGF ------------------------------------------------------------------

Framework parse_tgf(std::string_view text) {
    Builder b;
    std::istringstream in{std::string(text)};
    std::size_t line_no = 0;
    bool separator = false;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto tok = split_line(line);
        if (tok.empty()) continue;
        if (!separator) {
            if (tok.size() == 1 && tok[0].text == "#") {
                separator = true;
            } else if (tok.size() == 1) {
                if (!b.add_argument(tok[0].text))
                    throw ParseError(line_no, tok[0].column, "duplicate argument '" + tok[0].text + "'");
            } else if (tok.size() == 2) {
                throw ParseError(line_no, tok[0].column, "attack before the '#' separator");
            } else {
                throw ParseError(line_no, tok[1].column, "expected a single argument label");
            }
            continue;
        }
        if (tok.size() != 2) throw ParseError(line_no, tok[0].column, "expected an attack 'source target'");
        std::size_t ends[2];
        for (int k = 0; k < 2; ++k) {
            auto idx = b.find(tok[k].text);
            if (!idx) throw ParseError(line_no, tok[k].column, "unknown argument '" + tok[k].text + "'");
            ends[k] = *idx;
        }
        b.add_attack(ends[0], ends[1]);
    }
    if (!separator) throw ParseError(line_no + 1, 0, "missing '#' separator");
    return b.build();
}

std::string emit_tgf(const Framework& f) {
    std::string out;
    for (const auto& name : f.names()) {
        if (name == "#" || std::any_of(name.begin(), name.end(), space))
            throw ContractViolation("label '" + name + "' cannot be written as TGF");
        out += name + "\n";
    }
    out += "#\n";
    for (const auto& a : sorted_by_label(f)) out += f.name(a.from) + " " + f.name(a.to) + "\n";
    return out;
}

// ---- APX ------------------------------------------------------------------

namespace {

bool apx_name_char(char c) { return !space(c) && c != '(' && c != ')' && c != ',' && c != '.' && c != '%'; }

class ApxLexer {
public:
    explicit ApxLexer(std::string_view text) : text_(text) {}

    void skip() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (space(c)) {
                advance();
            } else {
                break;
            }
        }
    }
    bool done() {
        skip();
        return pos_ >= text_.size();
    }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

    std::string name(const char* what) {
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && apx_name_char(text_[pos_])) advance();
        if (start == pos_) fail(std::string("expected ") + what);
        return std::string(text_.substr(start, pos_ - start));
    }
    void expect(char c) {
        skip();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        advance();
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, column_, msg); }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

}  // namespace

Framework parse_apx(std::string_view text) {
    struct PendingAttack {
        std::string from, to;
        std::size_t line, column;
    };
    Builder b;
    std::vector<PendingAttack> pending;
    ApxLexer lex(text);
    while (!lex.done()) {
        const std::size_t line = lex.line(), column = lex.column();
        const std::string keyword = lex.name("'arg' or 'att'");
        if (keyword == "arg") {
            lex.expect('(');
            const std::size_t arg_line = lex.line(), arg_column = lex.column();
            const std::string label = lex.name("an argument name");
            lex.expect(')');
            lex.expect('.');
            if (!b.add_argument(label)) throw ParseError(arg_line, arg_column, "duplicate argument '" + label + "'");
        } else if (keyword == "att") {
            lex.expect('(');
            std::string from = lex.name("an argument name");
            lex.expect(',');
            std::string to = lex.name("an argument name");
            lex.expect(')');
            lex.expect('.');
            pending.push_back({std::move(from), std::move(to), line, column});
        } else {
            throw ParseError(line, column, "unknown statement '" + keyword + "'");
        }
    }
    for (const auto& p : pending) {
        const auto from = b.find(p.from);
        if (!from) throw ParseError(p.line, p.column, "undeclared argument '" + p.from + "'");
        const auto to = b.find(p.to);
        if (!to) throw ParseError(p.line, p.column, "undeclared argument '" + p.to + "'");
        b.add_attack(*from, *to);
    }
    return b.build();
}

std::string emit_apx(const Framework& f) {
    std::string out;
    for (const auto& name : f.names()) {
        if (!std::all_of(name.begin(), name.end(), apx_name_char))
            throw ContractViolation("label '" + name + "' cannot be written as APX");
        out += "arg(" + name + ").\n";
    }
    for (const auto& a : sorted_by_label(f)) out += "att(" + f.name(a.from) + "," + f.name(a.to) + ").\n";
    return out;
}

// ---- JSON -----------------------------------------------------------------

std::string dump(const json& j) { return j.dump(2); }

json parse_json_text(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, column = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(line, column, "malformed JSON");
    }
}

namespace {

[[noreturn]] void schema_error(const std::string& msg) { throw ParseError(0, 0, msg); }

const json& field(const json& j, const char* key) {
    if (!j.is_object()) schema_error("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) schema_error(std::string("missing field '") + key + "'");
    return *it;
}

const std::string& string_of(const json& j, const char* what) {
    if (!j.is_string()) schema_error(std::string("expected a string for ") + what);
    return j.get_ref<const std::string&>();
}

const json& array_of(const json& j, const char* what) {
    if (!j.is_array()) schema_error(std::string("expected an array for ") + what);
    return j;
}

InitialClass class_of(const json& j) {
    const auto cls = parse_initial_class(string_of(j, "class"));
    if (!cls) schema_error("unknown class '" + j.get<std::string>() + "'");
    return *cls;
}

}  // namespace

json to_json(const Framework& f) {
    json attacks = json::array();
    for (const auto& a : sorted_by_label(f)) attacks.push_back({f.name(a.from), f.name(a.to)});
    return {{"arguments", f.names()}, {"attacks", std::move(attacks)}};
}

Framework framework_from_json(const json& j) {
    Builder b;
    for (const auto& a : array_of(field(j, "arguments"), "arguments")) {
        const std::string& label = string_of(a, "an argument");
        if (label.empty()) schema_error("empty argument label");
        if (!b.add_argument(label)) schema_error("duplicate argument '" + label + "'");
    }
    for (const auto& pair : array_of(field(j, "attacks"), "attacks")) {
        if (!pair.is_array() || pair.size() != 2) schema_error("an attack is a two-element array");
        std::size_t ends[2];
        for (std::size_t k = 0; k < 2; ++k) {
            const std::string& label = string_of(pair[k], "an attack endpoint");
            auto idx = b.find(label);
            if (!idx) schema_error("unknown argument '" + label + "'");
            ends[k] = *idx;
        }
        b.add_attack(ends[0], ends[1]);
    }
    return b.build();
}

Framework parse_framework_json(std::string_view text) { return framework_from_json(parse_json_text(text)); }

std::string emit_framework_json(const Framework& f) { return dump(to_json(f)) + "\n"; }

Framework parse(std::string_view text, Format format) {
    switch (format) {
        case Format::tgf: return parse_tgf(text);
        case Format::apx: return parse_apx(text);
        case Format::json: return parse_framework_json(text);
    }
    throw ContractViolation("unknown format");
}

std::string emit(const Framework& f, Format format) {
    switch (format) {
        case Format::tgf: return emit_tgf(f);
        case Format::apx: return emit_apx(f);
        case Format::json: return emit_framework_json(f);
    }
    throw ContractViolation("unknown format");
}

json labels_json(const Framework& f, const ArgSet& s) { return f.labels(s); }

ArgSet set_from_json(const Framework& f, const json& j) {
    ArgSet s = f.none();
    for (const auto& item : array_of(j, "a set")) {
        const std::string& label = string_of(item, "an argument");
        auto idx = f.find(label);
        if (!idx) schema_error("unknown argument '" + label + "'");
        s.insert(*idx);
    }
    return s;
}

std::string_view to_string(Selection alpha) {
    switch (alpha) {
        case Selection::all: return "all";
        case Selection::unattacked_only: return "unattacked";
        case Selection::unattacked_or_unchallenged: return "unattacked-or-unchallenged";
    }
    return "?";
}

std::string_view to_string(Termination beta) {
    switch (beta) {
        case Termination::always: return "always";
        case Termination::no_unattacked: return "no-unattacked";
        case Termination::empty_framework: return "empty-framework";
        case Termination::no_initial: return "no-initial";
        case Termination::no_unattacked_or_unchallenged: return "no-unattacked-or-unchallenged";
    }
    return "?";
}

std::optional<Selection> parse_selection(std::string_view text) {
    for (auto a : {Selection::all, Selection::unattacked_only, Selection::unattacked_or_unchallenged})
        if (text == to_string(a)) return a;
    return std::nullopt;
}

std::optional<Termination> parse_termination(std::string_view text) {
    for (auto b : {Termination::always, Termination::no_unattacked, Termination::empty_framework,
                   Termination::no_initial, Termination::no_unattacked_or_unchallenged})
        if (text == to_string(b)) return b;
    return std::nullopt;
}

namespace {

json spec_fields(const SemanticsSpec& spec) {
    json j;
    const std::string code = presets::code_of(spec);
    j["semantics"] = code;
    if (code == "custom") {
        j["alpha"] = to_string(spec.alpha);
        j["beta"] = to_string(spec.beta);
    }
    return j;
}

SemanticsSpec spec_from_json(const json& j) {
    const std::string& code = string_of(field(j, "semantics"), "semantics");
    if (code == "custom") {
        auto alpha = parse_selection(string_of(field(j, "alpha"), "alpha"));
        auto beta = parse_termination(string_of(field(j, "beta"), "beta"));
        if (!alpha || !beta) schema_error("unknown selection or termination function");
        return {*alpha, *beta, "custom"};
    }
    auto spec = presets::from_code(code);
    if (!spec) schema_error("unknown semantics '" + code + "'");
    return *spec;
}

}  // namespace

json to_json(const Framework& f, const SerialisationSequence& seq) {
    json j = spec_fields(seq.spec);
    json steps = json::array();
    for (const auto& s : seq.steps) steps.push_back({{"select", labels_json(f, s.selection)}, {"class", to_string(s.cls)}});
    j["steps"] = std::move(steps);
    j["extension"] = labels_json(f, seq.extension);
    return j;
}

SerialisationSequence sequence_from_json(const Framework& f, const json& j) {
    SerialisationSequence seq;
    seq.spec = spec_from_json(j);
    for (const auto& s : array_of(field(j, "steps"), "steps"))
        seq.steps.push_back({set_from_json(f, field(s, "select")), class_of(field(s, "class"))});
    seq.extension = set_from_json(f, field(j, "extension"));
    return seq;
}

json extensions_json(const Framework& f, const SemanticsSpec& spec, std::vector<ArgSet> sets) {
    std::sort(sets.begin(), sets.end());
    json j = spec_fields(spec);
    json list = json::array();
    for (const auto& s : sets) list.push_back(labels_json(f, s));
    j["extensions"] = std::move(list);
    return j;
}

std::vector<ArgSet> extensions_from_json(const Framework& f, const json& j) {
    std::vector<ArgSet> out;
    for (const auto& s : array_of(field(j, "extensions"), "extensions")) out.push_back(set_from_json(f, s));
    return out;
}

json to_json(const Framework& f, const std::vector<initial::InitialSetInfo>& infos) {
    json list = json::array();
    for (const auto& info : infos) {
        json conflicts = json::array();
        for (const auto& c : info.conflicts) conflicts.push_back(labels_json(f, c));
        list.push_back({{"set", labels_json(f, info.set)},
                        {"class", to_string(info.cls)},
                        {"conflicts", std::move(conflicts)},
                        {"scc", info.scc_id}});
    }
    return {{"initial_sets", std::move(list)}};
}

std::vector<initial::InitialSetInfo> initial_sets_from_json(const Framework& f, const json& j) {
    std::vector<initial::InitialSetInfo> out;
    for (const auto& item : array_of(field(j, "initial_sets"), "initial_sets")) {
        initial::InitialSetInfo info{set_from_json(f, field(item, "set")), class_of(field(item, "class")), {}, 0};
        for (const auto& c : array_of(field(item, "conflicts"), "conflicts")) info.conflicts.push_back(set_from_json(f, c));
        const json& scc = field(item, "scc");
        if (!scc.is_number_unsigned()) schema_error("expected a non-negative integer for scc");
        info.scc_id = scc.get<std::size_t>();
        out.push_back(std::move(info));
    }
    return out;
}

}  // namespace saf::io
