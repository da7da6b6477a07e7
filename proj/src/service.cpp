#include "saf/service.hpp"

#include <sstream>

#include "saf/initial.hpp"
#include "saf/io.hpp"

namespace saf::service {

using nlohmann::json;

namespace {

Response error(int status, const std::string& message) { return {status, {{"error", message}}}; }

std::vector<std::string> segments(const std::string& path) {
    std::vector<std::string> out;
    std::istringstream in(path);
    for (std::string part; std::getline(in, part, '/');)
        if (!part.empty()) out.push_back(part);
    return out;
}

// Thrown while decoding a request body; becomes a 400.
struct BadRequest : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json body_json(const Request& req) {
    try {
        json j = json::parse(req.body);
        if (!j.is_object()) throw BadRequest("request body must be a JSON object");
        return j;
    } catch (const json::parse_error&) {
        throw BadRequest("request body is not valid JSON");
    }
}

const json& member(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw BadRequest(std::string("missing field '") + key + "'");
    return *it;
}

std::string string_member(const json& j, const char* key) {
    const json& v = member(j, key);
    if (!v.is_string()) throw BadRequest(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

ArgSet labels_member(const Framework& f, const json& j, const char* key) {
    const json& v = member(j, key);
    if (!v.is_array()) throw BadRequest(std::string("field '") + key + "' must be an array of labels");
    ArgSet s = f.none();
    for (const auto& item : v) {
        if (!item.is_string()) throw BadRequest(std::string("field '") + key + "' must be an array of labels");
        auto idx = f.find(item.get<std::string>());
        if (!idx) throw BadRequest("unknown argument '" + item.get<std::string>() + "'");
        s.insert(*idx);
    }
    return s;
}

SemanticsSpec semantics_of(const std::string& code) {
    auto spec = presets::from_code(code);
    if (!spec) throw BadRequest("unknown semantics '" + code + "'");
    return *spec;
}

std::string_view reason_text(serial::Rejection r) {
    switch (r) {
        case serial::Rejection::empty: return "empty";
        case serial::Rejection::wrong_arity: return "wrong_arity";
        case serial::Rejection::outside_reduct: return "outside_reduct";
        case serial::Rejection::not_admissible: return "not_admissible";
        case serial::Rejection::not_minimal: return "not_minimal";
    }
    return "invalid";
}

json framework_summary(const std::string& id, const Framework& f) {
    json j = io::to_json(f);
    return {{"id", id}, {"args", j["arguments"]}, {"attacks", j["attacks"]}};
}

}  // namespace

ExplainService::ExplainService(Options opts) : opts_(std::move(opts)) {}

std::size_t ExplainService::framework_count() const {
    std::shared_lock lock(frameworks_mutex_);
    return frameworks_.size();
}

std::size_t ExplainService::session_count() const {
    std::lock_guard lock(sessions_mutex_);
    return sessions_.size();
}

std::size_t ExplainService::evict_expired() {
    const auto now = opts_.now();
    std::lock_guard lock(sessions_mutex_);
    std::size_t dropped = 0;
    for (auto it = sessions_.begin(); it != sessions_.end();) {
        bool expired;
        {
            std::lock_guard session_lock(it->second->mutex);
            expired = now - it->second->last_used > opts_.session_ttl;
        }
        if (expired) {
            it = sessions_.erase(it);
            ++dropped;
        } else {
            ++it;
        }
    }
    return dropped;
}

Response ExplainService::handle(const Request& req) {
    const auto parts = segments(req.path);
    try {
        if (parts.size() < 2 || parts[0] != "api") return error(404, "no such endpoint");
        const bool get = req.method == "GET", post = req.method == "POST";
        if (parts[1] == "frameworks") {
            if (parts.size() == 2 && post) return create_framework(req);
            if (parts.size() == 3 && get) return get_framework(parts[2]);
            if (parts.size() == 4 && parts[3] == "initial-sets" && get) return initial_sets(parts[2]);
            if (parts.size() == 4 && parts[3] == "extensions" && get) return extensions(parts[2], req);
            if (parts.size() == 4 && parts[3] == "decompose" && post) return decompose(parts[2], req);
        } else if (parts[1] == "sessions") {
            evict_expired();
            if (parts.size() == 2 && post) return create_session(req);
            if (parts.size() == 3 && get) return session_state(parts[2]);
            if (parts.size() == 4 && parts[3] == "step" && post) return step(parts[2], req);
            if (parts.size() == 4 && parts[3] == "undo" && post) return undo(parts[2]);
            if (parts.size() == 4 && parts[3] == "sequence" && get) return sequence(parts[2]);
        }
        return error(404, "no such endpoint");
    } catch (const BadRequest& e) {
        return error(400, e.what());
    } catch (const std::exception& e) {
        return error(500, e.what());
    }
}

std::shared_ptr<const Framework> ExplainService::framework(const std::string& id) const {
    std::shared_lock lock(frameworks_mutex_);
    auto it = frameworks_.find(id);
    return it == frameworks_.end() ? nullptr : it->second;
}

std::shared_ptr<ExplainService::Session> ExplainService::session(const std::string& id) {
    std::lock_guard lock(sessions_mutex_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

Response ExplainService::create_framework(const Request& req) {
    const json body = body_json(req);
    const std::string format_name = string_member(body, "format");
    const auto format = io::parse_format(format_name);
    if (!format) throw BadRequest("unknown format '" + format_name + "'");
    const json& content = member(body, "content");
    Framework f;
    try {
        if (content.is_string()) {
            f = io::parse(content.get<std::string>(), *format);
        } else if (*format == io::Format::json && content.is_object()) {
            f = io::framework_from_json(content);
        } else {
            throw BadRequest("field 'content' must be a string");
        }
    } catch (const ParseError& e) {
        return {400, {{"error", e.what()}, {"line", e.line()}, {"column", e.column()}}};
    } catch (const ContractViolation& e) {
        return error(400, e.what());
    }

    std::string id;
    {
        std::unique_lock lock(frameworks_mutex_);
        id = "f" + std::to_string(next_framework_++);
        frameworks_.emplace(id, std::make_shared<const Framework>(f));
    }
    return {201, framework_summary(id, f)};
}

Response ExplainService::get_framework(const std::string& id) {
    auto f = framework(id);
    if (!f) return error(404, "unknown framework '" + id + "'");
    return {200, framework_summary(id, *f)};
}

Response ExplainService::initial_sets(const std::string& id) {
    auto f = framework(id);
    if (!f) return error(404, "unknown framework '" + id + "'");
    return {200, io::to_json(*f, initial::enumerate_initial_sets(*f, opts_.enumeration))};
}

Response ExplainService::extensions(const std::string& id, const Request& req) {
    auto f = framework(id);
    if (!f) return error(404, "unknown framework '" + id + "'");
    auto q = req.query.find("semantics");
    if (q == req.query.end()) throw BadRequest("missing query parameter 'semantics'");
    const SemanticsSpec spec = semantics_of(q->second);
    json list = json::array();
    for (const auto& ext : serial::enumerate_extensions(*f, spec, opts_.enumeration))
        list.push_back({{"extension", io::labels_json(*f, ext.set)}, {"witness", io::to_json(*f, ext.witness)}});
    return {200, {{"semantics", presets::code_of(spec)}, {"extensions", std::move(list)}}};
}

Response ExplainService::decompose(const std::string& id, const Request& req) {
    auto f = framework(id);
    if (!f) return error(404, "unknown framework '" + id + "'");
    const ArgSet e = labels_member(*f, body_json(req), "extension");
    if (!is_admissible(*f, e)) return error(422, f->format(e) + " is not admissible");
    return {200, io::to_json(*f, initial::decompose(*f, e))};
}

json ExplainService::state_json(const Session& s) const {
    const auto& state = s.states.back();
    const Framework& f = state.base();
    json choices = json::array();
    for (const auto& info : serial::choices(state, s.spec.alpha)) {
        json conflicts = json::array();
        for (const auto& c : info.conflicts) conflicts.push_back(io::labels_json(f, c));
        choices.push_back({{"select", io::labels_json(f, info.set)},
                           {"class", to_string(info.cls)},
                           {"conflicts", std::move(conflicts)}});
    }
    const Projection red = state.reduct_framework();
    return {{"remaining", io::labels_json(f, state.remaining())},
            {"accumulated", io::labels_json(f, state.accumulated())},
            {"choices", std::move(choices)},
            {"terminal", serial::is_terminal(state, s.spec.beta)},
            {"reduct", io::to_json(red.framework)},
            {"depth", state.history().size()}};
}

std::optional<Response> ExplainService::validate(const Session& s) const {
    if (!opts_.validate_states) return std::nullopt;
    if (s.states.size() != s.states.back().history().size() + 1) return error(500, "undo stack out of step with history");
    if (auto problem = serial::check_invariants(s.states.back())) return error(500, "state invariant violated: " + *problem);
    return std::nullopt;
}

Response ExplainService::create_session(const Request& req) {
    const json body = body_json(req);
    const std::string fid = string_member(body, "frameworkId");
    const SemanticsSpec spec = semantics_of(string_member(body, "semantics"));
    auto f = framework(fid);
    if (!f) return error(404, "unknown framework '" + fid + "'");

    auto s = std::make_shared<Session>();
    s->framework_id = fid;
    s->spec = spec;
    s->states.push_back(serial::init_state(f));
    s->last_used = opts_.now();
    std::string id;
    {
        std::lock_guard lock(sessions_mutex_);
        id = "s" + std::to_string(next_session_++);
        sessions_.emplace(id, s);
    }
    std::lock_guard lock(s->mutex);
    return {201, {{"sessionId", id}, {"semantics", presets::code_of(spec)}, {"state", state_json(*s)}}};
}

Response ExplainService::session_state(const std::string& id) {
    auto s = session(id);
    if (!s) return error(404, "unknown session '" + id + "'");
    std::lock_guard lock(s->mutex);
    s->last_used = opts_.now();
    return {200, state_json(*s)};
}

Response ExplainService::step(const std::string& id, const Request& req) {
    auto s = session(id);
    if (!s) return error(404, "unknown session '" + id + "'");
    std::lock_guard lock(s->mutex);
    s->last_used = opts_.now();
    const Framework& f = s->states.back().base();
    const ArgSet selection = labels_member(f, body_json(req), "select");
    try {
        auto next = serial::step(s->states.back(), selection);
        const InitialClass cls = next.history().back().cls;
        if (!selects(s->spec.alpha, cls)) {
            return {422,
                    {{"error", "selection " + f.format(selection) + " is " + std::string(to_string(cls)) +
                                   ", which the " + s->spec.name + " semantics does not select"},
                     {"reason", "not_eligible"}}};
        }
        s->states.push_back(std::move(next));
    } catch (const serial::InvalidSelection& e) {
        return {422, {{"error", e.what()}, {"reason", reason_text(e.reason())}}};
    }
    if (auto bad = validate(*s)) return *bad;
    return {200, state_json(*s)};
}

Response ExplainService::undo(const std::string& id) {
    auto s = session(id);
    if (!s) return error(404, "unknown session '" + id + "'");
    std::lock_guard lock(s->mutex);
    s->last_used = opts_.now();
    if (s->states.size() == 1) return error(409, "nothing to undo");
    s->states.pop_back();
    if (auto bad = validate(*s)) return *bad;
    return {200, state_json(*s)};
}

Response ExplainService::sequence(const std::string& id) {
    auto s = session(id);
    if (!s) return error(404, "unknown session '" + id + "'");
    std::lock_guard lock(s->mutex);
    s->last_used = opts_.now();
    const auto& state = s->states.back();
    return {200, io::to_json(state.base(), state.sequence(s->spec))};
}

}  // namespace saf::service
