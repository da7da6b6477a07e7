#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "saf/framework.hpp"
#include "saf/semantics.hpp"
#include "saf/serial.hpp"

namespace saf::service {

struct Request {
    std::string method;  // "GET", "POST", ...
    std::string path;    // "/api/frameworks/f1/extensions"
    std::map<std::string, std::string> query;
    std::string body;
};

struct Response {
    int status = 200;
    nlohmann::json body;
};

using Clock = std::chrono::steady_clock;

struct Options {
    std::chrono::seconds session_ttl{3600};
    /// Re-check state invariants after every session mutation and answer 500
    /// if one fails.
    bool validate_states = false;
    initial::EnumerationOptions enumeration{};
    /// Time source for session expiry.
    std::function<Clock::time_point()> now = [] { return Clock::now(); };
};

/// JSON API over the serialisation transition system. Frameworks are kept for
/// the lifetime of the service; sessions expire after `session_ttl` without
/// use. `handle` may be called from several threads at once.
class ExplainService {
public:
    explicit ExplainService(Options opts = {});

    Response handle(const Request& req);

    std::size_t framework_count() const;
    std::size_t session_count() const;
    /// Drops sessions idle for longer than the TTL; returns how many.
    std::size_t evict_expired();

private:
    struct Session {
        std::mutex mutex;
        std::string framework_id;
        SemanticsSpec spec;
        std::vector<serial::SerialisationState> states;  // states.back() is current
        Clock::time_point last_used;
    };

    Response create_framework(const Request& req);
    Response get_framework(const std::string& id);
    Response initial_sets(const std::string& id);
    Response extensions(const std::string& id, const Request& req);
    Response decompose(const std::string& id, const Request& req);
    Response create_session(const Request& req);
    Response session_state(const std::string& id);
    Response step(const std::string& id, const Request& req);
    Response undo(const std::string& id);
    Response sequence(const std::string& id);

    std::shared_ptr<const Framework> framework(const std::string& id) const;
    std::shared_ptr<Session> session(const std::string& id);
    nlohmann::json state_json(const Session& s) const;
    std::optional<Response> validate(const Session& s) const;

    Options opts_;

    mutable std::shared_mutex frameworks_mutex_;
    std::unordered_map<std::string, std::shared_ptr<const Framework>> frameworks_;
    std::size_t next_framework_ = 1;

    mutable std::mutex sessions_mutex_;
    std::unordered_map<std::string, std::shared_ptr<Session>> sessions_;
    std::size_t next_session_ = 1;
};

}  // namespace saf::service
