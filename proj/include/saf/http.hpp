#pragma once

#include <memory>
#include <optional>
#include <string>

#include "saf/service.hpp"

namespace saf::service {

struct ServerOptions {
    std::string host = "127.0.0.1";
    /// 0 picks a free port.
    int port = 8080;
    /// Directory with the built browser bundle, served at "/".
    std::optional<std::string> static_dir;
};

/// Binds an ExplainService to HTTP. API routes live under /api.
class HttpServer {
public:
    HttpServer(ExplainService& service, ServerOptions opts);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Binds the socket and returns the port; throws std::runtime_error on
    /// failure or when the static directory cannot be mounted.
    int bind();
    /// Serves until `stop` is called. Requires a prior `bind`.
    void run();
    void stop();
    void wait_until_ready() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace saf::service
