#include "saf/http.hpp"

#include <stdexcept>

#include "httplib.h"

namespace saf::service {

namespace {

constexpr const char* placeholder_page = R"(<!doctype html>
<html><head><meta charset="utf-8"><title>saf explain service</title></head>
<body><p>No browser bundle is mounted. Start the server with --static-dir pointing at the built bundle,
or use the JSON API under <code>/api</code>.</p></body></html>
)";

}  // namespace

struct HttpServer::Impl {
    ExplainService& service;
    ServerOptions opts;
    httplib::Server server;
    int port = -1;

    Impl(ExplainService& s, ServerOptions o) : service(s), opts(std::move(o)) {}

    void forward(const httplib::Request& req, httplib::Response& res) {
        Request r{req.method, req.path, {}, req.body};
        for (const auto& [k, v] : req.params) r.query.emplace(k, v);
        const Response out = service.handle(r);
        res.status = out.status;
        res.set_content(out.body.dump(), "application/json");
    }

    void routes() {
        auto handler = [this](const httplib::Request& req, httplib::Response& res) { forward(req, res); };
        server.Get(R"(/api/.*)", handler);
        server.Post(R"(/api/.*)", handler);
        server.Put(R"(/api/.*)", handler);
        server.Delete(R"(/api/.*)", handler);
        if (opts.static_dir) {
            if (!server.set_mount_point("/", *opts.static_dir))
                throw std::runtime_error("cannot serve static files from " + *opts.static_dir);
        } else {
            server.Get("/", [](const httplib::Request&, httplib::Response& res) {
                res.set_content(placeholder_page, "text/html");
            });
        }
    }
};

HttpServer::HttpServer(ExplainService& service, ServerOptions opts)
    : impl_(std::make_unique<Impl>(service, std::move(opts))) {
    impl_->routes();
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind() {
    if (impl_->opts.port == 0) {
        impl_->port = impl_->server.bind_to_any_port(impl_->opts.host);
    } else if (impl_->server.bind_to_port(impl_->opts.host, impl_->opts.port)) {
        impl_->port = impl_->opts.port;
    }
    if (impl_->port < 0) throw std::runtime_error("cannot bind " + impl_->opts.host + ":" + std::to_string(impl_->opts.port));
    return impl_->port;
}

void HttpServer::run() {
    if (impl_->port < 0) throw std::runtime_error("bind() must precede run()");
    impl_->server.listen_after_bind();
}

void HttpServer::stop() {
    if (impl_->server.is_running()) impl_->server.stop();
}

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace saf::service
