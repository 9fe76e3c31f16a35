// Copyright 2026 The Split-Rephrase Toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "splitrephrase/rating_server.h"

#include "httplib.h"
#include "splitrephrase/annotation.h"

namespace splitrephrase {
namespace {

using nlohmann::json;

constexpr char kJson[] = "application/json";
constexpr char kJsonl[] = "application/x-ndjson";

void send_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

void send_error(httplib::Response& res, int status, const std::string& what) {
  send_json(res, status, {{"error", what}});
}

}  // namespace

class RatingServer::Impl {
 public:
  Impl(RatingService& service, ServerOptions options)
      : service_(service), options_(std::move(options)) {
    routes();
  }

  int bind() {
    if (options_.port == 0) {
      port_ = server_.bind_to_any_port(options_.host);
    } else if (server_.bind_to_port(options_.host, options_.port)) {
      port_ = options_.port;
    } else {
      port_ = -1;
    }
    if (port_ <= 0) {
      throw Error("cannot bind " + options_.host + ":" +
                  std::to_string(options_.port));
    }
    return port_;
  }

  void serve() { server_.listen_after_bind(); }
  void stop() { server_.stop(); }
  bool running() const { return server_.is_running(); }
  void wait_until_ready() { server_.wait_until_ready(); }

 private:
  void routes() {
    server_.Get("/api/tasks/next",
                [this](const httplib::Request& req, httplib::Response& res) {
                  next_task(req, res);
                });
    server_.Post("/api/workers",
                 [this](const httplib::Request& req, httplib::Response& res) {
                   register_worker(req, res);
                 });
    server_.Post("/api/submissions",
                 [this](const httplib::Request& req, httplib::Response& res) {
                   submit(req, res);
                 });
    server_.Get("/api/progress",
                [this](const httplib::Request&, httplib::Response& res) {
                  send_json(res, 200, service_.progress());
                });
    server_.Get("/api/export",
                [this](const httplib::Request& req, httplib::Response& res) {
                  export_kind(req, res);
                });
    if (!options_.ui_dir.empty() &&
        !server_.set_mount_point("/", options_.ui_dir)) {
      throw Error("UI directory '" + options_.ui_dir + "' does not exist");
    }
  }

  void next_task(const httplib::Request& req, httplib::Response& res) {
    const std::string worker = req.get_param_value("worker_id");
    if (worker.empty()) return send_error(res, 400, "missing worker_id");
    TaskKind kind;
    try {
      kind = parse_task_kind(req.get_param_value("kind"));
    } catch (const Error& e) {
      return send_error(res, 400, e.what());
    }
    try {
      const auto task = service_.next_task(worker, kind);
      if (!task) return send_json(res, 200, {{"status", "empty"}});
      send_json(res, 200, to_json(*task));
    } catch (const Error& e) {
      send_error(res, 404, e.what());
    }
  }

  void register_worker(const httplib::Request& req, httplib::Response& res) {
    try {
      const json body = json::parse(req.body);
      service_.register_worker(body.at("worker_id").get<std::string>());
      send_json(res, 200, {{"status", "registered"}});
    } catch (const json::exception& e) {
      send_error(res, 400, e.what());
    } catch (const Error& e) {
      send_error(res, 400, e.what());
    }
  }

  void submit(const httplib::Request& req, httplib::Response& res) {
    Submission s;
    try {
      s = submission_from_json(json::parse(req.body));
    } catch (const json::exception& e) {
      return send_error(res, 400, e.what());
    } catch (const Error& e) {
      return send_error(res, 400, e.what());
    }
    const SubmitResult r = service_.submit(s);
    if (!r.accepted) {
      return send_json(res, 409, {{"accepted", false}, {"reason", r.reason}});
    }
    json body = {{"accepted", true}};
    if (!r.rewrite_id.empty()) body["rewrite_id"] = r.rewrite_id;
    send_json(res, 200, body);
  }

  void export_kind(const httplib::Request& req, httplib::Response& res) {
    const std::string kind = req.get_param_value("kind");
    if (kind == "ratings") {
      const auto ratings = service_.export_ratings();
      res.set_content(serialize_ratings_jsonl(ratings), kJsonl);
    } else if (kind == "rewrites") {
      res.set_content(serialize_benchmark(service_.export_rewrites()), kJsonl);
    } else {
      send_error(res, 400, "kind must be ratings or rewrites");
    }
  }

  RatingService& service_;
  ServerOptions options_;
  httplib::Server server_;
  int port_ = -1;
};

RatingServer::RatingServer(RatingService& service, ServerOptions options)
    : impl_(std::make_unique<Impl>(service, std::move(options))) {}

RatingServer::~RatingServer() { stop(); }

int RatingServer::bind() { return impl_->bind(); }

void RatingServer::serve() { impl_->serve(); }

int RatingServer::start() {
  const int port = impl_->bind();
  thread_ = std::thread([this] { impl_->serve(); });
  impl_->wait_until_ready();
  return port;
}

void RatingServer::stop() {
  impl_->stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace splitrephrase
