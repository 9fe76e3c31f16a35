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

// HTTP + JSON front end for RatingService.
//
//   GET  /api/tasks/next?worker_id=&kind=rewrite|rate
//   POST /api/workers          {"worker_id"}
//   POST /api/submissions      {"task_id", "worker_id", "payload"}
//   GET  /api/progress
//   GET  /api/export?kind=ratings|rewrites
//
// Everything else is served from the optional UI directory.

#ifndef SPLITREPHRASE_RATING_SERVER_H_
#define SPLITREPHRASE_RATING_SERVER_H_

#include <memory>
#include <string>
#include <thread>

#include "splitrephrase/rating_service.h"

namespace splitrephrase {

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::string ui_dir;
};

class RatingServer {
 public:
  RatingServer(RatingService& service, ServerOptions options);
  ~RatingServer();

  RatingServer(const RatingServer&) = delete;
  RatingServer& operator=(const RatingServer&) = delete;

  // Binds the socket and returns the port. Throws Error on failure.
  int bind();
  // Blocks serving requests until stop().
  void serve();
  // bind() then serve() on a background thread; returns the port.
  int start();
  void stop();

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
  std::thread thread_;
};

}  // namespace splitrephrase

#endif  // SPLITREPHRASE_RATING_SERVER_H_
