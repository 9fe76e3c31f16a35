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

#include <gtest/gtest.h>

#include <filesystem>

#include "httplib.h"
#include "splitrephrase/rating_server.h"
#include "test_support.h"

namespace splitrephrase {
namespace {

using nlohmann::json;

class RatingServerTest : public ::testing::Test {
 protected:
  void SetUp() override {
    ServiceConfig c;
    c.ratings_per_rewrite = 1;
    service_ = std::make_unique<RatingService>(c);
    service_->add_pair({"p1", "A , which B , C .", {}});
    ServerOptions o;
    o.port = 0;
    server_ = std::make_unique<RatingServer>(*service_, o);
    port_ = server_->start();
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
  }
  void TearDown() override { server_->stop(); }

  json post(const std::string& path, const json& body, int expect_status) {
    auto res = client_->Post(path, body.dump(), "application/json");
    EXPECT_TRUE(res);
    if (!res) return {};
    EXPECT_EQ(res->status, expect_status) << res->body;
    return json::parse(res->body);
  }
  json get(const std::string& path, int expect_status) {
    auto res = client_->Get(path);
    EXPECT_TRUE(res);
    if (!res) return {};
    EXPECT_EQ(res->status, expect_status) << res->body;
    return json::parse(res->body);
  }

  std::unique_ptr<RatingService> service_;
  std::unique_ptr<RatingServer> server_;
  std::unique_ptr<httplib::Client> client_;
  int port_ = 0;
};

TEST_F(RatingServerTest, RewriteThenRateOverHttp) {
  post("/api/workers", {{"worker_id", "w1"}}, 200);
  post("/api/workers", {{"worker_id", "w2"}}, 200);
  const json task = get("/api/tasks/next?worker_id=w1&kind=rewrite", 200);
  EXPECT_EQ(task["task_id"], "rewrite/p1");
  EXPECT_EQ(task["original_text"], "A , which B , C .");
  const json ok = post("/api/submissions",
                       {{"task_id", "rewrite/p1"},
                        {"worker_id", "w1"},
                        {"payload", {{"sentences", {"A C.", "A B."}}, {"flag", "none"}}}},
                       200);
  EXPECT_EQ(ok["accepted"], true);
  EXPECT_EQ(ok["rewrite_id"], "p1-w1");

  EXPECT_EQ(get("/api/tasks/next?worker_id=w1&kind=rate", 200)["status"], "empty");
  const json rate = get("/api/tasks/next?worker_id=w2&kind=rate", 200);
  EXPECT_EQ(rate["rewrite_id"], "p1-w1");
  EXPECT_EQ(rate["rewritten_text"], "A C. A B.");
  json payload = {{"sensical", 5},      {"grammatical", 5},   {"miss_fact", false},
                  {"new_fact", false},  {"wrong_split", false}, {"need_more_split", true}};
  post("/api/submissions",
       {{"task_id", rate["task_id"]}, {"worker_id", "w2"}, {"payload", payload}}, 200);
  const json dup = post("/api/submissions",
                        {{"task_id", rate["task_id"]}, {"worker_id", "w2"}, {"payload", payload}},
                        409);
  EXPECT_EQ(dup["accepted"], false);
  EXPECT_NE(dup["reason"].get<std::string>().find("double"), std::string::npos);

  auto ratings = client_->Get("/api/export?kind=ratings");
  ASSERT_TRUE(ratings);
  const auto records = parse_ratings_jsonl(ratings->body);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_TRUE(records[0].need_more_split);
  auto rewrites = client_->Get("/api/export?kind=rewrites");
  ASSERT_TRUE(rewrites);
  LoadOptions lo;
  lo.name = "x";
  EXPECT_EQ(parse_benchmark(rewrites->body, lo).pairs.size(), 1u);

  const json progress = get("/api/progress", 200);
  EXPECT_EQ(progress["ratings"], 1);
  EXPECT_EQ(progress["rate"]["complete_tasks"], 1);
}

TEST_F(RatingServerTest, BadRequests) {
  get("/api/tasks/next?kind=rate", 400);
  get("/api/tasks/next?worker_id=w&kind=review", 400);
  get("/api/tasks/next?worker_id=ghost&kind=rate", 404);
  post("/api/workers", {{"name", "x"}}, 400);
  get("/api/export?kind=other", 400);
  auto res = client_->Post("/api/submissions", "not json", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);
  const json unknown = post("/api/submissions",
                            {{"task_id", "rewrite/p1"},
                             {"worker_id", "ghost"},
                             {"payload", {{"sentences", {"a.", "b."}}}}},
                            409);
  EXPECT_NE(unknown["reason"].get<std::string>().find("unknown worker"), std::string::npos);
}

TEST(RatingServerUi, ServesStaticFiles) {
  const std::string dir = testing::make_temp_dir("ui");
  testing::write_text(dir + "/index.html", "<html>rate</html>");
  RatingService service(ServiceConfig{});
  ServerOptions o;
  o.port = 0;
  o.ui_dir = dir;
  RatingServer server(service, o);
  const int port = server.start();
  httplib::Client client("127.0.0.1", port);
  auto res = client.Get("/index.html");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->body, "<html>rate</html>");
  server.stop();
  std::filesystem::remove_all(dir);

  ServerOptions missing;
  missing.ui_dir = dir + "/nope";
  EXPECT_THROW(RatingServer(service, missing), Error);
}

}  // namespace
}  // namespace splitrephrase
