// Copyright 2026 The Qasida Authors. All Rights Reserved.
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

// Transport-free request handlers shared by the HTTP server and the CLI.
//
//   POST /v1/analyze  {"text": str, "meter_hint": int | null}
//   POST /v1/scan     {"text": str}              one hemistich
//   GET  /v1/meters
//   GET  /v1/health
//
// 400 means the body is not the expected JSON; 422 carries
// {"error": {"code", "message", "positions"}} for domain failures.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "json.hpp"
#include "qasida/classify.hpp"
#include "qasida/error.hpp"
#include "qasida/meterdb.hpp"
#include "qasida/poem.hpp"
#include "qasida/scansion.hpp"

namespace qasida {

struct Response {
  int status = 200;
  std::string body;  ///< JSON, newline-terminated
};

struct ServiceConfig {
  double min_coverage = 0.95;
  unsigned threads = 1;
};

namespace detail {

inline std::string render(const nlohmann::json& j) { return j.dump(2) + "\n"; }

inline Response error_response(int status, const ErrorInfo& e,
                               const nlohmann::json& details = nullptr) {
  nlohmann::json j = {{"error", to_json(e)}};
  if (!details.is_null()) j["details"] = details;
  return {status, render(j)};
}

inline Response bad_request(const std::string& why) {
  return {400, render({{"error", {{"code", "BadRequest"}, {"message", why}, {"positions", nlohmann::json::array()}}}})};
}

}  // namespace detail

/// Stateless handlers over a shared, immutable PatternDB.
class Service {
 public:
  explicit Service(const PatternDB& db, ServiceConfig config = {}) : db_(db), config_(config) {}

  /// Analysis of a plain-text poem (one bait per line, '#' between
  /// hemistiches). 422 when nothing could be scanned; partial failures are
  /// reported per hemistich and in "warnings".
  Response analyze_text(std::string_view text, std::optional<int> meter_hint) const {
    const Poem poem = parse_poem_text(text);
    if (poem.hemistich_count() == 0) {
      return detail::error_response(422, {Errc::empty_poem, "no hemistich in input", {}});
    }
    AnalysisOptions opts;
    opts.scan.min_coverage = config_.min_coverage;
    opts.meter_hint = meter_hint;
    opts.threads = config_.threads;
    try {
      const Analysis a = predict_arudi(poem, db_, opts);
      if (!a.any_scanned()) {
        nlohmann::json details = nlohmann::json::array();
        for (const auto& h : a.hemistiches) details.push_back(to_json(*h.error));
        return detail::error_response(422, *a.hemistiches.front().error, details);
      }
      return {200, detail::render(to_json(a, db_))};
    } catch (const Error& e) {
      return detail::error_response(422, ErrorInfo::from(e));
    }
  }

  Response analyze(std::string_view body) const {
    nlohmann::json req;
    if (auto bad = parse_body(body, req)) return *bad;
    std::optional<int> hint;
    if (const auto it = req.find("meter_hint"); it != req.end() && !it->is_null()) {
      if (!it->is_number_integer()) return detail::bad_request("'meter_hint' must be an integer");
      hint = it->get<int>();
    }
    return analyze_text(req["text"].get<std::string>(), hint);
  }

  Response scan(std::string_view body) const {
    nlohmann::json req;
    if (auto bad = parse_body(body, req)) return *bad;
    try {
      ScanOptions opts;
      opts.min_coverage = config_.min_coverage;
      return {200, detail::render(to_json(scan_hemistich(req["text"].get<std::string>(), opts)))};
    } catch (const Error& e) {
      return detail::error_response(422, ErrorInfo::from(e));
    }
  }

  Response meters() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& m : qasida::meters(db_)) {
      arr.push_back({{"index", m.index}, {"name", m.name}, {"name_ar", m.name_ar}});
    }
    return {200, detail::render(arr)};
  }

  Response health() const {
    return {200, detail::render({{"status", "ok"}, {"meters", db_.size()}, {"db_checksum", db_.checksum()}})};
  }

  /// Routes by method and path; 404 and 405 for anything else.
  Response handle(std::string_view method, std::string_view path, std::string_view body) const {
    const bool get = method == "GET", post = method == "POST";
    if (path == "/v1/analyze") return post ? analyze(body) : not_allowed();
    if (path == "/v1/scan") return post ? scan(body) : not_allowed();
    if (path == "/v1/meters") return get ? meters() : not_allowed();
    if (path == "/v1/health") return get ? health() : not_allowed();
    return {404, detail::render({{"error", {{"code", "NotFound"}, {"message", std::string(path)}, {"positions", nlohmann::json::array()}}}})};
  }

  const PatternDB& db() const { return db_; }

 private:
  static Response not_allowed() {
    return {405, detail::render({{"error", {{"code", "MethodNotAllowed"}, {"message", "method not allowed"}, {"positions", nlohmann::json::array()}}}})};
  }

  static std::optional<Response> parse_body(std::string_view body, nlohmann::json& out) {
    try {
      out = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      return detail::bad_request(std::string("malformed JSON: ") + e.what());
    }
    if (!out.is_object()) return detail::bad_request("body must be a JSON object");
    const auto it = out.find("text");
    if (it == out.end() || !it->is_string()) return detail::bad_request("'text' must be a string");
    return std::nullopt;
  }

  const PatternDB& db_;
  ServiceConfig config_;
};

}  // namespace qasida
