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

// qasida command-line tool.
//
// Exit codes: 0 ok, 1 usage, 2 domain error, 3 I/O error.
// Environment: QASIDA_DB (meter database), QASIDA_PORT (serve),
// QASIDA_MIN_COVERAGE (scansion threshold).

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "httplib.h"
#include "qasida/qasida.hpp"

#ifndef QASIDA_DEFAULT_DB
#define QASIDA_DEFAULT_DB "data/meters.json"
#endif

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitIo = 3;

std::string env_or(const char* name, std::string fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::string(v) : std::move(fallback);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  return qasida::detail::read_file(path);
}

std::vector<std::string> read_lines(const std::string& path) {
  std::istringstream in(read_input(path));
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(std::move(line));
  }
  return out;
}

void write_output(const std::string& path, const std::string& data) {
  if (path == "-") {
    std::cout << data;
  } else {
    qasida::detail::write_file(path, data);
  }
}

struct Common {
  std::string db_path = env_or("QASIDA_DB", QASIDA_DEFAULT_DB);
  double min_coverage = 0.95;
  unsigned threads = 1;

  Common() {
    const std::string cov = env_or("QASIDA_MIN_COVERAGE", "");
    if (!cov.empty()) min_coverage = std::stod(cov);
  }

  qasida::PatternDB db() const { return qasida::PatternDB::load(db_path); }
  qasida::ScanOptions scan() const {
    qasida::ScanOptions o;
    o.min_coverage = min_coverage;
    return o;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--db", c.db_path, "meter database JSON (env QASIDA_DB)");
  cmd->add_option("--min-coverage", c.min_coverage, "scansion coverage threshold")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
}

// Corrected pattern with edit markers: [+b] inserted bit, [-] deleted bit,
// [~b] bit flipped to b.
std::string render_ops(const qasida::BinaryPattern& observed, const qasida::EditScript& script) {
  std::string out;
  std::size_t k = 0;
  const auto& ops = script.ops;
  for (std::size_t p = 0; p <= observed.size(); ++p) {
    bool consumed = false;
    for (; k < ops.size() && ops[k].position == p; ++k) {
      const auto& op = ops[k];
      if (op.kind == qasida::EditKind::Insert) {
        out += std::string("[+") + op.bit + "]";
      } else if (op.kind == qasida::EditKind::Delete) {
        out += "[-]";
        consumed = true;
      } else {
        out += std::string("[~") + op.bit + "]";
        consumed = true;
      }
    }
    if (p < observed.size() && !consumed) out.push_back(observed[p]);
  }
  return out;
}

std::string render_text(const qasida::Analysis& a, const qasida::PatternDB& db) {
  std::ostringstream out;
  if (a.meter) {
    const auto& t = db.meter(*a.meter);
    out << "meter: " << t.name_translit << " (" << t.name_ar << ")\n";
  } else {
    out << "meter: unknown\n";
  }
  if (a.qafiyah) out << "qafiyah: " << a.qafiyah->rawiy << " (" << a.qafiyah->tail << ")\n";
  for (std::size_t i = 0; i < a.hemistiches.size(); ++i) {
    const auto& h = a.hemistiches[i];
    out << "\n[" << i << "] " << h.text << "\n";
    if (h.error) {
      out << "  error: " << qasida::errc_name(h.error->code) << ": " << h.error->message << "\n";
      continue;
    }
    out << "  pattern:    " << h.scan->pattern << "\n";
    if (h.match) {
      char sim[32];
      std::snprintf(sim, sizeof sim, "%.4f", h.match->similarity);
      out << "  variant:    " << h.match->variant << "  similarity " << sim << "\n";
      out << "  correction: " << render_ops(h.scan->pattern, h.match->script) << "\n";
    }
  }
  for (const auto& w : a.warnings) out << "warning: " << w << "\n";
  return out.str();
}

int run_analyze(const std::string& input, bool text_mode, std::optional<int> meter, const Common& c) {
  const auto db = c.db();
  const std::string text = read_input(input);
  const qasida::Service service(db, {c.min_coverage, c.threads});
  const auto resp = service.analyze_text(text, meter);
  if (resp.status != 200) {
    const auto j = nlohmann::json::parse(resp.body);
    std::cerr << j["error"]["code"].get<std::string>() << ": " << j["error"]["message"].get<std::string>()
              << "\n";
    if (text_mode) return kExitDomain;
    std::cout << resp.body;
    return kExitDomain;
  }
  if (!text_mode) {
    std::cout << resp.body;
    return kExitOk;
  }
  qasida::AnalysisOptions opts;
  opts.scan = c.scan();
  opts.meter_hint = meter;
  opts.threads = c.threads;
  std::cout << render_text(qasida::predict_arudi(qasida::parse_poem_text(text), db, opts), db);
  return kExitOk;
}

int run_serve(const std::string& host, int port, const Common& c) {
  const auto db = c.db();
  const qasida::Service service(db, {c.min_coverage, 1});
  httplib::Server server;
  auto bind = [&](const char* path) {
    auto handler = [&service](const httplib::Request& req, httplib::Response& res) {
      const auto r = service.handle(req.method, req.path, req.body);
      res.status = r.status;
      res.set_content(r.body, "application/json");
    };
    server.Get(path, handler);
    server.Post(path, handler);
  };
  for (const char* p : {"/v1/analyze", "/v1/scan", "/v1/meters", "/v1/health"}) bind(p);
  std::cerr << "listening on " << host << ":" << port << "\n";
  if (!server.listen(host, port)) {
    std::cerr << "cannot listen on " << host << ":" << port << "\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arabic poetry prosody toolkit"};
  app.require_subcommand(1);
  Common common;

  std::string input, output, vocab_path, gold_path, pred_path, csv_path, test_path;
  bool json_mode = false, text_mode = false, report_json = false;
  std::optional<int> meter;
  std::uint64_t seed = 0;
  double rate = 0.0, min_cov = 0.95;
  std::string host = "127.0.0.1";
  int port = std::stoi(env_or("QASIDA_PORT", "8080"));

  auto* analyze = app.add_subcommand("analyze", "scan and match a poem ('#' between hemistiches)");
  analyze->add_option("input", input, "poem file or - for stdin")->required();
  auto* json_flag = analyze->add_flag("--json", json_mode, "JSON output (default)");
  analyze->add_flag("--text", text_mode, "human-readable output")->excludes(json_flag);
  analyze->add_option("--meter", meter, "restrict matching to this meter index");
  add_common(analyze, common);

  auto* scan = app.add_subcommand("scan", "binary pattern of one hemistich");
  scan->add_option("input", input, "hemistich file or -")->required();
  add_common(scan, common);

  auto* clean = app.add_subcommand("clean", "apply the corpus cleaning rules");
  clean->add_option("input", input)->required();
  clean->add_option("output", output)->required();

  auto* filter = app.add_subcommand("filter-coverage", "keep poems whose hemistiches meet a coverage");
  filter->add_option("input", input)->required();
  filter->add_option("output", output)->required();
  filter->add_option("--min", min_cov, "minimum coverage")->check(CLI::Range(0.0, 1.0));

  auto* dedupe = app.add_subcommand("dedupe", "drop training poems that share a hemistich with a test set");
  dedupe->add_option("train", input)->required();
  dedupe->add_option("test", test_path)->required();
  dedupe->add_option("output", output)->required();

  auto* vocab = app.add_subcommand("vocab", "build the character vocabulary");
  vocab->add_option("input", input)->required();
  vocab->add_option("output", output)->required();

  auto* encode = app.add_subcommand("encode", "encode a cleaned corpus as prompts");
  encode->add_option("input", input)->required();
  encode->add_option("output", output)->required();
  encode->add_option("--vocab", vocab_path, "vocabulary file")->required();
  add_common(encode, common);

  auto* augment = app.add_subcommand("augment", "swap hemistiches and drop diacritics ('A#B' per line)");
  augment->add_option("input", input)->required();
  augment->add_option("output", output)->required();
  augment->add_option("--seed", seed, "random seed");
  augment->add_option("--dropout-rate", rate, "per-letter diacritic dropout")->check(CLI::Range(0.0, 1.0));

  auto* eval_der = app.add_subcommand("eval-der", "DER/WER of predicted against gold lines");
  eval_der->add_option("gold", gold_path)->required();
  eval_der->add_option("pred", pred_path)->required();
  eval_der->add_flag("--json", report_json);

  auto* eval_rhythm = app.add_subcommand("eval-rhythm", "meter accuracy of labelled poems by hemistich vote");
  eval_rhythm->add_option("input", input)->required();
  eval_rhythm->add_option("--csv", csv_path, "write the confusion matrix as CSV");
  add_common(eval_rhythm, common);

  auto* db_validate = app.add_subcommand("db-validate", "check a meter database");
  db_validate->add_option("path", input)->required();

  auto* serve = app.add_subcommand("serve", "HTTP JSON service");
  serve->add_option("--host", host);
  serve->add_option("--port", port, "port (env QASIDA_PORT)");
  add_common(serve, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return run_analyze(input, text_mode, meter, common);
    if (*scan) {
      const auto s = qasida::scan_hemistich(read_input(input), common.scan());
      std::cout << qasida::detail::render(qasida::to_json(s));
      return kExitOk;
    }
    if (*clean) {
      auto result = qasida::clean(qasida::load_jsonl(input));
      qasida::write_jsonl(result.kept, output);
      std::cout << qasida::to_json(result.report).dump(2) << "\n";
      return kExitOk;
    }
    if (*filter) {
      const auto poems = qasida::load_jsonl(input);
      const auto kept = qasida::filter_by_coverage(poems, min_cov);
      qasida::write_jsonl(kept, output);
      std::cout << nlohmann::json{{"input", poems.size()}, {"kept", kept.size()}}.dump(2) << "\n";
      return kExitOk;
    }
    if (*dedupe) {
      const auto train = qasida::load_jsonl(input);
      const auto kept = qasida::dedupe_against(train, qasida::load_jsonl(test_path));
      qasida::write_jsonl(kept, output);
      std::cout << nlohmann::json{{"input", train.size()}, {"kept", kept.size()}}.dump(2) << "\n";
      return kExitOk;
    }
    if (*vocab) {
      const auto v = qasida::build_vocab(qasida::load_jsonl(input));
      write_output(output, v.serialize());
      std::cout << nlohmann::json{{"size", v.size()}, {"specials", v.specials().size()}}.dump(2) << "\n";
      return kExitOk;
    }
    if (*encode) {
      const auto db = common.db();
      const auto v = qasida::SpecialTokenVocab::parse(qasida::detail::read_file(vocab_path));
      const auto poems = qasida::load_jsonl(input);
      const auto r = qasida::encode_corpus(poems, v, db, common.scan(), common.threads);
      write_output(output, r.text);
      nlohmann::json excluded = nlohmann::json::array();
      for (const auto& [i, why] : r.excluded) excluded.push_back({{"index", i}, {"id", poems[i].id}, {"reason", why}});
      std::cout << nlohmann::json{{"encoded", r.encoded.size()}, {"excluded", excluded}}.dump(2) << "\n";
      return kExitOk;
    }
    if (*augment) {
      auto lines = read_lines(input);
      lines = qasida::augment_swap(lines, seed);
      if (rate > 0.0) lines = qasida::augment_dropout(lines, rate, seed);
      std::string out;
      for (const auto& l : lines) out += l + "\n";
      write_output(output, out);
      return kExitOk;
    }
    if (*eval_der) {
      const auto g = read_lines(gold_path), p = read_lines(pred_path);
      std::vector<qasida::NormalizedText> gt, pt;
      for (const auto& l : g) gt.push_back(qasida::normalize_unicode(l));
      for (const auto& l : p) pt.push_back(qasida::normalize_unicode(l));
      const auto s = qasida::der_wer(gt, pt);
      if (report_json) {
        std::cout << qasida::to_json(s).dump(2) << "\n";
      } else {
        char buf[160];
        std::snprintf(buf, sizeof buf, "DER %.2f\nWER %.2f\nDER* %.2f\nWER* %.2f\n", s.der, s.wer,
                      s.der_star, s.wer_star);
        std::cout << buf;
      }
      return kExitOk;
    }
    if (*eval_rhythm) {
      const auto db = common.db();
      std::vector<qasida::RhythmItem> items;
      for (auto& p : qasida::load_jsonl(input)) {
        if (!p.meter) throw qasida::Error(qasida::Errc::validation_error, "poem " + p.id + " has no meter label");
        items.push_back({*p.meter, std::move(p)});
      }
      const auto r = qasida::rhythm_eval(items, db, common.scan(), common.threads);
      if (!csv_path.empty()) qasida::detail::write_file(csv_path, r.confusion.to_csv());
      std::cout << qasida::to_json(r).dump(2) << "\n";
      return kExitOk;
    }
    if (*db_validate) {
      const auto db = qasida::PatternDB::load(input);
      std::size_t variants = 0;
      for (const auto& t : db.templates()) variants += db.variants(t.index).size();
      std::cout << nlohmann::json{{"meters", db.size()}, {"variants", variants}, {"checksum", db.checksum()}}.dump(2)
                << "\n";
      return kExitOk;
    }
    if (*serve) return run_serve(host, port, common);
  } catch (const qasida::Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == qasida::Errc::io_error ? kExitIo : kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
