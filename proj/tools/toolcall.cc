// Copyright 2026 The toolcall Authors.
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

// Command-line front end: curate, assemble, synthesize, evaluate, stats,
// stratify. Exit codes: 0 success, 1 user error, 2 provider error,
// 3 internal error.

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "toolcall/candidates/candidates.h"
#include "toolcall/curation/curation.h"
#include "toolcall/error.h"
#include "toolcall/metrics/metrics.h"
#include "toolcall/model/wire.h"
#include "toolcall/providers/http.h"
#include "toolcall/report/report.h"
#include "toolcall/synthesis/pipeline.h"
#include "toolcall/synthesis/simulator.h"
#include "toolcall/util/rng.h"

namespace fs = std::filesystem;

namespace toolcall {
namespace {

enum ExitCode { kOk = 0, kUserError = 1, kProviderFailure = 2, kInternal = 3 };

struct Globals {
  uint64_t seed = 0;
  size_t jobs = 1;
  std::string log_level = "info";
};

int exit_code_for(ErrorCode code) {
  if (code == ErrorCode::kInternal) return kInternal;
  if (is_provider_error(code)) return kProviderFailure;
  return kUserError;
}

[[noreturn]] void config_error(const std::string& msg) {
  throw Error(ErrorCode::kConfigError, msg);
}

std::string env_prefix(const std::string& role) { return "TOOLCALL_" + role; }

ProviderSettings require_settings(const std::string& role) {
  ProviderSettings s = settings_from_env(env_prefix(role));
  if (!s.configured()) {
    config_error("no " + role + " provider configured; set " +
                 env_prefix(role) + "_URL and " + env_prefix(role) +
                 "_MODEL");
  }
  return s;
}

std::shared_ptr<Embedder> make_embedder(bool mock) {
  if (mock) return std::make_shared<HashingEmbedder>();
  return std::make_shared<HttpEmbedder>(require_settings("EMBED"));
}

// Resolved settings next to an output file: the global options and those
// of the command that ran, in a form --config accepts. Unset options are
// left out. Provider endpoints are recorded as comments, key redacted.
void write_snapshot(const CLI::App& app, const fs::path& out,
                    const std::vector<std::string>& roles) {
  const std::string command = app.get_subcommands().front()->get_name();
  std::string text;
  std::istringstream lines(app.config_to_str(true, false));
  for (std::string line; std::getline(lines, line);) {
    const size_t eq = line.find('=');
    if (eq == std::string::npos || line.compare(eq, 3, "=\"\"") == 0) continue;
    const std::string key = line.substr(0, eq);
    const size_t dot = key.find('.');
    if (dot != std::string::npos && key.substr(0, dot) != command) continue;
    text += line + "\n";
  }
  for (const std::string& role : roles) {
    const ProviderSettings s = settings_from_env(env_prefix(role));
    text += "# " + env_prefix(role) + ": url=" +
            (s.base_url.empty() ? "(unset)" : s.base_url) + " model=" +
            (s.model.empty() ? "(unset)" : s.model) + " key=" +
            (s.api_key.empty() ? "(unset)" : "<redacted>") + "\n";
  }
  fs::path snap = out;
  snap += ".config.toml";
  write_file_atomic(snap, text);
}

void write_json(const fs::path& path, const Json& j) {
  write_file_atomic(path, j.dump(2) + "\n");
}

// ---- curate ----

struct CurateArgs {
  fs::path in, out, report, keywords;
  double threshold = kDefaultDedupThreshold;
  bool skip_semantic = false;
  bool mock_embedder = false;
};

int cmd_curate(const CurateArgs& a, const Globals& g, const CLI::App& app) {
  CurationConfig cfg;
  cfg.semantic_threshold = a.threshold;
  cfg.skip_semantic = a.skip_semantic;
  if (!a.keywords.empty()) {
    Json j = Json::parse(read_file(a.keywords), nullptr, false);
    if (j.is_discarded()) config_error("keyword file is not valid JSON");
    cfg.temporal = TemporalFilterConfig::from_json(j);
  }
  std::unique_ptr<CachingEmbedder> embedder;
  if (!a.skip_semantic) {
    embedder = std::make_unique<CachingEmbedder>(
        make_embedder(a.mock_embedder), 64, g.jobs);
  }
  const std::vector<ToolSpec> pool = load_tool_pool(a.in);
  spdlog::info("curating {} tools", pool.size());
  const fs::path report_path =
      a.report.empty() ? fs::path(a.out.string() + ".report.json") : a.report;
  try {
    StageResult r = run_curation(pool, cfg, embedder.get());
    write_file_atomic(a.out, dump_tool_pool(r.tools));
    write_json(report_path, r.report.to_json());
    spdlog::info("kept {} of {} tools", r.tools.size(), pool.size());
  } catch (const CurationAborted& e) {
    write_json(report_path, e.partial_report().to_json());
    throw;
  }
  write_snapshot(app, a.out, a.skip_semantic ? std::vector<std::string>{}
                                             : std::vector<std::string>{"EMBED"});
  return kOk;
}

// ---- assemble ----

struct AssembleArgs {
  fs::path in, pool, out;
  std::string mode = "hybrid20";
  bool mock_embedder = false;
};

int cmd_assemble(const AssembleArgs& a, const Globals& g, const CLI::App& app) {
  std::vector<Conversation> data = load_conversations(a.in);
  const std::vector<ToolSpec> pool =
      a.pool.empty() ? std::vector<ToolSpec>{} : load_tool_pool(a.pool);
  const bool hybrid = a.mode == "hybrid20";
  std::unique_ptr<CachingEmbedder> embedder;
  if (hybrid) {
    if (pool.empty()) config_error("hybrid20 needs --pool");
    embedder = std::make_unique<CachingEmbedder>(
        make_embedder(a.mock_embedder), 64, g.jobs);
  }
  for (size_t i = 0; i < data.size(); ++i) {
    const std::vector<ToolSpec> gt = ground_truth_tools(data[i], pool);
    const CandidateList list =
        hybrid ? assemble_hybrid(gt, pool, *embedder, derive_seed(g.seed, i))
               : assemble_gt(gt);
    data[i].tools = list.presented;
  }
  write_file_atomic(a.out, dump_conversations(data));
  write_snapshot(app, a.out,
                 hybrid ? std::vector<std::string>{"EMBED"}
                        : std::vector<std::string>{});
  spdlog::info("assembled {} candidate lists ({})", data.size(), a.mode);
  return kOk;
}

// ---- synthesize ----

struct SynthesizeArgs {
  std::string scenario;
  size_t count = 1;
  fs::path pool, out, rejections, drafts;
  size_t steps = 0;
  size_t turns = 0;
  int max_retries = 3;
  bool mock = false;
  fs::path chat_script, judge_script;
};

std::unique_ptr<ChatProvider> make_chat(const fs::path& script, bool mock,
                                        const std::string& role) {
  if (!script.empty()) {
    return ScriptedChatProvider::load(script);
  }
  if (mock) {
    if (role == "JUDGE") return std::make_unique<SimulatedJudge>();
    return std::make_unique<SimulatedGenerator>();
  }
  return std::make_unique<HttpChatProvider>(require_settings(role));
}

int cmd_synthesize(const SynthesizeArgs& a, const Globals& g,
                   const CLI::App& app) {
  const std::optional<Scenario> scenario = parse_scenario(a.scenario);
  if (!scenario) config_error("unknown scenario '" + a.scenario + "'");
  const std::vector<ToolSpec> pool = load_tool_pool(a.pool);
  auto chat = make_chat(a.chat_script, a.mock, "CHAT");
  auto judge = make_chat(a.judge_script, a.mock, "JUDGE");
  CachingEmbedder embedder(make_embedder(a.mock), 64, g.jobs);

  // Subsets are drawn up front and in order so the usage counter, and
  // therefore the output, does not depend on thread timing.
  UsageCounter usage;
  std::vector<GenerationTask> tasks;
  for (size_t i = 0; i < a.count; ++i) {
    GenerationTask t;
    t.scenario = *scenario;
    t.seed = derive_seed(g.seed, i);
    t.tools = sample_tool_subset(pool, *scenario, t.seed, &usage);
    t.steps = a.steps;
    t.turns = a.turns ? a.turns
                      : kMinTurns + SeededRng(derive_seed(t.seed, 7))
                                        .uniform_index(kMaxTurns - kMinTurns + 1);
    t.max_retries = a.max_retries;
    if (*scenario == Scenario::kMultiHopParallel && t.steps > t.tools.size()) {
      t.steps = t.tools.size();
    }
    tasks.push_back(std::move(t));
  }

  std::vector<std::optional<SynthesisResult>> results(tasks.size());
  std::vector<std::exception_ptr> failures(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = synthesize_with_retry(tasks[i], *chat, *judge,
                                           {&pool, &embedder});
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  for (size_t j = 1; j < std::max<size_t>(g.jobs, 1); ++j) {
    threads.emplace_back(worker);
  }
  worker();
  for (std::thread& t : threads) t.join();
  for (const std::exception_ptr& e : failures) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<Conversation> accepted;
  std::vector<Json> rejection_log, drafts;
  size_t excluded = 0;
  for (size_t i = 0; i < tasks.size(); ++i) {
    SynthesisResult& r = *results[i];
    Json tool_names = Json::array();
    for (const ToolSpec& t : tasks[i].tools) tool_names.push_back(t.name);
    for (const Rejection& rej : r.rejections) {
      Json j = rejection_to_json(rej);
      j["task"] = i;
      j["scenario"] = a.scenario;
      j["tools"] = tool_names;
      rejection_log.push_back(std::move(j));
    }
    if (!r.accepted()) {
      ++excluded;
      rejection_log.push_back({{"task", i},
                               {"scenario", a.scenario},
                               {"excluded_tools", r.excluded_tools}});
      continue;
    }
    char id[32];
    std::snprintf(id, sizeof(id), "%s-%04zu", a.scenario.c_str(), i);
    r.instance->id = id;
    accepted.push_back(*r.instance);
    if (!a.drafts.empty()) {
      Json d = draft_to_json(*r.draft);
      d["id"] = id;
      d["scores"] = r.scores->to_json();
      drafts.push_back(std::move(d));
    }
  }
  write_file_atomic(a.out, dump_conversations(accepted));
  const fs::path rej_path = a.rejections.empty()
                                ? fs::path(a.out.string() + ".rejections.jsonl")
                                : a.rejections;
  write_file_atomic(rej_path, to_jsonl(rejection_log));
  if (!a.drafts.empty()) write_file_atomic(a.drafts, to_jsonl(drafts));
  write_snapshot(app, a.out, {"CHAT", "JUDGE", "EMBED"});
  spdlog::info("{} accepted, {} excluded of {} tasks", accepted.size(),
               excluded, tasks.size());
  return kOk;
}

// ---- evaluate ----

struct EvaluateArgs {
  fs::path gold, predictions, out, diagnostics;
  std::string setting = "hybrid20";
  double threshold = kDefaultSemanticThreshold;
  bool table = false;
};

int cmd_evaluate(const EvaluateArgs& a, const Globals&, const CLI::App& app) {
  const std::vector<Conversation> gold = load_conversations(a.gold);
  const PredictionSet preds = PredictionSet::load(a.predictions);
  EvaluationResult r = bucket_metrics(gold, preds, CallMatcher(a.threshold));
  r.report.setting = a.setting;
  const Json report = report_to_json(r.report);
  if (!a.out.empty()) {
    write_json(a.out, report);
    write_snapshot(app, a.out, {});
  }
  if (!a.diagnostics.empty()) {
    std::vector<Json> rows(r.diagnostics.begin(), r.diagnostics.end());
    write_file_atomic(a.diagnostics, to_jsonl(rows));
  }
  if (a.table) {
    std::cout << report_to_table(r.report);
  } else if (a.out.empty()) {
    std::cout << report.dump(2) << "\n";
  }
  if (!r.report.missing_predictions.empty()) {
    spdlog::warn("{} turns had no prediction and scored as empty",
                 r.report.missing_predictions.size());
  }
  return kOk;
}

// ---- stats / stratify ----

struct StatsArgs {
  fs::path in, out;
  std::optional<size_t> manifest_total;
};

int cmd_stats(const StatsArgs& a, const Globals&, const CLI::App& app) {
  const std::vector<Conversation> data = load_conversations(a.in);
  Json j = compute_stats(data).to_json();
  if (a.manifest_total) {
    const CorpusManifest m = manifest_of(data, *a.manifest_total);
    j["manifest"] = {{"public", m.public_instances},
                     {"synthetic", m.synthetic_instances},
                     {"declared_total", m.declared_total},
                     {"balanced", m.balanced()}};
  }
  if (a.out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    write_json(a.out, j);
    write_snapshot(app, a.out, {});
  }
  return kOk;
}

struct StratifyArgs {
  fs::path in, out;
  std::string ratio;
};

int cmd_stratify(const StratifyArgs& a, const Globals& g, const CLI::App& app) {
  const std::vector<Conversation> data = load_conversations(a.in);
  const std::vector<Conversation> out =
      stratify_by_ratio(data, parse_ratio(a.ratio), g.seed);
  write_file_atomic(a.out, dump_conversations(out));
  write_snapshot(app, a.out, {});
  spdlog::info("kept {} of {} conversations", out.size(), data.size());
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Tool-calling data curation, synthesis and evaluation"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML or INI file with option defaults");
  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--jobs", g.jobs, "Concurrent provider calls")
      ->check(CLI::Range(size_t{1}, size_t{256}))
      ->capture_default_str();
  app.add_option("--log-level", g.log_level, "trace, debug, info, warn, error")
      ->check(CLI::IsMember({"trace", "debug", "info", "warn", "error", "off"}))
      ->capture_default_str();

  CurateArgs curate;
  auto* c = app.add_subcommand("curate", "Filter a raw tool pool");
  c->add_option("--in", curate.in, "Tool pool (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  c->add_option("--out", curate.out, "Curated pool (JSONL)")->required();
  c->add_option("--report", curate.report, "Stage report (JSON)");
  c->add_option("--temporal-keywords", curate.keywords,
                "JSON file overriding the temporal keyword lists")
      ->check(CLI::ExistingFile);
  c->add_option("--semantic-threshold", curate.threshold,
                "Cosine above which tools are duplicates")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  c->add_flag("--skip-semantic", curate.skip_semantic,
              "Skip embedding-based deduplication");
  c->add_flag("--mock-embedder", curate.mock_embedder,
              "Use the offline hashing embedder");

  AssembleArgs assemble;
  auto* as = app.add_subcommand("assemble", "Attach candidate tool lists");
  as->add_option("--in", assemble.in, "Conversations (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  as->add_option("--pool", assemble.pool, "Tool pool (JSONL)")
      ->check(CLI::ExistingFile);
  as->add_option("--mode", assemble.mode, "hybrid20 or gt")
      ->check(CLI::IsMember({"hybrid20", "gt"}))
      ->capture_default_str();
  as->add_option("--out", assemble.out, "Output conversations")->required();
  as->add_flag("--mock-embedder", assemble.mock_embedder,
               "Use the offline hashing embedder");

  SynthesizeArgs synth;
  auto* sy = app.add_subcommand("synthesize", "Generate gated trajectories");
  sy->add_option("--scenario", synth.scenario, "sh, mh-serial, mh-parallel, mt")
      ->required()
      ->check(CLI::IsMember({"sh", "mh-serial", "mh-parallel", "mt"}));
  sy->add_option("--count", synth.count, "Number of generation tasks")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sy->add_option("--pool", synth.pool, "Curated tool pool (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  sy->add_option("--out", synth.out, "Accepted instances (JSONL)")->required();
  sy->add_option("--rejections", synth.rejections, "Rejection log (JSONL)");
  sy->add_option("--drafts", synth.drafts,
                 "Accepted drafts with generation logs (JSONL)");
  sy->add_option("--steps", synth.steps, "Multi-hop K (default |S|)");
  sy->add_option("--turns", synth.turns, "Multi-turn T (default seeded 2-4)")
      ->check(CLI::Range(size_t{2}, size_t{4}));
  sy->add_option("--max-retries", synth.max_retries, "Attempts per task")
      ->check(CLI::Range(1, 20))
      ->capture_default_str();
  sy->add_flag("--mock", synth.mock,
               "Offline simulated generator, judge and embedder");
  sy->add_option("--chat-script", synth.chat_script,
                 "Replay generator replies from a file")
      ->check(CLI::ExistingFile);
  sy->add_option("--judge-script", synth.judge_script,
                 "Replay judge replies from a file")
      ->check(CLI::ExistingFile);

  EvaluateArgs eval;
  auto* ev = app.add_subcommand("evaluate", "Score predictions against gold");
  ev->add_option("--gold", eval.gold, "Gold conversations (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  ev->add_option("--predictions", eval.predictions,
                 "Records of {id, turn, response} (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  ev->add_option("--setting", eval.setting, "Label stored in the report")
      ->capture_default_str();
  ev->add_option("--threshold", eval.threshold, "ROUGE-L F1 threshold")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  ev->add_option("--out", eval.out, "Report (JSON)");
  ev->add_option("--diagnostics", eval.diagnostics,
                 "Per-instance alignments (JSONL)");
  ev->add_flag("--table", eval.table, "Print a plain-text table");

  StatsArgs stats;
  auto* st = app.add_subcommand("stats", "Dataset statistics");
  st->add_option("--in", stats.in, "Conversations (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  st->add_option("--out", stats.out, "Statistics (JSON)");
  st->add_option("--manifest-total", stats.manifest_total,
                 "Declared instance total to check against");

  StratifyArgs strat;
  auto* sr = app.add_subcommand("stratify", "Sample to a serial:parallel ratio");
  sr->add_option("--in", strat.in, "Conversations (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  sr->add_option("--ratio", strat.ratio, "serial:parallel, e.g. 1:4")
      ->required();
  sr->add_option("--out", strat.out, "Sampled conversations")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUserError;
  }

  auto logger = spdlog::stderr_color_mt("toolcall");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::from_str(g.log_level));

  try {
    if (*c) return cmd_curate(curate, g, app);
    if (*as) return cmd_assemble(assemble, g, app);
    if (*sy) return cmd_synthesize(synth, g, app);
    if (*ev) return cmd_evaluate(eval, g, app);
    if (*st) return cmd_stats(stats, g, app);
    if (*sr) return cmd_stratify(strat, g, app);
  } catch (const Error& e) {
    spdlog::error("{}", e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    spdlog::error("internal error: {}", e.what());
    return kInternal;
  }
  return kInternal;
}

}  // namespace
}  // namespace toolcall

int main(int argc, char** argv) { return toolcall::run(argc, argv); }
