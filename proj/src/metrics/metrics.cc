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

#include "toolcall/metrics/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "toolcall/error.h"
#include "toolcall/model/response.h"
#include "toolcall/model/structure.h"

namespace toolcall {
namespace {

// Values are summed in sorted order so the mean does not depend on the
// order instances arrive in.
double ordered_sum(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  double total = 0.0;
  for (double x : xs) total += x;
  return total;
}

struct Accumulator {
  std::vector<double> sp, fp, spa, fpa;

  void add(const InstanceScores& s) {
    sp.push_back(s.sp_indicator);
    fp.push_back(s.fp());
    spa.push_back(s.spa());
    fpa.push_back(s.fpa());
  }

  MetricValues finish() const {
    MetricValues v;
    v.n = sp.size();
    if (v.n == 0) return v;
    const double d = static_cast<double>(v.n);
    v.sp = ordered_sum(sp) / d;
    v.fp = ordered_sum(fp) / d;
    v.spa = ordered_sum(spa) / d;
    v.fpa = ordered_sum(fpa) / d;
    return v;
  }
};

std::string overall_key(Granularity g) {
  return g == Granularity::kTurn ? "turn_overall" : "conversation_overall";
}

Json metric_values_to_json(const MetricValues& v) {
  Json j = Json::object();
  j["N"] = v.n;
  auto put = [&](const char* key, const std::optional<double>& x) {
    j[key] = x ? Json(to_percent(*x)) : Json(nullptr);
  };
  put("SP", v.sp);
  put("FP", v.fp);
  put("SPA", v.spa);
  put("FPA", v.fpa);
  return j;
}

Json call_or_null(const std::vector<FunctionCall>& calls,
                  const std::optional<size_t>& index) {
  if (!index || *index >= calls.size()) return nullptr;
  return call_to_json(calls[*index]);
}

Json instance_diagnostics(const InstanceScores& s, const Alignment& a,
                          const std::vector<FunctionCall>& pred,
                          const std::vector<FunctionCall>& gold) {
  Json j = Json::object();
  j["id"] = s.instance_id;
  j["turn"] = s.turn_index ? Json(*s.turn_index) : Json(nullptr);
  j["granularity"] = std::string(to_string(s.granularity));
  j["bucket"] = std::string(to_string(s.bucket));
  j["p_size"] = s.p_size;
  j["g_size"] = s.g_size;
  j["n_name"] = s.n_name;
  j["n_strict"] = s.n_strict;
  j["n_flex"] = s.n_flex;
  j["sp"] = s.sp_indicator;
  Json rows = Json::array();
  for (const AlignedPrediction& ap : a.predictions) {
    Json r = Json::object();
    r["prediction"] = call_or_null(pred, ap.pred_index);
    r["gold"] = call_or_null(gold, ap.gold_index);
    r["m_n"] = ap.verdict.name_match;
    r["m_s"] = ap.verdict.strict_match;
    r["m_f"] = ap.verdict.flexible_match;
    Json args = Json::array();
    for (const ArgumentDetail& d : ap.verdict.detail) {
      Json x = Json::object();
      x["key"] = d.key;
      x["outcome"] = std::string(to_string(d.outcome));
      if (d.outcome == ArgOutcome::kSemantic ||
          d.outcome == ArgOutcome::kFailed) {
        x["score"] = d.score;
      }
      args.push_back(std::move(x));
    }
    r["arguments"] = std::move(args);
    rows.push_back(std::move(r));
  }
  j["alignment"] = std::move(rows);
  return j;
}

}  // namespace

std::string_view to_string(Granularity g) {
  return g == Granularity::kTurn ? "turn" : "conversation";
}

std::string_view to_string(Bucket b) {
  switch (b) {
    case Bucket::kSingleHop: return "SH";
    case Bucket::kMultiHop: return "MH";
    case Bucket::kSingleTurn: return "ST";
    case Bucket::kMultiTurn: return "MT";
  }
  return "SH";
}

Granularity granularity_of(Bucket b) {
  return b == Bucket::kSingleHop || b == Bucket::kMultiHop
             ? Granularity::kTurn
             : Granularity::kConversation;
}

InstanceScores score_instance(const std::vector<FunctionCall>& predictions,
                              const std::vector<FunctionCall>& gold,
                              const CallMatcher& matcher,
                              Alignment* alignment_out) {
  if (gold.empty()) {
    throw Error(ErrorCode::kEmptyGroundTruth,
                "instance has no ground-truth calls");
  }
  Alignment a = align_calls(predictions, gold, matcher);
  InstanceScores s;
  s.p_size = a.predictions.size();
  s.g_size = gold.size();
  s.n_name = a.count_name();
  s.n_strict = a.count_strict();
  s.n_flex = a.count_flexible();
  s.sp_indicator =
      (a.unpadded_size == gold.size() && s.n_name == s.p_size) ? 1 : 0;
  if (alignment_out) *alignment_out = std::move(a);
  return s;
}

MetricReport aggregate(const std::vector<InstanceScores>& scores) {
  MetricReport report;
  if (scores.empty()) return report;
  const Granularity g = scores.front().granularity;
  std::map<std::string, Accumulator> buckets;
  std::map<std::string, std::map<std::string, Accumulator>> subsets;
  // Both buckets of the granularity are always reported, even when empty.
  if (g == Granularity::kTurn) {
    buckets["SH"];
    buckets["MH"];
  } else {
    buckets["ST"];
    buckets["MT"];
  }
  for (const InstanceScores& s : scores) {
    if (s.granularity != g) {
      throw Error(ErrorCode::kMixedGranularity,
                  "instance '" + s.instance_id +
                      "' does not share the aggregation granularity");
    }
    const std::string key(to_string(s.bucket));
    buckets[key].add(s);
    buckets[overall_key(g)].add(s);
    if (!s.subset.empty()) {
      subsets[s.subset][key].add(s);
      subsets[s.subset][overall_key(g)].add(s);
    }
  }
  for (const auto& [k, acc] : buckets) report.buckets[k] = acc.finish();
  for (const auto& [name, inner] : subsets) {
    for (const auto& [k, acc] : inner) report.subsets[name][k] = acc.finish();
  }
  return report;
}

void PredictionSet::add(const std::string& instance_id, size_t turn_index,
                        std::string response) {
  std::string& slot = responses_[{instance_id, turn_index}];
  if (!slot.empty()) slot += '\n';
  slot += response;
}

const std::string* PredictionSet::find(const std::string& instance_id,
                                       size_t turn_index) const {
  auto it = responses_.find({instance_id, turn_index});
  return it == responses_.end() ? nullptr : &it->second;
}

PredictionSet PredictionSet::load(const std::filesystem::path& path) {
  PredictionSet out;
  for (const Line& line : read_lines(path)) {
    const std::string where = path.string() + ":" + std::to_string(line.number);
    Json j = Json::parse(line.text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      throw Error(ErrorCode::kMalformedRecord, where + ": not a JSON object");
    }
    auto id = j.find("id");
    auto turn = j.find("turn");
    auto response = j.find("response");
    if (id == j.end() || !id->is_string() || turn == j.end() ||
        !turn->is_number_unsigned() || response == j.end() ||
        !response->is_string()) {
      throw Error(ErrorCode::kMalformedRecord,
                  where + ": prediction needs string id, non-negative turn, "
                          "and string response");
    }
    out.add(id->get<std::string>(), turn->get<size_t>(),
            response->get<std::string>());
  }
  return out;
}

EvaluationResult bucket_metrics(const std::vector<Conversation>& conversations,
                                const PredictionSet& predictions,
                                const CallMatcher& matcher) {
  EvaluationResult result;
  std::vector<MetricReport::Missing> missing;
  for (const Conversation& conv : conversations) {
    const std::vector<TurnSpan> turns = conv.turns();
    std::vector<FunctionCall> conv_pred;
    std::vector<FunctionCall> conv_gold;
    for (size_t t = 0; t < turns.size(); ++t) {
      const std::vector<FunctionCall> gold = conv.calls(turns[t]);
      std::vector<FunctionCall> pred;
      if (const std::string* response = predictions.find(conv.id, t)) {
        pred = parse_model_response(*response).calls;
      } else {
        missing.push_back({conv.id, t});
      }
      conv_pred.insert(conv_pred.end(), pred.begin(), pred.end());
      conv_gold.insert(conv_gold.end(), gold.begin(), gold.end());

      Alignment a;
      InstanceScores s = score_instance(pred, gold, matcher, &a);
      s.instance_id = conv.id;
      s.turn_index = t;
      s.subset = conv.source;
      s.granularity = Granularity::kTurn;
      s.bucket = gold.size() >= 2 ? Bucket::kMultiHop : Bucket::kSingleHop;
      result.diagnostics.push_back(instance_diagnostics(s, a, pred, gold));
      result.turn_scores.push_back(std::move(s));
    }

    Alignment a;
    InstanceScores s = score_instance(conv_pred, conv_gold, matcher, &a);
    s.instance_id = conv.id;
    s.subset = conv.source;
    s.granularity = Granularity::kConversation;
    s.bucket = turns.size() >= 2 ? Bucket::kMultiTurn : Bucket::kSingleTurn;
    result.diagnostics.push_back(
        instance_diagnostics(s, a, conv_pred, conv_gold));
    result.conversation_scores.push_back(std::move(s));
  }

  MetricReport turn_report = aggregate(result.turn_scores);
  MetricReport conv_report = aggregate(result.conversation_scores);
  if (result.turn_scores.empty()) {
    turn_report.buckets["SH"];
    turn_report.buckets["MH"];
    turn_report.buckets["turn_overall"];
  }
  if (result.conversation_scores.empty()) {
    conv_report.buckets["ST"];
    conv_report.buckets["MT"];
    conv_report.buckets["conversation_overall"];
  }
  result.report.buckets = std::move(turn_report.buckets);
  result.report.buckets.merge(conv_report.buckets);
  result.report.subsets = std::move(turn_report.subsets);
  for (auto& [name, inner] : conv_report.subsets) {
    result.report.subsets[name].merge(inner);
  }
  result.report.missing_predictions = std::move(missing);
  return result;
}

double to_percent(double fraction) {
  return std::floor(fraction * 1000.0 + 0.5 + 1e-9) / 10.0;
}

constexpr const char* kReportBucketOrder[] = {
    "SH", "MH", "ST", "MT", "turn_overall", "conversation_overall"};

Json report_to_json(const MetricReport& report) {
  Json j = Json::object();
  j["setting"] = report.setting;
  Json buckets = Json::object();
  for (const char* key : kReportBucketOrder) {
    auto it = report.buckets.find(key);
    if (it != report.buckets.end()) {
      buckets[key] = metric_values_to_json(it->second);
    }
  }
  j["buckets"] = std::move(buckets);
  Json subsets = Json::object();
  for (const auto& [name, inner] : report.subsets) {
    Json s = Json::object();
    for (const char* key : kReportBucketOrder) {
      auto it = inner.find(key);
      if (it != inner.end()) s[key] = metric_values_to_json(it->second);
    }
    subsets[name] = std::move(s);
  }
  j["subsets"] = std::move(subsets);
  Json missing = Json::array();
  for (const auto& m : report.missing_predictions) {
    missing.push_back({{"id", m.instance_id}, {"turn", m.turn_index}});
  }
  j["missing_predictions"] = std::move(missing);
  return j;
}

std::string report_to_table(const MetricReport& report) {
  auto cell = [](const std::optional<double>& x) {
    char buf[16];
    if (!x) return std::string("    -");
    std::snprintf(buf, sizeof(buf), "%5.1f", to_percent(*x));
    return std::string(buf);
  };
  std::string out;
  out += "setting: " + (report.setting.empty() ? "-" : report.setting) + "\n";
  out += "bucket      N     SP     FP    SPA    FPA\n";
  for (const char* key : {"SH", "MH", "ST", "MT"}) {
    auto it = report.buckets.find(key);
    const MetricValues v =
        it == report.buckets.end() ? MetricValues{} : it->second;
    char head[32];
    std::snprintf(head, sizeof(head), "%-6s%6zu", key, v.n);
    out += head;
    for (const auto& x : {v.sp, v.fp, v.spa, v.fpa}) out += "  " + cell(x);
    out += '\n';
  }
  return out;
}

}  // namespace toolcall
