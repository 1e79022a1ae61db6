/*
 * Copyright (c) 2026, the pqforge authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "pqforge/json_io.hpp"

#include <stdexcept>

namespace pqforge {

using nlohmann::json;

namespace {

json codec_json(const Codec& c) {
  json j{{"kind", to_string(c.kind)}};
  if (c.level) j["level"] = *c.level;
  return j;
}

Codec codec_from(const json& j) {
  Codec c;
  auto k = codec_from_string(j.at("kind").get<std::string>());
  if (!k) throw std::invalid_argument("unknown codec kind in JSON");
  c.kind = *k;
  if (j.contains("level")) c.level = j.at("level").get<int>();
  return c;
}

EncodingKind encoding_from(const json& j) {
  auto e = encoding_from_string(j.get<std::string>());
  if (!e) throw std::invalid_argument("unknown encoding in JSON");
  return *e;
}

json page_json(const PageMeta& p) {
  return json{{"page_type", to_string(p.page_type)},
              {"num_values", p.num_values},
              {"encoding", to_string(p.encoding)},
              {"compressed_size", p.compressed_size},
              {"uncompressed_size", p.uncompressed_size},
              {"header_size", p.header_size}};
}

json choice_json(const EncodingChoice& c) {
  json trials = json::array();
  for (const TrialResult& t : c.trials) {
    trials.push_back(json{{"candidate", to_string(t.candidate)},
                          {"encoding", to_string(t.encoding)},
                          {"encoded_size", t.encoded_size},
                          {"dictionary_used", t.dictionary_used},
                          {"fallback", t.fallback}});
  }
  return json{{"chosen", to_string(c.chosen)}, {"trials", std::move(trials)}};
}

json decision_json(const CompressionDecision& d) {
  return json{{"codec", codec_json(d.codec)},
              {"uncompressed_size", d.uncompressed_size},
              {"compressed_size", d.compressed_size},
              {"reduction", d.reduction},
              {"applied", d.applied},
              {"forced", d.forced},
              {"codec_failure", d.codec_failure}};
}

const char* mode_name(EncodingMode m) {
  return m == EncodingMode::TRIAL ? "TRIAL" : "FIXED";
}

const char* mode_name(CompressionPlanMode m) {
  switch (m) {
    case CompressionPlanMode::GATED: return "GATED";
    case CompressionPlanMode::FORCED: return "FORCED";
    default: return "NONE";
  }
}

}  // namespace

json to_json(const FileReport& r) {
  json schema = json::array();
  for (const ColumnDescriptor& d : r.schema) {
    schema.push_back(json{{"name", d.name},
                          {"physical_type", to_string(d.physical_type)},
                          {"nullable", d.nullable},
                          {"type_length", d.type_length}});
  }
  json groups = json::array();
  for (const RowGroupMeta& rg : r.row_groups) {
    json chunks = json::array();
    for (const ColumnChunkMeta& cc : rg.chunks) {
      json encs = json::array();
      for (EncodingKind e : cc.encodings_present) encs.push_back(to_string(e));
      json pages = json::array();
      for (const PageMeta& p : cc.pages) pages.push_back(page_json(p));
      chunks.push_back(
          json{{"column_path", cc.column_path},
               {"physical_type", to_string(cc.physical_type)},
               {"codec", codec_json(cc.codec)},
               {"pages", std::move(pages)},
               {"data_page_count", cc.data_page_count},
               {"data_page_count_approximate", cc.data_page_count_approximate},
               {"total_compressed_size", cc.total_compressed_size},
               {"total_uncompressed_size", cc.total_uncompressed_size},
               {"encodings_present", std::move(encs)},
               {"unreadable", cc.unreadable}});
    }
    groups.push_back(json{{"num_rows", rg.num_rows},
                          {"total_byte_size", rg.total_byte_size},
                          {"chunks", std::move(chunks)}});
  }
  json enc_hist = json::array();
  for (const auto& [e, n] : r.summary.encoding_histogram) {
    enc_hist.push_back(json{{"encoding", to_string(e)}, {"chunks", n}});
  }
  json codec_hist = json::array();
  for (const auto& [c, n] : r.summary.codec_histogram) {
    codec_hist.push_back(json{{"codec", to_string(c)}, {"chunks", n}});
  }
  json summary{{"min_rows_per_rg", r.summary.min_rows_per_rg},
               {"median_rows_per_rg", r.summary.median_rows_per_rg},
               {"max_rows_per_rg", r.summary.max_rows_per_rg},
               {"min_pages_per_chunk", r.summary.min_pages_per_chunk},
               {"median_pages_per_chunk", r.summary.median_pages_per_chunk},
               {"max_pages_per_chunk", r.summary.max_pages_per_chunk},
               {"encoding_histogram", std::move(enc_hist)},
               {"codec_histogram", std::move(codec_hist)}};
  if (r.summary.compression_ratio) {
    summary["compression_ratio"] = *r.summary.compression_ratio;
  }
  json out{{"schema", std::move(schema)},
           {"row_groups", std::move(groups)},
           {"total_rows", r.total_rows},
           {"file_size", r.file_size},
           {"summary", std::move(summary)}};
  if (r.trialed_generations) {
    out["trialed_generations"] = *r.trialed_generations;
  }
  return out;
}

json to_json(const std::vector<Finding>& findings) {
  json arr = json::array();
  for (const Finding& f : findings) {
    arr.push_back(json{{"insight", static_cast<int>(f.insight)},
                       {"scope", f.scope},
                       {"message", f.message},
                       {"measured", f.measured},
                       {"target", f.target}});
  }
  return json{{"findings", std::move(arr)},
              {"conformant", findings.empty()}};
}

json to_json(const RewritePolicy& p) {
  json candidates = json::array();
  for (const auto& [t, encs] : p.encoding_candidates) {
    json list = json::array();
    for (EncodingKind e : encs) list.push_back(to_string(e));
    candidates.push_back(json{{"physical_type", to_string(t)},
                              {"encodings", std::move(list)}});
  }
  const char* mode = p.compression_mode == RewritePolicy::CompressionMode::GATED
                         ? "GATED"
                         : p.compression_mode ==
                                   RewritePolicy::CompressionMode::FORCED
                               ? "FORCED"
                               : "NONE";
  return json{{"target_rg_rows", p.target_rg_rows},
              {"target_pages_per_chunk", p.target_pages_per_chunk},
              {"encoding_candidates", std::move(candidates)},
              {"flexible_encodings", p.flexible_encodings},
              {"compression_candidate", codec_json(p.compression_candidate)},
              {"compression_threshold", p.compression_threshold},
              {"dictionary_size_limit", p.dictionary_size_limit},
              {"page_size_floor_rows", p.page_size_floor_rows},
              {"compression_mode", mode}};
}

namespace {

RewritePolicy policy_from_json_checked(const json& j) {
  RewritePolicy p;
  if (j.contains("target_rg_rows")) {
    p.target_rg_rows = j.at("target_rg_rows").get<int64_t>();
  }
  if (j.contains("target_pages_per_chunk")) {
    p.target_pages_per_chunk = j.at("target_pages_per_chunk").get<int64_t>();
  }
  if (j.contains("encoding_candidates")) {
    for (const json& e : j.at("encoding_candidates")) {
      auto t = physical_type_from_string(
          e.at("physical_type").get<std::string>());
      if (!t) throw std::invalid_argument("unknown physical type in JSON");
      std::vector<EncodingKind> encs;
      for (const json& enc : e.at("encodings")) encs.push_back(encoding_from(enc));
      p.encoding_candidates.emplace_back(*t, std::move(encs));
    }
  }
  if (j.contains("flexible_encodings")) {
    p.flexible_encodings = j.at("flexible_encodings").get<bool>();
  }
  if (j.contains("compression_candidate")) {
    p.compression_candidate = codec_from(j.at("compression_candidate"));
  }
  if (j.contains("compression_threshold")) {
    p.compression_threshold = j.at("compression_threshold").get<double>();
  }
  if (j.contains("dictionary_size_limit")) {
    p.dictionary_size_limit = j.at("dictionary_size_limit").get<int64_t>();
  }
  if (j.contains("page_size_floor_rows")) {
    p.page_size_floor_rows = j.at("page_size_floor_rows").get<int64_t>();
  }
  if (j.contains("compression_mode")) {
    std::string m = j.at("compression_mode").get<std::string>();
    if (m == "GATED") {
      p.compression_mode = RewritePolicy::CompressionMode::GATED;
    } else if (m == "FORCED") {
      p.compression_mode = RewritePolicy::CompressionMode::FORCED;
    } else if (m == "NONE") {
      p.compression_mode = RewritePolicy::CompressionMode::NONE;
    } else {
      throw std::invalid_argument("unknown compression_mode: " + m);
    }
  }
  return p;
}

}  // namespace

RewritePolicy policy_from_json(const json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("policy JSON must be an object");
  }
  try {
    return policy_from_json_checked(j);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed policy JSON: ") +
                                e.what());
  }
}

json to_json(const RewritePlan& p) {
  json groups = json::array();
  for (const auto& dirs : p.directives) {
    json group = json::array();
    for (const ChunkDirective& d : dirs) {
      json cands = json::array();
      for (EncodingKind e : d.candidates) cands.push_back(to_string(e));
      group.push_back(
          json{{"column_path", d.column_path},
               {"physical_type", to_string(d.physical_type)},
               {"page_row_limit", d.page_row_limit},
               {"encoding_mode", mode_name(d.encoding_mode)},
               {"candidates", std::move(cands)},
               {"compression_mode", mode_name(d.compression_mode)},
               {"compression_codec", codec_json(d.compression_codec)},
               {"compression_threshold", d.compression_threshold},
               {"dictionary_size_limit", d.dictionary_size_limit}});
    }
    groups.push_back(std::move(group));
  }
  return json{{"source_total_rows", p.source_total_rows},
              {"row_group_boundaries", p.row_group_boundaries},
              {"directives", std::move(groups)}};
}

namespace {

RewritePlan plan_from_json_checked(const json& j) {
  RewritePlan p;
  p.source_total_rows = j.at("source_total_rows").get<int64_t>();
  p.row_group_boundaries =
      j.at("row_group_boundaries").get<std::vector<int64_t>>();
  for (const json& group : j.at("directives")) {
    std::vector<ChunkDirective> dirs;
    for (const json& jd : group) {
      ChunkDirective d;
      d.column_path = jd.at("column_path").get<std::string>();
      auto t = physical_type_from_string(
          jd.at("physical_type").get<std::string>());
      if (!t) throw std::invalid_argument("unknown physical type in JSON");
      d.physical_type = *t;
      d.page_row_limit = jd.at("page_row_limit").get<int64_t>();
      std::string em = jd.at("encoding_mode").get<std::string>();
      if (em == "TRIAL") {
        d.encoding_mode = EncodingMode::TRIAL;
      } else if (em == "FIXED") {
        d.encoding_mode = EncodingMode::FIXED;
      } else {
        throw std::invalid_argument("unknown encoding_mode: " + em);
      }
      for (const json& enc : jd.at("candidates")) {
        d.candidates.push_back(encoding_from(enc));
      }
      std::string cm = jd.at("compression_mode").get<std::string>();
      if (cm == "GATED") {
        d.compression_mode = CompressionPlanMode::GATED;
      } else if (cm == "FORCED") {
        d.compression_mode = CompressionPlanMode::FORCED;
      } else if (cm == "NONE") {
        d.compression_mode = CompressionPlanMode::NONE;
      } else {
        throw std::invalid_argument("unknown compression_mode: " + cm);
      }
      d.compression_codec = codec_from(jd.at("compression_codec"));
      d.compression_threshold = jd.at("compression_threshold").get<double>();
      d.dictionary_size_limit = jd.at("dictionary_size_limit").get<int64_t>();
      dirs.push_back(std::move(d));
    }
    p.directives.push_back(std::move(dirs));
  }
  return p;
}

}  // namespace

RewritePlan plan_from_json(const json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("plan JSON must be an object");
  }
  try {
    return plan_from_json_checked(j);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed plan JSON: ") +
                                e.what());
  }
}

json to_json(const RewriteReport& r) {
  json chunks = json::array();
  for (const ChunkRecord& c : r.chunks) {
    json jc{{"column", c.column},
            {"group_index", c.group_index},
            {"untranscoded", c.untranscoded}};
    if (!c.untranscoded) {
      jc["choice"] = choice_json(c.choice);
      jc["decision"] = decision_json(c.decision);
    }
    chunks.push_back(std::move(jc));
  }
  return json{{"input_file_size", r.input_file_size},
              {"output_file_size", r.output_file_size},
              {"chunks", std::move(chunks)},
              {"wall_time_seconds", r.wall_time_seconds},
              {"rows_written", r.rows_written},
              {"untranscoded_chunks", r.untranscoded_chunks}};
}

json to_json(const EqualityReport& r) {
  json out{{"equal", r.equal},
           {"rows_compared", r.rows_compared},
           {"columns_compared", r.columns_compared},
           {"schema_mismatch", r.schema_mismatch}};
  if (r.schema_mismatch) {
    out["schema_mismatch_detail"] = r.schema_mismatch_detail;
  }
  if (r.first_mismatch) {
    out["first_mismatch"] = json{{"row", r.first_mismatch->row},
                                 {"column", r.first_mismatch->column},
                                 {"left", r.first_mismatch->left_digest},
                                 {"right", r.first_mismatch->right_digest}};
  }
  return out;
}

json to_json(const BenchReport& r) {
  return json{{"path", r.path},
              {"file_size", r.file_size},
              {"raw_decoded_size", r.raw_decoded_size},
              {"scan_runtime", r.scan_runtime},
              {"storage_bandwidth", r.storage_bandwidth},
              {"effective_bandwidth", r.effective_bandwidth},
              {"repetitions", r.repetitions},
              {"parallelism", r.parallelism},
              {"cold_cache", r.cold_cache},
              {"clock_floor_applied", r.clock_floor_applied},
              {"raw_size_accounting", r.raw_size_accounting},
              {"runtimes", r.runtimes}};
}

json to_json(const BenchDelta& d) {
  return json{{"file_size_ratio", d.file_size_ratio},
              {"runtime_ratio", d.runtime_ratio},
              {"storage_bandwidth_ratio", d.storage_bandwidth_ratio},
              {"effective_bandwidth_ratio", d.effective_bandwidth_ratio},
              {"raw_decoded_size_ratio", d.raw_decoded_size_ratio},
              {"raw_size_mismatch", d.raw_size_mismatch}};
}

}  // namespace pqforge
