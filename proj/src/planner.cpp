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

#include "pqforge/planner.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pqforge {

RewritePlan derive_plan(const FileReport& report,
                        const RewritePolicy& policy) {
  std::vector<std::string> errs = validate_policy(policy);
  if (!errs.empty()) {
    std::string msg = "invalid policy:";
    for (const auto& e : errs) msg += " " + e + ";";
    throw std::invalid_argument(msg);
  }
  if (report.schema.empty()) {
    throw std::invalid_argument("report has zero columns");
  }

  RewritePlan plan;
  plan.source_total_rows = report.total_rows;
  int64_t remaining = report.total_rows;
  while (remaining > 0) {
    int64_t rows = std::min(remaining, policy.target_rg_rows);
    plan.row_group_boundaries.push_back(rows);
    remaining -= rows;
  }

  auto codec_mode = [&] {
    switch (policy.compression_mode) {
      case RewritePolicy::CompressionMode::FORCED:
        return CompressionPlanMode::FORCED;
      case RewritePolicy::CompressionMode::NONE:
        return CompressionPlanMode::NONE;
      default:
        return CompressionPlanMode::GATED;
    }
  }();

  for (int64_t group_rows : plan.row_group_boundaries) {
    std::vector<ChunkDirective> dirs;
    dirs.reserve(report.schema.size());
    for (const ColumnDescriptor& col : report.schema) {
      ChunkDirective d;
      d.column_path = col.name;
      d.physical_type = col.physical_type;
      int64_t limit =
          (group_rows + policy.target_pages_per_chunk - 1) /
          policy.target_pages_per_chunk;
      d.page_row_limit = std::max(policy.page_size_floor_rows, limit);
      // FIXED restricts the candidate set to V1; the trial mechanism
      // still runs over it.
      d.encoding_mode = policy.flexible_encodings ? EncodingMode::TRIAL
                                                  : EncodingMode::FIXED;
      d.candidates = policy.candidates_for(col.physical_type);
      d.compression_mode = codec_mode;
      d.compression_codec = policy.compression_candidate;
      d.compression_threshold = policy.compression_threshold;
      d.dictionary_size_limit = policy.dictionary_size_limit;
      dirs.push_back(std::move(d));
    }
    plan.directives.push_back(std::move(dirs));
  }
  return plan;
}

namespace {
std::string with_thousands(int64_t v) {
  std::string raw = std::to_string(v);
  std::string out;
  int c = 0;
  for (auto it = raw.rbegin(); it != raw.rend(); ++it) {
    if (c && c % 3 == 0 && *it != '-') out.push_back(',');
    out.push_back(*it);
    ++c;
  }
  std::reverse(out.begin(), out.end());
  return out;
}
}  // namespace

std::string plan_summary(const RewritePlan& plan) {
  std::ostringstream os;
  size_t groups = plan.row_group_boundaries.size();
  if (groups == 0) {
    os << "0 row groups";
    return os.str();
  }
  int64_t full = plan.row_group_boundaries.front();
  int64_t last = plan.row_group_boundaries.back();
  os << groups << " row group" << (groups == 1 ? "" : "s") << " x "
     << with_thousands(full) << " rows";
  if (groups > 1 && last != full) {
    os << " (last " << with_thousands(last) << ")";
  }
  if (!plan.directives.empty() && !plan.directives.front().empty()) {
    const auto& dirs = plan.directives.front();
    int64_t pages =
        (full + dirs.front().page_row_limit - 1) / dirs.front().page_row_limit;
    os << "; >=" << pages << " pages/chunk at full size";
    os << "\ncolumns:";
    for (const ChunkDirective& d : dirs) {
      os << "\n  " << d.column_path << " (" << to_string(d.physical_type)
         << "): page_row_limit=" << with_thousands(d.page_row_limit)
         << ", candidates={";
      for (size_t i = 0; i < d.candidates.size(); ++i) {
        if (i) os << ",";
        os << to_string(d.candidates[i]);
      }
      os << "}, compression=";
      switch (d.compression_mode) {
        case CompressionPlanMode::GATED:
          os << "gated(" << to_string(d.compression_codec.kind) << ", >="
             << d.compression_threshold << ")";
          break;
        case CompressionPlanMode::FORCED:
          os << "forced(" << to_string(d.compression_codec.kind) << ")";
          break;
        case CompressionPlanMode::NONE:
          os << "none";
          break;
      }
    }
  }
  return os.str();
}

}  // namespace pqforge
