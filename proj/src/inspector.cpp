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

#include "pqforge/inspector.hpp"

#include <algorithm>

#include "pqforge/reader.hpp"

namespace pqforge {

FileReport inspect(const std::string& path, const InspectOptions& opts) {
  ParquetReader reader(path);
  FileReport report;
  report.file_size = reader.file_size();
  report.total_rows = reader.num_rows();

  std::vector<size_t> selected;
  for (size_t c = 0; c < reader.schema().size(); ++c) {
    const ColumnDescriptor& d = reader.schema()[c];
    if (opts.columns) {
      if (std::find(opts.columns->begin(), opts.columns->end(), d.name) ==
          opts.columns->end()) {
        continue;
      }
    }
    selected.push_back(c);
    report.schema.push_back(d);
  }
  if (opts.columns && selected.size() != opts.columns->size()) {
    throw ParquetError("column filter names columns absent from the schema");
  }

  for (const auto& kv : reader.footer().key_value_metadata) {
    if (kv.key == "pqforge.trialed_generations" && kv.value) {
      report.trialed_generations = *kv.value;
    }
  }

  for (size_t g = 0; g < reader.num_row_groups(); ++g) {
    const meta::RowGroup& rg = reader.footer().row_groups[g];
    RowGroupMeta rgm;
    rgm.num_rows = rg.num_rows;
    rgm.total_byte_size = rg.total_byte_size;
    for (size_t c : selected) {
      const meta::ColumnChunk& cc = rg.columns[c];
      ColumnChunkMeta ccm;
      ccm.column_path = reader.schema()[c].name;
      ccm.physical_type = reader.schema()[c].physical_type;
      if (!cc.meta_data) {
        ccm.unreadable = true;
        rgm.chunks.push_back(std::move(ccm));
        continue;
      }
      const meta::ColumnMetaData& cm = *cc.meta_data;
      auto codec = meta::codec_from_wire(cm.codec);
      if (codec) {
        ccm.codec = Codec{*codec, std::nullopt};
      } else {
        ccm.unreadable = true;  // unknown codec: census proceeds
      }
      ccm.total_compressed_size = cm.total_compressed_size;
      ccm.total_uncompressed_size = cm.total_uncompressed_size;
      for (int32_t e : cm.encodings) {
        if (auto ek = meta::encoding_from_wire(e)) {
          ccm.encodings_present.insert(*ek);
        }
      }
      if (opts.scan_pages) {
        try {
          ccm.pages = reader.scan_pages(g, c);
          ccm.data_page_count = 0;
          for (const PageMeta& p : ccm.pages) {
            ccm.data_page_count += p.page_type != PageType::DICTIONARY;
          }
        } catch (const ParquetError&) {
          ccm.unreadable = true;
          ccm.data_page_count = 1;
          ccm.data_page_count_approximate = true;
        }
      } else {
        // Footer-only estimate: the CPU-default worst case of one page.
        ccm.data_page_count = 1;
        ccm.data_page_count_approximate = true;
      }
      rgm.chunks.push_back(std::move(ccm));
    }
    report.row_groups.push_back(std::move(rgm));
  }
  report.summary = summarize(report.row_groups, report.file_size);
  return report;
}

std::vector<Finding> grade(const FileReport& report,
                           const RewritePolicy& policy) {
  std::vector<Finding> findings;
  const int64_t full_size_floor = policy.target_rg_rows / 2;

  bool v2_trials_evidenced =
      report.trialed_generations &&
      report.trialed_generations->find("V2") != std::string::npos;

  for (size_t g = 0; g < report.row_groups.size(); ++g) {
    const RowGroupMeta& rg = report.row_groups[g];
    bool full_sized = rg.num_rows >= full_size_floor;
    // A trailing remainder group (last, smaller than the first) is exempt
    // from the page-count check to avoid noise findings on remainders.
    bool trailing_remainder =
        g + 1 == report.row_groups.size() && report.row_groups.size() > 1 &&
        rg.num_rows < report.row_groups.front().num_rows;
    // Small groups can never reach the absolute page target; they are
    // held to min(target, rows) instead.
    int64_t page_target = full_sized
                              ? policy.target_pages_per_chunk
                              : std::min(policy.target_pages_per_chunk,
                                         rg.num_rows);
    for (const ColumnChunkMeta& cc : rg.chunks) {
      std::string scope =
          "rg=" + std::to_string(g) + " col=" + cc.column_path;
      if (!trailing_remainder && rg.num_rows > 0 &&
          cc.data_page_count < page_target) {
        findings.push_back(
            {Insight::PageCount, scope,
             "data page count below target",
             static_cast<double>(cc.data_page_count),
             static_cast<double>(page_target)});
      }
      if (!v2_trials_evidenced) {
        bool all_v1 = true;
        for (EncodingKind e : cc.encodings_present) {
          all_v1 = all_v1 && encoding_generation(e) == EncodingGeneration::V1;
        }
        bool v2_available = false;
        for (EncodingKind e : policy.candidates_for(cc.physical_type)) {
          v2_available =
              v2_available || encoding_generation(e) == EncodingGeneration::V2;
        }
        if (all_v1 && v2_available && !cc.encodings_present.empty()) {
          findings.push_back(
              {Insight::EncodingFlexibility, scope,
               "chunk restricted to V1 encodings with V2 candidates "
               "applicable and no trial evidence",
               1.0, 0.0});
        }
      }
      if (cc.codec.kind != CodecKind::UNCOMPRESSED) {
        // Payload-level reduction, matching the gate's accounting; falls
        // back to footer totals when page detail is approximate.
        int64_t comp = 0, uncomp = 0;
        if (!cc.pages.empty() && !cc.data_page_count_approximate) {
          for (const PageMeta& p : cc.pages) {
            comp += p.compressed_size;
            uncomp += p.uncompressed_size;
          }
        } else {
          comp = cc.total_compressed_size;
          uncomp = cc.total_uncompressed_size;
        }
        double reduction =
            uncomp > 0 ? 1.0 - static_cast<double>(comp) /
                                   static_cast<double>(uncomp)
                       : 0.0;
        if (reduction < policy.compression_threshold) {
          findings.push_back({Insight::CompressionGate, scope,
                              "compressed chunk below the reduction threshold",
                              reduction, policy.compression_threshold});
        }
      }
    }
  }

  // A file is undersized only when it uses more groups than the row count
  // forces; a single sub-target group (small table) is the best possible.
  int64_t minimal_groups =
      (report.total_rows + policy.target_rg_rows - 1) / policy.target_rg_rows;
  if (!report.row_groups.empty() &&
      report.summary.median_rows_per_rg < policy.target_rg_rows &&
      static_cast<int64_t>(report.row_groups.size()) > minimal_groups) {
    findings.push_back(
        {Insight::RowGroupSize, "file",
         "median rows per row group below target",
         static_cast<double>(report.summary.median_rows_per_rg),
         static_cast<double>(policy.target_rg_rows)});
  }
  return findings;
}

}  // namespace pqforge
