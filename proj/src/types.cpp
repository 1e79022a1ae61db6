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

#include "pqforge/types.hpp"

#include <algorithm>
#include <array>

namespace pqforge {

EncodingGeneration encoding_generation(EncodingKind e) {
  switch (e) {
    case EncodingKind::PLAIN:
    case EncodingKind::RLE:
    case EncodingKind::RLE_DICTIONARY:
      return EncodingGeneration::V1;
    default:
      return EncodingGeneration::V2;
  }
}

bool encoding_applicable(EncodingKind e, PhysicalType t) {
  if (t == PhysicalType::INT96) return e == EncodingKind::PLAIN;
  switch (e) {
    case EncodingKind::PLAIN:
      return true;
    case EncodingKind::RLE:
      return t == PhysicalType::BOOLEAN;
    case EncodingKind::RLE_DICTIONARY:
      return t != PhysicalType::BOOLEAN;
    case EncodingKind::DELTA_BINARY_PACKED:
      return t == PhysicalType::INT32 || t == PhysicalType::INT64;
    case EncodingKind::DELTA_LENGTH_BYTE_ARRAY:
      return t == PhysicalType::BYTE_ARRAY;
    case EncodingKind::DELTA_BYTE_ARRAY:
      return t == PhysicalType::BYTE_ARRAY ||
             t == PhysicalType::FIXED_LEN_BYTE_ARRAY;
    case EncodingKind::BYTE_STREAM_SPLIT:
      return t == PhysicalType::FLOAT || t == PhysicalType::DOUBLE ||
             t == PhysicalType::INT32 || t == PhysicalType::INT64 ||
             t == PhysicalType::FIXED_LEN_BYTE_ARRAY;
  }
  return false;
}

namespace {
// Tie-break order: V1 before V2, then declaration order within each
// generation.
constexpr std::array<EncodingKind, 7> kEnumerationOrder = {
    EncodingKind::PLAIN,
    EncodingKind::RLE,
    EncodingKind::RLE_DICTIONARY,
    EncodingKind::DELTA_BINARY_PACKED,
    EncodingKind::DELTA_LENGTH_BYTE_ARRAY,
    EncodingKind::DELTA_BYTE_ARRAY,
    EncodingKind::BYTE_STREAM_SPLIT,
};
}  // namespace

std::vector<EncodingKind> applicable_encodings(PhysicalType t) {
  std::vector<EncodingKind> out;
  for (EncodingKind e : kEnumerationOrder) {
    if (encoding_applicable(e, t)) out.push_back(e);
  }
  return out;
}

std::vector<EncodingKind> applicable_v1_encodings(PhysicalType t) {
  std::vector<EncodingKind> out;
  for (EncodingKind e : kEnumerationOrder) {
    if (encoding_generation(e) == EncodingGeneration::V1 &&
        encoding_applicable(e, t)) {
      out.push_back(e);
    }
  }
  return out;
}

int64_t ColumnChunkMeta::page_byte_sum() const {
  int64_t sum = 0;
  for (const PageMeta& p : pages) sum += p.compressed_size + p.header_size;
  return sum;
}

namespace {
int64_t median_of(std::vector<int64_t> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}
}  // namespace

ReportSummary summarize(const std::vector<RowGroupMeta>& row_groups,
                        int64_t file_size) {
  ReportSummary s;
  std::vector<int64_t> rows;
  std::vector<int64_t> pages;
  std::vector<std::pair<EncodingKind, int64_t>> enc_hist;
  std::vector<std::pair<CodecKind, int64_t>> codec_hist;
  int64_t total_uncompressed = 0;
  auto bump_enc = [&](EncodingKind e) {
    for (auto& [k, n] : enc_hist) {
      if (k == e) {
        ++n;
        return;
      }
    }
    enc_hist.emplace_back(e, 1);
  };
  auto bump_codec = [&](CodecKind c) {
    for (auto& [k, n] : codec_hist) {
      if (k == c) {
        ++n;
        return;
      }
    }
    codec_hist.emplace_back(c, 1);
  };
  for (const RowGroupMeta& rg : row_groups) {
    rows.push_back(rg.num_rows);
    for (const ColumnChunkMeta& cc : rg.chunks) {
      pages.push_back(cc.data_page_count);
      total_uncompressed += cc.total_uncompressed_size;
      for (EncodingKind e : cc.encodings_present) bump_enc(e);
      bump_codec(cc.codec.kind);
    }
  }
  auto order_enc = [](const auto& a, const auto& b) { return a.first < b.first; };
  std::sort(enc_hist.begin(), enc_hist.end(), order_enc);
  std::sort(codec_hist.begin(), codec_hist.end(), order_enc);
  if (!rows.empty()) {
    s.min_rows_per_rg = *std::min_element(rows.begin(), rows.end());
    s.max_rows_per_rg = *std::max_element(rows.begin(), rows.end());
    s.median_rows_per_rg = median_of(rows);
  }
  if (!pages.empty()) {
    s.min_pages_per_chunk = *std::min_element(pages.begin(), pages.end());
    s.max_pages_per_chunk = *std::max_element(pages.begin(), pages.end());
    s.median_pages_per_chunk = median_of(pages);
  }
  s.encoding_histogram = std::move(enc_hist);
  s.codec_histogram = std::move(codec_hist);
  if (file_size > 0 && !row_groups.empty()) {
    s.compression_ratio =
        static_cast<double>(total_uncompressed) / static_cast<double>(file_size);
  }
  return s;
}

std::vector<EncodingKind> RewritePolicy::candidates_for(PhysicalType t) const {
  for (const auto& [pt, set] : encoding_candidates) {
    if (pt == t) return set;
  }
  return flexible_encodings ? applicable_encodings(t)
                            : applicable_v1_encodings(t);
}

std::vector<std::string> validate_policy(const RewritePolicy& p) {
  std::vector<std::string> errs;
  if (p.target_rg_rows < 1) {
    errs.push_back("target_rg_rows: must be >= 1");
  }
  if (p.target_pages_per_chunk < 1) {
    errs.push_back("target_pages_per_chunk: must be >= 1");
  }
  if (!(p.compression_threshold >= 0.0 && p.compression_threshold < 1.0)) {
    errs.push_back("compression_threshold: threshold must be in [0,1); got " +
                   std::to_string(p.compression_threshold) +
                   (p.compression_threshold >= 1.0 ? " (threshold must be < 1)"
                                                   : ""));
  }
  if (p.dictionary_size_limit < 0) {
    errs.push_back("dictionary_size_limit: must be >= 0");
  }
  if (p.page_size_floor_rows < 1) {
    errs.push_back("page_size_floor_rows: must be >= 1");
  }
  if (p.compression_candidate.level &&
      p.compression_candidate.kind != CodecKind::ZSTD) {
    errs.push_back("compression_candidate.level: level only valid for ZSTD");
  }
  if (p.compression_candidate.kind == CodecKind::ZSTD &&
      p.compression_candidate.level &&
      (*p.compression_candidate.level < 1 ||
       *p.compression_candidate.level > 22)) {
    errs.push_back("compression_candidate.level: ZSTD level out of [1,22]");
  }
  for (const auto& [t, set] : p.encoding_candidates) {
    std::string base =
        std::string("encoding_candidates[") + to_string(t) + "]";
    if (set.empty()) {
      errs.push_back(base + ": must be non-empty");
      continue;
    }
    if (std::find(set.begin(), set.end(), EncodingKind::PLAIN) == set.end()) {
      errs.push_back(base + ": must include PLAIN");
    }
    for (EncodingKind e : set) {
      if (!encoding_applicable(e, t)) {
        errs.push_back(base + ": " + to_string(e) + " not applicable to " +
                       to_string(t));
      }
    }
  }
  return errs;
}

std::vector<std::string> validate_plan(const RewritePlan& plan,
                                       int64_t target_rg_rows,
                                       int64_t target_pages_per_chunk) {
  std::vector<std::string> errs;
  int64_t sum = 0;
  for (size_t i = 0; i < plan.row_group_boundaries.size(); ++i) {
    int64_t b = plan.row_group_boundaries[i];
    sum += b;
    bool last = i + 1 == plan.row_group_boundaries.size();
    if (!last && b != target_rg_rows) {
      errs.push_back("row_group_boundaries[" + std::to_string(i) +
                     "]: non-final boundary != target_rg_rows");
    }
    if (last && (b < 1 || b > target_rg_rows)) {
      errs.push_back("row_group_boundaries: final boundary out of [1, target]");
    }
  }
  if (sum != plan.source_total_rows) {
    errs.push_back("row_group_boundaries: sum != source_total_rows");
  }
  if (plan.directives.size() != plan.row_group_boundaries.size()) {
    errs.push_back("directives: one directive set per row group required");
  }
  for (size_t g = 0; g < plan.directives.size(); ++g) {
    int64_t rows = g < plan.row_group_boundaries.size()
                       ? plan.row_group_boundaries[g]
                       : 0;
    for (const ChunkDirective& d : plan.directives[g]) {
      if (d.page_row_limit < 1) {
        errs.push_back(d.column_path + ": page_row_limit must be >= 1");
      }
      if (d.page_row_limit * target_pages_per_chunk < rows &&
          rows == target_rg_rows) {
        errs.push_back(d.column_path +
                       ": page_row_limit too large to reach page target");
      }
      if (d.candidates.empty()) {
        errs.push_back(d.column_path + ": empty candidate set");
      }
    }
  }
  return errs;
}

const char* to_string(PhysicalType t) {
  switch (t) {
    case PhysicalType::BOOLEAN: return "BOOLEAN";
    case PhysicalType::INT32: return "INT32";
    case PhysicalType::INT64: return "INT64";
    case PhysicalType::FLOAT: return "FLOAT";
    case PhysicalType::DOUBLE: return "DOUBLE";
    case PhysicalType::BYTE_ARRAY: return "BYTE_ARRAY";
    case PhysicalType::FIXED_LEN_BYTE_ARRAY: return "FIXED_LEN_BYTE_ARRAY";
    case PhysicalType::INT96: return "INT96";
  }
  return "?";
}

const char* to_string(EncodingKind e) {
  switch (e) {
    case EncodingKind::PLAIN: return "PLAIN";
    case EncodingKind::RLE: return "RLE";
    case EncodingKind::RLE_DICTIONARY: return "RLE_DICTIONARY";
    case EncodingKind::DELTA_BINARY_PACKED: return "DELTA_BINARY_PACKED";
    case EncodingKind::DELTA_LENGTH_BYTE_ARRAY:
      return "DELTA_LENGTH_BYTE_ARRAY";
    case EncodingKind::DELTA_BYTE_ARRAY: return "DELTA_BYTE_ARRAY";
    case EncodingKind::BYTE_STREAM_SPLIT: return "BYTE_STREAM_SPLIT";
  }
  return "?";
}

const char* to_string(CodecKind c) {
  switch (c) {
    case CodecKind::UNCOMPRESSED: return "UNCOMPRESSED";
    case CodecKind::SNAPPY: return "SNAPPY";
    case CodecKind::ZSTD: return "ZSTD";
    case CodecKind::LZ4: return "LZ4";
  }
  return "?";
}

const char* to_string(PageType p) {
  switch (p) {
    case PageType::DICTIONARY: return "DICTIONARY";
    case PageType::DATA_V1: return "DATA_V1";
    case PageType::DATA_V2: return "DATA_V2";
  }
  return "?";
}

namespace {
template <typename T, typename F>
std::optional<T> from_string_impl(const std::string& s, F names, T last) {
  for (int i = 0; i <= static_cast<int>(last); ++i) {
    T v = static_cast<T>(i);
    if (s == names(v)) return v;
  }
  return std::nullopt;
}
}  // namespace

std::optional<PhysicalType> physical_type_from_string(const std::string& s) {
  return from_string_impl<PhysicalType>(
      s, [](PhysicalType t) { return to_string(t); }, PhysicalType::INT96);
}

std::optional<EncodingKind> encoding_from_string(const std::string& s) {
  return from_string_impl<EncodingKind>(
      s, [](EncodingKind e) { return to_string(e); },
      EncodingKind::BYTE_STREAM_SPLIT);
}

std::optional<CodecKind> codec_from_string(const std::string& s) {
  return from_string_impl<CodecKind>(
      s, [](CodecKind c) { return to_string(c); }, CodecKind::LZ4);
}

}  // namespace pqforge
