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

#include "pqforge/transcoder.hpp"

#include <algorithm>
#include <cstring>

#include "pqforge/codec.hpp"

namespace pqforge {

namespace {

meta::PageHeader make_header(const EncodedPage& p, int64_t compressed_size) {
  meta::PageHeader h;
  h.uncompressed_page_size = static_cast<int32_t>(p.payload.size());
  h.compressed_page_size = static_cast<int32_t>(compressed_size);
  if (p.type == PageType::DICTIONARY) {
    h.type = meta::PT_DICTIONARY_PAGE;
    meta::DictionaryPageHeader d;
    d.num_values = static_cast<int32_t>(p.num_values);
    d.encoding = meta::E_PLAIN;
    h.dictionary_page_header = d;
  } else {
    h.type = meta::PT_DATA_PAGE;
    meta::DataPageHeader d;
    d.num_values = static_cast<int32_t>(p.num_values);
    d.encoding = meta::encoding_to_wire(p.encoding);
    h.data_page_header = d;
  }
  return h;
}

}  // namespace

int64_t measure_encoded_size(const EncodedChunkData& chunk,
                             const ColumnDescriptor&) {
  int64_t size = 0;
  auto add = [&](const EncodedPage& p) {
    meta::PageHeader h = make_header(p, static_cast<int64_t>(p.payload.size()));
    size += static_cast<int64_t>(meta::serialize_page_header(h).size());
    size += static_cast<int64_t>(p.payload.size());
  };
  if (chunk.dict_page) add(*chunk.dict_page);
  for (const EncodedPage& p : chunk.data_pages) add(p);
  return size;
}

EncodingChoice trial_encode(const ColumnSlice& values,
                            std::vector<EncodingKind> candidates,
                            int64_t page_row_limit,
                            int64_t dictionary_size_limit,
                            EncodedChunkData* winner) {
  if (candidates.empty()) {
    throw std::invalid_argument("empty encoding candidate set");
  }
  for (EncodingKind e : candidates) {
    if (!encoding_applicable(e, values.desc.physical_type)) {
      throw std::invalid_argument(
          std::string(to_string(e)) + " not applicable to " +
          to_string(values.desc.physical_type));
    }
  }
  // Fixed evaluation order makes ties independent of caller ordering.
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  EncodingChoice choice;
  EncodedChunkData best;
  int64_t best_size = -1;
  for (EncodingKind cand : candidates) {
    EncodedChunkData enc = encode_chunk_pages(values, cand, page_row_limit,
                                              dictionary_size_limit);
    TrialResult tr;
    tr.candidate = cand;
    tr.encoding = enc.data_encoding;
    tr.dictionary_used = enc.dictionary_used;
    tr.fallback = enc.fallback;
    tr.encoded_size = measure_encoded_size(enc, values.desc);
    choice.trials.push_back(tr);
    if (best_size < 0 || tr.encoded_size < best_size) {
      best_size = tr.encoded_size;
      best = std::move(enc);
      choice.chosen = tr.encoding;
    }
  }
  if (winner) *winner = std::move(best);
  return choice;
}

std::vector<PreparedPage> prepare_uncompressed(const EncodedChunkData& chunk) {
  std::vector<PreparedPage> out;
  auto add = [&](const EncodedPage& p) {
    PreparedPage pp;
    pp.header = make_header(p, static_cast<int64_t>(p.payload.size()));
    pp.payload = p.payload;
    out.push_back(std::move(pp));
  };
  if (chunk.dict_page) add(*chunk.dict_page);
  for (const EncodedPage& p : chunk.data_pages) add(p);
  return out;
}

CompressionDecision gate_compress(const EncodedChunkData& chunk,
                                  const Codec& candidate, double threshold,
                                  bool force,
                                  std::vector<PreparedPage>& out_pages) {
  if (candidate.kind == CodecKind::UNCOMPRESSED) {
    throw std::invalid_argument("gate candidate must not be UNCOMPRESSED");
  }
  if (!(threshold >= 0.0 && threshold < 1.0)) {
    throw std::invalid_argument("threshold must be in [0,1)");
  }
  CompressionDecision d;
  d.codec = candidate;
  d.forced = force;

  std::vector<const EncodedPage*> pages;
  if (chunk.dict_page) pages.push_back(&*chunk.dict_page);
  for (const EncodedPage& p : chunk.data_pages) pages.push_back(&p);

  std::vector<Bytes> compressed;
  compressed.reserve(pages.size());
  try {
    for (const EncodedPage* p : pages) {
      d.uncompressed_size += static_cast<int64_t>(p->payload.size());
      compressed.push_back(compress(p->payload, candidate));
      d.compressed_size += static_cast<int64_t>(compressed.back().size());
    }
    d.reduction = d.uncompressed_size > 0
                      ? 1.0 - static_cast<double>(d.compressed_size) /
                                  static_cast<double>(d.uncompressed_size)
                      : 0.0;
    d.applied = force || d.reduction >= threshold;
  } catch (const CodecError&) {
    d.codec_failure = true;
    d.applied = false;
    d.reduction = 0.0;
    d.compressed_size = 0;
    d.uncompressed_size = 0;
    for (const EncodedPage* p : pages) {
      d.uncompressed_size += static_cast<int64_t>(p->payload.size());
    }
  }

  out_pages.clear();
  for (size_t i = 0; i < pages.size(); ++i) {
    PreparedPage pp;
    if (d.applied) {
      pp.header = make_header(*pages[i],
                              static_cast<int64_t>(compressed[i].size()));
      pp.payload = std::move(compressed[i]);
    } else {
      pp.header = make_header(*pages[i],
                              static_cast<int64_t>(pages[i]->payload.size()));
      pp.payload = pages[i]->payload;
    }
    out_pages.push_back(std::move(pp));
  }
  if (!d.applied) d.codec = Codec{CodecKind::UNCOMPRESSED, std::nullopt};
  return d;
}

namespace {

template <typename T>
std::string le_bytes(T v) {
  std::string s(sizeof(T), '\0');
  std::memcpy(s.data(), &v, sizeof(T));
  return s;
}

}  // namespace

std::optional<meta::Statistics> compute_statistics(const ColumnSlice& col) {
  if (col.desc.physical_type == PhysicalType::INT96) return std::nullopt;
  meta::Statistics s;
  s.null_count = col.null_count();

  auto set_minmax = [&](auto min_v, auto max_v) {
    s.min_value = le_bytes(min_v);
    s.max_value = le_bytes(max_v);
  };
  switch (col.desc.physical_type) {
    case PhysicalType::BOOLEAN: {
      if (!col.bools.empty()) {
        auto [mn, mx] = std::minmax_element(col.bools.begin(),
                                            col.bools.end());
        s.min_value = std::string(1, static_cast<char>(*mn != 0));
        s.max_value = std::string(1, static_cast<char>(*mx != 0));
      }
      break;
    }
    case PhysicalType::INT32:
      if (!col.i32.empty()) {
        auto [mn, mx] = std::minmax_element(col.i32.begin(), col.i32.end());
        set_minmax(*mn, *mx);
      }
      break;
    case PhysicalType::INT64:
      if (!col.i64.empty()) {
        auto [mn, mx] = std::minmax_element(col.i64.begin(), col.i64.end());
        set_minmax(*mn, *mx);
      }
      break;
    case PhysicalType::FLOAT: {
      bool any = false, nan = false;
      float mn = 0, mx = 0;
      for (float v : col.f32) {
        if (v != v) {
          nan = true;
          break;
        }
        if (!any || v < mn) mn = v;
        if (!any || v > mx) mx = v;
        any = true;
      }
      if (any && !nan) set_minmax(mn, mx);
      break;
    }
    case PhysicalType::DOUBLE: {
      bool any = false, nan = false;
      double mn = 0, mx = 0;
      for (double v : col.f64) {
        if (v != v) {
          nan = true;
          break;
        }
        if (!any || v < mn) mn = v;
        if (!any || v > mx) mx = v;
        any = true;
      }
      if (any && !nan) set_minmax(mn, mx);
      break;
    }
    case PhysicalType::BYTE_ARRAY:
    case PhysicalType::FIXED_LEN_BYTE_ARRAY: {
      int64_t n = col.bin_count();
      if (n > 0) {
        // Unsigned lexicographic order; long values skip min/max rather
        // than store a truncated (inexact) bound.
        auto cmp = [](std::string_view a, std::string_view b) {
          return std::lexicographical_compare(
              a.begin(), a.end(), b.begin(), b.end(),
              [](char x, char y) {
                return static_cast<uint8_t>(x) < static_cast<uint8_t>(y);
              });
        };
        std::string_view mn = col.bin_at(0), mx = col.bin_at(0);
        for (int64_t i = 1; i < n; ++i) {
          std::string_view v = col.bin_at(i);
          if (cmp(v, mn)) mn = v;
          if (cmp(mx, v)) mx = v;
        }
        if (mn.size() <= 64 && mx.size() <= 64) {
          s.min_value = std::string(mn);
          s.max_value = std::string(mx);
        }
      }
      break;
    }
    case PhysicalType::INT96:
      break;
  }
  return s;
}

ChunkArtifact transcode_chunk(const ColumnSlice& col,
                              const ChunkDirective& directive) {
  ChunkArtifact art;
  art.desc = col.desc;
  art.num_rows = col.num_rows;
  art.num_values = col.num_rows;  // parquet counts nulls in num_values

  EncodedChunkData winner;
  art.choice = trial_encode(col, directive.candidates,
                            directive.page_row_limit,
                            directive.dictionary_size_limit, &winner);
  art.dictionary_present = winner.dictionary_used;

  switch (directive.compression_mode) {
    case CompressionPlanMode::NONE:
      art.pages = prepare_uncompressed(winner);
      art.decision.codec = Codec{CodecKind::UNCOMPRESSED, std::nullopt};
      art.decision.uncompressed_size = winner.payload_size();
      art.decision.compressed_size = winner.payload_size();
      break;
    case CompressionPlanMode::FORCED:
      art.decision = gate_compress(winner, directive.compression_codec,
                                   directive.compression_threshold, true,
                                   art.pages);
      break;
    case CompressionPlanMode::GATED:
      art.decision = gate_compress(winner, directive.compression_codec,
                                   directive.compression_threshold, false,
                                   art.pages);
      break;
  }

  art.stats = compute_statistics(col);

  art.wire_encodings.push_back(meta::encoding_to_wire(winner.data_encoding));
  if (winner.dictionary_used) {
    art.wire_encodings.push_back(meta::E_PLAIN);
  }
  if (col.desc.nullable) {
    art.wire_encodings.push_back(meta::E_RLE);
  }
  std::sort(art.wire_encodings.begin(), art.wire_encodings.end());
  art.wire_encodings.erase(
      std::unique(art.wire_encodings.begin(), art.wire_encodings.end()),
      art.wire_encodings.end());
  return art;
}

}  // namespace pqforge
