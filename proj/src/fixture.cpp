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

#include "pqforge/fixture.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "pqforge/transcoder.hpp"
#include "pqforge/writer.hpp"

namespace pqforge {

namespace {

// Counter-based generator (splitmix64 over a mixed key): value streams are
// addressable by (seed, column, row), so generation order is irrelevant
// and files come out byte-identical for any batching.
uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t draw(uint64_t seed, uint64_t column, uint64_t row,
              uint64_t stream = 0) {
  return mix64(seed ^ mix64(column * 0x100000001b3ULL + stream) ^
               mix64(row + 0x517cc1b727220a95ULL));
}

int64_t draw_range(uint64_t seed, uint64_t col, uint64_t row, int64_t lo,
                   int64_t hi, uint64_t stream = 0) {
  uint64_t span = static_cast<uint64_t>(hi - lo + 1);
  return lo + static_cast<int64_t>(draw(seed, col, row, stream) % span);
}

const char* kReturnFlags[] = {"A", "N", "R"};
const char* kLineStatus[] = {"O", "F"};
const char* kShipInstruct[] = {"DELIVER IN PERSON", "COLLECT COD", "NONE",
                               "TAKE BACK RETURN"};
const char* kShipModes[] = {"REG AIR", "AIR",  "RAIL", "SHIP",
                            "TRUCK",   "MAIL", "FOB"};
const char* kWords[] = {
    "slyly",   "quickly", "carefully", "furiously", "blithely", "deposits",
    "requests", "packages", "accounts", "instructions", "theodolites",
    "pinto",   "beans",   "foxes",     "ideas",     "pending",  "final",
    "express", "regular", "special",   "ironic",    "even",     "bold",
    "silent",  "unusual", "sleep",     "haggle",    "nag",      "wake",
    "cajole"};

constexpr int kWordCount = static_cast<int>(sizeof(kWords) / sizeof(*kWords));

std::string make_comment(uint64_t seed, uint64_t col, uint64_t row) {
  int words = static_cast<int>(draw_range(seed, col, row, 3, 8, 0));
  std::string s;
  for (int w = 0; w < words; ++w) {
    if (w) s += ' ';
    s += kWords[draw(seed, col, row, 10 + static_cast<uint64_t>(w)) %
                kWordCount];
  }
  return s;
}

std::string random_bytes(uint64_t seed, uint64_t col, uint64_t row,
                         size_t n) {
  std::string s(n, '\0');
  for (size_t i = 0; i < n; i += 8) {
    uint64_t v = draw(seed, col, row, 100 + i / 8);
    for (size_t b = 0; b < 8 && i + b < n; ++b) {
      s[i + b] = static_cast<char>(v >> (8 * b));
    }
  }
  return s;
}

double cents(int64_t v) { return static_cast<double>(v) / 100.0; }

enum ColId : uint64_t {
  kOrderkey,
  kPartkey,
  kSuppkey,
  kLinenumber,
  kQuantity,
  kExtendedprice,
  kDiscount,
  kTax,
  kReturnflag,
  kLinestatus,
  kShipdate,
  kCommitdate,
  kReceiptdate,
  kShipinstruct,
  kShipmode,
  kComment,
  kConstant,
  kSorted,
  kRandomF64,
  kHighNull,
  kRandomBytes,
  kColCount,
};

}  // namespace

int64_t fixture_rows(const FixtureSpec& spec) {
  if (spec.rows >= 0) return spec.rows;
  return static_cast<int64_t>(std::llround(6'000'000.0 * spec.scale));
}

std::vector<ColumnDescriptor> fixture_schema(const FixtureSpec& spec) {
  if (spec.profile != "lineitem") {
    throw std::invalid_argument("unknown fixture profile: " + spec.profile);
  }
  return {
      {"l_orderkey", PhysicalType::INT64, false, 0},
      {"l_partkey", PhysicalType::INT64, false, 0},
      {"l_suppkey", PhysicalType::INT64, false, 0},
      {"l_linenumber", PhysicalType::INT32, false, 0},
      {"l_quantity", PhysicalType::INT32, false, 0},
      {"l_extendedprice", PhysicalType::DOUBLE, false, 0},
      {"l_discount", PhysicalType::DOUBLE, false, 0},
      {"l_tax", PhysicalType::DOUBLE, false, 0},
      {"l_returnflag", PhysicalType::BYTE_ARRAY, false, 0},
      {"l_linestatus", PhysicalType::BYTE_ARRAY, false, 0},
      {"l_shipdate", PhysicalType::INT32, false, 0},
      {"l_commitdate", PhysicalType::INT32, false, 0},
      {"l_receiptdate", PhysicalType::INT32, false, 0},
      {"l_shipinstruct", PhysicalType::BYTE_ARRAY, false, 0},
      {"l_shipmode", PhysicalType::BYTE_ARRAY, false, 0},
      {"l_comment", PhysicalType::BYTE_ARRAY, false, 0},
      {"p_constant", PhysicalType::INT32, false, 0},
      {"p_sorted", PhysicalType::INT64, false, 0},
      {"p_random", PhysicalType::DOUBLE, false, 0},
      {"p_highnull", PhysicalType::INT64, true, 0},
      {"p_randbytes", PhysicalType::BYTE_ARRAY, false, 0},
  };
}

RowBatch generate_rows(const FixtureSpec& spec, int64_t row_begin,
                       int64_t rows) {
  auto schema = fixture_schema(spec);
  const uint64_t s = spec.seed;
  RowBatch batch;
  batch.columns.resize(schema.size());
  for (size_t c = 0; c < schema.size(); ++c) {
    batch.columns[c].desc = schema[c];
    batch.columns[c].num_rows = rows;
  }

  constexpr int64_t kEpoch1992 = 8035;  // days 1970-01-01 .. 1992-01-01
  for (int64_t i = 0; i < rows; ++i) {
    uint64_t r = static_cast<uint64_t>(row_begin + i);
    batch.columns[kOrderkey].i64.push_back(
        static_cast<int64_t>(r / 7 + 1));
    batch.columns[kPartkey].i64.push_back(
        draw_range(s, kPartkey, r, 1, 200'000));
    batch.columns[kSuppkey].i64.push_back(
        draw_range(s, kSuppkey, r, 1, 10'000));
    batch.columns[kLinenumber].i32.push_back(static_cast<int32_t>(r % 7 + 1));
    batch.columns[kQuantity].i32.push_back(
        static_cast<int32_t>(draw_range(s, kQuantity, r, 1, 50)));
    batch.columns[kExtendedprice].f64.push_back(
        cents(draw_range(s, kExtendedprice, r, 90'100, 10'494'950)));
    batch.columns[kDiscount].f64.push_back(
        cents(draw_range(s, kDiscount, r, 0, 10)));
    batch.columns[kTax].f64.push_back(cents(draw_range(s, kTax, r, 0, 8)));
    batch.columns[kReturnflag].bin_push(
        kReturnFlags[draw(s, kReturnflag, r) % 3]);
    batch.columns[kLinestatus].bin_push(
        kLineStatus[draw(s, kLinestatus, r) % 2]);
    int32_t ship = static_cast<int32_t>(
        kEpoch1992 + draw_range(s, kShipdate, r, 1, 2526));
    batch.columns[kShipdate].i32.push_back(ship);
    batch.columns[kCommitdate].i32.push_back(
        ship + static_cast<int32_t>(draw_range(s, kCommitdate, r, -60, 60)));
    batch.columns[kReceiptdate].i32.push_back(
        ship + static_cast<int32_t>(draw_range(s, kReceiptdate, r, 1, 30)));
    batch.columns[kShipinstruct].bin_push(
        kShipInstruct[draw(s, kShipinstruct, r) % 4]);
    batch.columns[kShipmode].bin_push(
        kShipModes[draw(s, kShipmode, r) % 7]);
    batch.columns[kComment].bin_push(make_comment(s, kComment, r));

    batch.columns[kConstant].i32.push_back(42);
    batch.columns[kSorted].i64.push_back(static_cast<int64_t>(r));
    batch.columns[kRandomF64].f64.push_back(
        static_cast<double>(draw(s, kRandomF64, r)) / 1.0e10);
    bool null = draw(s, kHighNull, r) % 100 < 95;
    batch.columns[kHighNull].valid.push_back(null ? 0 : 1);
    if (!null) {
      batch.columns[kHighNull].i64.push_back(
          static_cast<int64_t>(draw(s, kHighNull, r, 1) % 1'000'000));
    }
    batch.columns[kRandomBytes].bin_push(
        random_bytes(s, kRandomBytes, r, 32));
  }
  return batch;
}

int64_t write_fixture(const FixtureSpec& spec, const std::string& path) {
  if (spec.rg_rows < 1 || spec.pages_per_chunk < 1) {
    throw std::invalid_argument("fixture rg_rows/pages_per_chunk must be >= 1");
  }
  auto schema = fixture_schema(spec);
  int64_t total = fixture_rows(spec);
  if (total < 0) throw std::invalid_argument("fixture rows must be >= 0");

  const std::string tmp_path = path + ".tmp";
  ParquetFileWriter writer(tmp_path, build_schema_elements(schema));

  for (int64_t done = 0; done < total;) {
    int64_t group_rows = std::min(spec.rg_rows, total - done);
    RowBatch batch = generate_rows(spec, done, group_rows);
    int64_t page_limit =
        (group_rows + spec.pages_per_chunk - 1) / spec.pages_per_chunk;
    writer.begin_row_group(group_rows);
    for (size_t c = 0; c < schema.size(); ++c) {
      ChunkDirective d;
      d.column_path = schema[c].name;
      d.physical_type = schema[c].physical_type;
      d.page_row_limit = std::max<int64_t>(page_limit, 1);
      d.encoding_mode = EncodingMode::TRIAL;
      d.candidates = spec.v1_only
                         ? applicable_v1_encodings(schema[c].physical_type)
                         : applicable_encodings(schema[c].physical_type);
      d.compression_mode = spec.forced_compression
                               ? CompressionPlanMode::FORCED
                               : CompressionPlanMode::GATED;
      d.compression_codec = spec.codec;
      writer.write_chunk(transcode_chunk(batch.columns[c], d));
    }
    writer.end_row_group();
    done += group_rows;
  }

  int64_t size = writer.finish();
  if (std::rename(tmp_path.c_str(), path.c_str()) != 0) {
    std::remove(tmp_path.c_str());
    throw std::runtime_error("cannot move fixture into place: " + path);
  }
  return size;
}

}  // namespace pqforge
