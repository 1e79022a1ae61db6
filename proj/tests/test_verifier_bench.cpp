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

#include <doctest.h>

#include <cstdio>
#include <string>

#include "pqforge/fixture.hpp"
#include "pqforge/inspector.hpp"
#include "pqforge/planner.hpp"
#include "pqforge/rewriter.hpp"
#include "pqforge/verifier_bench.hpp"
#include "pqforge/writer.hpp"

using namespace pqforge;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(std::string p) : path(std::move(p)) {}
  ~TempFile() { std::remove(path.c_str()); }
};

// Writes a 2-column file; flip_row >= 0 flips one int value at that row.
void write_pair_file(const std::string& path, int64_t rows, int64_t flip_row,
                     int64_t drop_rows = 0) {
  std::vector<ColumnDescriptor> schema = {
      {"id", PhysicalType::INT64, false, 0},
      {"name", PhysicalType::BYTE_ARRAY, false, 0}};
  ColumnSlice id, name;
  id.desc = schema[0];
  name.desc = schema[1];
  int64_t n = rows - drop_rows;
  for (int64_t i = 0; i < n; ++i) {
    id.i64.push_back(i == flip_row ? -i : i);
    name.bin_push("row-" + std::to_string(i));
  }
  id.num_rows = name.num_rows = n;

  ParquetFileWriter w(path, build_schema_elements(schema));
  w.begin_row_group(n);
  for (ColumnSlice* col : {&id, &name}) {
    ChunkDirective d;
    d.column_path = col->desc.name;
    d.physical_type = col->desc.physical_type;
    d.page_row_limit = 100;
    d.candidates = {EncodingKind::PLAIN};
    d.compression_mode = CompressionPlanMode::NONE;
    w.write_chunk(transcode_chunk(*col, d));
  }
  w.end_row_group();
  w.finish();
}

}  // namespace

TEST_CASE("verify_equal is reflexive and survives regrouping") {
  TempFile src("tv_src.parquet");
  TempFile dst("tv_dst.parquet");
  FixtureSpec spec;
  spec.rows = 2000;
  spec.rg_rows = 300;
  write_fixture(spec, src.path);

  EqualityReport self = verify_equal(src.path, src.path);
  CHECK(self.equal);
  CHECK(self.rows_compared == 2000);
  CHECK(self.columns_compared.size() == 21);
  CHECK_FALSE(self.first_mismatch.has_value());

  // Same rows, different grouping/encodings/compression: still equal.
  rewrite(src.path, derive_plan(inspect(src.path), RewritePolicy{}),
          dst.path);
  EqualityReport across = verify_equal(src.path, dst.path);
  CHECK(across.equal);
  CHECK(across.rows_compared == 2000);
}

TEST_CASE("verify_equal pinpoints the first differing row and column") {
  TempFile a("tv_flip_a.parquet");
  TempFile b("tv_flip_b.parquet");
  write_pair_file(a.path, 500, -1);
  write_pair_file(b.path, 500, 137);  // id flipped at row 137

  EqualityReport r = verify_equal(a.path, b.path);
  CHECK_FALSE(r.equal);
  CHECK_FALSE(r.schema_mismatch);
  REQUIRE(r.first_mismatch.has_value());
  CHECK(r.first_mismatch->row == 137);
  CHECK(r.first_mismatch->column == "id");
  CHECK(r.first_mismatch->left_digest != r.first_mismatch->right_digest);
}

TEST_CASE("verify_equal reports unequal row counts as a mismatch") {
  TempFile a("tv_len_a.parquet");
  TempFile b("tv_len_b.parquet");
  write_pair_file(a.path, 300, -1);
  write_pair_file(b.path, 300, -1, 50);  // 250 rows

  EqualityReport r = verify_equal(a.path, b.path);
  CHECK_FALSE(r.equal);
  REQUIRE(r.first_mismatch.has_value());
  CHECK(r.first_mismatch->row == 250);  // diverges after the common prefix
}

TEST_CASE("schema differences are structural inequality") {
  TempFile a("tv_schema_a.parquet");
  TempFile b("tv_schema_b.parquet");
  write_pair_file(a.path, 100, -1);
  {
    // Same column names, different physical type for "id".
    std::vector<ColumnDescriptor> schema = {
        {"id", PhysicalType::INT32, false, 0},
        {"name", PhysicalType::BYTE_ARRAY, false, 0}};
    ColumnSlice id, name;
    id.desc = schema[0];
    name.desc = schema[1];
    for (int64_t i = 0; i < 100; ++i) {
      id.i32.push_back(static_cast<int32_t>(i));
      name.bin_push("row-" + std::to_string(i));
    }
    id.num_rows = name.num_rows = 100;
    ParquetFileWriter w(b.path, build_schema_elements(schema));
    w.begin_row_group(100);
    for (ColumnSlice* col : {&id, &name}) {
      ChunkDirective d;
      d.column_path = col->desc.name;
      d.physical_type = col->desc.physical_type;
      d.page_row_limit = 100;
      d.candidates = {EncodingKind::PLAIN};
      d.compression_mode = CompressionPlanMode::NONE;
      w.write_chunk(transcode_chunk(*col, d));
    }
    w.end_row_group();
    w.finish();
  }
  EqualityReport r = verify_equal(a.path, b.path);
  CHECK_FALSE(r.equal);
  CHECK(r.schema_mismatch);
  CHECK(r.schema_mismatch_detail.find("id") != std::string::npos);
}

// [DERIVED] Bandwidth values below are hand-computed from the definitions
// storage = file_size/runtime, effective = raw_decoded_size/runtime.
TEST_CASE("finalize_bench_metrics arithmetic") {
  SUBCASE("1 GiB in 2 s -> 512 MiB/s storage") {
    BenchReport r;
    r.file_size = 1'073'741'824;
    r.raw_decoded_size = 2'147'483'648;
    r.scan_runtime = 2.0;
    finalize_bench_metrics(r);
    CHECK(r.storage_bandwidth == doctest::Approx(536'870'912.0));
    CHECK(r.effective_bandwidth == doctest::Approx(1'073'741'824.0));
    CHECK_FALSE(r.clock_floor_applied);
  }
  SUBCASE("125 GB in 1 s -> 125 GB/s") {
    BenchReport r;
    r.file_size = 125'000'000'000;
    r.raw_decoded_size = 125'000'000'000;
    r.scan_runtime = 1.0;
    finalize_bench_metrics(r);
    CHECK(r.storage_bandwidth == doctest::Approx(125e9));
    CHECK(r.effective_bandwidth == doctest::Approx(125e9));
  }
  SUBCASE("zero runtime is clamped to the clock floor, not infinity") {
    BenchReport r;
    r.file_size = 1000;
    r.raw_decoded_size = 1000;
    r.scan_runtime = 0.0;
    finalize_bench_metrics(r);
    CHECK(r.clock_floor_applied);
    CHECK(r.scan_runtime > 0.0);
    CHECK(r.storage_bandwidth ==
          doctest::Approx(1000.0 / r.scan_runtime));
  }
  SUBCASE("empty table yields zero bandwidths") {
    BenchReport r;
    r.file_size = 100;
    r.raw_decoded_size = 0;
    r.scan_runtime = 1.0;
    finalize_bench_metrics(r);
    CHECK(r.effective_bandwidth == 0.0);
  }
}

TEST_CASE("bench_scan measures a real file consistently") {
  TempFile src("tv_bench.parquet");
  FixtureSpec spec;
  spec.rows = 2000;
  write_fixture(spec, src.path);

  BenchOptions opts;
  opts.repetitions = 3;
  BenchReport r = bench_scan(src.path, opts);
  CHECK(r.path == src.path);
  CHECK(r.file_size > 0);
  CHECK(r.raw_decoded_size > 0);
  CHECK(r.scan_runtime > 0.0);
  CHECK(r.storage_bandwidth > 0.0);
  CHECK(r.effective_bandwidth > 0.0);
  CHECK(r.repetitions == 3);
  CHECK(r.runtimes.size() == 3);

  // Projection shrinks the decoded size, never the file size.
  BenchOptions proj = opts;
  proj.projection = std::vector<std::string>{"l_orderkey"};
  BenchReport p = bench_scan(src.path, proj);
  CHECK(p.file_size == r.file_size);
  CHECK(p.raw_decoded_size < r.raw_decoded_size);
  CHECK(p.raw_decoded_size == 2000 * 8);  // one INT64 column

  // The raw size is a property of the data, not the measurement run.
  BenchOptions par = opts;
  par.parallelism = 4;
  BenchReport q = bench_scan(src.path, par);
  CHECK(q.raw_decoded_size == r.raw_decoded_size);
  CHECK(q.parallelism == 4);
}

TEST_CASE("compare_bench ratios and raw-size guard") {
  BenchReport base, cand;
  base.file_size = 1000;
  cand.file_size = 500;
  base.raw_decoded_size = 4000;
  cand.raw_decoded_size = 4000;
  base.scan_runtime = 2.0;
  cand.scan_runtime = 1.0;
  finalize_bench_metrics(base);
  finalize_bench_metrics(cand);

  BenchDelta d = compare_bench(base, cand);
  CHECK(d.file_size_ratio == doctest::Approx(0.5));
  CHECK(d.runtime_ratio == doctest::Approx(0.5));
  CHECK(d.storage_bandwidth_ratio == doctest::Approx(1.0));
  CHECK(d.effective_bandwidth_ratio == doctest::Approx(2.0));
  CHECK(d.raw_decoded_size_ratio == doctest::Approx(1.0));
  CHECK_FALSE(d.raw_size_mismatch);

  cand.raw_decoded_size = 3999;  // different logical data
  d = compare_bench(base, cand);
  CHECK(d.raw_size_mismatch);
}

TEST_CASE("bench CSV layout is frozen") {
  CHECK(bench_csv_header() ==
        "path,file_size,raw_decoded_size,scan_runtime,storage_bandwidth,"
        "effective_bandwidth,repetitions,parallelism,cold_cache");
  BenchReport r;
  r.path = "x.parquet";
  r.file_size = 10;
  r.raw_decoded_size = 20;
  r.scan_runtime = 0.5;
  finalize_bench_metrics(r);
  r.repetitions = 3;
  r.parallelism = 2;
  r.cold_cache = true;
  std::string row = bench_csv_row(r);
  CHECK(row.find("x.parquet,10,20,") == 0);
  CHECK(row.find(",3,2,true") != std::string::npos);
}
