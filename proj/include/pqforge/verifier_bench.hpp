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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pqforge/types.hpp"

namespace pqforge {

struct Mismatch {
  int64_t row = 0;
  std::string column;
  std::string left_digest;   // short printable digest of the left value
  std::string right_digest;  // short printable digest of the right value
};

struct EqualityReport {
  bool equal = false;
  int64_t rows_compared = 0;
  std::optional<Mismatch> first_mismatch;
  std::vector<std::string> columns_compared;
  // Schema differences are structural inequality, not an exception.
  bool schema_mismatch = false;
  std::string schema_mismatch_detail;
};

/// Streaming batch-wise comparison of fully decoded logical values, row
/// order preserved. Nulls equal only nulls; floats compared bitwise.
/// Stops at the first mismatch.
EqualityReport verify_equal(const std::string& path_a,
                            const std::string& path_b);

struct BenchOptions {
  int repetitions = 3;
  std::optional<std::vector<std::string>> projection;
  int parallelism = 1;      // decode threads; part of the run's identity
  bool cold_cache = false;  // caller-arranged precondition, recorded only
  bool discard_warmup = true;  // drop rep 0 from the median when warm
};

struct BenchReport {
  std::string path;
  int64_t file_size = 0;
  int64_t raw_decoded_size = 0;
  double scan_runtime = 0.0;  // seconds, median of repetitions
  double storage_bandwidth = 0.0;
  double effective_bandwidth = 0.0;
  int repetitions = 0;
  int parallelism = 1;
  bool cold_cache = false;
  bool clock_floor_applied = false;  // runtime clamped to clock resolution
  // Self-describing accounting so the numbers are interpretable alone.
  std::string raw_size_accounting =
      "fixed-width: width x valid values (BOOLEAN 1, INT96 12); "
      "variable-width: byte sum + 4 bytes/value";
  std::vector<double> runtimes;  // all repetitions, seconds
};

/// Full-scan decode benchmark: median runtime over `repetitions`,
/// storage bandwidth = file_size/runtime, effective bandwidth =
/// raw_decoded_size/runtime (raw size per the fixed accounting).
BenchReport bench_scan(const std::string& path, const BenchOptions& opts = {});

/// Pure metric arithmetic over an already-measured (size, runtime) pair;
/// the piece of bench_scan that is testable without a clock.
void finalize_bench_metrics(BenchReport& report);

struct BenchDelta {
  double file_size_ratio = 0.0;
  double runtime_ratio = 0.0;
  double storage_bandwidth_ratio = 0.0;
  double effective_bandwidth_ratio = 0.0;
  double raw_decoded_size_ratio = 0.0;  // must be 1.0 for the same table
  bool raw_size_mismatch = false;
};

/// Candidate-over-baseline ratios. A raw-size ratio away from 1.0 is
/// flagged, not thrown: it means the two reports describe different
/// logical data.
BenchDelta compare_bench(const BenchReport& baseline,
                         const BenchReport& candidate);

/// One CSV row per report. Column order is fixed:
/// path,file_size,raw_decoded_size,scan_runtime,storage_bandwidth,
/// effective_bandwidth,repetitions,parallelism,cold_cache
std::string bench_csv_header();
std::string bench_csv_row(const BenchReport& report);

}  // namespace pqforge
