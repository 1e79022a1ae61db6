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

#include "pqforge/rewriter.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <mutex>
#include <thread>

#include "pqforge/writer.hpp"

namespace pqforge {

RowBatch RowRebuffer::next(int64_t rows) {
  RowBatch out;
  out.columns.resize(reader_.schema().size());
  for (size_t c = 0; c < reader_.schema().size(); ++c) {
    out.columns[c].desc = reader_.schema()[c];
  }
  int64_t need = rows;
  while (need > 0) {
    if (buf_.columns.empty() || cursor_ == buf_.num_rows()) {
      if (next_group_ >= reader_.num_row_groups()) {
        throw ParquetError("rebuffer asked for more rows than the source has");
      }
      size_t g = next_group_++;
      buf_ = RowBatch{};
      buf_.columns.resize(reader_.schema().size());
      for (size_t c = 0; c < reader_.schema().size(); ++c) {
        if (c < skip_.size() && skip_[c]) {
          buf_.columns[c].desc = reader_.schema()[c];
          buf_.columns[c].num_rows = reader_.row_group_rows(g);
        } else {
          buf_.columns[c] = reader_.read_chunk(g, c);
        }
      }
      cursor_ = 0;
    }
    int64_t take = std::min(need, buf_.num_rows() - cursor_);
    for (size_t c = 0; c < out.columns.size(); ++c) {
      if (c < skip_.size() && skip_[c]) {
        // Skipped columns carry no values; only the row count advances.
        out.columns[c].num_rows += take;
      } else {
        out.columns[c].append_rows(buf_.columns[c], cursor_, take);
      }
    }
    cursor_ += take;
    need -= take;
  }
  return out;
}

namespace {

bool plan_has_v2_candidates(const RewritePlan& plan) {
  for (const auto& dirs : plan.directives) {
    for (const ChunkDirective& d : dirs) {
      for (EncodingKind e : d.candidates) {
        if (encoding_generation(e) == EncodingGeneration::V2) return true;
      }
    }
  }
  return false;
}

bool grouping_matches_source(const ParquetReader& reader,
                             const RewritePlan& plan) {
  if (plan.row_group_boundaries.size() != reader.num_row_groups()) {
    return false;
  }
  for (size_t g = 0; g < reader.num_row_groups(); ++g) {
    if (plan.row_group_boundaries[g] != reader.row_group_rows(g)) return false;
  }
  return true;
}

}  // namespace

RewriteReport rewrite(const std::string& source_path, const RewritePlan& plan,
                      const std::string& sink_path,
                      const RewriteOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  ParquetReader reader(source_path);
  if (reader.num_rows() != plan.source_total_rows) {
    throw ParquetError("plan row count does not match the source file");
  }
  int64_t boundary_sum = 0;
  for (int64_t b : plan.row_group_boundaries) boundary_sum += b;
  if (boundary_sum != reader.num_rows()) {
    throw ParquetError("plan boundaries do not conserve the source rows");
  }
  const size_t n_cols = reader.schema().size();
  for (const auto& dirs : plan.directives) {
    if (dirs.size() != n_cols) {
      throw ParquetError("plan directive count does not match the schema");
    }
  }

  // Columns with undecodable source chunks can only be passed through,
  // which requires the plan grouping to match the source grouping.
  std::vector<bool> passthrough(n_cols, false);
  bool any_passthrough = false;
  for (size_t c = 0; c < n_cols; ++c) {
    for (size_t g = 0; g < reader.num_row_groups(); ++g) {
      if (!reader.chunk_decodable(g, c)) {
        passthrough[c] = true;
        any_passthrough = true;
        break;
      }
    }
  }
  if (any_passthrough && !grouping_matches_source(reader, plan)) {
    throw ParquetError(
        "source has chunks with unsupported encodings; rewriting them "
        "requires keeping the source row grouping");
  }

  std::vector<meta::KeyValue> kv = reader.footer().key_value_metadata;
  std::erase_if(kv, [](const meta::KeyValue& e) {
    return e.key == "pqforge.trialed_generations";
  });
  kv.push_back({"pqforge.trialed_generations",
                plan_has_v2_candidates(plan) ? std::string("V1,V2")
                                             : std::string("V1")});

  const std::string tmp_path = sink_path + ".tmp";
  ParquetFileWriter writer(tmp_path, reader.footer().schema, std::move(kv));

  RewriteReport report;
  report.input_file_size = reader.file_size();

  int parallelism = opts.parallelism > 0
                        ? opts.parallelism
                        : static_cast<int>(std::max(
                              1u, std::thread::hardware_concurrency()));

  RowRebuffer rebuffer(reader, passthrough);
  for (size_t g = 0; g < plan.row_group_boundaries.size(); ++g) {
    int64_t group_rows = plan.row_group_boundaries[g];
    RowBatch batch = rebuffer.next(group_rows);

    // Workers transcode chunks in any order; the main thread drains
    // artifacts strictly in schema order, so the output bytes are
    // independent of scheduling and finished chunks are freed promptly.
    std::vector<ChunkArtifact> artifacts(n_cols);
    std::vector<std::string> errors(n_cols);
    std::vector<char> ready(n_cols, 0);
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<size_t> next{0};
    auto work = [&] {
      while (true) {
        size_t c = next.fetch_add(1);
        if (c >= n_cols) return;
        ChunkArtifact art;
        std::string error;
        if (!passthrough[c]) {
          try {
            art = transcode_chunk(batch.columns[c], plan.directives[g][c]);
            // The artifact owns everything the writer needs; release the
            // decoded column now to cap peak memory.
            batch.columns[c] = ColumnSlice{};
          } catch (const std::exception& e) {
            error = e.what();
          }
        }
        {
          std::lock_guard<std::mutex> lk(mu);
          artifacts[c] = std::move(art);
          errors[c] = std::move(error);
          ready[c] = 1;
        }
        cv.notify_all();
      }
    };
    std::vector<std::thread> pool;
    int n_threads = std::min<int>(parallelism, static_cast<int>(n_cols));
    pool.reserve(static_cast<size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(work);

    writer.begin_row_group(group_rows);
    for (size_t c = 0; c < n_cols; ++c) {
      {
        std::unique_lock<std::mutex> lk(mu);
        cv.wait(lk, [&] { return ready[c] != 0; });
      }
      if (!errors[c].empty()) {
        for (auto& t : pool) t.join();
        writer.abort();
        throw ParquetError("chunk transcode failed (rg=" + std::to_string(g) +
                           " col=" + reader.schema()[c].name +
                           "): " + errors[c]);
      }
      ChunkRecord rec;
      rec.column = reader.schema()[c].name;
      rec.group_index = g;
      if (passthrough[c]) {
        const auto& cm = *reader.footer().row_groups[g].columns[c].meta_data;
        writer.write_raw_chunk(cm, reader.chunk_bytes(g, c));
        rec.untranscoded = true;
        report.untranscoded_chunks.push_back(
            "rg=" + std::to_string(g) + " col=" + rec.column);
      } else {
        writer.write_chunk(artifacts[c]);
        rec.choice = artifacts[c].choice;
        rec.decision = artifacts[c].decision;
        artifacts[c] = ChunkArtifact{};
      }
      report.chunks.push_back(std::move(rec));
    }
    for (auto& t : pool) t.join();
    writer.end_row_group();
    report.rows_written += group_rows;
  }

  report.output_file_size = writer.finish();
  if (std::rename(tmp_path.c_str(), sink_path.c_str()) != 0) {
    std::remove(tmp_path.c_str());
    throw ParquetError("cannot move output into place: " + sink_path);
  }
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

}  // namespace pqforge
