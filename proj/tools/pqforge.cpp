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

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "pqforge/fixture.hpp"
#include "pqforge/inspector.hpp"
#include "pqforge/json_io.hpp"
#include "pqforge/planner.hpp"
#include "pqforge/reader.hpp"
#include "pqforge/rewriter.hpp"
#include "pqforge/verifier_bench.hpp"

namespace {

// Exit codes: 0 success, 1 internal error, 2 bad input file, 3 bad args.
constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kBadInput = 2;
constexpr int kBadArgs = 3;

struct GlobalOpts {
  std::string format = "human";
  int parallelism = 0;
  bool show_config = false;
};

struct PolicyOpts {
  pqforge::RewritePolicy policy;
  bool v1_only = false;
  std::string force_codec;
  bool no_compression = false;
  std::optional<int> zstd_level;

  pqforge::RewritePolicy resolve() const {
    pqforge::RewritePolicy p = policy;
    p.flexible_encodings = !v1_only;
    if (no_compression) {
      p.compression_mode = pqforge::RewritePolicy::CompressionMode::NONE;
    } else if (!force_codec.empty()) {
      auto c = pqforge::codec_from_string(force_codec);
      if (!c) throw CLI::ValidationError("unknown codec: " + force_codec);
      p.compression_candidate.kind = *c;
      p.compression_mode = pqforge::RewritePolicy::CompressionMode::FORCED;
    }
    if (zstd_level) p.compression_candidate.level = *zstd_level;
    auto errors = pqforge::validate_policy(p);
    if (!errors.empty()) {
      std::string msg = "invalid policy:";
      for (const std::string& e : errors) msg += "\n  " + e;
      throw CLI::ValidationError(msg);
    }
    return p;
  }
};

void add_policy_flags(CLI::App* cmd, PolicyOpts& o) {
  cmd->add_option("--rg-rows", o.policy.target_rg_rows,
                  "Target rows per row group")
      ->envname("PQFORGE_RG_ROWS");
  cmd->add_option("--pages-per-chunk", o.policy.target_pages_per_chunk,
                  "Target data pages per column chunk")
      ->envname("PQFORGE_PAGES_PER_CHUNK");
  cmd->add_flag("--v1-only", o.v1_only, "Restrict encodings to the V1 set")
      ->envname("PQFORGE_V1_ONLY");
  cmd->add_option("--force-codec", o.force_codec,
                  "Blanket compression with this codec, gate bypassed")
      ->envname("PQFORGE_FORCE_CODEC");
  cmd->add_flag("--no-compression", o.no_compression,
                "Disable compression entirely")
      ->envname("PQFORGE_NO_COMPRESSION");
  cmd->add_option("--codec",
                  [&o](const std::vector<std::string>& v) {
                    auto c = pqforge::codec_from_string(v.back());
                    if (!c) return false;
                    o.policy.compression_candidate.kind = *c;
                    return true;
                  },
                  "Gated compression candidate codec (default zstd)")
      ->envname("PQFORGE_CODEC");
  cmd->add_option("--zstd-level",
                  [&o](const std::vector<std::string>& v) {
                    o.zstd_level = std::stoi(v.back());
                    return true;
                  },
                  "ZSTD compression level")
      ->envname("PQFORGE_ZSTD_LEVEL");
  cmd->add_option("--threshold", o.policy.compression_threshold,
                  "Minimum size reduction to keep compression (e.g. 0.10)")
      ->envname("PQFORGE_THRESHOLD");
  cmd->add_option("--dict-limit", o.policy.dictionary_size_limit,
                  "Dictionary page size limit in bytes")
      ->envname("PQFORGE_DICT_LIMIT");
  cmd->add_option("--page-floor-rows", o.policy.page_size_floor_rows,
                  "Minimum rows per data page")
      ->envname("PQFORGE_PAGE_FLOOR_ROWS");
}

void emit(const GlobalOpts& g, const nlohmann::json& j,
          const std::string& human) {
  if (g.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << human;
  }
}

std::string human_report(const pqforge::FileReport& r) {
  std::string s;
  s += "rows: " + std::to_string(r.total_rows) +
       "  file size: " + std::to_string(r.file_size) + " bytes\n";
  s += "row groups: " + std::to_string(r.row_groups.size()) +
       " (rows/rg min=" + std::to_string(r.summary.min_rows_per_rg) +
       " median=" + std::to_string(r.summary.median_rows_per_rg) +
       " max=" + std::to_string(r.summary.max_rows_per_rg) + ")\n";
  s += "data pages/chunk: min=" +
       std::to_string(r.summary.min_pages_per_chunk) +
       " median=" + std::to_string(r.summary.median_pages_per_chunk) +
       " max=" + std::to_string(r.summary.max_pages_per_chunk) + "\n";
  s += "encodings:";
  for (const auto& [e, n] : r.summary.encoding_histogram) {
    s += std::string(" ") + pqforge::to_string(e) + "=" + std::to_string(n);
  }
  s += "\ncodecs:";
  for (const auto& [c, n] : r.summary.codec_histogram) {
    s += std::string(" ") + pqforge::to_string(c) + "=" + std::to_string(n);
  }
  s += "\n";
  return s;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw pqforge::ParquetError("cannot open file: " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"pqforge: Parquet layout inspection and rewriting"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Key-value config file (TOML-style)");

  GlobalOpts g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->envname("PQFORGE_FORMAT");
  app.add_option("--parallelism", g.parallelism,
                 "Worker threads (0 = hardware parallelism)")
      ->envname("PQFORGE_PARALLELISM");
  app.add_flag("--show-config", g.show_config,
               "Print the effective configuration and continue");

  // inspect
  auto* c_inspect = app.add_subcommand("inspect", "Census of a Parquet file");
  std::string in_path;
  bool approximate = false;
  std::vector<std::string> columns;
  c_inspect->add_option("file", in_path, "Input Parquet file")->required();
  c_inspect->add_flag("--approximate", approximate,
                      "Footer-only census, skip the page scan");
  c_inspect->add_option("--columns", columns, "Column filter");

  // grade
  auto* c_grade =
      app.add_subcommand("grade", "Policy-conformance findings for a file");
  std::string grade_path;
  PolicyOpts grade_policy;
  c_grade->add_option("file", grade_path, "Input Parquet file")->required();
  add_policy_flags(c_grade, grade_policy);

  // plan
  auto* c_plan = app.add_subcommand("plan", "Derive a rewrite plan");
  std::string plan_path, plan_out;
  PolicyOpts plan_policy;
  c_plan->add_option("file", plan_path, "Input Parquet file")->required();
  c_plan->add_option("-o,--output", plan_out, "Write the plan JSON here");
  add_policy_flags(c_plan, plan_policy);

  // rewrite
  auto* c_rewrite = app.add_subcommand("rewrite", "Rewrite a Parquet file");
  std::string rw_in, rw_out, rw_plan_file;
  bool rw_verify = false;
  PolicyOpts rw_policy;
  c_rewrite->add_option("input", rw_in, "Source Parquet file")->required();
  c_rewrite->add_option("output", rw_out, "Destination path")->required();
  c_rewrite->add_option("--plan", rw_plan_file,
                        "Use this plan JSON instead of deriving one");
  c_rewrite->add_flag("--verify", rw_verify,
                      "Verify logical equality after writing");
  add_policy_flags(c_rewrite, rw_policy);

  // verify
  auto* c_verify =
      app.add_subcommand("verify", "Prove logical equality of two files");
  std::string v_a, v_b;
  c_verify->add_option("left", v_a, "Left Parquet file")->required();
  c_verify->add_option("right", v_b, "Right Parquet file")->required();

  // bench
  auto* c_bench = app.add_subcommand("bench", "Full-scan decode benchmark");
  std::string b_path;
  int b_reps = 3;
  bool b_cold = false, b_csv = false;
  std::vector<std::string> b_proj;
  c_bench->add_option("file", b_path, "Input Parquet file")->required();
  c_bench->add_option("--reps", b_reps, "Repetitions (median is reported)")
      ->envname("PQFORGE_REPS");
  c_bench->add_option("--projection", b_proj, "Columns to scan");
  c_bench->add_flag("--cold-cache", b_cold,
                    "Record that caches were dropped externally");
  c_bench->add_flag("--csv", b_csv, "Emit a CSV row instead of a report");

  // gen-fixture
  auto* c_gen =
      app.add_subcommand("gen-fixture", "Generate a deterministic test file");
  pqforge::FixtureSpec fx;
  std::string gen_out;
  c_gen->add_option("output", gen_out, "Destination path")->required();
  c_gen->add_option("--profile", fx.profile, "Table profile")
      ->envname("PQFORGE_PROFILE");
  c_gen->add_option("--scale", fx.scale, "TPC-H-style scale factor")
      ->envname("PQFORGE_SCALE");
  c_gen->add_option("--rows", fx.rows, "Explicit row count (overrides scale)")
      ->envname("PQFORGE_ROWS");
  c_gen->add_option("--seed", fx.seed, "Generator seed")
      ->envname("PQFORGE_SEED");
  c_gen->add_option("--rg-rows", fx.rg_rows, "Rows per row group")
      ->envname("PQFORGE_RG_ROWS");
  c_gen->add_option("--pages-per-chunk", fx.pages_per_chunk,
                    "Data pages per chunk")
      ->envname("PQFORGE_PAGES_PER_CHUNK");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadArgs;
  }

  if (g.show_config) {
    std::cout << app.config_to_str(true, false);
  }

  if (c_inspect->parsed()) {
    pqforge::InspectOptions opts;
    opts.scan_pages = !approximate;
    if (!columns.empty()) opts.columns = columns;
    pqforge::FileReport rep = pqforge::inspect(in_path, opts);
    emit(g, pqforge::to_json(rep), human_report(rep));
    return kOk;
  }

  if (c_grade->parsed()) {
    pqforge::RewritePolicy policy = grade_policy.resolve();
    pqforge::FileReport rep = pqforge::inspect(grade_path);
    std::vector<pqforge::Finding> findings = pqforge::grade(rep, policy);
    std::string human;
    for (const pqforge::Finding& f : findings) {
      human += "I" + std::to_string(static_cast<int>(f.insight)) + " " +
               f.scope + ": " + f.message + " (measured " +
               std::to_string(f.measured) + ", target " +
               std::to_string(f.target) + ")\n";
    }
    if (findings.empty()) human = "conformant: no findings\n";
    emit(g, pqforge::to_json(findings), human);
    return kOk;
  }

  if (c_plan->parsed()) {
    pqforge::RewritePolicy policy = plan_policy.resolve();
    pqforge::FileReport rep = pqforge::inspect(plan_path);
    pqforge::RewritePlan plan = pqforge::derive_plan(rep, policy);
    nlohmann::json j = pqforge::to_json(plan);
    if (!plan_out.empty()) {
      std::ofstream out(plan_out);
      if (!out) throw pqforge::ParquetError("cannot write: " + plan_out);
      out << j.dump(2) << "\n";
    }
    emit(g, j, pqforge::plan_summary(plan) + "\n");
    return kOk;
  }

  if (c_rewrite->parsed()) {
    pqforge::RewritePlan plan;
    if (!rw_plan_file.empty()) {
      plan = pqforge::plan_from_json(load_json_file(rw_plan_file));
    } else {
      pqforge::RewritePolicy policy = rw_policy.resolve();
      plan = pqforge::derive_plan(pqforge::inspect(rw_in), policy);
    }
    pqforge::RewriteOptions opts;
    opts.parallelism = g.parallelism;
    pqforge::RewriteReport rep = pqforge::rewrite(rw_in, plan, rw_out, opts);
    std::string human =
        "wrote " + rw_out + ": " + std::to_string(rep.rows_written) +
        " rows, " + std::to_string(rep.output_file_size) + " bytes (input " +
        std::to_string(rep.input_file_size) + ") in " +
        std::to_string(rep.wall_time_seconds) + " s\n";
    if (rw_verify) {
      pqforge::EqualityReport eq = pqforge::verify_equal(rw_in, rw_out);
      if (!eq.equal) {
        std::remove(rw_out.c_str());
        std::cerr << "verification failed; output removed\n";
        return kInternal;
      }
      human += "verified equal\n";
    }
    emit(g, pqforge::to_json(rep), human);
    return kOk;
  }

  if (c_verify->parsed()) {
    pqforge::EqualityReport eq = pqforge::verify_equal(v_a, v_b);
    std::string human;
    if (eq.equal) {
      human = "equal: " + std::to_string(eq.rows_compared) + " rows\n";
    } else if (eq.schema_mismatch) {
      human = "unequal: " + eq.schema_mismatch_detail + "\n";
    } else if (eq.first_mismatch) {
      human = "unequal at row " + std::to_string(eq.first_mismatch->row) +
              " column " + eq.first_mismatch->column + ": " +
              eq.first_mismatch->left_digest + " != " +
              eq.first_mismatch->right_digest + "\n";
    }
    emit(g, pqforge::to_json(eq), human);
    return eq.equal ? kOk : kInternal;
  }

  if (c_bench->parsed()) {
    pqforge::BenchOptions opts;
    opts.repetitions = b_reps;
    if (!b_proj.empty()) opts.projection = b_proj;
    opts.parallelism = g.parallelism > 0 ? g.parallelism : 1;
    opts.cold_cache = b_cold;
    pqforge::BenchReport rep = pqforge::bench_scan(b_path, opts);
    if (b_csv) {
      std::cout << pqforge::bench_csv_header() << "\n"
                << pqforge::bench_csv_row(rep) << "\n";
      return kOk;
    }
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "scanned %lld bytes raw in %.6f s: storage %.1f MB/s, "
                  "effective %.1f MB/s\n",
                  static_cast<long long>(rep.raw_decoded_size),
                  rep.scan_runtime, rep.storage_bandwidth / 1e6,
                  rep.effective_bandwidth / 1e6);
    emit(g, pqforge::to_json(rep), buf);
    return kOk;
  }

  if (c_gen->parsed()) {
    int64_t size = pqforge::write_fixture(fx, gen_out);
    emit(g,
         nlohmann::json{{"path", gen_out},
                        {"rows", pqforge::fixture_rows(fx)},
                        {"file_size", size}},
         "wrote " + gen_out + ": " +
             std::to_string(pqforge::fixture_rows(fx)) + " rows, " +
             std::to_string(size) + " bytes\n");
    return kOk;
  }

  return kBadArgs;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error&) {
    return kBadArgs;  // CLI11_PARSE handles printing; defensive only
  } catch (const pqforge::ParquetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadArgs;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
