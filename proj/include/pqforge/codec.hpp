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

#include "pqforge/bytes.hpp"
#include "pqforge/types.hpp"

namespace pqforge {

struct CodecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Compresses `input` with the given codec. UNCOMPRESSED copies.
/// LZ4 writes the raw block form (Parquet LZ4_RAW).
Bytes compress(ByteView input, const Codec& codec);

/// Decompresses to exactly `uncompressed_size` bytes.
Bytes decompress(ByteView input, const Codec& codec, size_t uncompressed_size);

/// Decompresses the legacy Hadoop-framed LZ4 layout (read-only support).
Bytes decompress_lz4_hadoop(ByteView input, size_t uncompressed_size);

int zstd_default_level();

}  // namespace pqforge
