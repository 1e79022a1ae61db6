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

#include "pqforge/codec.hpp"

#include <cstring>

// Stable C ABIs of the system codec libraries; no dev headers installed,
// so the needed prototypes are declared here and the shared objects are
// linked directly.
extern "C" {
size_t ZSTD_compressBound(size_t srcSize);
size_t ZSTD_compress(void* dst, size_t dstCapacity, const void* src,
                     size_t srcSize, int level);
size_t ZSTD_decompress(void* dst, size_t dstCapacity, const void* src,
                       size_t srcSize);
unsigned ZSTD_isError(size_t code);

int LZ4_compressBound(int inputSize);
int LZ4_compress_default(const char* src, char* dst, int srcSize,
                         int dstCapacity);
int LZ4_decompress_safe(const char* src, char* dst, int compressedSize,
                        int dstCapacity);

typedef enum { SNAPPY_OK = 0 } snappy_status_dummy;
int snappy_compress(const char* input, size_t input_length, char* compressed,
                    size_t* compressed_length);
int snappy_uncompress(const char* compressed, size_t compressed_length,
                      char* uncompressed, size_t* uncompressed_length);
size_t snappy_max_compressed_length(size_t source_length);
}

namespace pqforge {

int zstd_default_level() { return 3; }

Bytes compress(ByteView input, const Codec& codec) {
  switch (codec.kind) {
    case CodecKind::UNCOMPRESSED:
      return Bytes(input.begin(), input.end());
    case CodecKind::ZSTD: {
      size_t bound = ZSTD_compressBound(input.size());
      Bytes out(bound);
      size_t n = ZSTD_compress(out.data(), bound, input.data(), input.size(),
                               codec.level.value_or(zstd_default_level()));
      if (ZSTD_isError(n)) throw CodecError("zstd compression failed");
      out.resize(n);
      return out;
    }
    case CodecKind::LZ4: {
      if (input.size() > 0x7E000000) {
        throw CodecError("lz4 block too large");
      }
      int bound = LZ4_compressBound(static_cast<int>(input.size()));
      Bytes out(static_cast<size_t>(bound));
      int n = LZ4_compress_default(
          reinterpret_cast<const char*>(input.data()),
          reinterpret_cast<char*>(out.data()), static_cast<int>(input.size()),
          bound);
      if (n <= 0 && !input.empty()) throw CodecError("lz4 compression failed");
      out.resize(static_cast<size_t>(n));
      return out;
    }
    case CodecKind::SNAPPY: {
      size_t len = snappy_max_compressed_length(input.size());
      Bytes out(len);
      int rc = snappy_compress(reinterpret_cast<const char*>(input.data()),
                               input.size(),
                               reinterpret_cast<char*>(out.data()), &len);
      if (rc != SNAPPY_OK) throw CodecError("snappy compression failed");
      out.resize(len);
      return out;
    }
  }
  throw CodecError("unknown codec");
}

Bytes decompress(ByteView input, const Codec& codec,
                 size_t uncompressed_size) {
  switch (codec.kind) {
    case CodecKind::UNCOMPRESSED:
      return Bytes(input.begin(), input.end());
    case CodecKind::ZSTD: {
      Bytes out(uncompressed_size);
      size_t n = ZSTD_decompress(out.data(), uncompressed_size, input.data(),
                                 input.size());
      if (ZSTD_isError(n) || n != uncompressed_size) {
        throw CodecError("zstd decompression failed");
      }
      return out;
    }
    case CodecKind::LZ4: {
      Bytes out(uncompressed_size);
      int n = LZ4_decompress_safe(reinterpret_cast<const char*>(input.data()),
                                  reinterpret_cast<char*>(out.data()),
                                  static_cast<int>(input.size()),
                                  static_cast<int>(uncompressed_size));
      if (n < 0 || static_cast<size_t>(n) != uncompressed_size) {
        throw CodecError("lz4 decompression failed");
      }
      return out;
    }
    case CodecKind::SNAPPY: {
      Bytes out(uncompressed_size);
      size_t len = uncompressed_size;
      int rc = snappy_uncompress(reinterpret_cast<const char*>(input.data()),
                                 input.size(),
                                 reinterpret_cast<char*>(out.data()), &len);
      if (rc != SNAPPY_OK || len != uncompressed_size) {
        throw CodecError("snappy decompression failed");
      }
      return out;
    }
  }
  throw CodecError("unknown codec");
}

Bytes decompress_lz4_hadoop(ByteView input, size_t uncompressed_size) {
  // Frames of [4B BE uncompressed][4B BE compressed][lz4 block]...
  Bytes out;
  out.reserve(uncompressed_size);
  ByteReader r(input);
  while (r.remaining() > 0 && out.size() < uncompressed_size) {
    auto be32 = [&] {
      uint32_t v = 0;
      for (int i = 0; i < 4; ++i) v = (v << 8) | r.u8();
      return v;
    };
    uint32_t usize = be32();
    uint32_t csize = be32();
    ByteView block = r.raw(csize);
    size_t off = out.size();
    out.resize(off + usize);
    int n = LZ4_decompress_safe(reinterpret_cast<const char*>(block.data()),
                                reinterpret_cast<char*>(out.data() + off),
                                static_cast<int>(csize),
                                static_cast<int>(usize));
    if (n < 0 || static_cast<uint32_t>(n) != usize) {
      throw CodecError("hadoop-lz4 decompression failed");
    }
  }
  if (out.size() != uncompressed_size) {
    throw CodecError("hadoop-lz4 size mismatch");
  }
  return out;
}

}  // namespace pqforge
