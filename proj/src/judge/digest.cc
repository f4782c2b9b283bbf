// Copyright 2026 The SemJudge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "semjudge/judge/digest.h"

#include <openssl/evp.h>

#include <array>
#include <cstdint>

#include "semjudge/error.h"

namespace semjudge::judge {
namespace {

std::uint32_t ReadBe(std::string_view bytes, std::size_t pos, int width) {
  std::uint32_t value = 0;
  for (int i = 0; i < width; ++i) {
    value = (value << 8) | static_cast<unsigned char>(bytes[pos + i]);
  }
  return value;
}

bool StartsWith(std::string_view bytes, std::string_view prefix) {
  return bytes.substr(0, prefix.size()) == prefix;
}

constexpr std::string_view kPngSignature("\x89PNG\r\n\x1a\n", 8);

}  // namespace

std::string Sha256Hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &length, EVP_sha256(),
                 nullptr) != 1) {
    throw Error(ErrorCode::kInvalidArgument, "SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 0xf]);
  }
  return out;
}

std::string Base64Encode(std::string_view bytes) {
  std::string out(4 * ((bytes.size() + 2) / 3), '\0');
  const int written = EVP_EncodeBlock(
      reinterpret_cast<unsigned char*>(out.data()),
      reinterpret_cast<const unsigned char*>(bytes.data()),
      static_cast<int>(bytes.size()));
  out.resize(static_cast<std::size_t>(written));
  return out;
}

std::string SniffMediaType(std::string_view bytes) {
  if (StartsWith(bytes, kPngSignature)) return "image/png";
  if (StartsWith(bytes, "\xff\xd8\xff")) return "image/jpeg";
  if (StartsWith(bytes, "GIF87a") || StartsWith(bytes, "GIF89a")) {
    return "image/gif";
  }
  if (bytes.size() >= 12 && StartsWith(bytes, "RIFF") &&
      bytes.substr(8, 4) == "WEBP") {
    return "image/webp";
  }
  return "application/octet-stream";
}

std::optional<core::ImageSize> SniffImageSize(std::string_view bytes) {
  if (StartsWith(bytes, kPngSignature)) {
    if (bytes.size() < 24 || bytes.substr(12, 4) != "IHDR") return std::nullopt;
    return core::ImageSize{ReadBe(bytes, 16, 4), ReadBe(bytes, 20, 4)};
  }
  if (StartsWith(bytes, "\xff\xd8")) {
    std::size_t pos = 2;
    while (pos + 4 <= bytes.size()) {
      if (static_cast<unsigned char>(bytes[pos]) != 0xff) return std::nullopt;
      const auto marker = static_cast<unsigned char>(bytes[pos + 1]);
      if (marker == 0xff) {
        ++pos;
        continue;
      }
      if (marker == 0xd8 || (marker >= 0xd0 && marker <= 0xd7) ||
          marker == 0x01) {
        pos += 2;
        continue;
      }
      const std::uint32_t length = ReadBe(bytes, pos + 2, 2);
      const bool is_sof = marker >= 0xc0 && marker <= 0xcf && marker != 0xc4 &&
                          marker != 0xc8 && marker != 0xcc;
      if (is_sof) {
        if (pos + 9 > bytes.size()) return std::nullopt;
        return core::ImageSize{ReadBe(bytes, pos + 7, 2),
                               ReadBe(bytes, pos + 5, 2)};
      }
      pos += 2 + length;
    }
  }
  return std::nullopt;
}

}  // namespace semjudge::judge
