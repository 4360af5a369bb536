#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace pcpe {

// Raw byte sequence. std::string keeps interop with JSON, file IO and
// hashing simple; contents are arbitrary bytes, not text.
using Bytes = std::string;

// RFC 4648 base64 with padding.
std::string base64_encode(std::string_view raw);
// Strict decode: rejects bad characters, bad length and bad padding.
Bytes base64_decode(std::string_view encoded);

}  // namespace pcpe
