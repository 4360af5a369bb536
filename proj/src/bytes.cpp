#include "pcpe/bytes.hpp"

#include <array>
#include <cstdint>

#include "pcpe/error.hpp"

namespace pcpe {

namespace {
constexpr char kAlphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

std::array<int8_t, 256> decode_table() {
  std::array<int8_t, 256> t{};
  t.fill(-1);
  for (int i = 0; i < 64; ++i) t[static_cast<unsigned char>(kAlphabet[i])] = static_cast<int8_t>(i);
  return t;
}
}  // namespace

std::string base64_encode(std::string_view raw) {
  std::string out;
  out.reserve((raw.size() + 2) / 3 * 4);
  std::size_t i = 0;
  while (i + 3 <= raw.size()) {
    std::uint32_t n = (static_cast<unsigned char>(raw[i]) << 16) |
                      (static_cast<unsigned char>(raw[i + 1]) << 8) |
                      static_cast<unsigned char>(raw[i + 2]);
    out.push_back(kAlphabet[(n >> 18) & 63]);
    out.push_back(kAlphabet[(n >> 12) & 63]);
    out.push_back(kAlphabet[(n >> 6) & 63]);
    out.push_back(kAlphabet[n & 63]);
    i += 3;
  }
  const std::size_t rest = raw.size() - i;
  if (rest == 1) {
    std::uint32_t n = static_cast<unsigned char>(raw[i]) << 16;
    out.push_back(kAlphabet[(n >> 18) & 63]);
    out.push_back(kAlphabet[(n >> 12) & 63]);
    out.append("==");
  } else if (rest == 2) {
    std::uint32_t n = (static_cast<unsigned char>(raw[i]) << 16) |
                      (static_cast<unsigned char>(raw[i + 1]) << 8);
    out.push_back(kAlphabet[(n >> 18) & 63]);
    out.push_back(kAlphabet[(n >> 12) & 63]);
    out.push_back(kAlphabet[(n >> 6) & 63]);
    out.push_back('=');
  }
  return out;
}

Bytes base64_decode(std::string_view encoded) {
  static const std::array<int8_t, 256> table = decode_table();
  if (encoded.size() % 4 != 0) {
    throw Error(errkind::bad_request, "base64: length not a multiple of 4");
  }
  Bytes out;
  out.reserve(encoded.size() / 4 * 3);
  for (std::size_t i = 0; i < encoded.size(); i += 4) {
    int pad = 0;
    std::uint32_t n = 0;
    for (int k = 0; k < 4; ++k) {
      const char c = encoded[i + k];
      if (c == '=') {
        // Padding is only legal in the last one or two positions of the
        // final quantum.
        if (i + 4 != encoded.size() || k < 2) {
          throw Error(errkind::bad_request, "base64: misplaced padding");
        }
        ++pad;
        n <<= 6;
        continue;
      }
      if (pad > 0) throw Error(errkind::bad_request, "base64: data after padding");
      const int8_t v = table[static_cast<unsigned char>(c)];
      if (v < 0) throw Error(errkind::bad_request, "base64: invalid character");
      n = (n << 6) | static_cast<std::uint32_t>(v);
    }
    out.push_back(static_cast<char>((n >> 16) & 0xff));
    if (pad < 2) out.push_back(static_cast<char>((n >> 8) & 0xff));
    if (pad < 1) out.push_back(static_cast<char>(n & 0xff));
  }
  return out;
}

}  // namespace pcpe
