#pragma once
#include <cstdint>
#include <string_view>

namespace gldpc {

// CRC-32 (IEEE 802.3 polynomial, reflected form 0xEDB88320), the variant
// used by zlib and PNG.  Used to guard serialized graph files against
// truncation and accidental edits.
std::uint32_t crc32(std::string_view data);

}  // namespace gldpc
