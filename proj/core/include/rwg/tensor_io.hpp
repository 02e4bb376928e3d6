#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "rwg/score_tensor.hpp"

namespace rwg {

inline constexpr char kTensorMagic[4] = {'R', 'W', 'G', 'T'};
inline constexpr std::uint32_t kTensorFormatVersion = 1;

/// Serializes a tensor: magic, format version, a JSON metadata block with
/// sorted keys, then the scores as little-endian f64 in flat index order.
/// runtime_seconds is written as zeros so equal runs give equal bytes.
/// Returns the number of bytes written.
std::size_t write_tensor(const ScoreTensor& tensor, std::ostream& out);
std::size_t write_tensor(const ScoreTensor& tensor,
                         const std::filesystem::path& path);

/// Parses a serialized tensor. Throws BadMagicError, UnsupportedVersionError
/// or TruncatedPayloadError (naming expected and actual byte counts) on
/// malformed input, IoError if the file cannot be read.
ScoreTensor read_tensor(std::istream& in);
ScoreTensor read_tensor(const std::filesystem::path& path);

}  // namespace rwg
