#include "rwg/tensor_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

namespace rwg {

namespace {

void append_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i)
        out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void append_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i)
        out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

std::uint32_t load_u32(const unsigned char* p) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t{p[i]} << (8 * i);
    return v;
}

std::uint64_t load_u64(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t{p[i]} << (8 * i);
    return v;
}

/// Reads exactly n bytes unless the stream ends first; returns what arrived.
std::string read_bytes(std::istream& in, std::size_t n) {
    std::string bytes(n, '\0');
    in.read(bytes.data(), static_cast<std::streamsize>(n));
    bytes.resize(static_cast<std::size_t>(in.gcount()));
    return bytes;
}

template <typename T>
T require_field(const nlohmann::json& meta, const char* key) {
    try {
        return meta.at(key).get<T>();
    } catch (const nlohmann::json::exception& err) {
        throw TensorFormatError(std::string("bad metadata field '") + key +
                                "': " + err.what());
    }
}

}  // namespace

std::size_t write_tensor(const ScoreTensor& tensor, std::ostream& out) {
    tensor.validate();
    nlohmann::json meta;
    meta["architectures"] = tensor.architectures;
    meta["env"] = tensor.env_name;
    meta["master_seed"] = tensor.master_seed;
    meta["n_episodes"] = tensor.n_episodes;
    meta["n_samples"] = tensor.n_samples;
    meta["runtime_seconds"] = std::vector<double>(tensor.n_architectures(), 0.0);
    meta["tool_version"] = tensor.tool_version;
    const std::string meta_text = meta.dump();

    std::string blob;
    blob.reserve(16 + meta_text.size() + 8 * tensor.scores.size());
    blob.append(kTensorMagic, sizeof(kTensorMagic));
    append_u32(blob, kTensorFormatVersion);
    append_u64(blob, meta_text.size());
    blob += meta_text;
    for (const double s : tensor.scores)
        append_u64(blob, std::bit_cast<std::uint64_t>(s));

    out.write(blob.data(), static_cast<std::streamsize>(blob.size()));
    if (!out) throw IoError("tensor write failed");
    return blob.size();
}

std::size_t write_tensor(const ScoreTensor& tensor,
                         const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    return write_tensor(tensor, out);
}

ScoreTensor read_tensor(std::istream& in) {
    const std::string head = read_bytes(in, 16);
    if (head.size() < 4 ||
        std::memcmp(head.data(), kTensorMagic, sizeof(kTensorMagic)) != 0)
        throw BadMagicError("not a tensor file: missing RWGT magic");
    if (head.size() < 16)
        throw TruncatedPayloadError("tensor header truncated: expected 16 bytes, got " +
                                    std::to_string(head.size()));
    const auto* bytes = reinterpret_cast<const unsigned char*>(head.data());
    const std::uint32_t version = load_u32(bytes + 4);
    if (version != kTensorFormatVersion)
        throw UnsupportedVersionError("unsupported tensor format version " +
                                      std::to_string(version));
    const std::uint64_t meta_len = load_u64(bytes + 8);

    const std::string meta_text = read_bytes(in, meta_len);
    if (meta_text.size() < meta_len)
        throw TruncatedPayloadError(
            "tensor metadata truncated: expected " + std::to_string(meta_len) +
            " bytes, got " + std::to_string(meta_text.size()));

    nlohmann::json meta;
    try {
        meta = nlohmann::json::parse(meta_text);
    } catch (const nlohmann::json::exception& err) {
        throw TensorFormatError(std::string("metadata is not valid JSON: ") +
                                err.what());
    }

    ScoreTensor tensor;
    tensor.env_name = require_field<std::string>(meta, "env");
    tensor.architectures = require_field<std::vector<std::string>>(meta, "architectures");
    tensor.n_samples = require_field<std::size_t>(meta, "n_samples");
    tensor.n_episodes = require_field<std::size_t>(meta, "n_episodes");
    tensor.master_seed = require_field<std::uint64_t>(meta, "master_seed");
    tensor.runtime_seconds = require_field<std::vector<double>>(meta, "runtime_seconds");
    tensor.tool_version = require_field<std::string>(meta, "tool_version");

    const std::size_t n_scores =
        tensor.architectures.size() * tensor.n_samples * tensor.n_episodes;
    const std::string payload = read_bytes(in, 8 * n_scores);
    if (payload.size() < 8 * n_scores)
        throw TruncatedPayloadError(
            "tensor payload truncated: expected " + std::to_string(8 * n_scores) +
            " bytes, got " + std::to_string(payload.size()));
    if (in.peek() != std::istream::traits_type::eof())
        throw TensorFormatError("trailing bytes after tensor payload");

    tensor.scores.resize(n_scores);
    const auto* p = reinterpret_cast<const unsigned char*>(payload.data());
    for (std::size_t i = 0; i < n_scores; ++i)
        tensor.scores[i] = std::bit_cast<double>(load_u64(p + 8 * i));

    tensor.validate();
    return tensor;
}

ScoreTensor read_tensor(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string() + " for reading");
    return read_tensor(in);
}

}  // namespace rwg
