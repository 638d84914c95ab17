#include <cstdint>
#include <cstring>
#include <fstream>

#include "spanlab/errors.hpp"
#include "spanlab/labeler.hpp"

namespace spanlab {

namespace {

constexpr char kMagic[4] = {'S', 'L', 'B', 'P'};
constexpr std::uint32_t kFormatVersion = 1;

// Serialized little-endian regardless of host order.
void put_u32(std::ostream& out, std::uint32_t x) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>((x >> (8 * i)) & 0xff);
    out.write(reinterpret_cast<const char*>(b), 4);
}

void put_u64(std::ostream& out, std::uint64_t x) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((x >> (8 * i)) & 0xff);
    out.write(reinterpret_cast<const char*>(b), 8);
}

void put_f64(std::ostream& out, double x) {
    std::uint64_t bits;
    std::memcpy(&bits, &x, 8);
    put_u64(out, bits);
}

void put_str(std::ostream& out, const std::string& s) {
    put_u32(out, static_cast<std::uint32_t>(s.size()));
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::uint32_t get_u32(std::istream& in, const std::string& what) {
    unsigned char b[4];
    if (!in.read(reinterpret_cast<char*>(b), 4))
        throw parse_error("corrupt model file: truncated reading " + what);
    std::uint32_t x = 0;
    for (int i = 0; i < 4; ++i) x |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return x;
}

std::uint64_t get_u64(std::istream& in, const std::string& what) {
    unsigned char b[8];
    if (!in.read(reinterpret_cast<char*>(b), 8))
        throw parse_error("corrupt model file: truncated reading " + what);
    std::uint64_t x = 0;
    for (int i = 0; i < 8; ++i) x |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return x;
}

double get_f64(std::istream& in, const std::string& what) {
    std::uint64_t bits = get_u64(in, what);
    double x;
    std::memcpy(&x, &bits, 8);
    return x;
}

std::string get_str(std::istream& in, const std::string& what) {
    std::uint32_t n = get_u32(in, what);
    if (n > (1u << 24)) throw parse_error("corrupt model file: oversized string in " + what);
    std::string s(n, '\0');
    if (n && !in.read(s.data(), n))
        throw parse_error("corrupt model file: truncated reading " + what);
    return s;
}

}  // namespace

void save_params(const LabelerParams& p, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open for writing: " + path);
    out.write(kMagic, 4);
    put_u32(out, kFormatVersion);
    put_u32(out, p.config.kind == EncoderKind::EmbedBiRecurrent ? 0u : 1u);
    put_u32(out, static_cast<std::uint32_t>(p.config.vocab_size));
    put_u32(out, static_cast<std::uint32_t>(p.config.embed_dim));
    put_u32(out, static_cast<std::uint32_t>(p.config.hidden_dim));
    put_u32(out, static_cast<std::uint32_t>(p.config.attention_heads));
    put_f64(out, p.config.dropout_rate);
    put_u64(out, p.config.seed);
    put_u32(out, static_cast<std::uint32_t>(p.vocab.size()));
    for (const auto& w : p.vocab) put_str(out, w);
    put_u32(out, static_cast<std::uint32_t>(p.tensors.size()));
    for (const auto& [name, t] : p.tensors) {
        put_str(out, name);
        put_u32(out, static_cast<std::uint32_t>(t.rows));
        put_u32(out, static_cast<std::uint32_t>(t.cols));
        for (double x : t.v) put_f64(out, x);
    }
    if (!out) throw io_error("write failed: " + path);
}

LabelerParams load_params(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open model file: " + path);
    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0)
        throw parse_error("not a model file (bad magic): " + path);
    std::uint32_t version = get_u32(in, "version");
    if (version != kFormatVersion)
        throw parse_error("unsupported model format version " + std::to_string(version));

    LabelerParams p;
    p.version = version;
    std::uint32_t kind = get_u32(in, "encoder kind");
    if (kind > 1) throw parse_error("corrupt model file: unknown encoder kind");
    p.config.kind = kind == 0 ? EncoderKind::EmbedBiRecurrent : EncoderKind::EmbedSelfAttention;
    p.config.vocab_size = static_cast<int>(get_u32(in, "vocab_size"));
    p.config.embed_dim = static_cast<int>(get_u32(in, "embed_dim"));
    p.config.hidden_dim = static_cast<int>(get_u32(in, "hidden_dim"));
    p.config.attention_heads = static_cast<int>(get_u32(in, "attention_heads"));
    p.config.dropout_rate = get_f64(in, "dropout_rate");
    p.config.seed = get_u64(in, "seed");
    p.config.validate();

    std::uint32_t vn = get_u32(in, "vocab count");
    if (static_cast<int>(vn) != p.config.vocab_size)
        throw parse_error("corrupt model file: vocab count mismatch");
    p.vocab.reserve(vn);
    for (std::uint32_t i = 0; i < vn; ++i) p.vocab.push_back(get_str(in, "vocab entry"));

    std::uint32_t tn = get_u32(in, "tensor count");
    for (std::uint32_t i = 0; i < tn; ++i) {
        std::string name = get_str(in, "tensor name");
        int rows = static_cast<int>(get_u32(in, "tensor rows"));
        int cols = static_cast<int>(get_u32(in, "tensor cols"));
        if (rows < 0 || cols < 0 ||
            static_cast<std::uint64_t>(rows) * static_cast<std::uint64_t>(cols) > (1ull << 30))
            throw parse_error("corrupt model file: bad shape for tensor " + name);
        Tensor t = Tensor::zeros(rows, cols);
        for (auto& x : t.v) x = get_f64(in, "tensor " + name);
        p.tensors.emplace(std::move(name), std::move(t));
    }

    // Validate the parameter set against the config.
    LabelerParams ref = init_params(p.config, p.vocab);
    for (const auto& [name, t] : ref.tensors) {
        auto it = p.tensors.find(name);
        if (it == p.tensors.end())
            throw parse_error("model file missing tensor " + name);
        if (it->second.rows != t.rows || it->second.cols != t.cols)
            throw parse_error("shape mismatch for tensor " + name + ": expected " +
                              std::to_string(t.rows) + "x" + std::to_string(t.cols) +
                              ", got " + std::to_string(it->second.rows) + "x" +
                              std::to_string(it->second.cols));
    }
    return p;
}

}  // namespace spanlab
