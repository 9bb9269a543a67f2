#include "axadd/image.hpp"

#include <cctype>
#include <fstream>

namespace axadd {
namespace {

/// Whitespace/comment-aware PNM header tokenizer.
class HeaderReader {
public:
    explicit HeaderReader(std::span<const uint8_t> bytes) : bytes_(bytes) {}

    std::string token() {
        skip();
        std::string t;
        while (pos_ < bytes_.size() && !std::isspace(bytes_[pos_])) t.push_back(static_cast<char>(bytes_[pos_++]));
        if (t.empty()) throw PgmError("malformed PGM header: unexpected end of data");
        return t;
    }

    unsigned number(const char* what) {
        std::string t = token();
        unsigned v = 0;
        for (char c : t) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw PgmError(std::string("malformed PGM header: bad ") + what + " '" + t + "'");
            v = v * 10 + static_cast<unsigned>(c - '0');
            if (v > 1u << 20) throw PgmError(std::string("malformed PGM header: ") + what + " too large");
        }
        return v;
    }

    // exactly one whitespace byte separates the header from a P5 payload
    size_t payload_offset() {
        if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_]))
            throw PgmError("malformed PGM header: missing separator before payload");
        return pos_ + 1;
    }

    size_t pos() const { return pos_; }

private:
    void skip() {
        while (pos_ < bytes_.size()) {
            if (std::isspace(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::span<const uint8_t> bytes_;
    size_t pos_ = 0;
};

} // namespace

GrayImage load_pgm(std::span<const uint8_t> bytes) {
    HeaderReader hdr(bytes);
    std::string magic = hdr.token();
    if (magic != "P5" && magic != "P2")
        throw PgmError("malformed PGM header: magic '" + magic + "' (want P5 or P2)");
    unsigned width = hdr.number("width");
    unsigned height = hdr.number("height");
    unsigned maxval = hdr.number("maxval");
    if (width == 0 || height == 0) throw PgmError("malformed PGM header: zero dimension");
    if (maxval != 255)
        throw PgmError("unsupported PGM depth: maxval " + std::to_string(maxval) + " (want 255)");

    GrayImage img(width, height);
    const size_t count = img.pixels.size();
    if (magic == "P5") {
        size_t off = hdr.payload_offset();
        if (bytes.size() - off < count)
            throw PgmError("truncated PGM payload: have " + std::to_string(bytes.size() - off) +
                           " bytes, need " + std::to_string(count));
        std::copy_n(bytes.begin() + static_cast<ptrdiff_t>(off), count, img.pixels.begin());
    } else {
        for (size_t i = 0; i < count; ++i) {
            unsigned v;
            try {
                v = hdr.number("sample");
            } catch (const PgmError&) {
                throw PgmError("truncated PGM payload: " + std::to_string(i) + " of " +
                               std::to_string(count) + " samples");
            }
            if (v > 255) throw PgmError("PGM sample " + std::to_string(v) + " exceeds maxval");
            img.pixels[i] = static_cast<uint8_t>(v);
        }
    }
    return img;
}

std::vector<uint8_t> save_pgm(const GrayImage& img) {
    std::string header = "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) +
                         "\n255\n";
    std::vector<uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), img.pixels.begin(), img.pixels.end());
    return out;
}

GrayImage load_pgm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PgmError("cannot open image file: " + path);
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    return load_pgm(bytes);
}

void save_pgm_file(const GrayImage& img, const std::string& path) {
    std::vector<uint8_t> bytes = save_pgm(img);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw PgmError("cannot write image file: " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw PgmError("short write on image file: " + path);
}

} // namespace axadd
