#include "pls/bits.hpp"

#include "pls/errors.hpp"

#include <cassert>

namespace pls {

BitString BitString::parse(const std::string& s) {
    BitString out;
    for (char c : s) {
        if (c == '0') out.append_bit(false);
        else if (c == '1') out.append_bit(true);
        else throw ParseError("bit string may contain only 0/1: " + s);
    }
    return out;
}

void BitString::append(const BitString& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

void BitString::append_uint(std::uint64_t value, int width) {
    assert(width >= 0 && width <= 64);
    assert(width == 64 || value < (std::uint64_t{1} << width));
    for (int i = width - 1; i >= 0; --i)
        bits_.push_back((value >> i) & 1u);
}

void BitString::append_int(std::int64_t value, int width) {
    assert(width >= 1 && width <= 64);
    // value must fit: -2^(w-1) <= value < 2^(w-1)
    if (width < 64) {
        assert(value >= -(std::int64_t{1} << (width - 1)) &&
               value < (std::int64_t{1} << (width - 1)));
    }
    append_uint(static_cast<std::uint64_t>(value) & (width == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1)), width);
}

std::string BitString::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (bool b : bits_) s.push_back(b ? '1' : '0');
    return s;
}

std::string BitString::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (std::size_t i = 0; i < bits_.size(); i += 4) {
        unsigned nibble = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            nibble <<= 1;
            if (i + j < bits_.size() && bits_[i + j]) nibble |= 1;
        }
        s.push_back(digits[nibble]);
    }
    return s;
}

std::uint64_t BitString::lsb_value() const {
    assert(bits_.size() <= 64);
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) v |= std::uint64_t{1} << i;
    return v;
}

BitString BitString::prefix(std::size_t n) const {
    BitString out;
    for (std::size_t i = 0; i < n && i < bits_.size(); ++i) out.append_bit(bits_[i]);
    return out;
}

std::optional<bool> BitReader::read_bit() {
    if (pos_ >= s_->size()) return std::nullopt;
    return s_->bit(pos_++);
}

std::optional<std::uint64_t> BitReader::read_uint(int width) {
    if (width < 0 || width > 64) return std::nullopt;
    if (remaining() < static_cast<std::size_t>(width)) return std::nullopt;
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) {
        v <<= 1;
        if (s_->bit(pos_++)) v |= 1u;
    }
    return v;
}

std::optional<std::int64_t> BitReader::read_int(int width) {
    auto raw = read_uint(width);
    if (!raw) return std::nullopt;
    if (width == 0) return 0;
    std::uint64_t v = *raw;
    if (width < 64 && (v >> (width - 1)) & 1u)
        v |= ~((std::uint64_t{1} << width) - 1); // sign extend
    return static_cast<std::int64_t>(v);
}

std::optional<BitString> BitReader::read_bits(std::size_t n) {
    if (remaining() < n) return std::nullopt;
    BitString out;
    for (std::size_t i = 0; i < n; ++i) out.append_bit(s_->bit(pos_++));
    return out;
}

std::optional<BitString> BitReader::read_field() {
    auto len = read_uint(kFieldHeaderBits);
    if (!len) return std::nullopt;
    return read_bits(static_cast<std::size_t>(*len));
}

void append_field(BitString& out, const BitString& payload) {
    if (payload.size() >= (std::size_t{1} << kFieldHeaderBits))
        throw InvalidParams("field payload exceeds 16-bit length header");
    out.append_uint(payload.size(), kFieldHeaderBits);
    out.append(payload);
}

int bit_width(std::uint64_t x) {
    int w = 0;
    while (x) {
        ++w;
        x >>= 1;
    }
    return w;
}

} // namespace pls
