#ifndef PLS_BITS_HPP
#define PLS_BITS_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pls {

/// A bit string: the unit labels and messages are made of. Comparison is
/// bit-exact (length and content), so distinct-message counting and pattern
/// equality work with ordinary containers.
class BitString {
public:
    BitString() = default;

    static BitString zeros(std::size_t n) { return BitString(std::vector<bool>(n, false)); }

    // Parses a string of '0'/'1' characters; anything else is rejected.
    static BitString parse(const std::string& s);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    bool bit(std::size_t i) const { return bits_[i]; }

    void append_bit(bool b) { bits_.push_back(b); }
    void append(const BitString& other);
    // MSB-first fixed-width unsigned append; value must fit in `width` bits.
    void append_uint(std::uint64_t value, int width);
    // Fixed-width two's-complement append; value must fit in `width` bits.
    void append_int(std::int64_t value, int width);

    std::string to_string() const;
    std::string to_hex() const; // nibbles of the bit stream, MSB-first, plus bit length

    // Unsigned value of the whole string read as sum of bit_i * 2^i
    // (bit 0 is the first bit). Requires size() <= 64.
    std::uint64_t lsb_value() const;

    BitString prefix(std::size_t n) const;

    bool operator==(const BitString&) const = default;
    auto operator<=>(const BitString&) const = default;

private:
    explicit BitString(std::vector<bool> v) : bits_(std::move(v)) {}
    std::vector<bool> bits_;
};

/// Sequential reader over a BitString. Every read returns nullopt once the
/// string is exhausted; decoders use this to treat truncated or oversized
/// labels/messages as malformed.
class BitReader {
public:
    explicit BitReader(const BitString& s) : s_(&s) {}

    std::optional<bool> read_bit();
    std::optional<std::uint64_t> read_uint(int width);     // MSB-first
    std::optional<std::int64_t> read_int(int width);       // two's complement
    std::optional<BitString> read_bits(std::size_t n);
    // 16-bit length header followed by that many payload bits.
    std::optional<BitString> read_field();

    std::size_t remaining() const { return s_->size() - pos_; }
    bool done() const { return pos_ == s_->size(); }

private:
    const BitString* s_;
    std::size_t pos_ = 0;
};

// Width of the 16-bit length header used for variable-length fields.
inline constexpr int kFieldHeaderBits = 16;

// Appends a length-prefixed field (16-bit bit-count header, then payload).
void append_field(BitString& out, const BitString& payload);

// Bits needed to represent values 0..x (0 for x == 0).
int bit_width(std::uint64_t x);

} // namespace pls

#endif // PLS_BITS_HPP
