#include "hyperchess/field_io.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <string>

namespace hyperchess {
namespace field_io {

namespace {

constexpr char kMagic[4] = {'H', 'C', 'D', 'F'};
constexpr std::uint8_t kVersion = 1;
constexpr std::uint8_t kUnreachableByte = 0xFF;

void put_u32le(std::ostream& out, std::uint32_t value) {
    for (int i = 0; i < 4; ++i) out.put(static_cast<char>((value >> (8 * i)) & 0xFF));
}

void put_u64le(std::ostream& out, std::uint64_t value) {
    for (int i = 0; i < 8; ++i) out.put(static_cast<char>((value >> (8 * i)) & 0xFF));
}

std::uint8_t get_u8(std::istream& in) {
    const int c = in.get();
    if (c == std::char_traits<char>::eof()) throw DumpFormatError("truncated distance-field dump");
    return static_cast<std::uint8_t>(c);
}

std::uint32_t get_u32le(std::istream& in) {
    std::uint32_t value = 0;
    for (int i = 0; i < 4; ++i) value |= static_cast<std::uint32_t>(get_u8(in)) << (8 * i);
    return value;
}

std::uint64_t get_u64le(std::istream& in) {
    std::uint64_t value = 0;
    for (int i = 0; i < 8; ++i) value |= static_cast<std::uint64_t>(get_u8(in)) << (8 * i);
    return value;
}

} // namespace

void write(const DistanceField& field, std::ostream& out) {
    if (field.board.k > 255)
        throw DumpFormatError("dump format stores k in one byte; k=" + std::to_string(field.board.k));
    for (Dist d : field.values)
        if (d != kUnreachable && d >= 255)
            throw DumpFormatError("finite distance " + std::to_string(d) +
                                  " does not fit the one-byte dump encoding");

    out.write(kMagic, sizeof(kMagic));
    out.put(static_cast<char>(kVersion));
    out.put(static_cast<char>(field.board.k));
    put_u32le(out, static_cast<std::uint32_t>(field.board.n));
    out.put(static_cast<char>(field.piece));
    put_u64le(out, field.source);
    for (Dist d : field.values)
        out.put(static_cast<char>(d == kUnreachable ? kUnreachableByte : d));
    if (!out) throw DumpFormatError("write failed while emitting the distance-field dump");
}

DistanceField read(std::istream& in) {
    char magic[4];
    in.read(magic, sizeof(magic));
    if (!in || std::char_traits<char>::compare(magic, kMagic, 4) != 0)
        throw DumpFormatError("missing HCDF magic bytes");
    const std::uint8_t version = get_u8(in);
    if (version != kVersion)
        throw DumpFormatError("unsupported dump version " + std::to_string(version));
    const std::uint8_t k = get_u8(in);
    const std::uint32_t n = get_u32le(in);
    if (k < 1 || n < 1 || n > static_cast<std::uint32_t>(std::numeric_limits<int>::max()))
        throw DumpFormatError("invalid board dimensions in dump header");
    const std::uint8_t piece_byte = get_u8(in);
    if (piece_byte >= kPieceCount)
        throw DumpFormatError("invalid piece id " + std::to_string(piece_byte) + " in dump header");
    const std::uint64_t source = get_u64le(in);

    Board board(static_cast<int>(n), static_cast<int>(k));
    if (source >= board.vertex_count)
        throw DumpFormatError("source ordinal outside the board in dump header");

    DistanceField field{board, static_cast<Piece>(piece_byte), source, {}};
    field.values.resize(board.vertex_count);
    for (std::uint64_t i = 0; i < board.vertex_count; ++i) {
        const std::uint8_t b = get_u8(in);
        field.values[i] = (b == kUnreachableByte) ? kUnreachable : static_cast<Dist>(b);
    }
    if (in.peek() != std::char_traits<char>::eof())
        throw DumpFormatError("trailing bytes after the distance payload");
    return field;
}

} // namespace field_io
} // namespace hyperchess
