#include "hyperchess/lattice.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

namespace hyperchess {

Board::Board(int n_, int k_) : n(n_), k(k_) {
    if (n < 1 || k < 1)
        throw InvalidArgumentError("board requires n >= 1 and k >= 1, got n=" +
                                   std::to_string(n) + " k=" + std::to_string(k));
    unsigned __int128 count = 1;
    for (int i = 0; i < k; ++i) {
        count *= static_cast<unsigned __int128>(n);
        if (count > std::numeric_limits<std::uint64_t>::max())
            throw InvalidArgumentError("n^k overflows the ordinal range for n=" +
                                       std::to_string(n) + " k=" + std::to_string(k));
    }
    vertex_count = static_cast<std::uint64_t>(count);
}

namespace lattice {

void check_vertex(const Board& board, const Vertex& v) {
    if (static_cast<int>(v.size()) != board.k)
        throw InvalidArgumentError("vertex has " + std::to_string(v.size()) +
                                   " coordinates, board expects " + std::to_string(board.k));
    for (Coord x : v)
        if (x < 0 || x >= board.n)
            throw InvalidArgumentError("coordinate " + std::to_string(x) +
                                       " outside [0, " + std::to_string(board.n - 1) + "]");
}

Ordinal vertex_index(const Board& board, const Vertex& v) {
    check_vertex(board, v);
    Ordinal index = 0;
    Ordinal stride = 1;
    for (int j = 0; j < board.k; ++j) {
        index += static_cast<Ordinal>(v[j]) * stride;
        stride *= static_cast<Ordinal>(board.n);
    }
    return index;
}

Vertex index_vertex(const Board& board, Ordinal ordinal) {
    if (ordinal >= board.vertex_count)
        throw InvalidArgumentError("ordinal " + std::to_string(ordinal) +
                                   " outside [0, " + std::to_string(board.vertex_count - 1) + "]");
    Vertex v(static_cast<std::size_t>(board.k));
    for (int j = 0; j < board.k; ++j) {
        v[j] = static_cast<Coord>(ordinal % static_cast<Ordinal>(board.n));
        ordinal /= static_cast<Ordinal>(board.n);
    }
    return v;
}

Color color_of(const Board& board, const Vertex& v) {
    check_vertex(board, v);
    long long sum = 0;
    for (Coord x : v) sum += x;
    return (sum % 2 == 0) ? Color::Dark : Color::Light;
}

bool lex_less(const Vertex& a, const Vertex& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Vertex canonicalize(const Board& board, const Vertex& v, SymmetryClass sym) {
    check_vertex(board, v);
    const Coord hi = static_cast<Coord>(board.n - 1);
    auto fold = [hi](Coord x) { return std::min(x, static_cast<Coord>(hi - x)); };

    Vertex out(v);
    switch (sym) {
    case SymmetryClass::Full: {
        for (Coord& x : out) x = fold(x);
        std::sort(out.begin(), out.end());
        break;
    }
    case SymmetryClass::FirstTwoSplit: {
        for (Coord& x : out) x = fold(x);
        auto mid = out.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(2, out.size()));
        std::sort(out.begin(), mid);
        std::sort(mid, out.end());
        break;
    }
    case SymmetryClass::PawnForward: {
        std::vector<Coord> rest;
        rest.reserve(out.size());
        for (std::size_t j = 0; j < out.size(); ++j)
            if (j != 1) rest.push_back(fold(out[j]));
        std::sort(rest.begin(), rest.end());
        std::size_t i = 0;
        for (std::size_t j = 0; j < out.size(); ++j)
            if (j != 1) out[j] = rest[i++];
        break;
    }
    }
    return out;
}

namespace {

// Nondecreasing sequences of the given length over [0, top], in lex order.
void each_nondecreasing(int length, Coord top, const std::function<void(const std::vector<Coord>&)>& fn) {
    std::vector<Coord> buf(static_cast<std::size_t>(length));
    std::function<void(int, Coord)> rec = [&](int pos, Coord lo) {
        if (pos == length) {
            fn(buf);
            return;
        }
        for (Coord x = lo; x <= top; ++x) {
            buf[static_cast<std::size_t>(pos)] = x;
            rec(pos + 1, x);
        }
    };
    rec(0, 0);
}

} // namespace

std::vector<Vertex> canonical_vertices(const Board& board, SymmetryClass sym) {
    const Coord top = static_cast<Coord>((board.n - 1) / 2);
    const int k = board.k;
    std::vector<Vertex> out;

    switch (sym) {
    case SymmetryClass::Full: {
        each_nondecreasing(k, top, [&](const std::vector<Coord>& buf) { out.emplace_back(buf); });
        break;
    }
    case SymmetryClass::FirstTwoSplit: {
        const int head = std::min(k, 2);
        each_nondecreasing(head, top, [&](const std::vector<Coord>& a) {
            each_nondecreasing(k - head, top, [&](const std::vector<Coord>& b) {
                Vertex v(a);
                v.insert(v.end(), b.begin(), b.end());
                out.push_back(std::move(v));
            });
        });
        break;
    }
    case SymmetryClass::PawnForward: {
        if (k == 1) {
            each_nondecreasing(1, top, [&](const std::vector<Coord>& buf) { out.emplace_back(buf); });
            break;
        }
        each_nondecreasing(k - 1, top, [&](const std::vector<Coord>& rest) {
            for (Coord fwd = 0; fwd < static_cast<Coord>(board.n); ++fwd) {
                Vertex v(static_cast<std::size_t>(k));
                v[0] = rest[0];
                v[1] = fwd;
                for (int j = 2; j < k; ++j) v[static_cast<std::size_t>(j)] = rest[static_cast<std::size_t>(j - 1)];
                out.push_back(std::move(v));
            }
        });
        break;
    }
    }

    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::uint64_t canonical_count(int n, int k) {
    if (n < 1 || k < 1)
        throw InvalidArgumentError("canonical_count requires n >= 1 and k >= 1");
    const std::uint64_t f = static_cast<std::uint64_t>((n - 1) / 2);
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= static_cast<std::uint64_t>(k); ++i) {
        result = result * (f + i) / i; // exact: prefix binomials are integers
        if (result > std::numeric_limits<std::uint64_t>::max())
            throw ComputationInfeasibleError("canonical orbit count overflows for n=" +
                                             std::to_string(n) + " k=" + std::to_string(k));
    }
    return static_cast<std::uint64_t>(result);
}

} // namespace lattice
} // namespace hyperchess
