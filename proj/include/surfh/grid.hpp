#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

namespace surfh {

// Site roles on the unrotated lattice. One unit = one lattice site.
// Convention (fixed, used everywhere):
//   (row+col) odd          -> data qubit site
//   row even, col even     -> X-type syndrome site
//   row odd,  col odd      -> Z-type syndrome site
enum class SiteKind : uint8_t { Data, SyndromeX, SyndromeZ };

enum class StabKind : uint8_t { X, Z };

inline StabKind other(StabKind k) { return k == StabKind::X ? StabKind::Z : StabKind::X; }
inline char to_char(StabKind k) { return k == StabKind::X ? 'X' : 'Z'; }

struct Coord {
    int16_t row = 0;
    int16_t col = 0;

    Coord() = default;
    Coord(int r, int c) : row(static_cast<int16_t>(r)), col(static_cast<int16_t>(c)) {}

    bool operator==(const Coord& o) const { return row == o.row && col == o.col; }
    bool operator!=(const Coord& o) const { return !(*this == o); }
    bool operator<(const Coord& o) const {
        return row != o.row ? row < o.row : col < o.col;
    }

    Coord offset(int dr, int dc) const { return Coord(row + dr, col + dc); }

    std::string str() const {
        return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
    }
};

inline SiteKind site_kind(Coord c) {
    if (((c.row + c.col) & 1) != 0) return SiteKind::Data;
    return (c.row & 1) ? SiteKind::SyndromeZ : SiteKind::SyndromeX;
}

inline bool is_data_site(Coord c) { return site_kind(c) == SiteKind::Data; }

inline StabKind syndrome_kind(Coord c) {
    return (c.row & 1) ? StabKind::Z : StabKind::X;
}

// The four lattice directions, in a fixed order so CnotOrder permutations
// can refer to them by name.
enum class Dir : uint8_t { North, East, South, West };

inline Coord step(Coord c, Dir d) {
    switch (d) {
        case Dir::North: return c.offset(-1, 0);
        case Dir::East: return c.offset(0, 1);
        case Dir::South: return c.offset(1, 0);
        case Dir::West: return c.offset(0, -1);
    }
    std::abort();
}

inline const char* dir_name(Dir d) {
    switch (d) {
        case Dir::North: return "north";
        case Dir::East: return "east";
        case Dir::South: return "south";
        case Dir::West: return "west";
    }
    return "?";
}

inline std::vector<Coord> neighbors4(Coord c) {
    return {c.offset(-1, 0), c.offset(0, 1), c.offset(1, 0), c.offset(0, -1)};
}

struct CoordHash {
    size_t operator()(const Coord& c) const {
        return std::hash<uint32_t>()((static_cast<uint32_t>(static_cast<uint16_t>(c.row)) << 16) |
                                     static_cast<uint16_t>(c.col));
    }
};

}  // namespace surfh
