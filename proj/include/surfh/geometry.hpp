#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "surfh/lattice.hpp"

// Canonical distance-7 instance: a 3x3 array of double-defect logical qubits
// on a 93x63 site grid, the center qubit being the one taken through the
// logical-H deformation. Array pitch is 32 rows x 24 columns, the minimum at
// which every inter-defect error chain (static and during the deformation's
// horizontal defect excursion) has weight >= 7. Each defect is a 2x2 block of
// disabled Z-plaquettes, whose minimum encircling Z-loop has weight 8.

namespace surfh::geom {

inline constexpr int kRows = 93;
inline constexpr int kCols = 63;

inline constexpr int kRowPitch = 32;
inline constexpr int kColPitch = 24;
// Upper defect anchor of qubit (0,0); defects are {r, r+2} x {c, c+2} blocks.
inline constexpr int kBaseRow = 5;
inline constexpr int kBaseCol = 7;
inline constexpr int kDefectGap = 16;  // upper anchor row -> lower anchor row

// Center qubit anchors.
inline constexpr int kURow = kBaseRow + kRowPitch;      // 37
inline constexpr int kLRow = kURow + kDefectGap;        // 53
inline constexpr int kQCol = kBaseCol + kColPitch;      // 31

// Moat ring measured out at stage B (one data qubit thick).
inline constexpr int kMoatTop = 27;
inline constexpr int kMoatBottom = 65;
inline constexpr int kMoatLeft = 19;
inline constexpr int kMoatRight = 45;

// Square logical qubit of stage C.
inline constexpr int kSqTop = 40;
inline constexpr int kSqBottom = 52;
inline constexpr int kSqLeft = 25;
inline constexpr int kSqRight = 37;

// Stage F double-defect pair, flanking the shifted square left and right.
inline constexpr int kFDefRowA = 43;  // block rows {43,45}
inline constexpr int kFLeftCol = 23;  // block cols {23,25}
inline constexpr int kFRightCol = 39; // block cols {39,41}

inline std::vector<Coord> defect_block(int row0, int col0) {
    return {Coord(row0, col0), Coord(row0, col0 + 2), Coord(row0 + 2, col0),
            Coord(row0 + 2, col0 + 2)};
}

struct QubitCell {
    std::string name;
    std::vector<Coord> upper;
    std::vector<Coord> lower;
};

inline std::vector<QubitCell> qubit_array() {
    std::vector<QubitCell> cells;
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
            QubitCell q;
            q.name = "q" + std::to_string(i) + std::to_string(j);
            int r = kBaseRow + i * kRowPitch;
            int c = kBaseCol + j * kColPitch;
            q.upper = defect_block(r, c);
            q.lower = defect_block(r + kDefectGap, c);
            cells.push_back(q);
        }
    }
    return cells;
}

inline std::vector<Coord> upper_defect() { return defect_block(kURow, kQCol); }
inline std::vector<Coord> lower_defect() { return defect_block(kLRow, kQCol); }

// Stage A: idle array. Only stabilizers inside the defect blocks are off.
inline LatticeConfig stage_a_config() {
    LatticeConfig cfg = build_bulk(kRows, kCols);
    cfg.label = "A";
    for (const QubitCell& q : qubit_array()) {
        for (Coord s : q.upper) {
            cfg.stabilizers[s].active = false;
            cfg.stabilizers[s].support.clear();
        }
        for (Coord s : q.lower) {
            cfg.stabilizers[s].active = false;
            cfg.stabilizers[s].support.clear();
        }
        cfg.defects.push_back(Defect{StabKind::Z, q.upper, q.name + "U"});
        cfg.defects.push_back(Defect{StabKind::Z, q.lower, q.name + "L"});
    }
    return cfg;
}

inline std::vector<Coord> moat_data() {
    std::vector<Coord> out;
    for (int c = kMoatLeft + 1; c < kMoatRight; c++) {
        if (is_data_site(Coord(kMoatTop, c))) out.push_back(Coord(kMoatTop, c));
    }
    for (int c = kMoatLeft + 1; c < kMoatRight; c++) {
        if (is_data_site(Coord(kMoatBottom, c))) out.push_back(Coord(kMoatBottom, c));
    }
    for (int r = kMoatTop + 1; r < kMoatBottom; r++) {
        if (is_data_site(Coord(r, kMoatLeft))) out.push_back(Coord(r, kMoatLeft));
        if (is_data_site(Coord(r, kMoatRight))) out.push_back(Coord(r, kMoatRight));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool in_island(Coord q) {
    return q.row > kMoatTop && q.row < kMoatBottom && q.col > kMoatLeft && q.col < kMoatRight;
}

inline bool in_square(Coord q) {
    return q.row >= kSqTop && q.row <= kSqBottom && q.col >= kSqLeft && q.col <= kSqRight;
}

inline bool in_shifted_square(Coord q) {
    return q.row >= kSqTop - 1 && q.row <= kSqBottom - 1 && q.col >= kSqLeft - 1 &&
           q.col <= kSqRight - 1;
}

inline std::vector<Coord> island_data(const LatticeConfig& ref) {
    std::vector<Coord> out;
    for (Coord q : ref.live_data)
        if (in_island(q)) out.push_back(q);
    return out;
}

inline std::vector<Coord> square_data() {
    std::vector<Coord> out;
    for (int r = kSqTop; r <= kSqBottom; r++)
        for (int c = kSqLeft; c <= kSqRight; c++)
            if (is_data_site(Coord(r, c))) out.push_back(Coord(r, c));
    return out;
}

// Data measured in X at stage C: the rows directly above and below the
// square's smooth edges.
inline std::vector<Coord> x_strip_data() {
    std::vector<Coord> out;
    for (int c = kSqLeft + 1; c <= kSqRight - 1; c++) {
        if (is_data_site(Coord(kSqTop - 1, c))) out.push_back(Coord(kSqTop - 1, c));
        if (is_data_site(Coord(kSqBottom + 1, c))) out.push_back(Coord(kSqBottom + 1, c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Coord> f_left_defect() { return defect_block(kFDefRowA, kFLeftCol); }
inline std::vector<Coord> f_right_defect() { return defect_block(kFDefRowA, kFRightCol); }

// Expansion / contraction plaquette lists for the move back to the original
// defect positions. Directions: the left defect travels up then east, the
// right defect down then west.
inline std::vector<Coord> g_expand_left() {
    std::vector<Coord> out;
    for (int r = kURow; r < kFDefRowA; r += 2)
        for (int c = kFLeftCol; c <= kFLeftCol + 2; c += 2) out.push_back(Coord(r, c));
    return out;  // rows 37,39,41 x cols 23,25
}
inline std::vector<Coord> g_expand_right() {
    std::vector<Coord> out;
    for (int r = kFDefRowA + 4; r <= kLRow + 2; r += 2)
        for (int c = kFRightCol; c <= kFRightCol + 2; c += 2) out.push_back(Coord(r, c));
    return out;  // rows 47..55 x cols 39,41
}
inline std::vector<Coord> h_contract_left() {
    std::vector<Coord> out;
    for (int r = kURow + 4; r <= kFDefRowA + 2; r += 2)
        for (int c = kFLeftCol; c <= kFLeftCol + 2; c += 2) out.push_back(Coord(r, c));
    return out;  // rows 41,43,45 x cols 23,25 -> left defect now {37,39}x{23,25}
}
inline std::vector<Coord> h_contract_right() {
    std::vector<Coord> out;
    for (int r = kFDefRowA; r <= kLRow - 2; r += 2)
        for (int c = kFRightCol; c <= kFRightCol + 2; c += 2) out.push_back(Coord(r, c));
    return out;  // rows 43..51 x cols 39,41 -> right defect now {53,55}x{39,41}
}
inline std::vector<Coord> i_expand_left() {
    std::vector<Coord> out;
    for (int r = kURow; r <= kURow + 2; r += 2)
        for (int c = kFLeftCol + 4; c <= kQCol + 2; c += 2) out.push_back(Coord(r, c));
    return out;  // rows 37,39 x cols 27..33 (includes the original location)
}
inline std::vector<Coord> i_expand_right() {
    std::vector<Coord> out;
    for (int r = kLRow; r <= kLRow + 2; r += 2)
        for (int c = kQCol; c <= kFRightCol - 2; c += 2) out.push_back(Coord(r, c));
    return out;  // rows 53,55 x cols 31..37
}
inline std::vector<Coord> j_contract_left() {
    std::vector<Coord> out;
    for (int r = kURow; r <= kURow + 2; r += 2)
        for (int c = kFLeftCol; c <= kQCol - 2; c += 2) out.push_back(Coord(r, c));
    return out;  // rows 37,39 x cols 23..29 -> left defect back to {37,39}x{31,33}
}
inline std::vector<Coord> j_contract_right() {
    std::vector<Coord> out;
    for (int r = kLRow; r <= kLRow + 2; r += 2)
        for (int c = kQCol + 4; c <= kFRightCol + 2; c += 2) out.push_back(Coord(r, c));
    return out;  // rows 53,55 x cols 35..41 -> right defect back to {53,55}x{31,33}
}

// Logical operator representatives at stage A.
// The connecting chain: X on the column of data qubits between the two
// center defects (weight 7, realizing the code distance).
inline std::vector<Coord> chain_rep() {
    std::vector<Coord> out;
    for (int r = kSqTop; r <= kSqBottom; r += 2) out.push_back(Coord(r, kQCol));
    return out;
}

// The encircling loop: Z on the weight-8 ring of data qubits around the
// upper defect.
inline std::vector<Coord> loop_rep() {
    int r0 = kURow, c0 = kQCol;
    return {Coord(r0 - 1, c0),     Coord(r0 - 1, c0 + 2), Coord(r0 + 3, c0),
            Coord(r0 + 3, c0 + 2), Coord(r0, c0 - 1),     Coord(r0 + 2, c0 - 1),
            Coord(r0, c0 + 3),     Coord(r0 + 2, c0 + 3)};
}

// Swap pairs for stage E: every square data qubit moves one site up and one
// site left, lowered by the compiler into two hops through the idle ancilla
// to the north (so no swap ever couples two data qubits).
inline std::vector<std::pair<Coord, Coord>> swap_pairs() {
    std::vector<std::pair<Coord, Coord>> out;
    for (Coord q : square_data()) out.emplace_back(q, q.offset(-1, -1));
    return out;
}

}  // namespace surfh::geom
