#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

#include "surfh/lattice.hpp"

namespace surfh {

// Plain-text config asset format. One header line
//   config <label> <rows> <cols>
// then one line per site in row-major order:
//   <row> <col> D                     live data qubit
//   <row> <col> .                     vacant / dead site
//   <row> <col> <X|Z> [r c ...] <active|off>
// Emitter output is byte-identical under parse+emit.

inline std::string emit_config(const LatticeConfig& cfg) {
    std::ostringstream os;
    os << "config " << cfg.label << " " << cfg.rows << " " << cfg.cols << "\n";
    for (int r = 0; r < cfg.rows; r++) {
        for (int c = 0; c < cfg.cols; c++) {
            Coord site(r, c);
            os << r << " " << c << " ";
            if (is_data_site(site)) {
                os << (cfg.data_live(site) ? "D" : ".");
            } else {
                const Stabilizer* s = cfg.find(site);
                if (!s) {
                    os << ".";
                } else {
                    os << to_char(s->kind);
                    for (Coord q : s->support) os << " " << q.row << " " << q.col;
                    os << (s->active ? " active" : " off");
                }
            }
            os << "\n";
        }
    }
    return os.str();
}

inline LatticeConfig parse_config(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("config parse: empty input");
    {
        std::istringstream h(line);
        std::string tag;
        LatticeConfig cfg;
        h >> tag;
        if (tag != "config") throw std::runtime_error("config parse: bad header '" + line + "'");
        h >> cfg.label >> cfg.rows >> cfg.cols;
        if (!h || cfg.rows <= 0 || cfg.cols <= 0)
            throw std::runtime_error("config parse: bad header dimensions '" + line + "'");

        int lineno = 1;
        while (std::getline(is, line)) {
            lineno++;
            if (line.empty()) continue;
            std::istringstream ls(line);
            int r, c;
            std::string tok;
            if (!(ls >> r >> c >> tok))
                throw std::runtime_error("config parse: line " + std::to_string(lineno) +
                                         ": expected '<row> <col> <kind>'");
            Coord site(r, c);
            if (!cfg.in_bounds(site))
                throw std::runtime_error("config parse: line " + std::to_string(lineno) +
                                         ": site out of bounds");
            if (tok == "D") {
                if (!is_data_site(site))
                    throw std::runtime_error("config parse: line " + std::to_string(lineno) +
                                             ": D at syndrome-parity site");
                cfg.live_data.insert(site);
            } else if (tok == ".") {
                // vacant; nothing stored
            } else if (tok == "X" || tok == "Z") {
                Stabilizer s;
                s.site = site;
                s.kind = tok == "X" ? StabKind::X : StabKind::Z;
                std::vector<std::string> rest;
                std::string w;
                while (ls >> w) rest.push_back(w);
                if (rest.empty())
                    throw std::runtime_error("config parse: line " + std::to_string(lineno) +
                                             ": missing active/off");
                std::string state = rest.back();
                rest.pop_back();
                if (state != "active" && state != "off")
                    throw std::runtime_error("config parse: line " + std::to_string(lineno) +
                                             ": bad state token '" + state + "'");
                s.active = state == "active";
                if (rest.size() % 2 != 0)
                    throw std::runtime_error("config parse: line " + std::to_string(lineno) +
                                             ": odd support coordinate count");
                for (size_t i = 0; i + 1 < rest.size(); i += 2)
                    s.support.push_back(Coord(std::stoi(rest[i]), std::stoi(rest[i + 1])));
                cfg.stabilizers[site] = s;
            } else {
                throw std::runtime_error("config parse: line " + std::to_string(lineno) +
                                         ": unknown site token '" + tok + "'");
            }
        }
        return cfg;
    }
}

}  // namespace surfh
