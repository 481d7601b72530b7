#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "surfh/grid.hpp"

namespace surfh {

struct Stabilizer {
    Coord site;
    StabKind kind = StabKind::Z;
    std::vector<Coord> support;  // sorted, size 1..4
    bool active = false;

    bool has(Coord q) const {
        return std::binary_search(support.begin(), support.end(), q);
    }
    int weight() const { return static_cast<int>(support.size()); }
};

struct Defect {
    StabKind disabled;        // smooth defects disable Z-stabilizers, rough disable X
    std::vector<Coord> region;  // syndrome sites whose stabilizers are off
    std::string name;

    bool smooth() const { return disabled == StabKind::Z; }
};

// Snapshot of the lattice at one protocol stage: which stabilizers are
// measured with what support, which data qubits are live, where the
// defects sit.
struct LatticeConfig {
    int rows = 0;
    int cols = 0;
    std::string label;
    std::map<Coord, Stabilizer> stabilizers;  // keyed by syndrome site; present = known site
    std::set<Coord> live_data;
    std::vector<Defect> defects;

    bool in_bounds(Coord c) const {
        return c.row >= 0 && c.row < rows && c.col >= 0 && c.col < cols;
    }

    const Stabilizer* find(Coord site) const {
        auto it = stabilizers.find(site);
        return it == stabilizers.end() ? nullptr : &it->second;
    }

    bool active_at(Coord site) const {
        const Stabilizer* s = find(site);
        return s && s->active;
    }

    bool data_live(Coord q) const { return live_data.count(q) != 0; }

    std::vector<const Stabilizer*> active_stabilizers() const {
        std::vector<const Stabilizer*> out;
        for (const auto& [site, s] : stabilizers)
            if (s.active) out.push_back(&s);
        return out;
    }

    int active_count(StabKind k) const {
        int n = 0;
        for (const auto& [site, s] : stabilizers)
            if (s.active && s.kind == k) n++;
        return n;
    }

    // Adjacent active stabilizers of one kind for a data qubit. At most two
    // on this lattice: X-stabs sit east/west or north/south of a data site
    // depending on its parity class, Z-stabs the other way.
    std::vector<Coord> adjacent_active(Coord q, StabKind k) const {
        std::vector<Coord> out;
        for (Coord n : neighbors4(q)) {
            if (!in_bounds(n) || is_data_site(n)) continue;
            if (syndrome_kind(n) != k) continue;
            if (active_at(n)) out.push_back(n);
        }
        return out;
    }
};

struct Violation {
    std::string rule;
    std::string detail;
};

// Checks every LatticeConfig invariant: bounds, parity of sites, support
// shape, support liveness, and pairwise commutation of opposite-kind
// stabilizers. Total function; transcription errors in stage assets are
// caught here.
inline std::vector<Violation> validate(const LatticeConfig& cfg) {
    std::vector<Violation> out;
    for (Coord q : cfg.live_data) {
        if (!cfg.in_bounds(q))
            out.push_back({"bounds", "live data " + q.str() + " out of bounds"});
        if (!is_data_site(q))
            out.push_back({"parity", "live data " + q.str() + " is not a data-parity site"});
    }
    for (const auto& [site, s] : cfg.stabilizers) {
        if (site != s.site)
            out.push_back({"key", "stabilizer keyed at " + site.str() + " has site " + s.site.str()});
        if (!cfg.in_bounds(site)) {
            out.push_back({"bounds", "stabilizer site " + site.str() + " out of bounds"});
            continue;
        }
        if (is_data_site(site)) {
            out.push_back({"parity", "stabilizer at data-parity site " + site.str()});
            continue;
        }
        if (!s.active) continue;
        if (s.support.empty() || s.support.size() > 4)
            out.push_back({"weight", "stabilizer " + site.str() + " has weight " +
                                         std::to_string(s.support.size())});
        if (!std::is_sorted(s.support.begin(), s.support.end()))
            out.push_back({"order", "support of " + site.str() + " not sorted"});
        for (Coord q : s.support) {
            int dr = std::abs(q.row - site.row), dc = std::abs(q.col - site.col);
            if (dr + dc != 1)
                out.push_back({"adjacency", "stabilizer " + site.str() + " has distant support " + q.str()});
            if (!is_data_site(q))
                out.push_back({"parity", "stabilizer " + site.str() + " support " + q.str() +
                                             " is not a data site"});
            if (!cfg.data_live(q))
                out.push_back({"liveness", "stabilizer " + site.str() + " supported on dead qubit " + q.str()});
        }
    }
    // Commutation: opposite-kind active pairs must overlap on an even number
    // of data qubits. Neighboring stabilizer sites are two steps apart, so it
    // is enough to check pairs whose sites are within distance 2.
    for (const auto& [site, s] : cfg.stabilizers) {
        if (!s.active) continue;
        for (int dr = -2; dr <= 2; dr++) {
            for (int dc = -2; dc <= 2; dc++) {
                if (dr == 0 && dc == 0) continue;
                Coord o = site.offset(dr, dc);
                if (o < site) continue;  // each unordered pair once
                const Stabilizer* t = cfg.find(o);
                if (!t || !t->active || t->kind == s.kind) continue;
                int overlap = 0;
                for (Coord q : s.support)
                    if (t->has(q)) overlap++;
                if (overlap & 1)
                    out.push_back({"commutation", "stabilizers " + site.str() + " and " + o.str() +
                                                      " overlap on " + std::to_string(overlap) +
                                                      " qubits"});
            }
        }
    }
    return out;
}

// One step of code deformation. Measurement and initialization entries list
// data qubits; their effect on stabilizer supports is derived, not spelled
// out by hand: a stabilizer sharing a measured qubit of its own basis is
// reduced in weight, one sharing a measured qubit of the other basis is
// destroyed, and re-enabled or weight-restored stabilizers pick up every
// live qubit adjacent to their site.
struct ConfigDelta {
    std::vector<Coord> measure_z;        // data measured in Z (removed from live set)
    std::vector<Coord> measure_x;        // data measured in X
    std::vector<Coord> init_zero;        // data re-initialized to |0>
    std::vector<Coord> disable;          // syndrome sites forced off
    std::vector<Coord> enable;           // syndrome sites (re)enabled at full available support
    std::string relabel;                 // label for the resulting config
};

inline Stabilizer make_full_stabilizer(const LatticeConfig& cfg, Coord site) {
    Stabilizer s;
    s.site = site;
    s.kind = syndrome_kind(site);
    for (Coord q : neighbors4(site))
        if (cfg.in_bounds(q) && cfg.data_live(q)) s.support.push_back(q);
    std::sort(s.support.begin(), s.support.end());
    s.active = !s.support.empty();
    return s;
}

// Pure: returns a new config, input untouched. Rejects deltas that would
// re-enable a stabilizer over dead qubits or break commutation, naming the
// offender.
inline LatticeConfig apply_delta(const LatticeConfig& cfg, const ConfigDelta& delta) {
    LatticeConfig out = cfg;
    if (!delta.relabel.empty()) out.label = delta.relabel;

    auto require_data = [&](Coord q, const char* what) {
        if (!out.in_bounds(q) || !is_data_site(q))
            throw std::runtime_error(std::string(what) + " at non-data site " + q.str());
    };

    std::set<Coord> measured;
    for (Coord q : delta.measure_z) {
        require_data(q, "measure_z");
        if (!out.data_live(q))
            throw std::runtime_error("measure_z of dead qubit " + q.str());
        measured.insert(q);
        out.live_data.erase(q);
    }
    for (Coord q : delta.measure_x) {
        require_data(q, "measure_x");
        if (!out.data_live(q))
            throw std::runtime_error("measure_x of dead qubit " + q.str());
        if (measured.count(q)) throw std::runtime_error("qubit measured twice: " + q.str());
        measured.insert(q);
        out.live_data.erase(q);
    }

    std::set<Coord> mz_set(delta.measure_z.begin(), delta.measure_z.end());
    std::set<Coord> mx_set(delta.measure_x.begin(), delta.measure_x.end());

    // Shrink or kill stabilizers touching measured qubits.
    for (auto& [site, s] : out.stabilizers) {
        if (!s.active) continue;
        bool killed = false;
        std::vector<Coord> kept;
        for (Coord q : s.support) {
            bool mz = mz_set.count(q) != 0;
            bool mx = mx_set.count(q) != 0;
            if (!mz && !mx) {
                kept.push_back(q);
                continue;
            }
            bool basis_match = (mz && s.kind == StabKind::Z) || (mx && s.kind == StabKind::X);
            if (!basis_match) killed = true;  // anticommutes with the data measurement
        }
        if (killed || kept.empty()) {
            s.active = false;
            s.support.clear();
        } else {
            s.support = std::move(kept);
        }
    }

    for (Coord q : delta.init_zero) {
        require_data(q, "init_zero");
        if (out.data_live(q)) throw std::runtime_error("init of live qubit " + q.str());
        out.live_data.insert(q);
    }

    for (Coord site : delta.disable) {
        auto it = out.stabilizers.find(site);
        if (it == out.stabilizers.end())
            throw std::runtime_error("disable of unknown stabilizer site " + site.str());
        it->second.active = false;
        it->second.support.clear();
    }

    for (Coord site : delta.enable) {
        if (!out.in_bounds(site) || is_data_site(site))
            throw std::runtime_error("enable at non-syndrome site " + site.str());
        Stabilizer s = make_full_stabilizer(out, site);
        if (s.support.empty())
            throw std::runtime_error("enable of stabilizer " + site.str() + " with no live support");
        out.stabilizers[site] = s;
    }

    auto viol = validate(out);
    if (!viol.empty())
        throw std::runtime_error("apply_delta produced invalid config (" + out.label +
                                 "): " + viol.front().rule + ": " + viol.front().detail);
    return out;
}

// Regular bulk pattern: every syndrome site active with all in-bounds data
// neighbors, every data site live. Rejects lattices too small to hold a
// full-weight plaquette.
inline LatticeConfig build_bulk(int rows, int cols) {
    if (rows < 3 || cols < 3)
        throw std::runtime_error("build_bulk: lattice " + std::to_string(rows) + "x" +
                                 std::to_string(cols) + " too small, need at least 3x3");
    if (rows % 2 == 0 || cols % 2 == 0)
        throw std::runtime_error("build_bulk: dimensions must be odd so the boundary closes on "
                                 "syndrome rows/columns of one type");
    LatticeConfig cfg;
    cfg.rows = rows;
    cfg.cols = cols;
    cfg.label = "bulk";
    for (int r = 0; r < rows; r++)
        for (int c = 0; c < cols; c++)
            if (is_data_site(Coord(r, c))) cfg.live_data.insert(Coord(r, c));
    for (int r = 0; r < rows; r++)
        for (int c = 0; c < cols; c++) {
            Coord site(r, c);
            if (is_data_site(site)) continue;
            cfg.stabilizers[site] = make_full_stabilizer(cfg, site);
        }
    return cfg;
}

}  // namespace surfh
