#pragma once

// Mod-4 residue arithmetic over cycle decompositions and whole-graph cycle
// spectra: class counts, the size identity q = xi1 + 2*xi2 + 3*xi3 (mod 4),
// epsilon-class assignment, the Rosa-Golomb gracefulness filter, and the
// per-class candidate congruences.

#include <array>
#include <cstdint>
#include <string>

#include "eulergraph/cycles.hpp"
#include "eulergraph/graph.hpp"

namespace eg {

struct ClassCounts {
    std::array<int, 4> xi{};  // cycles per residue class
    std::array<int, 4> qi{};  // edge sums per residue class

    bool operator==(const ClassCounts&) const = default;
};

inline ClassCounts class_counts(const CycleDecomposition& d) {
    ClassCounts c;
    for (const Cycle& cyc : d) {
        c.xi[cyc.residue()] += 1;
        c.qi[cyc.residue()] += cyc.length();
    }
    return c;
}

// The size identity. Used as a hard assertion: false indicates a bug, not
// a property of the input.
inline bool verify_size_identity(int q, const ClassCounts& c) {
    int rhs = (c.xi[1] + 2 * c.xi[2] + 3 * c.xi[3]) % 4;
    return q % 4 == rhs;
}

enum class ClassKind { NotEuler, Acyclic, SingleType, TwoType, Mixed };

struct EpsilonClass {
    ClassKind kind = ClassKind::NotEuler;
    std::array<bool, 4> residues{}; // spectrum membership

    int residue_count() const {
        int n = 0;
        for (bool b : residues) n += b;
        return n;
    }
    // Single residue i, or the pair (i,j) with i < j, as applicable.
    int low() const {
        for (int i = 0; i < 4; ++i)
            if (residues[i]) return i;
        return -1;
    }
    int high() const {
        for (int i = 3; i >= 0; --i)
            if (residues[i]) return i;
        return -1;
    }
    bool is_two_type(int i, int j) const {
        return kind == ClassKind::TwoType && residues[i] && residues[j];
    }

    static EpsilonClass not_euler() { return {}; }
    static EpsilonClass two_type(int i, int j) {
        EpsilonClass c;
        c.kind = ClassKind::TwoType;
        c.residues[i] = c.residues[j] = true;
        return c;
    }

    bool operator==(const EpsilonClass&) const = default;
};

// JSON/report tag: "e01".."e23", "single_0".."single_3", "mixed",
// "acyclic", "not_euler".
inline std::string class_tag(const EpsilonClass& c) {
    switch (c.kind) {
        case ClassKind::NotEuler: return "not_euler";
        case ClassKind::Acyclic: return "acyclic";
        case ClassKind::SingleType: return "single_" + std::to_string(c.low());
        case ClassKind::TwoType: return "e" + std::to_string(c.low()) + std::to_string(c.high());
        case ClassKind::Mixed: {
            std::string t = "mixed";
            return t;
        }
    }
    return "?";
}

// Residues over ALL simple cycles of g. Stops early once all four residues
// have been seen: the spectrum is already determined at that point.
inline std::array<bool, 4> cycle_spectrum(const Graph& g, std::uint64_t cap = kDefaultCycleCap) {
    std::array<bool, 4> seen{};
    int distinct = 0;
    for_each_cycle(g, cap, [&](const std::vector<NodeId>& path) {
        int r = static_cast<int>(path.size()) % 4;
        if (!seen[r]) {
            seen[r] = true;
            ++distinct;
        }
        return distinct < 4;
    });
    return seen;
}

inline EpsilonClass epsilon_class(const Graph& g, std::uint64_t cap = kDefaultCycleCap) {
    if (!is_eulerian(g)) return EpsilonClass::not_euler();
    EpsilonClass c;
    c.residues = cycle_spectrum(g, cap);
    switch (c.residue_count()) {
        case 0: c.kind = ClassKind::Acyclic; break;
        case 1: c.kind = ClassKind::SingleType; break;
        case 2: c.kind = ClassKind::TwoType; break;
        default: c.kind = ClassKind::Mixed; break;
    }
    return c;
}

enum class Gracefulness { Nongraceful, Candidate };

// Rosa-Golomb necessary condition: an Euler graph with q = 1 or 2 (mod 4)
// is nongraceful. This is the only source of "nongraceful" verdicts;
// search exhaustion is reported separately.
inline Gracefulness rosa_golomb_status(const Graph& g) {
    if (!is_eulerian(g)) fail(Errc::NotEulerian, "Rosa-Golomb filter applies to Euler graphs");
    int r = g.size() % 4;
    return (r == 1 || r == 2) ? Gracefulness::Nongraceful : Gracefulness::Candidate;
}

// xi1 + 2*xi2 + 3*xi3 (mod 4) for a two-type class; the general sum
// specializes per class because counts outside {i,j} must vanish.
inline int class_size_congruence(const EpsilonClass& cls, const ClassCounts& c) {
    if (cls.kind != ClassKind::TwoType)
        fail(Errc::InconsistentCounts, "congruence is defined for two-type classes");
    for (int k = 0; k < 4; ++k)
        if (!cls.residues[k] && c.xi[k] != 0)
            fail(Errc::InconsistentCounts, "xi_" + std::to_string(k) + " nonzero outside class");
    return (c.xi[1] + 2 * c.xi[2] + 3 * c.xi[3]) % 4;
}

// True when the class congruence lands in {0,3} (mod 4): the graph escapes
// the Rosa-Golomb filter and falls under the gracefulness conjectures.
inline bool conjecture_predicate(const EpsilonClass& cls, const ClassCounts& c) {
    int r = class_size_congruence(cls, c);
    return r == 0 || r == 3;
}

} // namespace eg
