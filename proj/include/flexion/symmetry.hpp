#pragma once

#include <optional>
#include <string>

#include "flexion/mould.hpp"

namespace flexion {

enum class SymmetryProperty {
    Alternal,
    Symmetral,
    Alternil,
    Symmetril,
    PushInvariant,
    NegInvariant,
    MantarInvariant,
};

struct SymmetryDefect {
    int r = 0, s = 0;                // failing pair (depth split)
    RationalFunction defect;         // nonzero difference
};

struct SymmetryReport {
    SymmetryProperty property;
    bool holds = false;
    std::optional<SymmetryDefect> first_defect;
};

// Shuffle-type checks; the pair set is s <= r/2 per depth (the reduced set).
SymmetryReport check_alternal(const Mould& m, bool reduced_pairs = true);
SymmetryReport check_symmetral(const Mould& m, bool reduced_pairs = true);

// Stuffle-type checks for v-moulds.
SymmetryReport check_alternil(const Mould& m);
SymmetryReport check_symmetril(const Mould& m);

// The (r,s) alternility sum of a v-mould: one difference-quotient term per
// surjection.
RationalFunction alternility_sum(const Mould& m, int r, int s);
// Individual per-surjection terms, in surjection order.
std::vector<RationalFunction> alternility_terms(const Mould& m, int r, int s);

SymmetryReport check_operator_invariance(const Mould& m, const std::string& op);

enum class DimorphyClass { AlAl, AlStarAl, AlIl, AlStarIl, None };

struct DimorphyResult {
    DimorphyClass cls = DimorphyClass::None;
    std::optional<Mould> correction;  // constant mould fixing the swap side
    bool depth1_even = false;         // parity report for the underline variants

    // Membership in the *-closure: al/il counts as al*il, al/al as al*al.
    bool in_al_star_il() const {
        return cls == DimorphyClass::AlIl || cls == DimorphyClass::AlStarIl;
    }
    bool in_al_star_al() const {
        return cls == DimorphyClass::AlAl || cls == DimorphyClass::AlStarAl;
    }
};

// Requires M(empty) = 0.  Checks alternality of M, then classifies the swap
// side, solving for the constant correction depth by depth when needed.
DimorphyResult classify_dimorphy(const Mould& m);

}  // namespace flexion
