#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace flexion {

// Variable families: u_i and v_i are the mould rows (indices from 1),
// z_i the vimo encoding row (indices from 0), Eps a nilpotent dual unit
// with Eps^2 = 0 used by linearization tests.
enum class VarFamily : std::uint8_t { U = 0, V = 1, Z = 2, Eps = 3 };

struct Variable {
    VarFamily family = VarFamily::U;
    std::uint32_t index = 0;

    friend constexpr bool operator==(Variable a, Variable b) = default;
    friend constexpr auto operator<=>(Variable a, Variable b) {
        if (auto c = a.family <=> b.family; c != 0) return c;
        return a.index <=> b.index;
    }
};

constexpr Variable u_var(std::uint32_t i) { return {VarFamily::U, i}; }
constexpr Variable v_var(std::uint32_t i) { return {VarFamily::V, i}; }
constexpr Variable z_var(std::uint32_t i) { return {VarFamily::Z, i}; }
constexpr Variable eps_var() { return {VarFamily::Eps, 0}; }

std::string to_string(Variable v);
// Accepts "u3", "v12", "z0", "eps".
bool variable_from_string(const std::string& s, Variable& out);

}  // namespace flexion
