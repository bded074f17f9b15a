#include "flexion/variables.hpp"

#include <cctype>
#include <cstdlib>

namespace flexion {

std::string to_string(Variable v) {
    switch (v.family) {
        case VarFamily::U: return "u" + std::to_string(v.index);
        case VarFamily::V: return "v" + std::to_string(v.index);
        case VarFamily::Z: return "z" + std::to_string(v.index);
        case VarFamily::Eps: return "eps";
    }
    return "?";
}

bool variable_from_string(const std::string& s, Variable& out) {
    if (s == "eps") {
        out = eps_var();
        return true;
    }
    if (s.size() < 2) return false;
    VarFamily fam;
    switch (s[0]) {
        case 'u': fam = VarFamily::U; break;
        case 'v': fam = VarFamily::V; break;
        case 'z': fam = VarFamily::Z; break;
        default: return false;
    }
    std::uint32_t idx = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        idx = idx * 10 + static_cast<std::uint32_t>(s[i] - '0');
    }
    if (fam != VarFamily::Z && idx == 0) return false;
    out = {fam, idx};
    return true;
}

}  // namespace flexion
