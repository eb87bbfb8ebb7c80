#include "bivd4/mask.hpp"

namespace bivd4 {

std::string family_name(SolutionFamily f) {
    switch (f) {
        case SolutionFamily::A1a: return "A1a";
        case SolutionFamily::A1b: return "A1b";
        case SolutionFamily::A2a: return "A2a";
        case SolutionFamily::A2b: return "A2b";
        case SolutionFamily::B1a: return "B1a";
        case SolutionFamily::B1b: return "B1b";
        case SolutionFamily::B2a: return "B2a";
        case SolutionFamily::B2b: return "B2b";
    }
    return "?";
}

std::optional<SolutionFamily> family_from_name(const std::string& name) {
    for (SolutionFamily f : all_families)
        if (family_name(f) == name) return f;
    return std::nullopt;
}

bool is_a_family(SolutionFamily f) {
    return f == SolutionFamily::A1a || f == SolutionFamily::A1b ||
           f == SolutionFamily::A2a || f == SolutionFamily::A2b;
}

bool uses_mu1(SolutionFamily f) {
    return f == SolutionFamily::A1a || f == SolutionFamily::A1b ||
           f == SolutionFamily::B1a || f == SolutionFamily::B1b;
}

bool is_plus_branch(SolutionFamily f) {
    return f == SolutionFamily::A1a || f == SolutionFamily::A2a ||
           f == SolutionFamily::B1a || f == SolutionFamily::B2a;
}

SolutionFamily sibling_branch(SolutionFamily f) {
    switch (f) {
        case SolutionFamily::A1a: return SolutionFamily::A1b;
        case SolutionFamily::A1b: return SolutionFamily::A1a;
        case SolutionFamily::A2a: return SolutionFamily::A2b;
        case SolutionFamily::A2b: return SolutionFamily::A2a;
        case SolutionFamily::B1a: return SolutionFamily::B1b;
        case SolutionFamily::B1b: return SolutionFamily::B1a;
        case SolutionFamily::B2a: return SolutionFamily::B2b;
        case SolutionFamily::B2b: return SolutionFamily::B2a;
    }
    return f;
}

} // namespace bivd4
