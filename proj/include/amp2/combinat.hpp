#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "amp2/cells.hpp"

namespace amp2 {

struct GrassmannNecklace {
    int n = 0;
    int k = 0;
    std::vector<Subset> I;  // I[r-1] = I_r
};

struct DecoratedPermutation {
    Permutation perm;
    std::vector<int> coloops;  // sorted fixed points colored coloop; other fixed points are loops

    bool operator==(const DecoratedPermutation&) const = default;
};

// English notation, rows top to bottom, boxes left-justified
struct LeDiagram {
    int k = 0;  // box rows
    int n = 0;  // box is k × (n-k)
    std::vector<std::vector<bool>> plus;

    std::vector<int> shape() const;
    bool operator==(const LeDiagram&) const = default;
};

GrassmannNecklace necklace_of(const Positroid& p);
DecoratedPermutation decperm_of(const Positroid& p);
std::vector<int> anti_excedances(const DecoratedPermutation& d);

LeDiagram le_of(const MRCell& c);
MRCell cell_from_le(const LeDiagram& d);
bool satisfies_le_condition(const LeDiagram& d);
LeDiagram transpose(const LeDiagram& d);
// decorated permutation read off the pipe dream of a Le-diagram
DecoratedPermutation pipe_dream_decperm(const LeDiagram& d);

// complements of the bases, in Gr_{n-k,n}
Positroid dual(const Positroid& p);

std::string to_text(const LeDiagram& d);
LeDiagram le_from_text(const std::string& text, int n, int k);

nlohmann::json to_json(const DecoratedPermutation& d);
DecoratedPermutation decperm_from_json(const nlohmann::json& j);

}  // namespace amp2
