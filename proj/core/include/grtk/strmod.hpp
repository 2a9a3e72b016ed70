#pragma once
#include <optional>
#include <vector>

#include "grtk/rep.hpp"
#include "grtk/words.hpp"

namespace grtk {

// interval [i,j] of basis indices z_i..z_j closed under all arrow actions
struct SubstringInclusion {
    int i = 0, j = 0;
    StringWord sub;
    std::vector<StringWord> quotient;  // at most two pieces
};

// proper and improper closed intervals of the word C
std::vector<SubstringInclusion> substring_submodules(const Quiver& q, const StringWord& C);

// closed intervals that give quotient maps instead (dual condition)
std::vector<SubstringInclusion> substring_quotients(const Quiver& q, const StringWord& C);

struct Covering {
    Quiver aq;          // linear quiver A_{|C|+1}
    StringWord lifted;  // the sincere string over aq
};

Covering covering_transport(const Quiver& q, const StringWord& C);

// the at-most-two maximal-hook extensions C -> C' with irreducible inclusion
std::vector<StringWord> irreducible_mono_extensions(const Quiver& q, const StringWord& C);

// all letters point the same way <=> unique composition series
bool is_uniserial_word(const StringWord& C);

}  // namespace grtk
