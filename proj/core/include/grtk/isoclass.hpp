#pragma once
#include <string>

#include "grtk/rep.hpp"
#include "grtk/words.hpp"

namespace grtk {

/* Canonical descriptor of an indecomposable: a string word up to
 * inversion, or a band power with multiplicity and parameter. */
struct IsoClass {
    bool band = false;
    StringWord word;
    BandWord bword;
    int mult = 1;
    Rat lambda = 1;
    DimVector dims;
    long length = 0;
    std::string key;

    bool operator==(const IsoClass& o) const { return key == o.key; }
    bool operator<(const IsoClass& o) const { return key < o.key; }
};

IsoClass make_string_class(const Quiver& q, const StringWord& w);
IsoClass make_band_class(const Quiver& q, const BandWord& b, int m, const Rat& lambda);
Representation class_to_rep(const Quiver& q, const IsoClass& c);
std::string class_label(const Quiver& q, const IsoClass& c);

}  // namespace grtk
