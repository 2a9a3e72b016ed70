#pragma once
#include <string>
#include <vector>

#include "grtk/quiver.hpp"
#include "grtk/rational.hpp"
#include "grtk/words.hpp"

namespace grtk {

using DimVector = std::vector<long>;

inline long dim_total(const DimVector& d)
{
    long s = 0;
    for (long x : d) s += x;
    return s;
}

inline bool dim_leq(const DimVector& a, const DimVector& b)
{
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

struct Matrix {
    int rows = 0, cols = 0;
    std::vector<Rat> a;  // row-major
    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
    Rat& at(int i, int j) { return a[size_t(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[size_t(i) * cols + j]; }
};

struct Representation {
    const Quiver* q = nullptr;
    DimVector dims;                // per vertex
    std::vector<Matrix> mats;      // per arrow, shape dims[tgt] x dims[src]
    long total() const { return dim_total(dims); }
};

Representation string_to_rep(const Quiver& q, const StringWord& C);
Representation band_to_rep(const Quiver& q, const BandWord& b, int m, const Rat& lambda);

DimVector string_dim(const Quiver& q, const StringWord& C);
DimVector band_dim(const Quiver& q, const BandWord& b, int m);

}  // namespace grtk
