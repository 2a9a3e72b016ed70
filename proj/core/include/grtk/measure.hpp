#pragma once

#include "grtk/rational.hpp"

#include <compare>
#include <stdexcept>
#include <vector>

namespace grtk {

/* A Gabriel-Roiter measure: a strictly increasing finite set of positive
 * integers, stored sorted. The empty measure is the measure of the zero
 * module and sits below every nonempty one. */
struct GRMeasure {
    std::vector<int> elems;

    GRMeasure() = default;
    explicit GRMeasure(std::vector<int> e) : elems(std::move(e))
    {
        for (size_t i = 0; i < elems.size(); ++i) {
            if (elems[i] < 1)
                throw std::invalid_argument("GRMeasure: entries must be >= 1");
            if (i > 0 && elems[i] <= elems[i - 1])
                throw std::invalid_argument("GRMeasure: not strictly increasing");
        }
    }

    bool empty() const { return elems.empty(); }
    int max() const { return elems.empty() ? 0 : elems.back(); }
    bool operator==(const GRMeasure& o) const = default;

    std::string str() const
    {
        std::string s = "{";
        for (size_t i = 0; i < elems.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(elems[i]);
        }
        return s + "}";
    }
};

enum class Ordering { LT, EQ, GT };

/* Total order: I < J iff the smallest element of the symmetric difference
 * lies in J. */
inline Ordering compare(const GRMeasure& I, const GRMeasure& J)
{
    size_t i = 0, j = 0;
    while (i < I.elems.size() && j < J.elems.size()) {
        if (I.elems[i] == J.elems[j]) {
            ++i;
            ++j;
        }
        else if (I.elems[i] < J.elems[j]) {
            return Ordering::GT;  // smallest symdiff element is in I
        }
        else {
            return Ordering::LT;
        }
    }
    if (i < I.elems.size()) return Ordering::GT;
    if (j < J.elems.size()) return Ordering::LT;
    return Ordering::EQ;
}

inline bool measure_less(const GRMeasure& I, const GRMeasure& J)
{
    return compare(I, J) == Ordering::LT;
}

/* True iff I = J, or I is a proper subset of J with every element of I
 * below every element of J \ I. */
inline bool starts_with(const GRMeasure& I, const GRMeasure& J)
{
    if (I.elems.size() > J.elems.size()) return false;
    for (size_t i = 0; i < I.elems.size(); ++i)
        if (I.elems[i] != J.elems[i]) return false;
    return true;
}

inline GRMeasure extend(const GRMeasure& I, int m)
{
    if (m <= I.max())
        throw std::invalid_argument("extend: new element must exceed max");
    GRMeasure r = I;
    r.elems.push_back(m);
    return r;
}

/* Encoding sum_{a in I} 2^-a; monotone with respect to the total order. */
inline Rat to_rational(const GRMeasure& I)
{
    Rat r = 0;
    for (int a : I.elems) {
        Int den = Int(1) << a;
        r += Rat(1, den);
    }
    return r;
}

}  // namespace grtk
