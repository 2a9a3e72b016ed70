#pragma once

#include "grtk/quiver.hpp"

#include <string>
#include <vector>

namespace grtk {

/* One step of a walk: an arrow traversed forwards or backwards. */
struct Letter {
    int arrow = -1;
    bool inverse = false;

    bool operator==(const Letter&) const = default;
    /* direct letters order before inverse letters, then by arrow id */
    auto operator<=>(const Letter& o) const
    {
        if (auto c = (inverse <=> o.inverse); c != 0) return c;
        return arrow <=> o.arrow;
    }
    Letter flipped() const { return {arrow, !inverse}; }
};

inline int letter_source(const Quiver& q, const Letter& l)
{
    return l.inverse ? q.arrow(l.arrow).tgt : q.arrow(l.arrow).src;
}
inline int letter_target(const Quiver& q, const Letter& l)
{
    return l.inverse ? q.arrow(l.arrow).src : q.arrow(l.arrow).tgt;
}

/* A reduced walk c_n ... c_1, stored with c_1 first. The trivial walk is
 * a bare vertex. Module length is letters.size() + 1. */
struct StringWord {
    std::vector<Letter> letters;
    int base_vertex = -1;  // used when letters is empty

    bool trivial() const { return letters.empty(); }
    int length() const { return static_cast<int>(letters.size()); }

    bool operator==(const StringWord&) const = default;
    bool operator<(const StringWord& o) const;

    StringWord inverted() const;
    StringWord canonical() const;
    bool is_canonical() const { return *this == canonical(); }

    /* vertex walk u_0 .. u_n */
    std::vector<int> walk(const Quiver& q) const;
    int start_vertex(const Quiver& q) const;
    int end_vertex(const Quiver& q) const;

    std::string str(const Quiver& q) const;
};

/* Cyclic reduced word, at least one direct and one inverse letter,
 * not a proper power. Stored in canonical rotation. */
struct BandWord {
    std::vector<Letter> letters;

    int length() const { return static_cast<int>(letters.size()); }
    bool operator==(const BandWord&) const = default;
    BandWord canonical() const;
    std::vector<int> node_vertices(const Quiver& q) const;
    std::string str(const Quiver& q) const;
};

class WordError : public std::runtime_error {
public:
    explicit WordError(const std::string& what) : std::runtime_error(what) {}
};

/* Checks composability, reducedness, relation avoidance and the string
 * algebra conditions; returns the word with derived data. Throws
 * WordError on invalid input. */
StringWord validate_string(const Quiver& q, const std::vector<Letter>& letters);
StringWord trivial_string(const Quiver& q, int vertex);

bool is_valid_string(const Quiver& q, const std::vector<Letter>& letters);

/* All canonical strings with at most max_length letters, one class per
 * C ~ C^{-1} pair, trivial strings included. */
std::vector<StringWord> enumerate_strings(const Quiver& q, int max_length);

/* All canonical bands. For an acyclic cycle quiver this is the single
 * full-cycle word; for trees it is empty. */
std::vector<BandWord> band_words(const Quiver& q);

/* Keys usable as map indices / report identifiers. */
std::string word_key(const StringWord& w);
std::string band_key(const BandWord& b);

}  // namespace grtk
