#include <set>

#include "doctest.h"
#include "grtk/rep.hpp"
#include "grtk/words.hpp"

using namespace grtk;

TEST_CASE("cycle quiver construction")
{
    Quiver q = build_cycle_quiver("+++--");
    CHECK(q.vertex_count == 5);
    CHECK(q.n_arrows() == 5);
    CHECK(q.is_tilde_a());
    CHECK_FALSE(q.is_dynkin_a());
    CHECK(q.arrow(q.arrow_by_name("a1")).src == 0);
    CHECK_THROWS_AS(build_cycle_quiver("+++"), QuiverError);
}

TEST_CASE("string validation on the Kronecker quiver")
{
    Quiver q = build_cycle_quiver("+-");
    int a = q.arrow_by_name("a1"), b = q.arrow_by_name("b1");
    CHECK(is_valid_string(q, {{a, false}}));
    // a then a backwards is unreduced
    CHECK_FALSE(is_valid_string(q, {{a, false}, {a, true}}));
    // a then b forwards does not compose (both start at vertex 0)
    CHECK_FALSE(is_valid_string(q, {{a, false}, {b, false}}));
    CHECK(is_valid_string(q, {{a, false}, {b, true}}));
}

TEST_CASE("canonical form identifies a word with its inverse")
{
    Quiver q = build_cycle_quiver("+-");
    int a = q.arrow_by_name("a1"), b = q.arrow_by_name("b1");
    StringWord w = validate_string(q, {{a, false}, {b, true}});
    CHECK(w.canonical() == w.inverted().canonical());
    CHECK(word_key(w.canonical()) == word_key(w.inverted().canonical()));
}

TEST_CASE("enumeration counts one class per inversion pair")
{
    Quiver q = build_cycle_quiver("+-");
    auto words = enumerate_strings(q, 8);
    std::set<std::string> keys;
    for (const auto& w : words) {
        CHECK(w.is_canonical());
        CHECK(keys.insert(word_key(w)).second);
        CHECK(w.length() <= 8);
    }
    // Kronecker: per length, exactly the known classes
    std::map<int, int> per_len;
    for (const auto& w : words) ++per_len[w.length()];
    CHECK(per_len[0] == 2);  // two simples
    CHECK(per_len[1] == 2);  // the two arrows
    CHECK(per_len[2] == 2);  // (2,1) and (1,2) strings
}

TEST_CASE("band words: one canonical band on a cycle, none on a line")
{
    Quiver cyc = build_cycle_quiver("++-");
    auto b = band_words(cyc);
    REQUIRE(b.size() == 1);
    CHECK(b.front().length() == 3);
    CHECK(b.front().canonical() == b.front());

    Quiver line = build_line_quiver("++");
    CHECK(band_words(line).empty());
}

TEST_CASE("band dimension vector is m copies of delta")
{
    Quiver q = build_cycle_quiver("+++--");
    auto b = band_words(q).front();
    for (int m = 1; m <= 3; ++m) {
        DimVector d = band_dim(q, b, m);
        for (long dv : d) CHECK(dv == m);
    }
}
