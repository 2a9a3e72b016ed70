#include <set>

#include "doctest.h"
#include "grtk/artame.hpp"
#include "grtk/strmod.hpp"

using namespace grtk;

TEST_CASE("closed intervals of a direct-inverse word")
{
    Quiver q = build_cycle_quiver("+-");
    int a = q.arrow_by_name("a1"), b = q.arrow_by_name("b1");
    StringWord w = validate_string(q, {{a, false}, {b, true}});  // b^- a
    auto subs = substring_submodules(q, w);
    // submodule intervals: the middle vertex (target of both letters), and
    // the whole word
    std::set<std::pair<int, int>> got;
    for (const auto& s : subs) got.insert({s.i, s.j});
    CHECK(got.count({1, 1}) == 1);
    CHECK(got.count({0, 2}) == 1);
    CHECK(got.count({0, 0}) == 0);  // z_0 maps into z_1, not closed

    auto quots = substring_quotients(q, w);
    std::set<std::pair<int, int>> qgot;
    for (const auto& s : quots) qgot.insert({s.i, s.j});
    CHECK(qgot.count({0, 0}) == 1);
    CHECK(qgot.count({2, 2}) == 1);
    CHECK(qgot.count({1, 1}) == 0);
}

TEST_CASE("submodule and quotient pieces partition the word")
{
    Quiver q = build_cycle_quiver("+++--");
    for (const auto& w : enumerate_strings(q, 6))
        for (const auto& s : substring_submodules(q, w)) {
            int outside = 0;
            for (const auto& piece : s.quotient) outside += piece.length() + 1;
            CHECK(outside == w.length() + 1 - (s.j - s.i + 1));
        }
}

TEST_CASE("covering transport produces a sincere line-quiver string")
{
    Quiver q = build_cycle_quiver("++-");
    int a1 = q.arrow_by_name("a1"), a2 = q.arrow_by_name("a2");
    StringWord w = validate_string(q, {{a1, false}, {a2, false}});
    Covering cov = covering_transport(q, w);
    CHECK(cov.aq.vertex_count == w.length() + 1);
    CHECK(cov.lifted.length() == w.length());
    // interval structure is preserved
    CHECK(substring_submodules(q, w).size() ==
          substring_submodules(cov.aq, cov.lifted).size());
}

TEST_CASE("hook extensions on the Kronecker quiver")
{
    Quiver q = build_cycle_quiver("+-");
    // preprojective simple: a unique extension class (its two hooks agree
    // after canonical identification)
    StringWord s1 = trivial_string(q, 1);
    auto ext = irreducible_mono_extensions(q, s1);
    CHECK(ext.size() == 1);
    CHECK(ext.front().length() == 2);

    // regular string M(a1): exactly one defect-zero extension
    int a = q.arrow_by_name("a1");
    StringWord ma = validate_string(q, {{a, false}});
    int regular = 0;
    for (const auto& e : irreducible_mono_extensions(q, ma))
        if (defect(q, string_dim(q, e)) == 0) ++regular;
    CHECK(regular == 1);
}

TEST_CASE("every extension really contains the module it extends")
{
    Quiver q = build_cycle_quiver("++-");
    for (const auto& w : enumerate_strings(q, 5))
        for (const auto& e : irreducible_mono_extensions(q, w)) {
            CHECK(e.length() > w.length());
            MonoEpiResult r =
                mono_epi_test(string_to_rep(q, w), string_to_rep(q, e));
            CHECK(r.exists_mono);
        }
}

TEST_CASE("uniserial words point one way")
{
    Quiver q = build_cycle_quiver("+-");
    int a = q.arrow_by_name("a1"), b = q.arrow_by_name("b1");
    CHECK(is_uniserial_word(trivial_string(q, 0)));
    CHECK(is_uniserial_word(validate_string(q, {{a, false}})));
    CHECK_FALSE(is_uniserial_word(validate_string(q, {{a, false}, {b, true}})));
}
