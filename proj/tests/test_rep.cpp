#include "doctest.h"
#include "grtk/rep.hpp"

using namespace grtk;

namespace {

// check f_t X_a = Y_a f_s for the identity (sanity of matrix shapes)
void check_shapes(const Representation& R)
{
    const Quiver& q = *R.q;
    for (int a = 0; a < q.n_arrows(); ++a) {
        CHECK(R.mats[a].rows == R.dims[q.arrow(a).tgt]);
        CHECK(R.mats[a].cols == R.dims[q.arrow(a).src]);
    }
}

}  // namespace

TEST_CASE("string representation dimensions count walk visits")
{
    Quiver q = build_cycle_quiver("+-");
    int a = q.arrow_by_name("a1"), b = q.arrow_by_name("b1");
    StringWord w = validate_string(q, {{a, false}, {b, true}, {a, false}});
    Representation R = string_to_rep(q, w);
    CHECK(R.dims == DimVector{2, 2});
    CHECK(R.total() == 4);
    check_shapes(R);
    // each arrow matrix has entries 0/1 and acts injectively letter by letter
    int ones = 0;
    for (const auto& m : R.mats)
        for (const auto& x : m.a)
            if (x == 1) ++ones;
    CHECK(ones == w.length());
}

TEST_CASE("band representation carries one Jordan block")
{
    Quiver q = build_cycle_quiver("+-");
    auto b = band_words(q).front();
    Representation R = band_to_rep(q, b, 2, Rat(5));
    CHECK(R.dims == DimVector{2, 2});
    check_shapes(R);
    // exactly one arrow carries the parameter, the other the identity
    int with_lambda = 0;
    for (const auto& m : R.mats) {
        bool has5 = false;
        for (const auto& x : m.a)
            if (x == 5) has5 = true;
        if (has5) ++with_lambda;
    }
    CHECK(with_lambda == 1);
    CHECK_THROWS_AS(band_to_rep(q, b, 0, Rat(1)), WordError);
    CHECK_THROWS_AS(band_to_rep(q, b, 1, Rat(0)), WordError);
}

TEST_CASE("representations respect monomial relations")
{
    // commutativity-free check: a cycle with a length-2 relation still yields
    // valid string representations for words avoiding the relation
    Quiver q = build_cycle_quiver("+++--");
    auto words = enumerate_strings(q, 4);
    for (const auto& w : words) {
        Representation R = string_to_rep(q, w);
        CHECK(R.total() == w.length() + 1);
        check_shapes(R);
    }
}
