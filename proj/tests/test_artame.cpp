#include "doctest.h"
#include "grtk/artame.hpp"

using namespace grtk;

TEST_CASE("defect on the Kronecker quiver")
{
    Quiver q = build_cycle_quiver("+-");
    CHECK(defect(q, {1, 2}) == -1);
    CHECK(defect(q, {2, 1}) == 1);
    CHECK(defect(q, {1, 1}) == 0);
    CHECK(defect(q, {3, 3}) == 0);
}

TEST_CASE("Coxeter transformation on Kronecker dimension vectors")
{
    Quiver q = build_cycle_quiver("+-");
    CHECK(coxeter(q, {2, 1}, 1) == DimVector{4, 3});
    CHECK(coxeter(q, {0, 1}, -1) == DimVector{2, 3});
    // tau fixes regular dimension vectors
    CHECK(coxeter(q, {1, 1}, 1) == DimVector{1, 1});
    CHECK(coxeter(q, {2, 2}, -1) == DimVector{2, 2});
}

TEST_CASE("projective and injective dimension vectors")
{
    Quiver q = build_cycle_quiver("+-");
    CHECK(is_projective_dim(q, {0, 1}));   // simple at the sink
    CHECK(is_projective_dim(q, {1, 2}));   // the other projective
    CHECK(is_injective_dim(q, {1, 0}));
    CHECK(is_injective_dim(q, {2, 1}));
    CHECK_FALSE(is_projective_dim(q, {1, 1}));
}

TEST_CASE("tube ranks follow the orientation runs")
{
    // p forward edges and q backward edges give tubes of rank q and p
    for (auto [signs, r0, r1] : {std::tuple<std::string, int, int>{"+++--", 2, 3},
                                 {"++-", 1, 2},
                                 {"+-", 1, 1},
                                 {"+-+-", 2, 2}}) {
        Quiver q = build_cycle_quiver(signs);
        TubeSystem ts = tube_system(q);
        REQUIRE(ts.tubes.size() == 2);
        std::multiset<int> ranks{ts.tubes[0].rank, ts.tubes[1].rank};
        CHECK(ranks == std::multiset<int>{r0, r1});
        for (const Tube& t : ts.tubes) {
            CHECK(int(t.quasi_simples.size()) == t.rank);
            // dimension vectors of one full tau-orbit sum to delta
            DimVector sum(q.vertex_count, 0);
            for (const auto& qs : t.quasi_simples) {
                DimVector d = string_dim(q, qs);
                for (int v = 0; v < q.vertex_count; ++v) sum[v] += d[v];
                CHECK(defect(q, d) == 0);
            }
            CHECK(sum == DimVector(q.vertex_count, 1));
        }
    }
}

TEST_CASE("tau walks the tube cyclically")
{
    Quiver q = build_cycle_quiver("+++--");
    TubeSystem ts = tube_system(q);
    for (const Tube& t : ts.tubes)
        for (int k = 0; k < t.rank; ++k) {
            IsoClass x = make_string_class(q, t.quasi_simples[k]);
            ARClass c = classify(q, ts, x);
            CHECK(c.kind == ARKind::Regular);
            CHECK(c.tube_id == t.id);
            CHECK(c.socle_index == k);
            CHECK(c.quasi_length == 1);
            ARClass shifted = tau_class(q, ts, c, 1);
            CHECK(shifted.socle_index == (k + 1) % t.rank);
            CHECK(shifted.dims ==
                  string_dim(q, t.quasi_simples[(k + 1) % t.rank]));
        }
}

TEST_CASE("classification by defect sign")
{
    Quiver q = build_cycle_quiver("+-");
    TubeSystem ts = tube_system(q);
    int a = q.arrow_by_name("a1"), b = q.arrow_by_name("b1");
    IsoClass pre =
        make_string_class(q, validate_string(q, {{a, true}, {b, false}}));
    IsoClass inj =
        make_string_class(q, validate_string(q, {{a, false}, {b, true}}));
    CHECK(classify(q, ts, pre).kind == ARKind::Preprojective);
    CHECK(classify(q, ts, inj).kind == ARKind::Preinjective);
    IsoClass h2 = make_band_class(q, band_words(q).front(), 2, Rat(1));
    ARClass ch2 = classify(q, ts, h2);
    CHECK(ch2.kind == ARKind::Regular);
    CHECK(ch2.homogeneous);
    CHECK(ch2.quasi_length == 2);
}

TEST_CASE("quasi-chain lengths grow by one quasi-simple per step")
{
    Quiver q = build_cycle_quiver("+++--");
    TubeSystem ts = tube_system(q);
    for (const Tube& t : ts.tubes)
        for (const auto& qs : t.quasi_simples) {
            IsoClass x = make_string_class(q, qs);
            long prev = x.length;
            for (int i = 2; i <= 2 * t.rank + 1; ++i) {
                IsoClass xi = quasi_chain(q, x, i);
                ARClass c = classify(q, ts, xi);
                CHECK(c.quasi_length == i);
                CHECK(c.kind == ARKind::Regular);
                CHECK(xi.length > prev);
                prev = xi.length;
            }
        }
}
