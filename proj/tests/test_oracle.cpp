#include "doctest.h"
#include "oracle.hpp"

using namespace grtk;

TEST_CASE("engine, general path and brute force agree on small quivers")
{
    for (const std::string signs : {"+-", "++-"}) {
        Quiver q = build_cycle_quiver(signs);
        Context ctx(q);
        oracle::MeasureOracle brute(ctx, 6);
        oracle::GeneralPath general(ctx);
        for (const auto& M : enumerate_indecomposables(ctx, 6)) {
            GRMeasure engine = gr_measure(ctx, M);
            CHECK(engine == brute.measure(M));
            CHECK(engine == general.measure(M));
        }
    }
}

TEST_CASE("oracle mono agrees with the engine's test")
{
    Quiver q = build_cycle_quiver("++-");
    Context ctx(q);
    auto classes = enumerate_indecomposables(ctx, 5);
    for (const auto& X : classes)
        for (const auto& Y : classes)
            CHECK(ctx.exists_mono(X, Y) == oracle::mono_exists(q, X, Y));
}
