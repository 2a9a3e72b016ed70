#include "doctest.h"
#include "grtk/measure.hpp"

using namespace grtk;

TEST_CASE("order: smallest symmetric-difference element decides")
{
    CHECK(measure_less(GRMeasure({1, 3}), GRMeasure({1, 2})));
    CHECK(measure_less(GRMeasure({2}), GRMeasure({1})));
    CHECK(measure_less(GRMeasure({1}), GRMeasure({1, 2})));
    CHECK(measure_less(GRMeasure({1, 3}), GRMeasure({1, 2, 4})));
    CHECK(compare(GRMeasure({1, 2}), GRMeasure({1, 2})) == Ordering::EQ);
    CHECK(measure_less(GRMeasure{}, GRMeasure({7})));
}

TEST_CASE("prefix extension is strictly increasing")
{
    GRMeasure m({1, 2, 4});
    GRMeasure e = extend(m, 6);
    CHECK(e == GRMeasure({1, 2, 4, 6}));
    CHECK(measure_less(m, e));
    CHECK(starts_with(m, e));
    CHECK_FALSE(starts_with(e, m));
    CHECK_THROWS_AS(extend(m, 4), std::invalid_argument);
}

TEST_CASE("rational encoding is order-preserving")
{
    std::vector<GRMeasure> ms = {GRMeasure({2}),    GRMeasure({1}),
                                 GRMeasure({1, 3}), GRMeasure({1, 2}),
                                 GRMeasure({1, 2, 4}), GRMeasure({1, 2, 3})};
    for (size_t i = 0; i < ms.size(); ++i)
        for (size_t j = 0; j < ms.size(); ++j)
            CHECK((measure_less(ms[i], ms[j])) ==
                  (to_rational(ms[i]) < to_rational(ms[j])));
}

TEST_CASE("invalid measures rejected")
{
    CHECK_THROWS_AS(GRMeasure({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(GRMeasure({2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(GRMeasure({3, 2}), std::invalid_argument);
}
