#ifndef PARTITIONS_TEST_HELPERS_HPP
#define PARTITIONS_TEST_HELPERS_HPP

#include "partitions/real.hpp"

namespace test {

template <class Real>
Real rel_err(const Real& got, const Real& want) {
    using std::abs;
    if (want == 0) return abs(got);
    return abs(got - want) / abs(want);
}

template <class Real>
Real abs_err(const Real& got, const Real& want) {
    using std::abs;
    return abs(got - want);
}

} // namespace test

#endif
