// Shared algebra fixtures for the test suite.
#pragma once

#include <sstream>

#include "dsilt/algebra.hpp"

namespace fixtures {

inline dsilt::AlgebraSpec a2() {
    std::istringstream in(
        "field 10007\n"
        "vertices 2\n"
        "arrow a 1 2\n");
    return dsilt::parse_algebra_spec(in);
}

inline dsilt::AlgebraSpec nakayama2() {
    std::istringstream in(
        "field 10007\n"
        "vertices 2\n"
        "arrow a 1 2\n"
        "arrow b 2 1\n"
        "relation 1*a.b\n"
        "relation 1*b.a\n"
        "nilpotency 3\n");
    return dsilt::parse_algebra_spec(in);
}

inline dsilt::AlgebraSpec kronecker() {
    std::istringstream in(
        "field 10007\n"
        "vertices 2\n"
        "arrow a 1 2\n"
        "arrow b 1 2\n");
    return dsilt::parse_algebra_spec(in);
}

}  // namespace fixtures
