// errors.hpp -- failure modes surfaced to callers as typed exceptions.
#pragma once

#include <stdexcept>

namespace dsilt {

struct NotAdmissible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotFiniteDimensional : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OutOfWindow : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PoolCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OracleMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotClosed : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Undecided : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Diverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dsilt
