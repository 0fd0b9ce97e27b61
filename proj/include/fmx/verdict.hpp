#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fmx/rational.hpp"

namespace fmx {

/// First coefficient at which an exact identity failed.
struct Witness {
    std::vector<std::size_t> index; // one entry for z^k, two for z^i v^j
    Rational expected;
    Rational actual;
};

/// Outcome of an exact check.
struct Verdict {
    bool pass = true;
    std::optional<Witness> witness;

    explicit operator bool() const { return pass; }

    static Verdict ok() { return {}; }
    static Verdict fail(Witness w) { return {false, std::move(w)}; }
};

} // namespace fmx
