#pragma once

#include <stdexcept>
#include <string>

namespace taquin {

enum class errc {
    cycle_detected,
    redundant_cover,
    not_comparable,
    size_limit_exceeded,
    overflow,
    invalid_partition,
    not_strict,
    not_a_tree,
    unknown_name,
    unknown_bubble,
    malformed_binumbering,
    not_a_filter,
    not_an_extension,
    no_unique_max,
    not_dcomplete,
    bad_input,
    engine_invariant,
};

struct error : std::runtime_error {
    errc kind;
    error(errc k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail(errc k, const std::string& msg) { throw error(k, msg); }

inline void require(bool cond, errc k, const std::string& msg) {
    if (!cond) fail(k, msg);
}

}  // namespace taquin
