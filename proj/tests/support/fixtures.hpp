#ifndef BRAUER_TESTS_FIXTURES_HPP
#define BRAUER_TESTS_FIXTURES_HPP

#include "brauer/configuration.hpp"

namespace brauer::testing {

// Four polygons over four vertices, with a self-folded polygon (vertex "1"
// occurs twice in polygon 3) and a truncated vertex ("4"). Matches
// data/fourpolygons.json.
inline Configuration fourpolygon_config() {
    return make_configuration(
        {"1", "2", "3", "4"},
        {{1, {0, 1}}, {2, {0, 1}}, {3, {0, 0, 2, 2}}, {4, {2, 3}}},
        {{0, 2}, {1, 2}, {2, 1}, {3, 1}},
        {{0, {1, 2, 3, 3}}, {1, {1, 2}}, {2, {3, 4, 3}}});
}

// One vertex occurring twice in a single polygon: the induced quiver is two
// loops at one point. Matches data/twoloops.json.
inline Configuration twoloop_config() {
    return make_configuration({"1"}, {{1, {0, 0}}});
}

// Two vertices, one polygon; vertex "a" nontruncated only through its
// multiplicity, so the quiver is a single loop.
inline Configuration single_loop_config(std::int64_t mu_a = 2) {
    return make_configuration({"a", "b"}, {{0, {0, 1}}}, {{0, mu_a}});
}

} // namespace brauer::testing

#endif // BRAUER_TESTS_FIXTURES_HPP
