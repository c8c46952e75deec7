#pragma once

#include "quiverlab/quiver.hpp"

// The standard desk-scale quivers the suites run on.
inline quiverlab::Quiver jordan_quiver() {
    return quiverlab::Quiver({"1"}, {{"1", "1"}});
}

inline quiverlab::Quiver two_loop_quiver() {
    return quiverlab::Quiver({"1"}, {{"1", "1"}, {"1", "1"}});
}

inline quiverlab::Quiver a2_quiver() {
    return quiverlab::Quiver({"1", "2"}, {{"1", "2"}});
}

// 1 -> 2 with `loops` loop arrows at vertex 2.
inline quiverlab::Quiver mixed_quiver(int loops = 1) {
    std::vector<quiverlab::Arrow> arrows{{"1", "2"}};
    for (int i = 0; i < loops; ++i) arrows.push_back({"2", "2"});
    return quiverlab::Quiver({"1", "2"}, arrows);
}
