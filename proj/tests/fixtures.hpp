#pragma once

#include <string>
#include <vector>

#include "spslab/closure.hpp"
#include "spslab/functors.hpp"

namespace spslab::fixtures {

/// Builds a space over points x1..xn from member lists given as 1-based
/// point numbers, via the validator.
inline FiniteClosureSpace space_of(int n, const std::vector<std::vector<int>>& sets) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
    PointUniverse u(labels);
    std::vector<Bitset> members;
    for (const auto& set : sets) {
        Bitset s(n);
        for (int p : set) s.set(p - 1);
        members.push_back(s);
    }
    auto v = validate_closure_space(u, SetFamily(n, std::move(members)));
    if (!v.report.passed()) throw std::runtime_error("fixture is not a closure space");
    return std::move(*v.space);
}

// The five canonical fixtures used throughout the tests.
inline FiniteClosureSpace e1() { return space_of(3, {{}, {1}, {2}, {1, 2}, {1, 2, 3}}); }
inline FiniteClosureSpace e2() { return space_of(3, {{}, {1}, {2, 3}, {1, 2, 3}}); }
inline FiniteClosureSpace e3() { return space_of(3, {{}, {1}, {2}, {1, 2, 3}}); }
inline FiniteClosureSpace e4() { return space_of(2, {{}, {1}, {2}, {1, 2}}); }
inline FiniteClosureSpace e5() { return space_of(3, {{}, {1}, {1, 2}, {1, 2, 3}}); }

inline Bitset subset_of(const FiniteClosureSpace& sp, const std::vector<int>& pts) {
    Bitset s(sp.point_count());
    for (int p : pts) s.set(p - 1);
    return s;
}

} // namespace spslab::fixtures
