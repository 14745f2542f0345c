#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "spslab/decomposition.hpp"

namespace spslab {

/// splitmix64: the public-domain 64-bit generator of Steele, Lea and Vigna.
/// Chosen because its output is fully specified by the seed on every
/// platform, which makes golden files portable.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    /// Uniform double in [0, 1) from the top 53 bits.
    double next_unit() { return double(next() >> 11) * 0x1.0p-53; }
};

/// Reference implementation of components straight from the definition: the
/// component of x is the union of all connected subsets containing x.
/// Exponential in |X|; refuses universes above 12 points.
Partition brute_components(const FiniteClosureSpace& space);

/// Exhaustive complement-witness scan using only the definitional ssr route,
/// never the Cartan criterion.
std::optional<int> brute_classical(const StatePropertySystem& sps, int a);

/// Blocks of the relation "every clopen containing x contains y". Components
/// refine quasi-components; coincidence is an open question probed by the
/// theorem suite.
Partition quasi_components(const FiniteClosureSpace& space);

/// Every closure space on n labeled points (labels x1..xn), exactly once, in
/// canonical order. n is capped at 4. Honors SPSLAB_THREADS by partitioning
/// the candidate range on fixed prefixes; the merged order never depends on
/// the worker count.
std::vector<FiniteClosureSpace> enumerate_closure_spaces(int n);

/// Streaming variant of the enumerator.
void enumerate_closure_spaces(int n, const std::function<void(const FiniteClosureSpace&)>& emit);

/// Seeded random space: each nonempty proper subset is included independently
/// with the given probability (canonical subset order, one splitmix64 draw
/// each), then the family is closed under intersections and the empty set and
/// X are added. Bit-identical output for identical (n, density, seed).
FiniteClosureSpace random_closure_space(int n, double density, std::uint64_t seed);

/// Worker count from SPSLAB_THREADS; absent or invalid means 1.
int thread_count();

enum class Verdict { Pass, FailWithWitness, NotApplicable };

struct CheckResult {
    std::string name;
    Verdict verdict;
    std::string detail;
};

struct TheoremReport {
    std::string instance_id;
    std::vector<CheckResult> checks;

    bool all_passed() const;
    const CheckResult* find(const std::string& name) const;
};

/// Runs every cross-check from the module invariants against one instance:
/// a closure space (paired with G of it) or an SPS (paired with F of it).
TheoremReport theorem_suite(const FiniteClosureSpace& space, const std::string& instance_id);
TheoremReport theorem_suite(const StatePropertySystem& sps, const std::string& instance_id);

} // namespace spslab
