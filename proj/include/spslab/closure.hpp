#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spslab/core.hpp"

namespace spslab {

class FiniteClosureSpace;
struct SpaceValidation;

/// Finite closure space: a point universe X and an intersection-closed family
/// of closed subsets containing both the empty set and X.
class FiniteClosureSpace {
public:
    FiniteClosureSpace(PointUniverse universe, SetFamily closed);

    const PointUniverse& universe() const { return universe_; }
    const SetFamily& closed() const { return closed_; }
    int point_count() const { return universe_.size(); }

    bool operator==(const FiniteClosureSpace& other) const {
        return universe_ == other.universe_ && closed_ == other.closed_;
    }
    bool operator!=(const FiniteClosureSpace& other) const { return !(*this == other); }

private:
    struct Unchecked {};
    FiniteClosureSpace(Unchecked, PointUniverse universe, SetFamily closed)
        : universe_(std::move(universe)), closed_(std::move(closed)) {}
    friend SpaceValidation validate_closure_space(const PointUniverse&, const SetFamily&);

    PointUniverse universe_;
    SetFamily closed_;
};

struct SpaceValidation {
    ValidationReport report;
    std::optional<FiniteClosureSpace> space;  // present iff report.passed()
};

/// Total check of the closure-space invariants: empty set closed, X closed,
/// pairwise intersections closed, nonempty universe.
SpaceValidation validate_closure_space(const PointUniverse& universe, const SetFamily& family);

/// Partition of a universe into nonempty, pairwise disjoint covering blocks.
struct Partition {
    PointUniverse universe;
    SetFamily blocks;

    static Partition checked(PointUniverse universe, SetFamily blocks);  // throws on invalid
    int block_count() const { return blocks.size(); }
    /// Index of the block containing point p.
    int block_of(int p) const;
    bool operator==(const Partition& other) const {
        return universe == other.universe && blocks == other.blocks;
    }
};

/// Total map between closure spaces; mapping[i] is the codomain point index
/// of domain point i. The aggregate is unchecked; use make_continuous_map or
/// is_continuous to establish the preimage invariant.
struct ContinuousMap {
    FiniteClosureSpace domain;
    FiniteClosureSpace codomain;
    std::vector<int> mapping;
};

/// Checked constructor: rejects partial or discontinuous mappings.
ContinuousMap make_continuous_map(FiniteClosureSpace domain, FiniteClosureSpace codomain,
                                  std::vector<int> mapping);

/// Smallest closed superset of A.
Bitset closure_of(const FiniteClosureSpace& space, const Bitset& a);

/// All sets that are simultaneously closed and open, canonical order.
SetFamily clopen_sets(const FiniteClosureSpace& space);

/// True iff the closed family is also closed under pairwise unions.
bool is_topological(const FiniteClosureSpace& space);

/// True iff the only clopen sets are the empty set and X.
bool is_connected(const FiniteClosureSpace& space);

/// Subspace on a nonempty A with the trace family {F n A | F closed}.
FiniteClosureSpace induced_subspace(const FiniteClosureSpace& space, const Bitset& a);

/// Partition into maximal connected subsets via recursive clopen splitting.
/// Every block is closed in the original space.
Partition components(const FiniteClosureSpace& space);

/// Quotient by a partition: points are the blocks (labeled b1..bk in
/// canonical block order), and a block set is closed iff the union of its
/// blocks is closed upstairs. This is the coarsest closure structure making
/// the canonical surjection continuous.
FiniteClosureSpace quotient_space(const FiniteClosureSpace& space, const Partition& partition);

/// Label given to block i (canonical order) in quotient universes.
std::string quotient_block_label(int i);

/// The canonical surjection onto the quotient, as a continuous map.
ContinuousMap quotient_surjection(const FiniteClosureSpace& space, const Partition& partition);

bool is_totally_disconnected(const FiniteClosureSpace& space);

/// True iff every closed set is an intersection of clopen sets.
bool is_zero_dimensional(const FiniteClosureSpace& space);

/// Same universe, closed family = intersection closure of the clopens.
FiniteClosureSpace zero_dimensional_core(const FiniteClosureSpace& space);

/// True iff every closed-set preimage is closed.
bool is_continuous(const std::vector<int>& mapping, const FiniteClosureSpace& domain,
                   const FiniteClosureSpace& codomain);

/// Label-based mapping helper; unknown labels are input errors.
std::vector<int> point_map(const PointUniverse& domain, const PointUniverse& codomain,
                           const std::vector<std::pair<std::string, std::string>>& pairs);

} // namespace spslab
