#pragma once

#include <optional>

#include "spslab/closure.hpp"
#include "spslab/sps.hpp"

namespace spslab {

/// Pair of mutually inverse SPS-morphisms; composites are identities on both
/// states and properties.
struct IsoWitness {
    SpsMorphism forward;
    SpsMorphism backward;
};

/// F on objects: (Sigma, L, xi) -> (Sigma, kappa(L)).
FiniteClosureSpace functor_F(const StatePropertySystem& sps);

/// F on morphisms: (m, n) -> m, with continuity asserted.
ContinuousMap functor_F_mor(const SpsMorphism& mor);

/// G on objects: (X, F) -> (X, F, xi-bar) where the property lattice is the
/// closed family ordered by inclusion and xi-bar(p) = {F | p in F}.
/// Lattice elements are named after their sets, e.g. "{x1,x2}".
StatePropertySystem functor_G(const FiniteClosureSpace& space);

/// Name given to the property corresponding to a closed set.
std::string property_name_of_set(const PointUniverse& universe, const Bitset& s);

/// G on morphisms: f -> (f, preimage map), validated.
SpsMorphism functor_G_mor(const ContinuousMap& f);

/// The isomorphism S = G(F(S)) of the equivalence: forward carries properties
/// back along kappa^-1, backward along kappa; both validate and compose to
/// identities.
IsoWitness unit_iso(const StatePropertySystem& sps);

/// The other half of the equivalence: F(G(X, F)) equals (X, F) bit-exactly.
bool counit_check(const FiniteClosureSpace& space);

/// Pointwise check that both composites of a witness are identities.
bool witness_composites_identity(const IsoWitness& w);

/// Backtracking search for an isomorphism witness: a state bijection carrying
/// one Cartan family onto the other, pruned by counting invariants, returning
/// the canonically first witness.
std::optional<IsoWitness> sps_isomorphic(const StatePropertySystem& s1,
                                         const StatePropertySystem& s2);

/// Closure-space isomorphism: bijection on points carrying closed to closed,
/// both ways. Returns the canonically first point bijection.
std::optional<std::vector<int>> spaces_isomorphic(const FiniteClosureSpace& a,
                                                  const FiniteClosureSpace& b);

} // namespace spslab
