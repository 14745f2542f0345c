#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spslab/closure.hpp"
#include "spslab/core.hpp"

namespace spslab {

class StatePropertySystem;
struct SpsValidation;

/// State property system (Sigma, L, xi): states, a complete property lattice
/// and the actuality map assigning each state its set of actual properties.
class StatePropertySystem {
public:
    StatePropertySystem(PointUniverse states, FiniteLattice lattice, std::vector<Bitset> xi);

    const PointUniverse& states() const { return states_; }
    const FiniteLattice& lattice() const { return lattice_; }
    int state_count() const { return states_.size(); }

    /// Actual properties of state p, as an element set over the lattice.
    const Bitset& xi(int p) const { return xi_.at(p); }
    const std::vector<Bitset>& xi() const { return xi_; }

    bool operator==(const StatePropertySystem& other) const {
        return states_ == other.states_ && lattice_ == other.lattice_ && xi_ == other.xi_;
    }

private:
    struct Unchecked {};
    StatePropertySystem(Unchecked, PointUniverse states, FiniteLattice lattice,
                        std::vector<Bitset> xi)
        : states_(std::move(states)), lattice_(std::move(lattice)), xi_(std::move(xi)) {}
    friend SpsValidation validate_sps(const PointUniverse&, const FiniteLattice&,
                                      const std::vector<Bitset>&);

    PointUniverse states_;
    FiniteLattice lattice_;
    std::vector<Bitset> xi_;  // xi_[p] over lattice elements
};

struct SpsValidation {
    ValidationReport report;
    std::optional<StatePropertySystem> sps;  // present iff report.passed()
};

/// Total check of the three state-property-system axioms: the bottom is never
/// actual, each xi(p) contains the top and is closed under meets, and the
/// lattice order coincides with Cartan-image inclusion in both directions.
SpsValidation validate_sps(const PointUniverse& states, const FiniteLattice& lattice,
                           const std::vector<Bitset>& xi);

/// Cartan map: the set of states in which property a is actual.
Bitset cartan(const StatePropertySystem& sps, int a);

/// {kappa(a) | a in L} in canonical order; always a valid closure family.
SetFamily cartan_image(const StatePropertySystem& sps);

/// The property with kappa(a) == s, if any. Injectivity of kappa makes the
/// answer unique on validated systems.
std::optional<int> cartan_preimage(const StatePropertySystem& sps, const Bitset& s);

/// Strongest property a state makes actual: the meet of xi(p).
int strongest_property(const StatePropertySystem& sps, int p);

/// Superselection by the definition: every state making the join actual makes
/// one of the two properties actual.
bool ssr_by_definition(const StatePropertySystem& sps, int a, int b);

/// Superselection by the Cartan criterion: kappa(a v b) == kappa(a) u kappa(b).
bool ssr_by_cartan(const StatePropertySystem& sps, int a, int b);

/// Both routes, cross-checked; disagreement is an internal invariant failure.
bool ssr(const StatePropertySystem& sps, int a, int b);

/// True iff every pair of properties is separated by a superselection rule.
bool is_classical_sps(const StatePropertySystem& sps);

/// Searches all of L for a complement witness a^c with a v a^c = I,
/// a ^ a^c = 0 and a ssr a^c; returns the canonically first one.
std::optional<int> is_classical_property(const StatePropertySystem& sps, int a);

/// All classical properties, as an element set.
Bitset classical_properties(const StatePropertySystem& sps);

/// True iff 0 and I are the only classical properties.
bool is_pure_nonclassical(const StatePropertySystem& sps);

/// SPS-morphism (m, n): source -> target with the state map running forward
/// and the property map running backward (n maps target properties to source
/// properties).
struct SpsMorphism {
    StatePropertySystem source;
    StatePropertySystem target;
    std::vector<int> state_map;     // source state -> target state
    std::vector<int> property_map;  // target property -> source property
};

/// Total check of the morphism condition
///   a in xi(m(p')) iff n(a) in xi'(p')  for all target properties a and
/// source states p'.
ValidationReport validate_morphism(const std::vector<int>& state_map,
                                   const std::vector<int>& property_map,
                                   const StatePropertySystem& source,
                                   const StatePropertySystem& target);

ValidationReport validate_morphism(const SpsMorphism& mor);

} // namespace spslab
