#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spslab/functors.hpp"

namespace spslab {

/// One connection component of an SPS, carried with its component property
/// s(omega) and the restricted system (omega, [0, s(omega)], xi n [0,s]).
struct ComponentSystem {
    Bitset omega;  // over the source states
    int s_omega;   // source lattice element with kappa(s_omega) == omega
    StatePropertySystem sps;
};

/// Witness that eta is not constant on a component: p ~ q but the property
/// distinguishes xi(p) n C from xi(q) n C.
struct EtaCounterexample {
    std::string state_p;
    std::string state_q;
    std::string property;
};

/// Outcome of the totally classical construction. The construction is
/// verified, not trusted: when eta is ill-defined or the generated property
/// set fails the lattice or SPS axioms, the failure is returned as data.
struct TotallyClassicalResult {
    std::optional<StatePropertySystem> system;
    std::optional<EtaCounterexample> eta_failure;
    ValidationReport lattice_report;
    ValidationReport sps_report;
    bool ok() const { return system.has_value(); }
    std::string failure_summary() const;
};

struct EvidenceItem {
    std::string name;
    bool pass;
    std::string detail;
};

/// Full decomposition bundle with verification evidence for every invariant.
struct Decomposition {
    StatePropertySystem source;
    Partition omegas;
    std::vector<ComponentSystem> components;
    TotallyClassicalResult totally_classical;
    StatePropertySystem via_quotient;
    StatePropertySystem classical_part;
    std::vector<EvidenceItem> evidence;

    bool all_evidence_passed() const;
};

/// The unique property a with kappa(a) == omega; components are closed in
/// F(sps), so the lookup never fails on a validated system.
int component_property(const StatePropertySystem& sps, const Bitset& omega);

/// One restricted system per connection component, each validated and pure
/// nonclassical.
std::vector<ComponentSystem> component_systems(const StatePropertySystem& sps);

/// The explicit totally classical construction: states are the components,
/// properties are all joins of component properties, eta restricts xi.
TotallyClassicalResult totally_classical_system(const StatePropertySystem& sps);

/// The quotient route: G applied to the quotient of F(sps) by its components.
StatePropertySystem totally_classical_via_quotient(const StatePropertySystem& sps);

/// Sub-system over states kappa(c) with lattice [0, c] and restricted xi.
StatePropertySystem segment_system(const StatePropertySystem& sps, int c);

/// All meets of classical properties with restricted xi; the classical part.
StatePropertySystem classical_part(const StatePropertySystem& sps);

/// Everything above plus an evidence report for each decomposition invariant.
Decomposition decompose(const StatePropertySystem& sps);

} // namespace spslab
