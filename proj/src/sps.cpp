#include "spslab/sps.hpp"

#include <algorithm>
#include <stdexcept>

namespace spslab {

namespace {

ValidationReport check_sps(const PointUniverse& states, const FiniteLattice& lattice,
                           const std::vector<Bitset>& xi);

} // namespace

StatePropertySystem::StatePropertySystem(PointUniverse states, FiniteLattice lattice,
                                         std::vector<Bitset> xi)
    : states_(std::move(states)), lattice_(std::move(lattice)), xi_(std::move(xi)) {
    auto rep = check_sps(states_, lattice_, xi_);
    if (!rep.passed())
        throw std::logic_error("invalid state property system: " + rep.violations.front().detail);
}

SpsValidation validate_sps(const PointUniverse& states, const FiniteLattice& lattice,
                           const std::vector<Bitset>& xi) {
    SpsValidation out;
    out.report = check_sps(states, lattice, xi);
    if (out.report.passed())
        out.sps = StatePropertySystem(StatePropertySystem::Unchecked{}, states, lattice, xi);
    return out;
}

namespace {

ValidationReport check_sps(const PointUniverse& states, const FiniteLattice& lattice,
                           const std::vector<Bitset>& xi) {
    ValidationReport rep;
    const int ns = states.size();
    const int nl = lattice.size();
    if (ns == 0) {
        rep.fail("nonempty-states", "state set is empty");
        return rep;
    }
    if (int(xi.size()) != ns) {
        rep.fail("xi-total", "xi is not total on the states");
        return rep;
    }
    for (const auto& s : xi)
        if (s.width() != nl) {
            rep.fail("xi-width", "xi value is not a set of lattice elements");
            return rep;
        }

    // Axiom 1: the bottom is never actual.
    for (int p = 0; p < ns && rep.passed(); ++p)
        if (xi[p].test(lattice.bottom()))
            rep.fail("axiom-1", "0 in xi(" + states.label(p) + ")");

    // Axiom 2: xi(p) is closed under meets of arbitrary subfamilies. For a
    // finite lattice that is equivalent to: top in xi(p) (the empty meet) and
    // xi(p) closed under pairwise meets.
    for (int p = 0; p < ns && rep.passed(); ++p) {
        if (!xi[p].test(lattice.top())) {
            rep.fail("axiom-2", "I not in xi(" + states.label(p) + ")");
            break;
        }
        auto elems = xi[p].indices();
        for (size_t i = 0; i < elems.size() && rep.passed(); ++i)
            for (size_t j = i + 1; j < elems.size(); ++j) {
                int m = lattice.meet(elems[i], elems[j]);
                if (!xi[p].test(m)) {
                    rep.fail("axiom-2", "meet of " + lattice.name(elems[i]) + " and " +
                                            lattice.name(elems[j]) + " not in xi(" +
                                            states.label(p) + ")");
                    break;
                }
            }
    }

    // Axiom 3, both directions: a <= b iff kappa(a) subset of kappa(b).
    if (rep.passed()) {
        std::vector<Bitset> kappa(nl, Bitset(ns));
        for (int p = 0; p < ns; ++p)
            xi[p].for_each([&](int a) { kappa[a].set(p); });
        for (int a = 0; a < nl && rep.passed(); ++a)
            for (int b = 0; b < nl; ++b) {
                bool le = lattice.leq(a, b);
                bool inc = kappa[a].is_subset_of(kappa[b]);
                if (le && !inc) {
                    Bitset extra = kappa[a].minus(kappa[b]);
                    rep.fail("axiom-3", lattice.name(a) + " <= " + lattice.name(b) +
                                            " but state " + states.label(extra.indices().front()) +
                                            " makes only the first actual");
                    break;
                }
                if (!le && inc) {
                    rep.fail("axiom-3", "kappa(" + lattice.name(a) + ") subset of kappa(" +
                                            lattice.name(b) + ") but not " + lattice.name(a) +
                                            " <= " + lattice.name(b));
                    break;
                }
            }
    }

    return rep;
}

} // namespace

Bitset cartan(const StatePropertySystem& sps, int a) {
    if (a < 0 || a >= sps.lattice().size())
        throw std::invalid_argument("unknown property index");
    Bitset s(sps.state_count());
    for (int p = 0; p < sps.state_count(); ++p)
        if (sps.xi(p).test(a)) s.set(p);
    return s;
}

SetFamily cartan_image(const StatePropertySystem& sps) {
    std::vector<Bitset> members;
    members.reserve(sps.lattice().size());
    for (int a = 0; a < sps.lattice().size(); ++a) members.push_back(cartan(sps, a));
    return SetFamily(sps.state_count(), std::move(members));
}

std::optional<int> cartan_preimage(const StatePropertySystem& sps, const Bitset& s) {
    for (int a = 0; a < sps.lattice().size(); ++a)
        if (cartan(sps, a) == s) return a;
    return std::nullopt;
}

int strongest_property(const StatePropertySystem& sps, int p) {
    if (p < 0 || p >= sps.state_count()) throw std::invalid_argument("unknown state index");
    return sps.lattice().meet_all(sps.xi(p));
}

bool ssr_by_definition(const StatePropertySystem& sps, int a, int b) {
    int j = sps.lattice().join(a, b);
    for (int p = 0; p < sps.state_count(); ++p)
        if (sps.xi(p).test(j) && !sps.xi(p).test(a) && !sps.xi(p).test(b)) return false;
    return true;
}

bool ssr_by_cartan(const StatePropertySystem& sps, int a, int b) {
    return cartan(sps, sps.lattice().join(a, b)) == (cartan(sps, a) | cartan(sps, b));
}

bool ssr(const StatePropertySystem& sps, int a, int b) {
    if (a < 0 || a >= sps.lattice().size() || b < 0 || b >= sps.lattice().size())
        throw std::invalid_argument("unknown property index");
    bool by_def = ssr_by_definition(sps, a, b);
    if (by_def != ssr_by_cartan(sps, a, b))
        throw std::logic_error("ssr routes disagree on (" + sps.lattice().name(a) + ", " +
                               sps.lattice().name(b) + ")");
    return by_def;
}

bool is_classical_sps(const StatePropertySystem& sps) {
    const int nl = sps.lattice().size();
    for (int a = 0; a < nl; ++a)
        for (int b = a; b < nl; ++b)
            if (!ssr(sps, a, b)) return false;
    return true;
}

std::optional<int> is_classical_property(const StatePropertySystem& sps, int a) {
    const auto& lat = sps.lattice();
    if (a < 0 || a >= lat.size()) throw std::invalid_argument("unknown property index");
    for (int c = 0; c < lat.size(); ++c)
        if (lat.join(a, c) == lat.top() && lat.meet(a, c) == lat.bottom() && ssr(sps, a, c))
            return c;
    return std::nullopt;
}

Bitset classical_properties(const StatePropertySystem& sps) {
    Bitset out(sps.lattice().size());
    for (int a = 0; a < sps.lattice().size(); ++a)
        if (is_classical_property(sps, a)) out.set(a);
    return out;
}

bool is_pure_nonclassical(const StatePropertySystem& sps) {
    Bitset expected(sps.lattice().size());
    expected.set(sps.lattice().bottom());
    expected.set(sps.lattice().top());
    return classical_properties(sps) == expected;
}

ValidationReport validate_morphism(const std::vector<int>& state_map,
                                   const std::vector<int>& property_map,
                                   const StatePropertySystem& source,
                                   const StatePropertySystem& target) {
    ValidationReport rep;
    if (int(state_map.size()) != source.state_count()) {
        rep.fail("m-total", "state map is not total on the source states");
        return rep;
    }
    if (int(property_map.size()) != target.lattice().size()) {
        rep.fail("n-total", "property map is not total on the target properties");
        return rep;
    }
    for (int v : state_map)
        if (v < 0 || v >= target.state_count()) {
            rep.fail("m-range", "state map leaves the target states");
            return rep;
        }
    for (int v : property_map)
        if (v < 0 || v >= source.lattice().size()) {
            rep.fail("n-range", "property map leaves the source properties");
            return rep;
        }
    for (int a = 0; a < target.lattice().size(); ++a)
        for (int p = 0; p < source.state_count(); ++p) {
            bool lhs = target.xi(state_map[p]).test(a);
            bool rhs = source.xi(p).test(property_map[a]);
            if (lhs != rhs) {
                rep.fail("morphism",
                         "property " + target.lattice().name(a) + " and state " +
                             source.states().label(p) + ": " +
                             (lhs ? "actual after mapping but n(a) not actual"
                                  : "n(a) actual but not actual after mapping"));
                return rep;
            }
        }
    return rep;
}

ValidationReport validate_morphism(const SpsMorphism& mor) {
    return validate_morphism(mor.state_map, mor.property_map, mor.source, mor.target);
}

} // namespace spslab
