#include "spslab/functors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace spslab {

FiniteClosureSpace functor_F(const StatePropertySystem& sps) {
    auto v = validate_closure_space(sps.states(), cartan_image(sps));
    if (!v.report.passed())
        throw std::logic_error("F(sps) is not a closure space: " +
                               v.report.violations.front().detail);
    return std::move(*v.space);
}

ContinuousMap functor_F_mor(const SpsMorphism& mor) {
    FiniteClosureSpace dom = functor_F(mor.source);
    FiniteClosureSpace cod = functor_F(mor.target);
    if (!is_continuous(mor.state_map, dom, cod))
        throw std::logic_error("F of a validated morphism is not continuous");
    return ContinuousMap{std::move(dom), std::move(cod), mor.state_map};
}

std::string property_name_of_set(const PointUniverse& universe, const Bitset& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int i) {
        if (!first) out += ",";
        out += universe.label(i);
        first = false;
    });
    return out + "}";
}

StatePropertySystem functor_G(const FiniteClosureSpace& space) {
    const auto& fam = space.closed();
    const int nl = fam.size();
    std::vector<std::string> names;
    names.reserve(nl);
    std::vector<Bitset> up(nl, Bitset(nl));
    for (int i = 0; i < nl; ++i) {
        names.push_back(property_name_of_set(space.universe(), fam[i]));
        for (int j = 0; j < nl; ++j)
            if (fam[i].is_subset_of(fam[j])) up[i].set(j);
    }
    auto lv = validate_lattice(names, up);
    if (!lv.report.passed())
        throw std::logic_error("closed family under inclusion is not a lattice: " +
                               lv.report.violations.front().detail);

    std::vector<Bitset> xi(space.point_count(), Bitset(nl));
    for (int p = 0; p < space.point_count(); ++p)
        for (int i = 0; i < nl; ++i)
            if (fam[i].test(p)) xi[p].set(i);

    auto sv = validate_sps(space.universe(), *lv.lattice, xi);
    if (!sv.report.passed())
        throw std::logic_error("G(space) violates the axioms: " +
                               sv.report.violations.front().detail);
    return std::move(*sv.sps);
}

SpsMorphism functor_G_mor(const ContinuousMap& f) {
    if (!is_continuous(f.mapping, f.domain, f.codomain))
        throw std::invalid_argument("functor_G_mor requires a continuous map");
    StatePropertySystem source = functor_G(f.domain);
    StatePropertySystem target = functor_G(f.codomain);

    // n(B) = f^-1(B); continuity puts every preimage in the domain family.
    std::vector<int> property_map(target.lattice().size(), -1);
    for (int b = 0; b < f.codomain.closed().size(); ++b) {
        Bitset pre(f.domain.point_count());
        for (int p = 0; p < f.domain.point_count(); ++p)
            if (f.codomain.closed()[b].test(f.mapping[p])) pre.set(p);
        auto idx = f.domain.closed().index_of(pre);
        if (!idx) throw std::logic_error("preimage of a closed set is not closed");
        property_map[b] = *idx;
    }
    SpsMorphism mor{std::move(source), std::move(target), f.mapping, std::move(property_map)};
    auto rep = validate_morphism(mor);
    if (!rep.passed())
        throw std::logic_error("G of a continuous map is not a morphism: " +
                               rep.violations.front().detail);
    return mor;
}

IsoWitness unit_iso(const StatePropertySystem& sps) {
    StatePropertySystem image = functor_G(functor_F(sps));

    // kappa as an index map L -> closed family; injective by axiom 3.
    const int nl = sps.lattice().size();
    std::vector<int> kappa_idx(nl, -1);
    for (int a = 0; a < nl; ++a) {
        auto idx = image.lattice().find(property_name_of_set(sps.states(), cartan(sps, a)));
        if (!idx) throw std::logic_error("kappa misses the Cartan image");
        kappa_idx[a] = *idx;
    }
    std::vector<int> kappa_inv(nl, -1);
    for (int a = 0; a < nl; ++a) {
        if (kappa_inv[kappa_idx[a]] != -1) throw std::logic_error("kappa is not injective");
        kappa_inv[kappa_idx[a]] = a;
    }

    std::vector<int> id(sps.state_count());
    for (int p = 0; p < sps.state_count(); ++p) id[p] = p;

    // forward: S -> G(F(S)) carries G(F(S))-properties back along kappa^-1;
    // backward: G(F(S)) -> S carries S-properties along kappa.
    IsoWitness w{SpsMorphism{sps, image, id, kappa_inv}, SpsMorphism{image, sps, id, kappa_idx}};
    if (!validate_morphism(w.forward).passed() || !validate_morphism(w.backward).passed())
        throw std::logic_error("unit isomorphism failed to validate");
    if (!witness_composites_identity(w))
        throw std::logic_error("unit isomorphism composites are not identities");
    return w;
}

bool counit_check(const FiniteClosureSpace& space) {
    return functor_F(functor_G(space)) == space;
}

bool witness_composites_identity(const IsoWitness& w) {
    const auto& f = w.forward;
    const auto& b = w.backward;
    if (f.source.state_count() != b.target.state_count()) return false;
    for (int p = 0; p < f.source.state_count(); ++p)
        if (b.state_map[f.state_map[p]] != p) return false;
    for (int p = 0; p < b.source.state_count(); ++p)
        if (f.state_map[b.state_map[p]] != p) return false;
    // Property maps run backward: forward's lives on the target lattice.
    for (int a = 0; a < f.target.lattice().size(); ++a)
        if (b.property_map[f.property_map[a]] != a) return false;
    for (int a = 0; a < b.target.lattice().size(); ++a)
        if (f.property_map[b.property_map[a]] != a) return false;
    return true;
}

namespace {

/// Per-point signature: sorted sizes of the closed sets containing the point.
std::vector<std::vector<int>> point_signatures(const FiniteClosureSpace& sp) {
    std::vector<std::vector<int>> sig(sp.point_count());
    for (int p = 0; p < sp.point_count(); ++p) {
        for (const auto& f : sp.closed())
            if (f.test(p)) sig[p].push_back(f.count());
        std::sort(sig[p].begin(), sig[p].end());
    }
    return sig;
}

std::vector<int> family_size_profile(const FiniteClosureSpace& sp) {
    std::vector<int> prof;
    for (const auto& f : sp.closed()) prof.push_back(f.count());
    std::sort(prof.begin(), prof.end());
    return prof;
}

bool extend(const FiniteClosureSpace& a, const FiniteClosureSpace& b,
            const std::vector<std::vector<int>>& siga, const std::vector<std::vector<int>>& sigb,
            std::vector<int>& map, std::vector<bool>& used, int next) {
    const int n = a.point_count();
    if (next == n) {
        for (const auto& f : a.closed()) {
            Bitset img(n);
            f.for_each([&](int p) { img.set(map[p]); });
            if (!b.closed().contains(img)) return false;
        }
        return true;
    }
    for (int q = 0; q < n; ++q) {
        if (used[q] || siga[next] != sigb[q]) continue;
        map[next] = q;
        used[q] = true;
        if (extend(a, b, siga, sigb, map, used, next + 1)) return true;
        used[q] = false;
        map[next] = -1;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> spaces_isomorphic(const FiniteClosureSpace& a,
                                                  const FiniteClosureSpace& b) {
    if (a.point_count() != b.point_count()) return std::nullopt;
    if (a.closed().size() != b.closed().size()) return std::nullopt;
    if (family_size_profile(a) != family_size_profile(b)) return std::nullopt;
    if (clopen_sets(a).size() != clopen_sets(b).size()) return std::nullopt;

    auto siga = point_signatures(a);
    auto sigb = point_signatures(b);
    {
        auto ma = siga;
        auto mb = sigb;
        std::sort(ma.begin(), ma.end());
        std::sort(mb.begin(), mb.end());
        if (ma != mb) return std::nullopt;
    }

    std::vector<int> map(a.point_count(), -1);
    std::vector<bool> used(a.point_count(), false);
    if (extend(a, b, siga, sigb, map, used, 0)) return map;
    return std::nullopt;
}

namespace {

/// Multiset fingerprint of the ssr table: count of separated pairs.
int ssr_true_count(const StatePropertySystem& s) {
    int c = 0;
    const int nl = s.lattice().size();
    for (int a = 0; a < nl; ++a)
        for (int b = a; b < nl; ++b)
            if (ssr(s, a, b)) ++c;
    return c;
}

} // namespace

std::optional<IsoWitness> sps_isomorphic(const StatePropertySystem& s1,
                                         const StatePropertySystem& s2) {
    if (s1.state_count() != s2.state_count()) return std::nullopt;
    if (s1.lattice().size() != s2.lattice().size()) return std::nullopt;
    if (ssr_true_count(s1) != ssr_true_count(s2)) return std::nullopt;

    FiniteClosureSpace f1 = functor_F(s1);
    FiniteClosureSpace f2 = functor_F(s2);
    auto m = spaces_isomorphic(f1, f2);
    if (!m) return std::nullopt;

    // A point bijection carrying kappa(L1) onto kappa(L2) induces the
    // property bijection n(b) = kappa1^-1(m^-1(kappa2(b))) and both morphism
    // conditions follow from the Cartan definition.
    const int n = s1.state_count();
    std::vector<int> minv(n);
    for (int p = 0; p < n; ++p) minv[(*m)[p]] = p;

    const int nl = s1.lattice().size();
    std::vector<int> n21(nl, -1);  // s2 property -> s1 property
    for (int b = 0; b < nl; ++b) {
        Bitset k2 = cartan(s2, b);
        Bitset pre(n);
        k2.for_each([&](int q) { pre.set(minv[q]); });
        auto a = cartan_preimage(s1, pre);
        if (!a) throw std::logic_error("bijection does not carry the Cartan family");
        n21[b] = *a;
    }
    std::vector<int> n12(nl, -1);
    for (int b = 0; b < nl; ++b) n12[n21[b]] = b;

    IsoWitness w{SpsMorphism{s1, s2, *m, n21}, SpsMorphism{s2, s1, minv, n12}};
    if (!validate_morphism(w.forward).passed() || !validate_morphism(w.backward).passed())
        throw std::logic_error("isomorphism witness failed to validate");
    if (!witness_composites_identity(w))
        throw std::logic_error("isomorphism witness composites are not identities");
    return w;
}

} // namespace spslab
