#include "spslab/closure.hpp"

#include <algorithm>
#include <stdexcept>

namespace spslab {

namespace {

std::string set_str(const PointUniverse& u, const Bitset& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int i) {
        if (!first) out += ",";
        out += u.label(i);
        first = false;
    });
    return out + "}";
}

} // namespace

namespace {

ValidationReport check_closure_space(const PointUniverse& universe, const SetFamily& family);

} // namespace

FiniteClosureSpace::FiniteClosureSpace(PointUniverse universe, SetFamily closed)
    : universe_(std::move(universe)), closed_(std::move(closed)) {
    auto rep = check_closure_space(universe_, closed_);
    if (!rep.passed())
        throw std::logic_error("invalid closure space: " + rep.violations.front().detail);
}

SpaceValidation validate_closure_space(const PointUniverse& universe, const SetFamily& family) {
    SpaceValidation out;
    out.report = check_closure_space(universe, family);
    if (out.report.passed())
        out.space = FiniteClosureSpace(FiniteClosureSpace::Unchecked{}, universe, family);
    return out;
}

namespace {

ValidationReport check_closure_space(const PointUniverse& universe, const SetFamily& family) {
    ValidationReport rep;
    const int n = universe.size();
    if (n == 0) {
        rep.fail("nonempty-universe", "universe has no points");
        return rep;
    }
    if (family.width() != n) {
        rep.fail("family-width", "family is not over the given universe");
        return rep;
    }
    if (!family.contains(Bitset(n))) rep.fail("empty-closed", "empty set not closed");
    if (!family.contains(Bitset::full(n))) rep.fail("universe-closed", "X not closed");
    for (int i = 0; i < family.size() && rep.passed(); ++i)
        for (int j = i + 1; j < family.size(); ++j) {
            Bitset m = family[i] & family[j];
            if (!family.contains(m)) {
                rep.fail("intersection-closed",
                         set_str(universe, m) + " missing: intersection of " +
                             set_str(universe, family[i]) + " and " + set_str(universe, family[j]) +
                             " not closed");
                break;
            }
        }
    return rep;
}

} // namespace

Partition Partition::checked(PointUniverse universe, SetFamily blocks) {
    const int n = universe.size();
    if (blocks.width() != n) throw std::invalid_argument("partition blocks not over the universe");
    Bitset seen(n);
    for (const auto& b : blocks) {
        if (b.none()) throw std::invalid_argument("partition block is empty");
        if (seen.intersects(b)) throw std::invalid_argument("partition blocks overlap");
        seen = seen | b;
    }
    if (seen != Bitset::full(n)) throw std::invalid_argument("partition does not cover the universe");
    return Partition{std::move(universe), std::move(blocks)};
}

int Partition::block_of(int p) const {
    for (int i = 0; i < blocks.size(); ++i)
        if (blocks[i].test(p)) return i;
    throw std::invalid_argument("point index outside the universe");
}

Bitset closure_of(const FiniteClosureSpace& space, const Bitset& a) {
    if (a.width() != space.point_count())
        throw std::invalid_argument("subset width does not match the space");
    Bitset acc = Bitset::full(space.point_count());
    for (const auto& f : space.closed())
        if (a.is_subset_of(f)) acc = acc & f;
    return acc;
}

SetFamily clopen_sets(const FiniteClosureSpace& space) {
    std::vector<Bitset> out;
    for (const auto& f : space.closed())
        if (space.closed().contains(f.complement())) out.push_back(f);
    return SetFamily(space.point_count(), std::move(out));
}

bool is_topological(const FiniteClosureSpace& space) {
    const auto& fam = space.closed();
    for (int i = 0; i < fam.size(); ++i)
        for (int j = i + 1; j < fam.size(); ++j)
            if (!fam.contains(fam[i] | fam[j])) return false;
    return true;
}

bool is_connected(const FiniteClosureSpace& space) {
    // Validation guarantees a nonempty universe, so the empty set and X are
    // two distinct clopens of every space.
    return clopen_sets(space).size() == 2;
}

namespace {

/// Trace family {F n A} as plain masks, without relabeling.
std::vector<Bitset> trace_family(const std::vector<Bitset>& closed, const Bitset& a) {
    std::vector<Bitset> tr;
    tr.reserve(closed.size());
    for (const auto& f : closed) tr.push_back(f & a);
    std::sort(tr.begin(), tr.end(), Bitset::canonical_less);
    tr.erase(std::unique(tr.begin(), tr.end()), tr.end());
    return tr;
}

/// Proper nonempty clopens of the subspace (a, traces), canonically first one,
/// or nullopt when the subspace is connected.
std::optional<Bitset> first_proper_clopen(const std::vector<Bitset>& traces, const Bitset& a) {
    for (const auto& t : traces) {
        if (t.none() || t == a) continue;
        Bitset comp = a.minus(t);
        if (std::binary_search(traces.begin(), traces.end(), comp, Bitset::canonical_less))
            return t;  // traces are canonically sorted, so first hit is canonical
    }
    return std::nullopt;
}

void split_components(const std::vector<Bitset>& traces, const Bitset& a,
                      std::vector<Bitset>& out) {
    auto cl = first_proper_clopen(traces, a);
    if (!cl) {
        out.push_back(a);
        return;
    }
    Bitset rest = a.minus(*cl);
    split_components(trace_family(traces, *cl), *cl, out);
    split_components(trace_family(traces, rest), rest, out);
}

} // namespace

FiniteClosureSpace induced_subspace(const FiniteClosureSpace& space, const Bitset& a) {
    if (a.width() != space.point_count())
        throw std::invalid_argument("subset width does not match the space");
    if (a.none()) throw std::invalid_argument("induced subspace of the empty set");

    std::vector<int> pts = a.indices();
    std::vector<std::string> labels;
    labels.reserve(pts.size());
    std::vector<int> pos(space.point_count(), -1);
    for (int k = 0; k < int(pts.size()); ++k) {
        pos[pts[k]] = k;
        labels.push_back(space.universe().label(pts[k]));
    }
    PointUniverse sub(labels);  // labels of a sorted universe stay sorted

    std::vector<Bitset> fam;
    for (const auto& f : space.closed()) {
        Bitset t(int(pts.size()));
        (f & a).for_each([&](int p) { t.set(pos[p]); });
        fam.push_back(t);
    }
    return FiniteClosureSpace(sub, SetFamily(int(pts.size()), std::move(fam)));
}

Partition components(const FiniteClosureSpace& space) {
    std::vector<Bitset> blocks;
    std::vector<Bitset> closed(space.closed().begin(), space.closed().end());
    std::sort(closed.begin(), closed.end(), Bitset::canonical_less);
    split_components(closed, Bitset::full(space.point_count()), blocks);
    return Partition::checked(space.universe(), SetFamily(space.point_count(), std::move(blocks)));
}

std::string quotient_block_label(int i) { return "b" + std::to_string(i + 1); }

FiniteClosureSpace quotient_space(const FiniteClosureSpace& space, const Partition& partition) {
    if (partition.universe != space.universe())
        throw std::invalid_argument("partition is not over the space's universe");
    const int k = partition.block_count();
    if (k > 20)
        throw std::invalid_argument("quotient over more than 20 blocks is not supported");
    std::vector<std::string> labels;
    labels.reserve(k);
    for (int i = 0; i < k; ++i) labels.push_back(quotient_block_label(i));
    PointUniverse omega(labels);
    // Sorted universe order may differ from block order once k >= 10.
    std::vector<int> point_of_block(k);
    for (int i = 0; i < k; ++i) point_of_block[i] = omega.index_of(quotient_block_label(i));

    std::vector<Bitset> fam;
    for (unsigned long sel = 0; sel < (1ul << k); ++sel) {
        Bitset up(space.point_count());
        Bitset down(k);
        for (int i = 0; i < k; ++i)
            if (sel >> i & 1) {
                up = up | partition.blocks[i];
                down.set(point_of_block[i]);
            }
        if (space.closed().contains(up)) fam.push_back(down);
    }
    return FiniteClosureSpace(omega, SetFamily(k, std::move(fam)));
}

ContinuousMap quotient_surjection(const FiniteClosureSpace& space, const Partition& partition) {
    FiniteClosureSpace q = quotient_space(space, partition);
    std::vector<int> mapping(space.point_count());
    for (int p = 0; p < space.point_count(); ++p) {
        int b = partition.block_of(p);
        mapping[p] = q.universe().index_of(quotient_block_label(b));
    }
    if (!is_continuous(mapping, space, q))
        throw std::logic_error("quotient surjection is not continuous");
    return ContinuousMap{space, std::move(q), std::move(mapping)};
}

bool is_totally_disconnected(const FiniteClosureSpace& space) {
    Partition p = components(space);
    for (const auto& b : p.blocks)
        if (b.count() != 1) return false;
    return true;
}

bool is_zero_dimensional(const FiniteClosureSpace& space) {
    SetFamily core = intersection_closure(clopen_sets(space));
    for (const auto& f : space.closed())
        if (!core.contains(f)) return false;
    return true;
}

FiniteClosureSpace zero_dimensional_core(const FiniteClosureSpace& space) {
    return FiniteClosureSpace(space.universe(), intersection_closure(clopen_sets(space)));
}

ContinuousMap make_continuous_map(FiniteClosureSpace domain, FiniteClosureSpace codomain,
                                  std::vector<int> mapping) {
    if (!is_continuous(mapping, domain, codomain))
        throw std::invalid_argument("mapping is not continuous");
    return ContinuousMap{std::move(domain), std::move(codomain), std::move(mapping)};
}

bool is_continuous(const std::vector<int>& mapping, const FiniteClosureSpace& domain,
                   const FiniteClosureSpace& codomain) {
    if (int(mapping.size()) != domain.point_count())
        throw std::invalid_argument("mapping is not total on the domain");
    for (int v : mapping)
        if (v < 0 || v >= codomain.point_count())
            throw std::invalid_argument("mapping hits a point outside the codomain");
    for (const auto& b : codomain.closed()) {
        Bitset pre(domain.point_count());
        for (int p = 0; p < domain.point_count(); ++p)
            if (b.test(mapping[p])) pre.set(p);
        if (!domain.closed().contains(pre)) return false;
    }
    return true;
}

std::vector<int> point_map(const PointUniverse& domain, const PointUniverse& codomain,
                           const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<int> mapping(domain.size(), -1);
    for (const auto& [from, to] : pairs) mapping[domain.index_of(from)] = codomain.index_of(to);
    for (int p = 0; p < domain.size(); ++p)
        if (mapping[p] < 0)
            throw std::invalid_argument("mapping is missing point '" + domain.label(p) + "'");
    return mapping;
}

} // namespace spslab
