#include "spslab/core.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spslab {

PointUniverse::PointUniverse(std::vector<std::string> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    for (int i = 0; i < int(labels_.size()); ++i) {
        if (labels_[i].empty()) throw std::invalid_argument("PointUniverse: empty label");
        if (!index_.emplace(labels_[i], i).second)
            throw std::invalid_argument("PointUniverse: duplicate label '" + labels_[i] + "'");
    }
}

std::optional<int> PointUniverse::find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int PointUniverse::index_of(const std::string& label) const {
    auto i = find(label);
    if (!i) throw std::invalid_argument("unknown point label '" + label + "'");
    return *i;
}

Bitset PointUniverse::subset_of(const std::vector<std::string>& labels) const {
    Bitset s(size());
    for (const auto& l : labels) s.set(index_of(l));
    return s;
}

std::vector<std::string> PointUniverse::labels_of(const Bitset& s) const {
    if (s.width() != size()) throw std::invalid_argument("subset width does not match universe");
    std::vector<std::string> out;
    s.for_each([&](int i) { out.push_back(labels_[i]); });
    return out;
}

SetFamily::SetFamily(int width, std::vector<Bitset> members)
    : width_(width), members_(std::move(members)) {
    for (const auto& m : members_)
        if (m.width() != width_) throw std::invalid_argument("SetFamily: member width mismatch");
    std::sort(members_.begin(), members_.end(), Bitset::canonical_less);
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SetFamily::contains(const Bitset& s) const { return index_of(s).has_value(); }

std::optional<int> SetFamily::index_of(const Bitset& s) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), s, Bitset::canonical_less);
    if (it != members_.end() && *it == s) return int(it - members_.begin());
    return std::nullopt;
}

SetFamily intersection_closure(const SetFamily& family) {
    std::vector<Bitset> work(family.begin(), family.end());
    work.push_back(Bitset::full(family.width()));
    std::sort(work.begin(), work.end(), Bitset::canonical_less);
    work.erase(std::unique(work.begin(), work.end()), work.end());

    // Pairwise fixpoint; for finite families this closes all intersections.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Bitset> found;
        for (size_t i = 0; i < work.size(); ++i)
            for (size_t j = i + 1; j < work.size(); ++j) {
                Bitset m = work[i] & work[j];
                if (!std::binary_search(work.begin(), work.end(), m, Bitset::canonical_less))
                    found.push_back(m);
            }
        if (!found.empty()) {
            grew = true;
            work.insert(work.end(), found.begin(), found.end());
            std::sort(work.begin(), work.end(), Bitset::canonical_less);
            work.erase(std::unique(work.begin(), work.end()), work.end());
        }
    }
    return SetFamily(family.width(), std::move(work));
}

std::optional<int> FiniteLattice::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int FiniteLattice::index_of(const std::string& name) const {
    auto i = find(name);
    if (!i) throw std::invalid_argument("unknown lattice element '" + name + "'");
    return *i;
}

int FiniteLattice::meet_all(const Bitset& elems) const {
    if (elems.width() != size()) throw std::invalid_argument("element set width mismatch");
    int acc = top_;
    elems.for_each([&](int e) { acc = meet(acc, e); });
    return acc;
}

int FiniteLattice::join_all(const Bitset& elems) const {
    if (elems.width() != size()) throw std::invalid_argument("element set width mismatch");
    int acc = bottom_;
    elems.for_each([&](int e) { acc = join(acc, e); });
    return acc;
}

int FiniteLattice::meet_all(const std::vector<std::string>& names) const {
    return meet_all(element_set(names));
}

int FiniteLattice::join_all(const std::vector<std::string>& names) const {
    return join_all(element_set(names));
}

Bitset FiniteLattice::element_set(const std::vector<std::string>& names) const {
    Bitset s(size());
    for (const auto& n : names) s.set(index_of(n));
    return s;
}

namespace {

std::string pair_str(const std::string& a, const std::string& b) {
    return "(" + a + ", " + b + ")";
}

} // namespace

struct LatticeBuilder {
    static LatticeValidation run(const std::vector<std::string>& elements,
                                 const std::vector<Bitset>& up_sets) {
        LatticeValidation out;
        auto& rep = out.report;
        const int n = int(elements.size());
        if (n == 0) {
            rep.fail("nonempty", "element list is empty");
            return out;
        }

        FiniteLattice lat;
        lat.names_ = elements;
        for (int i = 0; i < n; ++i)
            if (!lat.index_.emplace(elements[i], i).second)
                throw std::invalid_argument("duplicate lattice element '" + elements[i] + "'");
        lat.up_ = up_sets;
        lat.down_.assign(n, Bitset(n));
        for (int a = 0; a < n; ++a)
            lat.up_[a].for_each([&](int b) { lat.down_[b].set(a); });

        auto name = [&](int i) { return elements[i]; };

        // Poset axioms, each class checked independently with its first witness.
        for (int a = 0; a < n; ++a)
            if (!lat.up_[a].test(a)) {
                rep.fail("reflexivity", "missing " + name(a) + " <= " + name(a));
                break;
            }
        for (int a = 0; a < n; ++a) {
            bool found = false;
            for (int b = a + 1; b < n; ++b)
                if (lat.up_[a].test(b) && lat.up_[b].test(a)) {
                    rep.fail("antisymmetry",
                             name(a) + " <= " + name(b) + " and " + name(b) + " <= " + name(a));
                    found = true;
                    break;
                }
            if (found) break;
        }
        for (int a = 0; a < n; ++a) {
            bool found = false;
            for (int b = 0; b < n && !found; ++b) {
                if (!lat.up_[a].test(b)) continue;
                // a <= b requires up(b) subset of up(a)
                if (!lat.up_[b].is_subset_of(lat.up_[a])) {
                    Bitset extra = lat.up_[b].minus(lat.up_[a]);
                    int c = extra.indices().front();
                    rep.fail("transitivity", name(a) + " <= " + name(b) + " <= " + name(c) +
                                                 " but not " + name(a) + " <= " + name(c));
                    found = true;
                }
            }
            if (found) break;
        }
        if (!rep.passed()) return out;

        // Binary meets and joins; first missing pair per class.
        lat.meet_.assign(size_t(n) * n, -1);
        lat.join_.assign(size_t(n) * n, -1);
        bool meet_reported = false, join_reported = false;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                Bitset lower = lat.down_[a] & lat.down_[b];
                int glb = -1;
                lower.for_each([&](int c) {
                    if (glb == -1 && lower.is_subset_of(lat.down_[c])) glb = c;
                });
                if (glb == -1 && !meet_reported) {
                    rep.fail("no-meet", "no meet for " + pair_str(name(a), name(b)));
                    meet_reported = true;
                }
                lat.meet_[size_t(a) * n + b] = glb;

                Bitset upper = lat.up_[a] & lat.up_[b];
                int lub = -1;
                upper.for_each([&](int c) {
                    if (lub == -1 && upper.is_subset_of(lat.up_[c])) lub = c;
                });
                if (lub == -1 && !join_reported) {
                    rep.fail("no-join", "no join for " + pair_str(name(a), name(b)));
                    join_reported = true;
                }
                lat.join_[size_t(a) * n + b] = lub;
            }
        if (!rep.passed()) return out;

        // Finiteness plus binary bounds gives the global ones.
        int bot = 0, top = 0;
        for (int e = 1; e < n; ++e) {
            bot = lat.meet_[size_t(bot) * n + e];
            top = lat.join_[size_t(top) * n + e];
        }
        lat.bottom_ = bot;
        lat.top_ = top;
        out.lattice = std::move(lat);
        return out;
    }
};

LatticeValidation validate_lattice(const std::vector<std::string>& elements,
                                   const std::vector<std::pair<std::string, std::string>>& leq) {
    const int n = int(elements.size());
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < n; ++i)
        if (!index.emplace(elements[i], i).second)
            throw std::invalid_argument("duplicate lattice element '" + elements[i] + "'");
    std::vector<Bitset> up(n, Bitset(n));
    for (const auto& [a, b] : leq) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end()) throw std::invalid_argument("unknown lattice element '" + a + "'");
        if (ib == index.end()) throw std::invalid_argument("unknown lattice element '" + b + "'");
        up[ia->second].set(ib->second);
    }
    return LatticeBuilder::run(elements, up);
}

LatticeValidation validate_lattice(const std::vector<std::string>& elements,
                                   const std::vector<Bitset>& up_sets) {
    if (up_sets.size() != elements.size())
        throw std::invalid_argument("up_sets size does not match element count");
    return LatticeBuilder::run(elements, up_sets);
}

FiniteLattice interval(const FiniteLattice& lattice, int lo, int hi) {
    const int n = lattice.size();
    if (lo < 0 || lo >= n || hi < 0 || hi >= n)
        throw std::invalid_argument("interval: element index out of range");
    if (!lattice.leq(lo, hi))
        throw std::invalid_argument("interval: '" + lattice.name(lo) + "' is not below '" +
                                    lattice.name(hi) + "'");

    Bitset keep = lattice.up_set(lo) & lattice.down_set(hi);
    std::vector<int> elems = keep.indices();
    std::vector<std::string> names;
    names.reserve(elems.size());
    std::vector<int> pos(n, -1);
    for (int k = 0; k < int(elems.size()); ++k) {
        pos[elems[k]] = k;
        names.push_back(lattice.name(elems[k]));
    }
    std::vector<Bitset> up(elems.size(), Bitset(int(elems.size())));
    for (int k = 0; k < int(elems.size()); ++k)
        (lattice.up_set(elems[k]) & keep).for_each([&](int e) { up[k].set(pos[e]); });

    auto v = validate_lattice(names, up);
    if (!v.report.passed())
        throw std::logic_error("interval of a validated lattice failed validation");
    return std::move(*v.lattice);
}

} // namespace spslab
