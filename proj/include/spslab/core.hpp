#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spslab/bitset.hpp"

namespace spslab {

/// Ordered universe of distinct point labels. Iteration order is the sorted
/// label order; all subsets over the universe are bitmasks indexed by it.
class PointUniverse {
public:
    explicit PointUniverse(std::vector<std::string> labels);

    int size() const { return int(labels_.size()); }
    const std::string& label(int i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }

    std::optional<int> find(const std::string& label) const;
    int index_of(const std::string& label) const;  // throws on unknown label

    Bitset empty_set() const { return Bitset(size()); }
    Bitset full_set() const { return Bitset::full(size()); }
    Bitset subset_of(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(const Bitset& s) const;

    bool operator==(const PointUniverse& other) const { return labels_ == other.labels_; }
    bool operator!=(const PointUniverse& other) const { return !(*this == other); }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

/// Finite collection of subsets of one universe, deduplicated and kept in
/// canonical order (cardinality, then lexicographic by member indices).
class SetFamily {
public:
    explicit SetFamily(int width) : width_(width) {}
    SetFamily(int width, std::vector<Bitset> members);

    int width() const { return width_; }
    int size() const { return int(members_.size()); }
    const Bitset& operator[](int i) const { return members_.at(i); }
    const std::vector<Bitset>& members() const { return members_; }

    bool contains(const Bitset& s) const;
    /// Index of s in canonical order, or nullopt.
    std::optional<int> index_of(const Bitset& s) const;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const SetFamily& other) const {
        return width_ == other.width_ && members_ == other.members_;
    }
    bool operator!=(const SetFamily& other) const { return !(*this == other); }

private:
    int width_;
    std::vector<Bitset> members_;  // canonically sorted, unique
};

/// Smallest superfamily closed under all intersections. The empty
/// intersection contributes the full universe.
SetFamily intersection_closure(const SetFamily& family);

struct Violation {
    std::string axiom;   // stable identifier, e.g. "transitivity", "no-join"
    std::string detail;  // human-readable witness description
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool passed() const { return violations.empty(); }
    void fail(std::string axiom, std::string detail) {
        violations.push_back({std::move(axiom), std::move(detail)});
    }
};

/// Finite bounded lattice given by an explicit order relation. Meet/join
/// tables, bottom and top are computed once at validation and cached;
/// instances are immutable afterwards.
class FiniteLattice {
public:
    int size() const { return int(names_.size()); }
    const std::string& name(int i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> find(const std::string& name) const;
    int index_of(const std::string& name) const;  // throws on unknown name

    bool leq(int a, int b) const { return up_[a].test(b); }
    int meet(int a, int b) const { return meet_[a * size() + b]; }
    int join(int a, int b) const { return join_[a * size() + b]; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }

    /// Upward closure {b | a <= b} of a single element.
    const Bitset& up_set(int a) const { return up_[a]; }
    /// Downward closure {b | b <= a} of a single element.
    const Bitset& down_set(int a) const { return down_[a]; }

    /// Meet of an arbitrary element set; the empty meet is the top.
    int meet_all(const Bitset& elems) const;
    /// Join of an arbitrary element set; the empty join is the bottom.
    int join_all(const Bitset& elems) const;
    int meet_all(const std::vector<std::string>& names) const;
    int join_all(const std::vector<std::string>& names) const;

    Bitset element_set(const std::vector<std::string>& names) const;

    bool operator==(const FiniteLattice& other) const {
        return names_ == other.names_ && up_ == other.up_;
    }

    friend struct LatticeBuilder;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<Bitset> up_;    // up_[a] = {b | a <= b}
    std::vector<Bitset> down_;  // down_[a] = {b | b <= a}
    std::vector<int> meet_, join_;
    int bottom_ = -1, top_ = -1;
};

struct LatticeValidation {
    ValidationReport report;
    std::optional<FiniteLattice> lattice;  // present iff report.passed()
};

/// Checks the poset axioms and existence of all binary meets and joins over
/// the explicit relation. Total: axiom violations are reported, not thrown.
/// Unknown names inside `leq` and duplicate element names are input errors.
LatticeValidation validate_lattice(const std::vector<std::string>& elements,
                                   const std::vector<std::pair<std::string, std::string>>& leq);

/// Convenience for relations already given as a membership predicate.
LatticeValidation validate_lattice(const std::vector<std::string>& elements,
                                   const std::vector<Bitset>& up_sets);

/// Sublattice {e | lo <= e <= hi} with the inherited order. Its meets and
/// joins agree with the ambient ones restricted to the interval.
FiniteLattice interval(const FiniteLattice& lattice, int lo, int hi);

} // namespace spslab
