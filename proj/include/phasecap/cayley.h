// Copyright 2026 The Phasecap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PHASECAP_CAYLEY_H
#define PHASECAP_CAYLEY_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "phasecap/group.h"
#include "phasecap/noise.h"

namespace phasecap {

/// Cay(V, D): vertices are all of V, x ~ y iff x - y is in D.
class CayleyGraph {
   public:
    explicit CayleyGraph(DifferenceSet connection) : connection_(std::move(connection)) {
    }

    const GroupParams &params() const {
        return connection_.params();
    }
    const DifferenceSet &connection() const {
        return connection_;
    }
    uint64_t vertex_count() const {
        return params().order();
    }
    uint64_t degree() const {
        return connection_.size();
    }
    bool adjacent(uint64_t x, uint64_t y) const {
        return x != y && connection_.contains(packed::sub(params(), x, y));
    }

   private:
    DifferenceSet connection_;
};

CayleyGraph build_graph(DifferenceSet connection);

/// True iff no two distinct members of `s` are adjacent.
bool verify_independent(const CayleyGraph &g, const SupportSet &s);

/// Greedy maximal independent set. Vertices are scanned in `ordering`
/// (every vertex index, each once) or in index order when it is empty.
SupportSet greedy_independent_lower_bound(const CayleyGraph &g, std::span<const uint64_t> ordering = {});

struct SearchBudget {
    uint64_t max_nodes = 1'000'000'000;
    double max_seconds = 300.0;
    /// Orbital branching over coordinate permutations that preserve the connection set.
    bool use_symmetry = true;
    /// Upper bound on the enumerated symmetry group; larger groups disable orbital branching.
    uint64_t max_symmetry_order = uint64_t{1} << 19;
};

struct SearchStats {
    uint64_t nodes = 0;
    double seconds = 0.0;
    uint64_t symmetry_order = 1;
};

/// A verified independent set. `is_maximum` is true only when the search completed.
class IndependenceCertificate {
   public:
    /// Throws InvariantError if `set` is not independent in `g`.
    IndependenceCertificate(const CayleyGraph &g, SupportSet set, bool is_maximum, SearchStats stats);

    const SupportSet &set() const {
        return set_;
    }
    size_t alpha() const {
        return set_.size();
    }
    bool is_maximum() const {
        return is_maximum_;
    }
    const SearchStats &stats() const {
        return stats_;
    }

   private:
    SupportSet set_;
    bool is_maximum_;
    SearchStats stats_;
};

/// Exact maximum independent set by branch and bound.
///
/// The root fixes vertex 0 (every Cayley graph is vertex-transitive).
/// Candidates are relabelled by decreasing degree into the root candidate
/// set; each node bounds with a greedy clique cover of its candidates and
/// branches on the last-covered vertices first. Coordinate permutations
/// preserving D are used for orbital branching while the stabilizer of the
/// current partial set is nontrivial.
///
/// Budget exhaustion is not an error: the best set found is returned with
/// is_maximum() == false. Node-budgeted runs are deterministic.
IndependenceCertificate independence_number(const CayleyGraph &g, const SearchBudget &budget = {});

/// Coordinate permutations sigma with sigma(D) = D, each stored as the image
/// position of every coordinate. `complete` is false (and only the identity
/// is returned) when the group exceeds `max_order`.
struct CoordinateSymmetry {
    std::vector<std::vector<uint8_t>> perms;
    bool complete = true;
};
CoordinateSymmetry coordinate_automorphisms(const DifferenceSet &d, uint64_t max_order);

/// A subspace W with W \ {0} contained in a connection set.
class SubspaceWitness {
   public:
    /// Throws InvariantError unless the basis is linearly independent and its
    /// nonzero span lies in `d`.
    SubspaceWitness(std::vector<GroupVector> basis, const DifferenceSet &d);

    const std::vector<GroupVector> &basis() const {
        return basis_;
    }
    uint32_t dimension() const {
        return static_cast<uint32_t>(basis_.size());
    }
    SupportSet span() const;
    /// False when the search that produced this witness stopped early.
    bool proven_maximal = true;

   private:
    std::vector<GroupVector> basis_;
};

/// Depth-first basis extension for the largest subspace (dimension <= r_max)
/// whose nonzero elements all lie in `d`. Returns nullopt when no
/// one-dimensional subspace exists. Ties prefer low-weight vectors, then
/// leftmost coordinates.
std::optional<SubspaceWitness> find_max_additive_subspace(const DifferenceSet &d, uint32_t r_max,
                                                          uint64_t max_nodes = 50'000'000);

/// q^(n - r). Also checks that every coset of W is a clique in `g`.
uint64_t coset_collapse_bound(const CayleyGraph &g, const SubspaceWitness &w);

/// Strong product over the direct-sum group F_q^(n1 + n2). Limited to 2^16 vertices.
CayleyGraph strong_product(const CayleyGraph &g1, const CayleyGraph &g2);

}  // namespace phasecap

#endif
