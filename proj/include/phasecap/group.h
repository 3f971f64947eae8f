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

#ifndef PHASECAP_GROUP_H
#define PHASECAP_GROUP_H

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace phasecap {

/// Groups with at most this many elements may be enumerated (balls, graphs, transforms).
inline constexpr uint64_t kMaxEnumerableOrder = uint64_t{1} << 24;

/// The additive group F_q^n for prime q.
///
/// Vectors are packed into a single 64-bit word: for q = 2 one bit per
/// coordinate, otherwise base-q digits. In both cases coordinate 1 is the
/// most significant position, so integer order on the packed word is
/// lexicographic order on coordinate tuples.
struct GroupParams {
    uint32_t q = 2;
    uint32_t n = 1;

    /// Validates primality and the packed-word limits (n <= 64 for q = 2,
    /// q^n < 2^62 otherwise).
    static GroupParams make(uint32_t q, uint32_t n);

    /// q^n, saturating at UINT64_MAX for the non-enumerable q = 2, n = 64 case.
    uint64_t order() const;
    bool enumerable() const;
    /// Throws ResourceError unless order() <= kMaxEnumerableOrder.
    void require_enumerable(std::string_view what) const;
    std::string describe() const;

    bool operator==(const GroupParams &) const = default;
};

bool is_prime(uint64_t v);

/// Packed-index arithmetic. These are the hot-path primitives; callers are
/// responsible for passing indices that belong to `p`.
namespace packed {
uint64_t add(const GroupParams &p, uint64_t a, uint64_t b);
uint64_t sub(const GroupParams &p, uint64_t a, uint64_t b);
uint64_t negate(const GroupParams &p, uint64_t a);
uint32_t weight(const GroupParams &p, uint64_t a);
uint32_t coord(const GroupParams &p, uint64_t a, uint32_t i);
uint64_t unit(const GroupParams &p, uint32_t i);
/// Applies a coordinate permutation: coordinate i of the input lands at position perm[i].
uint64_t permute(const GroupParams &p, uint64_t a, std::span<const uint8_t> perm);
}  // namespace packed

/// An element of F_q^n.
class GroupVector {
   public:
    GroupVector(GroupParams params, uint64_t packed);

    static GroupVector zero(GroupParams params);
    /// e_{i+1}: the 0-based coordinate i set to 1.
    static GroupVector unit(GroupParams params, uint32_t i);
    static GroupVector from_coords(GroupParams params, std::span<const uint32_t> coords);
    /// Parses the text form: n characters '0'/'1' for q = 2, comma-separated digits otherwise.
    static GroupVector parse(GroupParams params, std::string_view text);

    const GroupParams &params() const {
        return params_;
    }
    uint64_t index() const {
        return packed_;
    }
    uint32_t coord(uint32_t i) const;
    std::vector<uint32_t> coords() const;
    bool is_zero() const {
        return packed_ == 0;
    }
    std::string str() const;

    bool operator==(const GroupVector &other) const = default;
    /// Only meaningful for vectors over the same group.
    std::strong_ordering operator<=>(const GroupVector &other) const {
        return packed_ <=> other.packed_;
    }

   private:
    GroupParams params_;
    uint64_t packed_;
};

GroupVector add(const GroupVector &a, const GroupVector &b);
GroupVector sub(const GroupVector &a, const GroupVector &b);
GroupVector negate(const GroupVector &a);
uint32_t hamming_weight(const GroupVector &a);

/// A duplicate-free set of vectors of one group, stored in lexicographic order.
class SupportSet {
   public:
    explicit SupportSet(GroupParams params) : params_(params) {
    }
    /// Sorts and drops duplicates. Every index must belong to the group.
    SupportSet(GroupParams params, std::vector<uint64_t> indices);
    static SupportSet from_vectors(GroupParams params, std::span<const GroupVector> vectors);
    /// Like the constructor, but a repeated entry is an InputError.
    static SupportSet from_unique(GroupParams params, std::vector<uint64_t> indices);

    const GroupParams &params() const {
        return params_;
    }
    size_t size() const {
        return elements_.size();
    }
    bool empty() const {
        return elements_.empty();
    }
    GroupVector at(size_t i) const {
        return GroupVector(params_, elements_[i]);
    }
    const std::vector<uint64_t> &indices() const {
        return elements_;
    }
    auto begin() const {
        return elements_.begin();
    }
    auto end() const {
        return elements_.end();
    }
    bool contains(uint64_t index) const;
    bool contains(const GroupVector &v) const;
    std::vector<std::string> to_strings() const;

    bool operator==(const SupportSet &other) const = default;

   private:
    GroupParams params_;
    std::vector<uint64_t> elements_;
};

/// Minimum Hamming distance over distinct pairs. Throws UndefinedDistanceError when |S| < 2.
uint32_t min_distance(const SupportSet &s);

/// Number of vectors of weight at most t: sum_{i<=t} C(n,i) (q-1)^i.
uint64_t ball_size(const GroupParams &params, uint32_t t);

/// E_t, every vector of Hamming weight at most t.
SupportSet enumerate_ball(const GroupParams &params, uint32_t t);

/// {a - b : a in A, b in B}.
SupportSet difference_set(const SupportSet &a, const SupportSet &b);

std::map<uint32_t, uint64_t> weight_distribution(const SupportSet &a);

void require_same_group(const GroupParams &a, const GroupParams &b, std::string_view what);

}  // namespace phasecap

#endif
