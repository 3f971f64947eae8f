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

#include "phasecap/group.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

#include "phasecap/errors.h"

namespace phasecap {

bool is_prime(uint64_t v) {
    if (v < 2) {
        return false;
    }
    for (uint64_t d = 2; d * d <= v; d++) {
        if (v % d == 0) {
            return false;
        }
    }
    return true;
}

GroupParams GroupParams::make(uint32_t q, uint32_t n) {
    if (!is_prime(q)) {
        throw ParameterError("q=" + std::to_string(q) + " is not prime");
    }
    if (n < 1) {
        throw ParameterError("word length n must be at least 1");
    }
    if (q == 2) {
        if (n > 64) {
            throw ParameterError("binary vectors are limited to n <= 64, got n=" + std::to_string(n));
        }
    } else {
        unsigned __int128 order = 1;
        for (uint32_t i = 0; i < n; i++) {
            order *= q;
            if (order >= (static_cast<unsigned __int128>(1) << 62)) {
                throw ParameterError("q^n must stay below 2^62 for q=" + std::to_string(q) +
                                     ", n=" + std::to_string(n));
            }
        }
    }
    return GroupParams{q, n};
}

uint64_t GroupParams::order() const {
    if (q == 2) {
        return n >= 64 ? std::numeric_limits<uint64_t>::max() : (uint64_t{1} << n);
    }
    uint64_t r = 1;
    for (uint32_t i = 0; i < n; i++) {
        r *= q;
    }
    return r;
}

bool GroupParams::enumerable() const {
    return order() <= kMaxEnumerableOrder;
}

void GroupParams::require_enumerable(std::string_view what) const {
    if (!enumerable()) {
        throw ResourceError(std::string(what) + ": group " + describe() + " exceeds the enumeration limit 2^24");
    }
}

std::string GroupParams::describe() const {
    return "F_" + std::to_string(q) + "^" + std::to_string(n);
}

void require_same_group(const GroupParams &a, const GroupParams &b, std::string_view what) {
    if (a != b) {
        throw ParameterError(std::string(what) + ": mismatched groups " + a.describe() + " and " + b.describe());
    }
}

namespace packed {

uint64_t add(const GroupParams &p, uint64_t a, uint64_t b) {
    if (p.q == 2) {
        return a ^ b;
    }
    uint64_t r = 0;
    uint64_t scale = 1;
    for (uint32_t i = 0; i < p.n; i++) {
        uint64_t da = a % p.q;
        uint64_t db = b % p.q;
        a /= p.q;
        b /= p.q;
        r += ((da + db) % p.q) * scale;
        scale *= p.q;
    }
    return r;
}

uint64_t negate(const GroupParams &p, uint64_t a) {
    if (p.q == 2) {
        return a;
    }
    uint64_t r = 0;
    uint64_t scale = 1;
    for (uint32_t i = 0; i < p.n; i++) {
        uint64_t da = a % p.q;
        a /= p.q;
        r += ((p.q - da) % p.q) * scale;
        scale *= p.q;
    }
    return r;
}

uint64_t sub(const GroupParams &p, uint64_t a, uint64_t b) {
    if (p.q == 2) {
        return a ^ b;
    }
    uint64_t r = 0;
    uint64_t scale = 1;
    for (uint32_t i = 0; i < p.n; i++) {
        uint64_t da = a % p.q;
        uint64_t db = b % p.q;
        a /= p.q;
        b /= p.q;
        r += ((da + p.q - db) % p.q) * scale;
        scale *= p.q;
    }
    return r;
}

uint32_t weight(const GroupParams &p, uint64_t a) {
    if (p.q == 2) {
        return static_cast<uint32_t>(std::popcount(a));
    }
    uint32_t w = 0;
    while (a != 0) {
        w += (a % p.q) != 0;
        a /= p.q;
    }
    return w;
}

uint32_t coord(const GroupParams &p, uint64_t a, uint32_t i) {
    uint32_t shift = p.n - 1 - i;
    if (p.q == 2) {
        return static_cast<uint32_t>((a >> shift) & 1);
    }
    for (uint32_t k = 0; k < shift; k++) {
        a /= p.q;
    }
    return static_cast<uint32_t>(a % p.q);
}

uint64_t unit(const GroupParams &p, uint32_t i) {
    uint32_t shift = p.n - 1 - i;
    if (p.q == 2) {
        return uint64_t{1} << shift;
    }
    uint64_t r = 1;
    for (uint32_t k = 0; k < shift; k++) {
        r *= p.q;
    }
    return r;
}

uint64_t permute(const GroupParams &p, uint64_t a, std::span<const uint8_t> perm) {
    uint64_t r = 0;
    if (p.q == 2) {
        for (uint32_t i = 0; i < p.n; i++) {
            if ((a >> (p.n - 1 - i)) & 1) {
                r |= uint64_t{1} << (p.n - 1 - perm[i]);
            }
        }
        return r;
    }
    for (uint32_t i = 0; i < p.n; i++) {
        uint32_t d = coord(p, a, i);
        if (d != 0) {
            r += d * unit(p, perm[i]);
        }
    }
    return r;
}

}  // namespace packed

GroupVector::GroupVector(GroupParams params, uint64_t packed) : params_(params), packed_(packed) {
    if (params.n < 64 && packed >= params.order()) {
        throw ParameterError("packed vector " + std::to_string(packed) + " is outside " + params.describe());
    }
}

GroupVector GroupVector::zero(GroupParams params) {
    return GroupVector(params, 0);
}

GroupVector GroupVector::unit(GroupParams params, uint32_t i) {
    if (i >= params.n) {
        throw ParameterError("unit vector index out of range");
    }
    return GroupVector(params, packed::unit(params, i));
}

GroupVector GroupVector::from_coords(GroupParams params, std::span<const uint32_t> coords) {
    if (coords.size() != params.n) {
        throw ParameterError("expected " + std::to_string(params.n) + " coordinates, got " +
                             std::to_string(coords.size()));
    }
    uint64_t r = 0;
    for (uint32_t c : coords) {
        if (c >= params.q) {
            throw ParameterError("coordinate " + std::to_string(c) + " out of range for q=" + std::to_string(params.q));
        }
        r = params.q == 2 ? ((r << 1) | c) : r * params.q + c;
    }
    return GroupVector(params, r);
}

GroupVector GroupVector::parse(GroupParams params, std::string_view text) {
    std::vector<uint32_t> coords;
    if (params.q == 2) {
        if (text.size() != params.n) {
            throw InputError("vector '" + std::string(text) + "' has length " + std::to_string(text.size()) +
                             ", expected " + std::to_string(params.n));
        }
        for (char c : text) {
            if (c != '0' && c != '1') {
                throw InputError("vector '" + std::string(text) + "' contains a character other than 0/1");
            }
            coords.push_back(static_cast<uint32_t>(c - '0'));
        }
    } else {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t comma = text.find(',', pos);
            std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
            if (field.empty()) {
                throw InputError("vector '" + std::string(text) + "' has an empty coordinate");
            }
            uint32_t v = 0;
            for (char c : field) {
                if (c < '0' || c > '9') {
                    throw InputError("vector '" + std::string(text) + "' has a non-digit coordinate");
                }
                v = v * 10 + static_cast<uint32_t>(c - '0');
                if (v >= params.q) {
                    throw InputError("vector '" + std::string(text) + "' has a coordinate outside [0," +
                                     std::to_string(params.q) + ")");
                }
            }
            coords.push_back(v);
            if (comma == std::string_view::npos) {
                break;
            }
            pos = comma + 1;
        }
        if (coords.size() != params.n) {
            throw InputError("vector '" + std::string(text) + "' has " + std::to_string(coords.size()) +
                             " coordinates, expected " + std::to_string(params.n));
        }
    }
    return from_coords(params, coords);
}

uint32_t GroupVector::coord(uint32_t i) const {
    if (i >= params_.n) {
        throw ParameterError("coordinate index out of range");
    }
    return packed::coord(params_, packed_, i);
}

std::vector<uint32_t> GroupVector::coords() const {
    std::vector<uint32_t> r(params_.n);
    for (uint32_t i = 0; i < params_.n; i++) {
        r[i] = packed::coord(params_, packed_, i);
    }
    return r;
}

std::string GroupVector::str() const {
    std::string r;
    for (uint32_t i = 0; i < params_.n; i++) {
        uint32_t c = packed::coord(params_, packed_, i);
        if (params_.q == 2) {
            r.push_back(static_cast<char>('0' + c));
        } else {
            if (i > 0) {
                r.push_back(',');
            }
            r += std::to_string(c);
        }
    }
    return r;
}

GroupVector add(const GroupVector &a, const GroupVector &b) {
    require_same_group(a.params(), b.params(), "add");
    return GroupVector(a.params(), packed::add(a.params(), a.index(), b.index()));
}

GroupVector sub(const GroupVector &a, const GroupVector &b) {
    require_same_group(a.params(), b.params(), "sub");
    return GroupVector(a.params(), packed::sub(a.params(), a.index(), b.index()));
}

GroupVector negate(const GroupVector &a) {
    return GroupVector(a.params(), packed::negate(a.params(), a.index()));
}

uint32_t hamming_weight(const GroupVector &a) {
    return packed::weight(a.params(), a.index());
}

SupportSet::SupportSet(GroupParams params, std::vector<uint64_t> indices)
    : params_(params), elements_(std::move(indices)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    if (params_.n < 64 && !elements_.empty() && elements_.back() >= params_.order()) {
        throw ParameterError("support element outside " + params_.describe());
    }
}

SupportSet SupportSet::from_vectors(GroupParams params, std::span<const GroupVector> vectors) {
    std::vector<uint64_t> idx;
    idx.reserve(vectors.size());
    for (const auto &v : vectors) {
        require_same_group(params, v.params(), "SupportSet");
        idx.push_back(v.index());
    }
    return SupportSet(params, std::move(idx));
}

SupportSet SupportSet::from_unique(GroupParams params, std::vector<uint64_t> indices) {
    size_t before = indices.size();
    SupportSet s(params, std::move(indices));
    if (s.size() != before) {
        throw InputError("support contains duplicate vectors");
    }
    return s;
}

bool SupportSet::contains(uint64_t index) const {
    return std::binary_search(elements_.begin(), elements_.end(), index);
}

bool SupportSet::contains(const GroupVector &v) const {
    return v.params() == params_ && contains(v.index());
}

std::vector<std::string> SupportSet::to_strings() const {
    std::vector<std::string> r;
    r.reserve(elements_.size());
    for (uint64_t e : elements_) {
        r.push_back(GroupVector(params_, e).str());
    }
    return r;
}

uint32_t min_distance(const SupportSet &s) {
    if (s.size() < 2) {
        throw UndefinedDistanceError("minimum distance needs at least two elements, got " + std::to_string(s.size()));
    }
    const auto &p = s.params();
    const auto &e = s.indices();
    uint32_t best = p.n;
    if (p.q == 2) {
        for (size_t i = 0; i < e.size() && best > 1; i++) {
            for (size_t j = i + 1; j < e.size(); j++) {
                uint32_t w = static_cast<uint32_t>(std::popcount(e[i] ^ e[j]));
                best = std::min(best, w);
            }
        }
        return best;
    }
    for (size_t i = 0; i < e.size() && best > 1; i++) {
        for (size_t j = i + 1; j < e.size(); j++) {
            best = std::min(best, packed::weight(p, packed::sub(p, e[i], e[j])));
        }
    }
    return best;
}

uint64_t ball_size(const GroupParams &params, uint32_t t) {
    if (t > params.n) {
        throw ParameterError("ball radius t=" + std::to_string(t) + " exceeds n=" + std::to_string(params.n));
    }
    unsigned __int128 total = 0;
    unsigned __int128 binom = 1;
    unsigned __int128 pw = 1;
    for (uint32_t i = 0; i <= t; i++) {
        total += binom * pw;
        binom = binom * (params.n - i) / (i + 1);
        pw *= params.q - 1;
    }
    if (total > std::numeric_limits<uint64_t>::max()) {
        return std::numeric_limits<uint64_t>::max();
    }
    return static_cast<uint64_t>(total);
}

namespace {

void ball_recurse(const GroupParams &p, uint32_t first, uint32_t remaining, uint64_t acc, std::vector<uint64_t> &out) {
    out.push_back(acc);
    if (remaining == 0) {
        return;
    }
    for (uint32_t i = first; i < p.n; i++) {
        uint64_t u = packed::unit(p, i);
        for (uint32_t d = 1; d < p.q; d++) {
            ball_recurse(p, i + 1, remaining - 1, acc + d * u, out);
        }
    }
}

}  // namespace

SupportSet enumerate_ball(const GroupParams &params, uint32_t t) {
    uint64_t size = ball_size(params, t);
    if (size > kMaxEnumerableOrder) {
        throw ResourceError("ball of radius " + std::to_string(t) + " in " + params.describe() + " is too large");
    }
    std::vector<uint64_t> out;
    out.reserve(size);
    ball_recurse(params, 0, t, 0, out);
    return SupportSet(params, std::move(out));
}

SupportSet difference_set(const SupportSet &a, const SupportSet &b) {
    require_same_group(a.params(), b.params(), "difference_set");
    const auto &p = a.params();
    std::vector<uint64_t> out;
    out.reserve(a.size() * b.size());
    for (uint64_t x : a) {
        for (uint64_t y : b) {
            out.push_back(packed::sub(p, x, y));
        }
    }
    return SupportSet(p, std::move(out));
}

std::map<uint32_t, uint64_t> weight_distribution(const SupportSet &a) {
    std::map<uint32_t, uint64_t> hist;
    for (uint64_t x : a) {
        hist[packed::weight(a.params(), x)]++;
    }
    return hist;
}

}  // namespace phasecap
