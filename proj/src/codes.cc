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

#include "phasecap/codes.h"

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "json.hpp"
#include "phasecap/errors.h"
#include "phasecap/noise.h"

namespace phasecap {

std::string structure_name(Structure s) {
    switch (s) {
        case Structure::Linear:
            return "linear";
        case Structure::Affine:
            return "affine";
        case Structure::Nonlinear:
            return "nonlinear";
    }
    return "nonlinear";
}

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Constructed:
            return "constructed";
        case Provenance::Searched:
            return "searched";
        case Provenance::Loaded:
            return "loaded";
    }
    return "constructed";
}

uint32_t rank_over_field(const SupportSet &s) {
    const GroupParams &p = s.params();
    if (p.q == 2) {
        // XOR basis keyed by leading bit.
        std::array<uint64_t, 64> basis{};
        uint32_t rank = 0;
        for (uint64_t v : s) {
            for (int bit = 63; bit >= 0 && v != 0; bit--) {
                if (!((v >> bit) & 1)) {
                    continue;
                }
                if (basis[bit] == 0) {
                    basis[bit] = v;
                    rank++;
                    v = 0;
                } else {
                    v ^= basis[bit];
                }
            }
        }
        return rank;
    }
    const uint32_t q = p.q;
    auto inverse = [q](uint32_t a) {
        for (uint32_t b = 1; b < q; b++) {
            if ((a * b) % q == 1) {
                return b;
            }
        }
        return 0u;
    };
    std::vector<std::vector<uint32_t>> rows;
    for (uint64_t v : s) {
        std::vector<uint32_t> row(p.n);
        for (uint32_t i = 0; i < p.n; i++) {
            row[i] = packed::coord(p, v, i);
        }
        rows.push_back(std::move(row));
    }
    uint32_t rank = 0;
    for (uint32_t col = 0; col < p.n && rank < rows.size(); col++) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[pivot], rows[rank]);
        uint32_t inv = inverse(rows[rank][col]);
        for (auto &x : rows[rank]) {
            x = (x * inv) % q;
        }
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && rows[r][col] != 0) {
                uint32_t f = rows[r][col];
                for (uint32_t i = 0; i < p.n; i++) {
                    rows[r][i] = (rows[r][i] + q * q - f * rows[rank][i]) % q;
                }
            }
        }
        rank++;
    }
    return rank;
}

namespace {

bool is_subgroup(const SupportSet &s) {
    uint64_t expected = 1;
    uint32_t rank = rank_over_field(s);
    for (uint32_t i = 0; i < rank; i++) {
        expected *= s.params().q;
    }
    return expected == s.size();
}

}  // namespace

Structure classify_structure(const SupportSet &s) {
    if (s.empty()) {
        throw ParameterError("classify_structure needs a nonempty support");
    }
    if (s.contains(uint64_t{0}) && is_subgroup(s)) {
        return Structure::Linear;
    }
    const GroupParams &p = s.params();
    uint64_t s0 = s.indices().front();
    std::vector<uint64_t> shifted;
    shifted.reserve(s.size());
    for (uint64_t v : s) {
        shifted.push_back(packed::sub(p, v, s0));
    }
    if (is_subgroup(SupportSet(p, std::move(shifted)))) {
        return Structure::Affine;
    }
    return Structure::Nonlinear;
}

CodeRecord CodeRecord::make(std::string name, SupportSet support, Provenance provenance) {
    CodeRecord r{support, std::move(name)};
    r.n = support.params().n;
    r.q = support.params().q;
    r.size = support.size();
    r.min_distance = support.size() >= 2 ? phasecap::min_distance(support) : 0;
    r.structure = support.empty() ? Structure::Nonlinear : classify_structure(support);
    r.provenance = provenance;
    return r;
}

uint32_t CodeRecord::correctable() const {
    return min_distance == 0 ? 0 : (min_distance - 1) / 2;
}

CodeRecord repetition_support(uint32_t n) {
    GroupParams p = GroupParams::make(2, n);
    uint64_t ones = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    return CodeRecord::make("repetition-" + std::to_string(n), SupportSet(p, {0, ones}), Provenance::Constructed);
}

namespace {

/// Truth table of a Boolean function on F_2^m packed as a length-2^m word;
/// point z sits at coordinate z (coordinate 0 is the most significant bit).
uint64_t truth_table_word(uint32_t m, auto &&fn) {
    const uint32_t len = 1u << m;
    uint64_t w = 0;
    for (uint32_t z = 0; z < len; z++) {
        if (fn(z) & 1) {
            w |= uint64_t{1} << (len - 1 - z);
        }
    }
    return w;
}

void require_boolean_length(uint32_t m) {
    if (m < 1 || m > 6) {
        throw ParameterError("Boolean-function codes need 1 <= m <= 6 (length 2^m <= 64), got m=" +
                             std::to_string(m));
    }
}

}  // namespace

CodeRecord reed_muller_1(uint32_t m) {
    require_boolean_length(m);
    GroupParams p = GroupParams::make(2, 1u << m);
    std::vector<uint64_t> words;
    for (uint32_t a = 0; a < (1u << m); a++) {
        for (uint32_t b = 0; b < 2; b++) {
            words.push_back(truth_table_word(m, [&](uint32_t z) { return std::popcount(a & z) + b; }));
        }
    }
    return CodeRecord::make("rm1-" + std::to_string(m), SupportSet(p, std::move(words)), Provenance::Constructed);
}

CodeRecord linear_baseline_8_3() {
    GroupParams p = GroupParams::make(2, 8);
    // Coordinate i has parity-check column i + 1 in F_2^4: distinct and nonzero, so d >= 3.
    std::vector<uint64_t> words;
    for (uint64_t w = 0; w < 256; w++) {
        uint32_t syndrome = 0;
        for (uint32_t i = 0; i < 8; i++) {
            if (packed::coord(p, w, i)) {
                syndrome ^= i + 1;
            }
        }
        if (syndrome == 0) {
            words.push_back(w);
        }
    }
    CodeRecord r = CodeRecord::make("linear-8-3", SupportSet(p, std::move(words)), Provenance::Constructed);
    if (r.size != 16 || r.min_distance < 3 || r.structure != Structure::Linear) {
        throw ConstructionError("shortened Hamming [8,4,3] construction failed verification");
    }
    return r;
}

CodeRecord julin_class_search(const SearchBudget &budget) {
    GroupParams p = GroupParams::make(2, 8);
    CayleyGraph g(derive_difference_set(uniform_ball_model(p, 1)));
    IndependenceCertificate cert = independence_number(g, budget);
    if (cert.alpha() < 20) {
        throw SearchIncompleteError("search budget exhausted with a best support of size " +
                                    std::to_string(cert.alpha()) + " < 20");
    }
    return CodeRecord::make("julin", cert.set(), Provenance::Searched);
}

CodeRecord nordstrom_robinson() {
    static constexpr std::array<std::array<uint32_t, 8>, 4> kOctacode{{
        {1, 0, 0, 0, 3, 1, 2, 1},
        {0, 1, 0, 0, 1, 2, 3, 1},
        {0, 0, 1, 0, 3, 3, 3, 2},
        {0, 0, 0, 1, 2, 3, 1, 1},
    }};
    // Gray map 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10.
    static constexpr std::array<uint32_t, 4> kGray{0b00, 0b01, 0b11, 0b10};
    GroupParams p = GroupParams::make(2, 16);
    std::vector<uint64_t> words;
    for (uint32_t msg = 0; msg < 256; msg++) {
        std::array<uint32_t, 8> cw{};
        for (uint32_t r = 0; r < 4; r++) {
            uint32_t coef = (msg >> (2 * (3 - r))) & 3;
            for (uint32_t c = 0; c < 8; c++) {
                cw[c] = (cw[c] + coef * kOctacode[r][c]) & 3;
            }
        }
        uint64_t w = 0;
        for (uint32_t c = 0; c < 8; c++) {
            w = (w << 2) | kGray[cw[c]];
        }
        words.push_back(w);
    }
    CodeRecord r = CodeRecord::make("nordstrom-robinson", SupportSet(p, std::move(words)), Provenance::Constructed);
    if (r.size != 256 || r.min_distance != 6 || r.structure != Structure::Nonlinear) {
        throw ConstructionError("Nordstrom-Robinson construction failed verification");
    }
    return r;
}

uint32_t QuadraticForm::evaluate(uint32_t x) const {
    uint32_t v = 0;
    for (uint32_t i = 0; i < m; i++) {
        if ((x >> i) & 1) {
            v ^= std::popcount(rows[i] & x) & 1;
        }
    }
    return v;
}

uint32_t bilinear_rank_of_sum(const QuadraticForm &a, const QuadraticForm &b) {
    if (a.m != b.m) {
        throw ParameterError("quadratic forms on different spaces");
    }
    const uint32_t m = a.m;
    std::vector<uint32_t> full(m, 0);
    for (uint32_t i = 0; i < m; i++) {
        uint32_t upper = a.rows[i] ^ b.rows[i];
        for (uint32_t j = i + 1; j < m; j++) {
            if ((upper >> j) & 1) {
                full[i] |= 1u << j;
                full[j] |= 1u << i;
            }
        }
    }
    uint32_t rank = 0;
    for (uint32_t col = 0; col < m; col++) {
        uint32_t pivot = rank;
        while (pivot < m && !((full[pivot] >> col) & 1)) {
            pivot++;
        }
        if (pivot == m) {
            continue;
        }
        std::swap(full[pivot], full[rank]);
        for (uint32_t r = 0; r < m; r++) {
            if (r != rank && ((full[r] >> col) & 1)) {
                full[r] ^= full[rank];
            }
        }
        rank++;
    }
    return rank;
}

bool is_kerdock_set(const std::vector<QuadraticForm> &forms) {
    for (size_t i = 0; i < forms.size(); i++) {
        for (size_t j = i + 1; j < forms.size(); j++) {
            if (bilinear_rank_of_sum(forms[i], forms[j]) != forms[i].m) {
                return false;
            }
        }
    }
    return true;
}

namespace {

/// Galois ring GR(4, t) = Z_4[x] / (h), h the Hensel lift of a primitive binary polynomial.
class GaloisRing4 {
   public:
    using Element = std::vector<uint32_t>;

    explicit GaloisRing4(uint32_t t) : t_(t) {
        // Primitive binary polynomials, coefficients from x^0 upward.
        std::vector<uint32_t> f;
        switch (t) {
            case 3:
                f = {1, 1, 0, 1};
                break;
            case 5:
                f = {1, 0, 1, 0, 0, 1};
                break;
            case 7:
                f = {1, 1, 0, 0, 0, 0, 0, 1};
                break;
            default:
                throw ParameterError("Galois ring GR(4," + std::to_string(t) + ") not supported");
        }
        // Graeffe: h(x^2) = (-1)^t (e(x)^2 - o(x)^2) mod 4.
        std::vector<int64_t> e(t + 1, 0);
        std::vector<int64_t> o(t + 1, 0);
        for (uint32_t i = 0; i <= t; i++) {
            (i % 2 == 0 ? e : o)[i] = f[i];
        }
        std::vector<int64_t> diff(2 * t + 1, 0);
        for (uint32_t i = 0; i <= t; i++) {
            for (uint32_t j = 0; j <= t; j++) {
                diff[i + j] += e[i] * e[j] - o[i] * o[j];
            }
        }
        int64_t sign = (t % 2 == 0) ? 1 : -1;
        h_.resize(t + 1);
        for (uint32_t i = 0; i <= t; i++) {
            h_[i] = static_cast<uint32_t>(((sign * diff[2 * i]) % 4 + 4) % 4);
        }
        if (h_[t] != 1) {
            throw ConstructionError("Hensel lift is not monic");
        }
    }

    uint32_t degree() const {
        return t_;
    }
    Element one() const {
        Element r(t_, 0);
        r[0] = 1;
        return r;
    }
    Element times_x(const Element &a) const {
        Element r(t_, 0);
        uint32_t top = a[t_ - 1];
        for (uint32_t i = t_ - 1; i > 0; i--) {
            r[i] = a[i - 1];
        }
        for (uint32_t i = 0; i < t_; i++) {
            r[i] = (r[i] + 4 * 4 - top * h_[i]) % 4;
        }
        return r;
    }
    Element mul(const Element &a, const Element &b) const {
        Element r(t_, 0);
        Element cur = a;
        for (uint32_t i = 0; i < t_; i++) {
            if (b[i] != 0) {
                for (uint32_t k = 0; k < t_; k++) {
                    r[k] = (r[k] + b[i] * cur[k]) % 4;
                }
            }
            cur = times_x(cur);
        }
        return r;
    }
    /// Galois trace to Z_4, equal to the trace of multiplication by `a`.
    uint32_t trace(const Element &a) const {
        uint32_t s = 0;
        Element basis = one();
        for (uint32_t i = 0; i < t_; i++) {
            s += mul(a, basis)[i];
            basis = times_x(basis);
        }
        return s % 4;
    }
    /// {0} together with the powers of x, which has order 2^t - 1.
    std::vector<Element> teichmuller() const {
        std::vector<Element> set{Element(t_, 0)};
        Element cur = one();
        for (uint64_t k = 0; k + 1 < (uint64_t{1} << t_); k++) {
            set.push_back(cur);
            cur = times_x(cur);
        }
        if (cur != one()) {
            throw ConstructionError("Hensel lift is not basic primitive");
        }
        return set;
    }

   private:
    uint32_t t_;
    std::vector<uint32_t> h_;
};

QuadraticForm quadratic_part(uint32_t m, const std::vector<uint32_t> &table) {
    // Moebius transform gives the algebraic normal form.
    std::vector<uint32_t> anf = table;
    const uint32_t len = 1u << m;
    for (uint32_t i = 0; i < m; i++) {
        for (uint32_t z = 0; z < len; z++) {
            if ((z >> i) & 1) {
                anf[z] ^= anf[z ^ (1u << i)];
            }
        }
    }
    QuadraticForm q{m, std::vector<uint32_t>(m, 0)};
    for (uint32_t z = 0; z < len; z++) {
        if (!anf[z]) {
            continue;
        }
        int deg = std::popcount(z);
        if (deg > 2) {
            throw ConstructionError("Gray image is not quadratic");
        }
        if (deg == 2) {
            uint32_t i = static_cast<uint32_t>(std::countr_zero(z));
            uint32_t j = 31u - static_cast<uint32_t>(std::countl_zero(z));
            q.rows[i] |= 1u << j;
        }
    }
    return q;
}

void require_kerdock_m(uint32_t m, uint32_t max_m) {
    if (m % 2 != 0 || m < 4 || m > max_m) {
        throw ParameterError("Kerdock construction needs even m with 4 <= m <= " + std::to_string(max_m) +
                             ", got m=" + std::to_string(m));
    }
}

}  // namespace

std::vector<QuadraticForm> kerdock_set_galois(uint32_t m) {
    require_kerdock_m(m, 8);
    GaloisRing4 ring(m - 1);
    auto points = ring.teichmuller();
    const uint32_t t = m - 1;
    auto reduce_index = [&](const GaloisRing4::Element &x) {
        uint32_t v = 0;
        for (uint32_t i = 0; i < t; i++) {
            v |= (x[i] & 1) << i;
        }
        return v;
    };
    std::vector<QuadraticForm> forms;
    for (const auto &lambda : points) {
        // Gray image of T(lambda x) = a + 2b at point (x mod 2, j) is b + j a.
        std::vector<uint32_t> table(1u << m, 0);
        for (const auto &x : points) {
            uint32_t c = ring.trace(ring.mul(lambda, x));
            uint32_t a = c & 1;
            uint32_t b = c >> 1;
            uint32_t xi = reduce_index(x);
            table[xi << 1] = b;
            table[(xi << 1) | 1] = a ^ b;
        }
        forms.push_back(quadratic_part(m, table));
    }
    return forms;
}

std::vector<QuadraticForm> kerdock_set_search(uint32_t m, uint64_t seed, uint64_t max_nodes) {
    require_kerdock_m(m, 6);
    const uint32_t pairs = m * (m - 1) / 2;
    std::vector<QuadraticForm> all;
    for (uint32_t mask = 0; mask < (1u << pairs); mask++) {
        QuadraticForm q{m, std::vector<uint32_t>(m, 0)};
        uint32_t bit = 0;
        for (uint32_t i = 0; i < m; i++) {
            for (uint32_t j = i + 1; j < m; j++) {
                if ((mask >> bit++) & 1) {
                    q.rows[i] |= 1u << j;
                }
            }
        }
        all.push_back(std::move(q));
    }
    QuadraticForm zero = all.front();
    std::vector<QuadraticForm> nonsingular;
    for (size_t i = 1; i < all.size(); i++) {
        if (bilinear_rank_of_sum(all[i], zero) == m) {
            nonsingular.push_back(all[i]);
        }
    }
    std::mt19937_64 rng(seed);
    std::shuffle(nonsingular.begin(), nonsingular.end(), rng);

    const size_t target = size_t{1} << (m - 1);
    std::vector<QuadraticForm> chosen{zero};
    uint64_t nodes = 0;
    auto recurse = [&](auto &self, const std::vector<size_t> &cands) -> bool {
        if (chosen.size() == target) {
            return true;
        }
        if (chosen.size() + cands.size() < target || ++nodes > max_nodes) {
            return false;
        }
        for (size_t k = 0; k < cands.size(); k++) {
            const QuadraticForm &c = nonsingular[cands[k]];
            std::vector<size_t> next;
            for (size_t l = k + 1; l < cands.size(); l++) {
                if (bilinear_rank_of_sum(c, nonsingular[cands[l]]) == m) {
                    next.push_back(cands[l]);
                }
            }
            chosen.push_back(c);
            if (self(self, next)) {
                return true;
            }
            chosen.pop_back();
            if (nodes > max_nodes) {
                return false;
            }
        }
        return false;
    };
    std::vector<size_t> cands(nonsingular.size());
    std::iota(cands.begin(), cands.end(), size_t{0});
    if (!recurse(recurse, cands)) {
        return {};
    }
    return chosen;
}

CodeRecord kerdock_support(uint32_t m) {
    require_kerdock_m(m, 6);
    std::vector<QuadraticForm> forms = kerdock_set_galois(m);
    if (forms.size() != (size_t{1} << (m - 1)) || !is_kerdock_set(forms)) {
        forms = kerdock_set_search(m, 0x6b657264);
        if (forms.empty() || !is_kerdock_set(forms)) {
            throw ConstructionError("no verified Kerdock set for m=" + std::to_string(m));
        }
    }
    GroupParams p = GroupParams::make(2, 1u << m);
    std::vector<uint64_t> words;
    for (const auto &form : forms) {
        for (uint32_t a = 0; a < (1u << m); a++) {
            for (uint32_t b = 0; b < 2; b++) {
                words.push_back(
                    truth_table_word(m, [&](uint32_t z) { return form.evaluate(z) + std::popcount(a & z) + b; }));
            }
        }
    }
    CodeRecord r = CodeRecord::make("kerdock-" + std::to_string(m), SupportSet(p, std::move(words)),
                                    Provenance::Constructed);
    uint64_t expected_size = uint64_t{1} << (2 * m);
    uint32_t expected_d = (1u << (m - 1)) - (1u << (m / 2 - 1));
    if (r.size != expected_size || r.min_distance != expected_d) {
        throw ConstructionError("Kerdock support has K=" + std::to_string(r.size) +
                                ", d=" + std::to_string(r.min_distance) + "; expected K=" +
                                std::to_string(expected_size) + ", d=" + std::to_string(expected_d));
    }
    return r;
}

bool verify_phase_correction(const SupportSet &s, uint32_t t) {
    const GroupParams &p = s.params();
    if (s.size() < 2) {
        return true;
    }
    bool by_distance = min_distance(s) >= 2 * t + 1;

    bool by_collision = true;
    const auto &e = s.indices();
    if (2 * t <= p.n && ball_size(p, 2 * t) <= (uint64_t{1} << 20) && s.size() <= 4096) {
        SupportSet ball = enumerate_ball(p, 2 * t);
        SupportSet diffs = difference_set(s, s);
        for (uint64_t v : diffs) {
            if (v != 0 && ball.contains(v)) {
                by_collision = false;
                break;
            }
        }
    } else {
        for (size_t i = 0; i < e.size() && by_collision; i++) {
            for (size_t j = 0; j < e.size(); j++) {
                if (i != j && packed::weight(p, packed::sub(p, e[i], e[j])) <= 2 * t) {
                    by_collision = false;
                    break;
                }
            }
        }
    }
    if (by_distance != by_collision) {
        throw InvariantError("distance and difference-set phase-correction checks disagree");
    }
    return by_distance;
}

std::vector<std::string> catalog_names() {
    return {"nordstrom-robinson", "julin", "linear-8-3", "repetition-<n>", "rm1-<m>", "kerdock-<m>"};
}

CodeRecord catalog_code(const std::string &name) {
    auto suffix = [&](const std::string &prefix) -> std::optional<uint32_t> {
        if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) {
            return std::nullopt;
        }
        uint32_t v = 0;
        for (char c : name.substr(prefix.size())) {
            if (c < '0' || c > '9') {
                return std::nullopt;
            }
            v = v * 10 + static_cast<uint32_t>(c - '0');
            if (v > 1000) {
                return std::nullopt;
            }
        }
        return v;
    };
    if (name == "nordstrom-robinson" || name == "nr") {
        return nordstrom_robinson();
    }
    if (name == "julin") {
        return julin_class_search();
    }
    if (name == "linear-8-3") {
        return linear_baseline_8_3();
    }
    if (auto n = suffix("repetition-")) {
        return repetition_support(*n);
    }
    if (auto m = suffix("rm1-")) {
        return reed_muller_1(*m);
    }
    if (auto m = suffix("kerdock-")) {
        return kerdock_support(*m);
    }
    throw ParameterError("unknown catalog code '" + name + "'");
}

std::string code_json(const CodeRecord &code) {
    nlohmann::json j;
    j["q"] = code.q;
    j["n"] = code.n;
    j["name"] = code.name;
    j["K"] = code.size;
    j["d"] = code.min_distance;
    j["structure"] = structure_name(code.structure);
    j["provenance"] = provenance_name(code.provenance);
    j["codewords"] = code.support.to_strings();
    return j.dump(1);
}

CodeRecord parse_code(const std::string &json_text, std::vector<std::string> *warnings) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error &e) {
        throw InputError(std::string("code: JSON parse failure: ") + e.what());
    }
    for (const char *key : {"q", "n", "codewords"}) {
        if (!j.is_object() || !j.contains(key)) {
            throw InputError(std::string("code: missing field '") + key + "'");
        }
    }
    if (!j["q"].is_number_unsigned() || !j["n"].is_number_unsigned() || !j["codewords"].is_array()) {
        throw InputError("code: 'q' and 'n' must be integers and 'codewords' an array");
    }
    GroupParams p;
    try {
        p = GroupParams::make(j["q"].get<uint32_t>(), j["n"].get<uint32_t>());
    } catch (const ParameterError &e) {
        throw InputError(std::string("code: ") + e.what());
    }
    std::vector<uint64_t> idx;
    size_t entry = 0;
    for (const auto &item : j["codewords"]) {
        if (!item.is_string()) {
            throw InputError("code: codewords[" + std::to_string(entry) + "] is not a string");
        }
        try {
            idx.push_back(GroupVector::parse(p, item.get<std::string>()).index());
        } catch (const std::exception &e) {
            throw InputError("code: codewords[" + std::to_string(entry) + "]: " + e.what());
        }
        entry++;
    }
    SupportSet support(p);
    try {
        support = SupportSet::from_unique(p, std::move(idx));
    } catch (const InputError &) {
        throw InputError("code: duplicate codewords");
    }
    std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "loaded";
    CodeRecord r = CodeRecord::make(name, std::move(support), Provenance::Loaded);
    if (warnings != nullptr) {
        if (j.contains("d") && j["d"].is_number() && j["d"].get<int64_t>() != r.min_distance) {
            warnings->push_back("code: stored d=" + std::to_string(j["d"].get<int64_t>()) +
                                " corrected to recomputed d=" + std::to_string(r.min_distance));
        }
        if (j.contains("K") && j["K"].is_number() && j["K"].get<uint64_t>() != r.size) {
            warnings->push_back("code: stored K=" + std::to_string(j["K"].get<uint64_t>()) +
                                " corrected to " + std::to_string(r.size));
        }
        if (j.contains("structure") && j["structure"].is_string() &&
            j["structure"].get<std::string>() != structure_name(r.structure)) {
            warnings->push_back("code: stored structure '" + j["structure"].get<std::string>() +
                                "' corrected to '" + structure_name(r.structure) + "'");
        }
    }
    return r;
}

CodeRecord load_code(const std::filesystem::path &path, std::vector<std::string> *warnings) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open code file " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_code(ss.str(), warnings);
}

void save_code(const CodeRecord &code, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write code file " + path.string());
    }
    out << code_json(code) << "\n";
}

}  // namespace phasecap
