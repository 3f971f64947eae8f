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

#ifndef PHASECAP_CODES_H
#define PHASECAP_CODES_H

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "phasecap/cayley.h"
#include "phasecap/group.h"

namespace phasecap {

enum class Structure { Linear, Affine, Nonlinear };
enum class Provenance { Constructed, Searched, Loaded };

std::string structure_name(Structure s);
std::string provenance_name(Provenance p);

/// A spectral support together with its recomputed parameters.
struct CodeRecord {
    SupportSet support;
    std::string name;
    uint32_t n = 0;
    uint32_t q = 2;
    uint64_t size = 0;
    /// 0 for codes with fewer than two words.
    uint32_t min_distance = 0;
    Structure structure = Structure::Nonlinear;
    Provenance provenance = Provenance::Constructed;

    /// Recomputes every derived field from `support`.
    static CodeRecord make(std::string name, SupportSet support, Provenance provenance);
    /// Correctable phase-error weight floor((d - 1) / 2).
    uint32_t correctable() const;
};

/// Linear if S is a subgroup, affine if S - S[0] is, nonlinear otherwise.
Structure classify_structure(const SupportSet &s);

/// Rank over F_q of the vectors in `s`.
uint32_t rank_over_field(const SupportSet &s);

CodeRecord repetition_support(uint32_t n);
/// RM(1, m): evaluations of every affine Boolean function on F_2^m, m <= 6.
CodeRecord reed_muller_1(uint32_t m);
/// The [8,4,3] shortened Hamming code (parity-check columns 1..8 of F_2^4).
CodeRecord linear_baseline_8_3();
/// A largest single-error-correcting (8, K, 3) support, found by the exact
/// independence solver on Cay(F_2^8, E_2 \ {0}). Throws SearchIncompleteError
/// if the budget runs out before a size-20 set is found.
CodeRecord julin_class_search(const SearchBudget &budget = {});
/// Gray image of the quaternary octacode: (16, 256, 6).
CodeRecord nordstrom_robinson();

/// A quadratic form Q(x) = sum_{i<j} c_ij x_i x_j on F_2^m. Row i holds the
/// bits c_ij (j > i) of the symmetric zero-diagonal matrix, i.e. the
/// alternating bilinear form of Q.
struct QuadraticForm {
    uint32_t m = 0;
    std::vector<uint32_t> rows;

    bool operator==(const QuadraticForm &) const = default;
    uint32_t evaluate(uint32_t x) const;
};

/// Rank of the alternating bilinear form of a + b.
uint32_t bilinear_rank_of_sum(const QuadraticForm &a, const QuadraticForm &b);
/// True iff every pairwise sum of distinct members is nondegenerate.
bool is_kerdock_set(const std::vector<QuadraticForm> &forms);

/// 2^(m-1) quadratic forms on F_2^m with pairwise nondegenerate sums, read
/// off the Gray image of the Z4-linear Kerdock code over the Galois ring
/// GR(4, m-1). m even, 4 <= m <= 8.
std::vector<QuadraticForm> kerdock_set_galois(uint32_t m);
/// Independent route: seeded depth-first search over alternating forms.
/// Returns an empty vector if `max_nodes` runs out.
std::vector<QuadraticForm> kerdock_set_search(uint32_t m, uint64_t seed, uint64_t max_nodes = 10'000'000);

/// S_K = {Q + l_a + b}: 2^(2m) words of length 2^m, distance 2^(m-1) - 2^(m/2-1).
/// m even, 4 <= m <= 6. Both parameters are verified exhaustively.
CodeRecord kerdock_support(uint32_t m);

/// d(S) >= 2t + 1, cross-checked against (S - S) n E_2t = {0}.
bool verify_phase_correction(const SupportSet &s, uint32_t t);

/// Built-in catalog: "nordstrom-robinson", "julin", "linear-8-3",
/// "repetition-<n>", "rm1-<m>", "kerdock-<m>".
CodeRecord catalog_code(const std::string &name);
std::vector<std::string> catalog_names();

std::string code_json(const CodeRecord &code);
/// Parses the code JSON schema. Stored metadata (K, d, structure) is
/// recomputed; disagreements become warnings.
CodeRecord parse_code(const std::string &json_text, std::vector<std::string> *warnings = nullptr);
CodeRecord load_code(const std::filesystem::path &path, std::vector<std::string> *warnings = nullptr);
void save_code(const CodeRecord &code, const std::filesystem::path &path);

}  // namespace phasecap

#endif
