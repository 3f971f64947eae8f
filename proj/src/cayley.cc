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

#include "phasecap/cayley.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>

#include "phasecap/errors.h"

namespace phasecap {

CayleyGraph build_graph(DifferenceSet connection) {
    return CayleyGraph(std::move(connection));
}

bool verify_independent(const CayleyGraph &g, const SupportSet &s) {
    require_same_group(g.params(), s.params(), "verify_independent");
    const auto &e = s.indices();
    for (size_t i = 0; i < e.size(); i++) {
        for (size_t j = i + 1; j < e.size(); j++) {
            if (g.adjacent(e[i], e[j])) {
                return false;
            }
        }
    }
    return true;
}

SupportSet greedy_independent_lower_bound(const CayleyGraph &g, std::span<const uint64_t> ordering) {
    const GroupParams &p = g.params();
    uint64_t nv = g.vertex_count();
    std::vector<uint8_t> blocked(nv, 0);
    std::vector<uint64_t> chosen;
    auto visit = [&](uint64_t v) {
        if (v >= nv) {
            throw ParameterError("greedy ordering contains a vertex outside the group");
        }
        if (blocked[v]) {
            return;
        }
        chosen.push_back(v);
        blocked[v] = 1;
        for (uint64_t d : g.connection().elements()) {
            blocked[packed::add(p, v, d)] = 1;
        }
    };
    if (ordering.empty()) {
        for (uint64_t v = 0; v < nv; v++) {
            visit(v);
        }
    } else {
        for (uint64_t v : ordering) {
            visit(v);
        }
    }
    return SupportSet(p, std::move(chosen));
}

IndependenceCertificate::IndependenceCertificate(const CayleyGraph &g, SupportSet set, bool is_maximum,
                                                 SearchStats stats)
    : set_(std::move(set)), is_maximum_(is_maximum), stats_(stats) {
    if (!verify_independent(g, set_)) {
        throw InvariantError("certificate set is not independent");
    }
}

CoordinateSymmetry coordinate_automorphisms(const DifferenceSet &d, uint64_t max_order) {
    const GroupParams &p = d.params();
    uint32_t n = p.n;
    std::vector<std::vector<uint64_t>> bucket(n);
    for (uint64_t v : d.elements()) {
        uint32_t last = 0;
        for (uint32_t i = 0; i < n; i++) {
            if (packed::coord(p, v, i) != 0) {
                last = i;
            }
        }
        bucket[last].push_back(v);
    }

    CoordinateSymmetry out;
    std::vector<uint8_t> perm(n, 0);
    std::vector<uint8_t> used(n, 0);
    bool overflow = false;

    auto fits = [&](uint32_t k) {
        // Every element whose support ends at coordinate k is now fully mapped.
        for (uint64_t v : bucket[k]) {
            uint64_t img = 0;
            for (uint32_t i = 0; i <= k; i++) {
                uint32_t c = packed::coord(p, v, i);
                if (c != 0) {
                    img += c * packed::unit(p, perm[i]);
                }
            }
            if (!d.contains(img)) {
                return false;
            }
        }
        return true;
    };

    auto recurse = [&](auto &self, uint32_t k) -> void {
        if (overflow) {
            return;
        }
        if (k == n) {
            if (out.perms.size() >= max_order) {
                overflow = true;
                return;
            }
            out.perms.push_back(perm);
            return;
        }
        for (uint32_t target = 0; target < n; target++) {
            if (used[target]) {
                continue;
            }
            perm[k] = static_cast<uint8_t>(target);
            used[target] = 1;
            if (fits(k)) {
                self(self, k + 1);
            }
            used[target] = 0;
        }
    };
    recurse(recurse, 0);

    if (overflow) {
        std::vector<uint8_t> identity(n);
        std::iota(identity.begin(), identity.end(), uint8_t{0});
        out.perms = {identity};
        out.complete = false;
    }
    return out;
}

namespace {

class Bits {
   public:
    explicit Bits(uint32_t size = 0) : words_((size + 63) / 64, 0) {
    }
    void set(uint32_t i) {
        words_[i >> 6] |= uint64_t{1} << (i & 63);
    }
    void reset(uint32_t i) {
        words_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }
    bool test(uint32_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    bool none() const {
        for (uint64_t w : words_) {
            if (w != 0) {
                return false;
            }
        }
        return true;
    }
    void clear() {
        std::fill(words_.begin(), words_.end(), 0);
    }
    std::vector<uint64_t> &words() {
        return words_;
    }
    const std::vector<uint64_t> &words() const {
        return words_;
    }

   private:
    std::vector<uint64_t> words_;
};

class IndependenceSearch {
   public:
    IndependenceSearch(const CayleyGraph &g, const SearchBudget &budget) : g_(g), budget_(budget) {
        const GroupParams &p = g.params();
        uint64_t nv = g.vertex_count();
        const auto &conn = g.connection();

        std::vector<uint64_t> cands;
        for (uint64_t v = 1; v < nv; v++) {
            if (!conn.contains(v)) {
                cands.push_back(v);
            }
        }
        if (cands.size() * std::max<uint64_t>(1, conn.size()) > (uint64_t{1} << 27)) {
            throw ResourceError("independence search: candidate adjacency too large for " + p.describe());
        }

        std::vector<int64_t> tmp_label(nv, -1);
        for (size_t i = 0; i < cands.size(); i++) {
            tmp_label[cands[i]] = static_cast<int64_t>(i);
        }
        std::vector<uint32_t> deg(cands.size(), 0);
        for (size_t i = 0; i < cands.size(); i++) {
            for (uint64_t d : conn.elements()) {
                if (tmp_label[packed::add(p, cands[i], d)] >= 0) {
                    deg[i]++;
                }
            }
        }
        // Low-degree candidates get low labels, so the coloring branches on dense vertices first.
        std::vector<uint32_t> order(cands.size());
        std::iota(order.begin(), order.end(), 0u);
        std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) { return deg[a] < deg[b]; });

        m_ = static_cast<uint32_t>(cands.size());
        vertex_of_.resize(m_);
        label_of_.assign(nv, -1);
        for (uint32_t i = 0; i < m_; i++) {
            vertex_of_[i] = cands[order[i]];
            label_of_[vertex_of_[i]] = static_cast<int32_t>(i);
        }
        nbr_.resize(m_);
        for (uint32_t i = 0; i < m_; i++) {
            for (uint64_t d : conn.elements()) {
                int32_t l = label_of_[packed::add(p, vertex_of_[i], d)];
                if (l >= 0) {
                    nbr_[i].push_back(static_cast<uint32_t>(l));
                }
            }
        }

        if (budget.use_symmetry && m_ > 0) {
            auto sym = coordinate_automorphisms(conn, budget.max_symmetry_order);
            perms_ = std::move(sym.perms);
        }
        if (perms_.empty()) {
            std::vector<uint8_t> identity(p.n);
            std::iota(identity.begin(), identity.end(), uint8_t{0});
            perms_.push_back(identity);
        }
        // Tabulate label images when the table is small enough; it dominates the search otherwise.
        if (perms_.size() > 1 && perms_.size() * m_ <= (uint64_t{1} << 25)) {
            image_table_.resize(perms_.size() * m_);
            for (uint32_t gi = 0; gi < perms_.size(); gi++) {
                for (uint32_t l = 0; l < m_; l++) {
                    image_table_[size_t{gi} * m_ + l] = compute_image(gi, l);
                }
            }
        }
    }

    IndependenceCertificate run() {
        auto start = std::chrono::steady_clock::now();
        deadline_ = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                std::chrono::duration<double>(budget_.max_seconds));

        SupportSet greedy = greedy_independent_lower_bound(g_);
        best_ = greedy.indices();

        if (m_ > 0) {
            Bits root(m_);
            for (uint32_t i = 0; i < m_; i++) {
                root.set(i);
            }
            std::vector<uint32_t> group(perms_.size());
            std::iota(group.begin(), group.end(), 0u);
            expand(root, group);
        } else if (best_.empty()) {
            best_ = {0};
        }

        SearchStats stats;
        stats.nodes = nodes_;
        stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        stats.symmetry_order = perms_.size();
        return IndependenceCertificate(g_, SupportSet(g_.params(), best_), !aborted_, stats);
    }

   private:
    uint32_t image(uint32_t perm_index, uint32_t label) const {
        if (!image_table_.empty()) {
            return image_table_[size_t{perm_index} * m_ + label];
        }
        return compute_image(perm_index, label);
    }

    uint32_t compute_image(uint32_t perm_index, uint32_t label) const {
        uint64_t v = packed::permute(g_.params(), vertex_of_[label], perms_[perm_index]);
        return static_cast<uint32_t>(label_of_[v]);
    }

    void record() {
        best_.clear();
        best_.push_back(0);
        for (uint32_t l : current_) {
            best_.push_back(vertex_of_[l]);
        }
    }

    bool out_of_budget() {
        if (nodes_ >= budget_.max_nodes) {
            return true;
        }
        if ((nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_) {
            return true;
        }
        return false;
    }

    void expand(Bits cand, const std::vector<uint32_t> &group) {
        if (out_of_budget()) {
            aborted_ = true;
            return;
        }
        nodes_++;

        // Greedy clique cover of the candidates; color[i] bounds what order[0..i] can add.
        std::vector<uint32_t> order;
        std::vector<uint32_t> color;
        Bits uncovered = cand;
        Bits clique(m_);
        Bits next(m_);
        uint32_t k = 0;
        while (!uncovered.none()) {
            k++;
            clique = uncovered;
            for (size_t wi = 0; wi < clique.words().size(); wi++) {
                while (clique.words()[wi] != 0) {
                    uint32_t v = static_cast<uint32_t>(wi * 64 + std::countr_zero(clique.words()[wi]));
                    uncovered.reset(v);
                    order.push_back(v);
                    color.push_back(k);
                    next.clear();
                    for (uint32_t u : nbr_[v]) {
                        if (clique.test(u)) {
                            next.set(u);
                        }
                    }
                    std::swap(clique, next);
                }
            }
        }

        size_t base = current_.size() + 1;
        for (size_t i = order.size(); i-- > 0;) {
            if (base + color[i] <= best_.size()) {
                return;
            }
            uint32_t v = order[i];
            if (!cand.test(v)) {
                continue;
            }
            Bits sub = cand;
            sub.reset(v);
            for (uint32_t u : nbr_[v]) {
                sub.reset(u);
            }
            current_.push_back(v);
            if (sub.none()) {
                if (base + 1 > best_.size()) {
                    record();
                }
            } else {
                std::vector<uint32_t> stabilizer;
                if (group.size() > 1) {
                    for (uint32_t gi : group) {
                        if (image(gi, v) == v) {
                            stabilizer.push_back(gi);
                        }
                    }
                } else {
                    stabilizer = group;
                }
                expand(std::move(sub), stabilizer);
            }
            current_.pop_back();
            if (aborted_) {
                return;
            }
            cand.reset(v);
            if (group.size() > 1) {
                for (uint32_t gi : group) {
                    cand.reset(image(gi, v));
                }
            }
        }
    }

    const CayleyGraph &g_;
    SearchBudget budget_;
    uint32_t m_ = 0;
    std::vector<uint64_t> vertex_of_;
    std::vector<int32_t> label_of_;
    std::vector<std::vector<uint32_t>> nbr_;
    std::vector<std::vector<uint8_t>> perms_;
    std::vector<uint32_t> image_table_;
    std::vector<uint64_t> best_;
    std::vector<uint32_t> current_;
    uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::chrono::steady_clock::time_point deadline_;
};

}  // namespace

IndependenceCertificate independence_number(const CayleyGraph &g, const SearchBudget &budget) {
    IndependenceSearch search(g, budget);
    return search.run();
}

namespace {

std::vector<uint64_t> close_span(const GroupParams &p, const std::vector<uint64_t> &span, uint64_t v) {
    std::vector<uint64_t> out = span;
    uint64_t mult = v;
    for (uint32_t c = 1; c < p.q; c++) {
        for (uint64_t w : span) {
            out.push_back(packed::add(p, w, mult));
        }
        mult = packed::add(p, mult, v);
    }
    return out;
}

}  // namespace

SubspaceWitness::SubspaceWitness(std::vector<GroupVector> basis, const DifferenceSet &d) : basis_(std::move(basis)) {
    const GroupParams &p = d.params();
    std::vector<uint64_t> span{0};
    for (const auto &b : basis_) {
        require_same_group(p, b.params(), "SubspaceWitness");
        span = close_span(p, span, b.index());
    }
    SupportSet s(p, span);
    if (s.size() != span.size()) {
        throw InvariantError("subspace basis is linearly dependent");
    }
    for (uint64_t w : s) {
        if (w != 0 && !d.contains(w)) {
            throw InvariantError("span element " + GroupVector(p, w).str() + " is not in the connection set");
        }
    }
}

SupportSet SubspaceWitness::span() const {
    if (basis_.empty()) {
        return SupportSet(GroupParams{}, {0});
    }
    const GroupParams &p = basis_.front().params();
    std::vector<uint64_t> span{0};
    for (const auto &b : basis_) {
        span = close_span(p, span, b.index());
    }
    return SupportSet(p, std::move(span));
}

std::optional<SubspaceWitness> find_max_additive_subspace(const DifferenceSet &d, uint32_t r_max,
                                                          uint64_t max_nodes) {
    const GroupParams &p = d.params();
    if (r_max > p.n) {
        throw ParameterError("r_max exceeds n");
    }
    // Total order: lower weight first, then lexicographically larger (leftmost support) first.
    auto key = [&](uint64_t v) { return std::pair<uint32_t, uint64_t>(packed::weight(p, v), ~v); };
    auto before = [&](uint64_t a, uint64_t b) { return key(a) < key(b); };

    std::vector<uint64_t> cands(d.elements().begin(), d.elements().end());
    std::sort(cands.begin(), cands.end(), before);

    uint32_t cap = r_max;
    {
        // |W| - 1 <= |D| bounds the dimension.
        uint32_t r = 0;
        uint64_t size = 1;
        while (r < cap && size * p.q - 1 <= d.size()) {
            size *= p.q;
            r++;
        }
        cap = r;
    }

    std::vector<uint64_t> best_basis;
    std::vector<uint64_t> basis;
    uint64_t nodes = 0;
    bool truncated = false;

    auto recurse = [&](auto &self, const std::vector<uint64_t> &span, size_t start) -> void {
        if (basis.size() > best_basis.size()) {
            best_basis = basis;
        }
        if (best_basis.size() >= cap) {
            return;
        }
        if (++nodes > max_nodes) {
            truncated = true;
            return;
        }
        std::vector<size_t> compatible;
        uint64_t loose = 0;
        for (size_t i = start; i < cands.size(); i++) {
            uint64_t v = cands[i];
            bool member = true;
            bool canonical = true;
            uint64_t mult = v;
            for (uint32_t c = 1; c < p.q && member; c++) {
                for (uint64_t w : span) {
                    uint64_t x = packed::add(p, w, mult);
                    if (!d.contains(x)) {
                        member = false;
                        break;
                    }
                    if (before(x, v)) {
                        canonical = false;
                    }
                }
                mult = packed::add(p, mult, v);
            }
            if (member) {
                loose++;
                if (canonical) {
                    compatible.push_back(i);
                }
            }
        }
        // j more dimensions add |span| (q^j - 1) elements, all of them compatible.
        uint32_t extra = 0;
        {
            uint64_t qpow = p.q;
            while (basis.size() + extra < cap && span.size() * (qpow - 1) <= loose) {
                extra++;
                qpow *= p.q;
            }
        }
        if (basis.size() + extra <= best_basis.size()) {
            return;
        }
        for (size_t i : compatible) {
            basis.push_back(cands[i]);
            self(self, close_span(p, span, cands[i]), i + 1);
            basis.pop_back();
            if (truncated || best_basis.size() >= cap) {
                return;
            }
        }
    };
    recurse(recurse, std::vector<uint64_t>{0}, 0);

    if (best_basis.empty()) {
        return std::nullopt;
    }
    std::vector<GroupVector> vecs;
    for (uint64_t b : best_basis) {
        vecs.emplace_back(p, b);
    }
    SubspaceWitness w(std::move(vecs), d);
    w.proven_maximal = !truncated;
    return w;
}

uint64_t coset_collapse_bound(const CayleyGraph &g, const SubspaceWitness &w) {
    if (w.dimension() == 0) {
        throw ParameterError("collapse bound needs a subspace of positive dimension");
    }
    const GroupParams &p = g.params();
    SubspaceWitness checked(w.basis(), g.connection());
    SupportSet span = checked.span();

    uint64_t nv = g.vertex_count();
    std::vector<uint8_t> seen(nv, 0);
    for (uint64_t x = 0; x < nv; x++) {
        if (seen[x]) {
            continue;
        }
        std::vector<uint64_t> coset;
        coset.reserve(span.size());
        for (uint64_t s : span) {
            uint64_t y = packed::add(p, x, s);
            seen[y] = 1;
            coset.push_back(y);
        }
        for (size_t i = 0; i < coset.size(); i++) {
            for (size_t j = i + 1; j < coset.size(); j++) {
                if (!g.adjacent(coset[i], coset[j])) {
                    throw InvariantError("coset of the witness subspace is not a clique");
                }
            }
        }
    }
    uint64_t bound = 1;
    for (uint32_t i = w.dimension(); i < p.n; i++) {
        bound *= p.q;
    }
    return bound;
}

CayleyGraph strong_product(const CayleyGraph &g1, const CayleyGraph &g2) {
    const GroupParams &p1 = g1.params();
    const GroupParams &p2 = g2.params();
    if (p1.q != p2.q) {
        throw ParameterError("strong product needs factors over the same field");
    }
    GroupParams p = GroupParams::make(p1.q, p1.n + p2.n);
    if (p.order() > (uint64_t{1} << 16)) {
        throw ResourceError("strong product exceeds 2^16 vertices");
    }
    uint64_t shift = p2.order();
    std::vector<uint64_t> d1{0};
    d1.insert(d1.end(), g1.connection().elements().begin(), g1.connection().elements().end());
    std::vector<uint64_t> d2{0};
    d2.insert(d2.end(), g2.connection().elements().begin(), g2.connection().elements().end());
    std::vector<uint64_t> conn;
    for (uint64_t a : d1) {
        for (uint64_t b : d2) {
            if (a != 0 || b != 0) {
                conn.push_back(a * shift + b);
            }
        }
    }
    return CayleyGraph(DifferenceSet(SupportSet(p, std::move(conn))));
}

}  // namespace phasecap
