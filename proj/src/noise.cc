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

#include "phasecap/noise.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "phasecap/errors.h"

namespace phasecap {

std::string noise_kind_name(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::Uniform:
            return "uniform";
        case NoiseKind::CorrelatedRing:
            return "correlated_ring";
        case NoiseKind::CorrelatedChain:
            return "correlated_chain";
        case NoiseKind::Custom:
            return "custom";
    }
    return "custom";
}

std::string NoiseModel::describe() const {
    std::string r = noise_kind_name(kind);
    if (t.has_value()) {
        r += "(t=" + std::to_string(*t) + ")";
    }
    return r + " over " + params.describe() + ", |Omega|=" + std::to_string(omega.size());
}

NoiseModel uniform_ball_model(const GroupParams &params, uint32_t t) {
    return NoiseModel{params, enumerate_ball(params, t), NoiseKind::Uniform, t};
}

NoiseModel correlated_ring_model(uint32_t n, bool periodic) {
    if (n < 3) {
        throw ParameterError("correlated ring model needs n >= 3, got " + std::to_string(n));
    }
    GroupParams p = GroupParams::make(2, n);
    std::vector<uint64_t> omega{0};
    for (uint32_t i = 0; i < n; i++) {
        omega.push_back(packed::unit(p, i));
    }
    for (uint32_t i = 0; i + 1 < n; i++) {
        omega.push_back(packed::unit(p, i) ^ packed::unit(p, i + 1));
    }
    if (periodic) {
        omega.push_back(packed::unit(p, n - 1) ^ packed::unit(p, 0));
    }
    return NoiseModel{p, SupportSet(p, std::move(omega)),
                      periodic ? NoiseKind::CorrelatedRing : NoiseKind::CorrelatedChain, std::nullopt};
}

NoiseModel custom_model(SupportSet omega, bool *added_zero) {
    GroupParams p = omega.params();
    bool missing = !omega.contains(uint64_t{0});
    if (missing) {
        std::vector<uint64_t> idx = omega.indices();
        idx.push_back(0);
        omega = SupportSet(p, std::move(idx));
    }
    if (added_zero != nullptr) {
        *added_zero = missing;
    }
    return NoiseModel{p, std::move(omega), NoiseKind::Custom, std::nullopt};
}

NoiseModel parse_noise_model(const std::string &json_text, std::vector<std::string> *warnings) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error &e) {
        throw InputError(std::string("noise model: JSON parse failure: ") + e.what());
    }
    if (!j.is_object()) {
        throw InputError("noise model: top level must be an object");
    }
    for (const char *key : {"q", "n", "omega"}) {
        if (!j.contains(key)) {
            throw InputError(std::string("noise model: missing field '") + key + "'");
        }
    }
    if (!j["q"].is_number_unsigned() || !j["n"].is_number_unsigned()) {
        throw InputError("noise model: fields 'q' and 'n' must be non-negative integers");
    }
    if (!j["omega"].is_array()) {
        throw InputError("noise model: field 'omega' must be an array of strings");
    }
    GroupParams p;
    try {
        p = GroupParams::make(j["q"].get<uint32_t>(), j["n"].get<uint32_t>());
    } catch (const ParameterError &e) {
        throw InputError(std::string("noise model: ") + e.what());
    }
    std::vector<uint64_t> idx;
    size_t entry = 0;
    for (const auto &item : j["omega"]) {
        if (!item.is_string()) {
            throw InputError("noise model: omega[" + std::to_string(entry) + "] is not a string");
        }
        try {
            idx.push_back(GroupVector::parse(p, item.get<std::string>()).index());
        } catch (const std::exception &e) {
            throw InputError("noise model: omega[" + std::to_string(entry) + "]: " + e.what());
        }
        entry++;
    }
    SupportSet omega(p);
    try {
        omega = SupportSet::from_unique(p, std::move(idx));
    } catch (const InputError &) {
        throw InputError("noise model: omega contains duplicate entries");
    }
    bool added = false;
    NoiseModel m = custom_model(std::move(omega), &added);
    if (added && warnings != nullptr) {
        warnings->push_back("noise model: zero vector was missing from omega and has been added");
    }
    if (j.contains("t")) {
        if (!j["t"].is_number_unsigned()) {
            throw InputError("noise model: field 't' must be a non-negative integer");
        }
        uint32_t t = j["t"].get<uint32_t>();
        if (t <= p.n && m.omega == enumerate_ball(p, t)) {
            m.kind = NoiseKind::Uniform;
            m.t = t;
        } else if (warnings != nullptr) {
            warnings->push_back("noise model: omega is not the ball E_" + std::to_string(t) +
                                "; the declared radius is ignored");
        }
    }
    return m;
}

NoiseModel load_noise_model(const std::filesystem::path &path, std::vector<std::string> *warnings) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open noise model file " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_noise_model(ss.str(), warnings);
}

std::string noise_model_json(const NoiseModel &model) {
    nlohmann::json j;
    j["q"] = model.params.q;
    j["n"] = model.params.n;
    if (model.t) {
        j["t"] = *model.t;
    }
    j["omega"] = model.omega.to_strings();
    return j.dump(2);
}

void save_noise_model(const NoiseModel &model, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write noise model file " + path.string());
    }
    out << noise_model_json(model) << "\n";
}

DifferenceSet::DifferenceSet(SupportSet elements) : elements_(std::move(elements)) {
    const GroupParams &p = elements_.params();
    p.require_enumerable("difference set");
    member_.assign(p.order(), 0);
    for (uint64_t d : elements_) {
        member_[d] = 1;
    }
    if (member_[0] != 0) {
        throw InvariantError("connection set must not contain the zero vector");
    }
    for (uint64_t d : elements_) {
        if (member_[packed::negate(p, d)] == 0) {
            throw InvariantError("connection set is not closed under negation: " + GroupVector(p, d).str());
        }
    }
}

DifferenceSet derive_difference_set(const NoiseModel &model) {
    SupportSet diff = difference_set(model.omega, model.omega);
    std::vector<uint64_t> idx;
    idx.reserve(diff.size());
    for (uint64_t d : diff) {
        if (d != 0) {
            idx.push_back(d);
        }
    }
    return DifferenceSet(SupportSet(model.params, std::move(idx)));
}

}  // namespace phasecap
