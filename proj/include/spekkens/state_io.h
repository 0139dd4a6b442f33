// Copyright 2026 The Spekkens-Zd Authors
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


// JSON state documents:
//
//     {"version": "v1", "d": 3, "n": 1, "V": [[1, 0]], "w": [0, 0]}
//
// V lists generators in Howell order, all entries in [0, d).

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "spekkens/epistemic.h"

namespace spekkens {

inline constexpr const char *kStateVersion = "v1";

/// A state document exactly as written, before any normalization.
struct StateDocument {
    PhaseSpace space;
    std::vector<ModVector> rows;
    ModVector w;
};

namespace detail {

[[noreturn]] inline void bad_document(const std::string &msg) {
    fail(ErrorCode::InvalidDocument, msg);
}

inline ModVector read_vector(const nlohmann::json &j, Int d, std::size_t length, const std::string &what) {
    if (!j.is_array() || j.size() != length) {
        bad_document(what + " must be an array of " + std::to_string(length) + " integers");
    }
    std::vector<Int> entries;
    for (const auto &e : j) {
        if (!e.is_number_integer()) {
            bad_document(what + " has a non-integer entry");
        }
        Int v = e.get<Int>();
        if (v < 0 || v >= d) {
            bad_document(what + " entry " + std::to_string(v) + " is outside 0.." + std::to_string(d - 1));
        }
        entries.push_back(v);
    }
    return ModVector(d, std::move(entries));
}

inline Int read_positive(const nlohmann::json &doc, const char *key) {
    if (!doc.contains(key) || !doc[key].is_number_integer()) {
        bad_document(std::string("missing integer field \"") + key + "\"");
    }
    return doc[key].get<Int>();
}

}  // namespace detail

inline StateDocument state_document_from_json(const nlohmann::json &doc) {
    if (!doc.is_object()) {
        detail::bad_document("state document must be a JSON object");
    }
    if (doc.contains("version") && doc["version"] != kStateVersion) {
        detail::bad_document("unsupported version " + doc["version"].dump());
    }
    Int d = detail::read_positive(doc, "d");
    Int n = detail::read_positive(doc, "n");
    if (d < 2 || n < 1 || n > 64) {
        detail::bad_document("need d >= 2 and n >= 1");
    }
    PhaseSpace space(d, static_cast<std::size_t>(n));
    if (!doc.contains("V") || !doc["V"].is_array()) {
        detail::bad_document("missing array field \"V\"");
    }
    if (!doc.contains("w")) {
        detail::bad_document("missing field \"w\"");
    }
    std::vector<ModVector> rows;
    for (std::size_t k = 0; k < doc["V"].size(); k++) {
        rows.push_back(detail::read_vector(doc["V"][k], d, space.dim(), "V[" + std::to_string(k) + "]"));
    }
    ModVector w = detail::read_vector(doc["w"], d, space.dim(), "w");
    return {space, std::move(rows), std::move(w)};
}

inline StateDocument parse_state_document(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        detail::bad_document(std::string("not JSON: ") + e.what());
    }
    return state_document_from_json(doc);
}

/// First violated invariant of the document as written, or nullopt.
inline std::optional<std::string> validate_document(const StateDocument &doc) {
    for (std::size_t i = 0; i < doc.rows.size(); i++) {
        for (std::size_t j = i + 1; j < doc.rows.size(); j++) {
            if (Int p = symplectic_form(doc.rows[i], doc.rows[j]); p != 0) {
                return "V is not isotropic: <" + doc.rows[i].str() + "," + doc.rows[j].str() + "> = " +
                       std::to_string(p) + ", expected 0";
            }
        }
    }
    Submodule v = howell_form(doc.space.d(), doc.space.dim(), doc.rows);
    if (v.rows() != doc.rows) {
        return "V is not in canonical form; expected " + v.str();
    }
    std::vector<KnownOutcome> outcomes;
    for (const auto &row : doc.rows) {
        outcomes.push_back({row, row.dot(doc.w)});
    }
    return validate(EpistemicState(doc.space, v, doc.w, std::move(outcomes)));
}

/// Normalizes V and w. Raises InvalidState when V is not isotropic.
inline EpistemicState state_from_document(const StateDocument &doc) {
    return EpistemicState::from_parts(doc.space, howell_form(doc.space.d(), doc.space.dim(), doc.rows), doc.w);
}

inline nlohmann::json state_to_json(const EpistemicState &s) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &row : s.known().rows()) {
        rows.push_back(row.entries());
    }
    return {{"version", kStateVersion},
            {"d", s.space().d()},
            {"n", s.space().n()},
            {"V", rows},
            {"w", s.shift().entries()}};
}

inline std::string read_text_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        detail::bad_document("cannot read " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline EpistemicState load_state(const std::string &path) {
    return state_from_document(parse_state_document(read_text_file(path)));
}

}  // namespace spekkens
