// Copyright 2026 The hrt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <hrt/module_json.hpp>

#include <fstream>

namespace hrt
{

namespace
{

int get_int(const Json &v, const std::string &field)
{
    if (!v.is_number_integer()) {
        throw input_error(field, "expected an integer");
    }
    const auto x = v.get<std::int64_t>();
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
        throw input_error(field, "integer out of range");
    }
    return static_cast<int>(x);
}

const Json &get_array(const Json &doc, const char *key)
{
    if (!doc.contains(key)) {
        throw input_error(key, "missing");
    }
    const auto &v = doc.at(key);
    if (!v.is_array()) {
        throw input_error(key, "expected an array");
    }
    return v;
}

} // namespace

MonomialModule module_from_json(const Json &doc)
{
    if (!doc.is_object()) {
        throw input_error("<root>", "expected a JSON object");
    }
    if (!doc.contains("n")) {
        throw input_error("n", "missing");
    }
    const int n = get_int(doc.at("n"), "n");
    if (n < 1) {
        throw input_error("n", "must be >= 1");
    }

    std::vector<int> degrees;
    const auto &deg = get_array(doc, "degrees");
    for (std::size_t i = 0; i < deg.size(); ++i) {
        degrees.push_back(get_int(deg[i], "degrees[" + std::to_string(i) + "]"));
    }
    if (degrees.empty()) {
        throw input_error("degrees", "free module needs at least one generator");
    }
    if (!std::is_sorted(degrees.begin(), degrees.end())) {
        throw input_error("degrees", "must be sorted non-decreasing");
    }
    FreeModuleShape shape(n, degrees);

    const auto &comps = get_array(doc, "components");
    if (comps.size() != degrees.size()) {
        throw input_error("components", "expected " + std::to_string(degrees.size()) + " entries, got " +
                                            std::to_string(comps.size()));
    }
    std::vector<MonomialIdeal> ideals;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const std::string cfield = "components[" + std::to_string(c) + "]";
        if (!comps[c].is_array()) {
            throw input_error(cfield, "expected an array of exponent vectors");
        }
        std::vector<Monomial> gens;
        for (std::size_t g = 0; g < comps[c].size(); ++g) {
            const std::string gfield = cfield + "[" + std::to_string(g) + "]";
            const auto &exps = comps[c][g];
            if (!exps.is_array() || exps.size() != static_cast<std::size_t>(n)) {
                throw input_error(gfield, "expected " + std::to_string(n) + " exponents");
            }
            std::vector<int> e;
            for (std::size_t k = 0; k < exps.size(); ++k) {
                const std::string efield = gfield + "[" + std::to_string(k) + "]";
                e.push_back(get_int(exps[k], efield));
                if (e.back() < 0) {
                    throw input_error(efield, "negative exponent");
                }
            }
            gens.emplace_back(std::move(e));
        }
        ideals.emplace_back(n, std::move(gens));
    }
    return MonomialModule(std::move(shape), std::move(ideals));
}

Json module_to_json(const MonomialModule &module)
{
    Json doc;
    doc["n"] = module.shape().variables();
    doc["degrees"] = module.shape().degrees();
    Json comps = Json::array();
    for (const auto &ideal : module.components()) {
        Json gens = Json::array();
        for (const auto &g : ideal.generators()) {
            gens.push_back(g.exponents());
        }
        comps.push_back(std::move(gens));
    }
    doc["components"] = std::move(comps);
    return doc;
}

MonomialModule read_module_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw input_error("--module", "cannot read file '" + path + "'");
    }
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw input_error("--module", std::string("malformed JSON: ") + e.what());
    }
    return module_from_json(doc);
}

} // namespace hrt
