// Copyright 2026 The DSLRS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dslrs/params.hpp"

#include <fstream>

#include <json.hpp>

#include "hex.hpp"

namespace dslrs {

using nlohmann::json;

void ParamsFile::save(const std::filesystem::path& path) const {
    json j;
    j["curve"] = kCurveId;
    j["sids"] = json::array();
    for (const auto& sid : catalog.sids())
        j["sids"].push_back(detail::to_hex(sid.encode()));
    if (net) {
        json jn;
        jn["p_net"] = detail::to_hex(net->p_net.encode());
        jn["k"] = net->k;
        jn["n_nodes"] = net->n_nodes;
        jn["omegas"] = json::array();
        for (const auto& omega : net->indices)
            jn["omegas"].push_back(detail::to_hex(omega.encode()));
        j["net"] = std::move(jn);
    } else {
        j["net"] = nullptr;
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("params: cannot write " + path.string());
    out << j.dump(2) << "\n";
    if (!out) throw std::runtime_error("params: write failed");
}

ParamsFile ParamsFile::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("params: cannot read " + path.string());
    json j = json::parse(in);
    if (j.at("curve").get<std::string>() != kCurveId)
        throw std::runtime_error("params: unsupported curve");
    std::vector<Scalar> sids;
    for (const auto& s : j.at("sids"))
        sids.push_back(Scalar::decode(detail::from_hex(s.get<std::string>())));
    ScopeCatalog catalog(std::move(sids));
    std::optional<NetPublic> net;
    if (j.contains("net") && !j["net"].is_null()) {
        const auto& jn = j["net"];
        NetPublic np;
        np.p_net =
            Point::decode(detail::from_hex(jn.at("p_net").get<std::string>()));
        np.k = jn.at("k").get<std::size_t>();
        np.n_nodes = jn.at("n_nodes").get<std::size_t>();
        for (const auto& o : jn.at("omegas"))
            np.indices.push_back(
                Scalar::decode(detail::from_hex(o.get<std::string>())));
        if (np.k < 1 || np.k > np.indices.size() ||
            np.indices.size() != np.n_nodes)
            throw std::runtime_error("params: inconsistent network section");
        net = std::move(np);
    }
    return ParamsFile{std::move(catalog), std::move(net)};
}

}  // namespace dslrs
