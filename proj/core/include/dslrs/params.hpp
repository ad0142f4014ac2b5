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

#pragma once

#include <filesystem>
#include <optional>

#include "dslrs/keys.hpp"
#include "dslrs/threshold.hpp"

namespace dslrs {

// Everything a signer or verifier needs: the scope catalog, the
// deanonymization network's public material, the global registry, and
// whether verification enforces ring-membership in the registry
// (ledger deployments: on; detached library use: off).
struct PublicParams {
    ScopeCatalog catalog;
    NetPublic net;
    Registry registry;
    bool check_registry = true;
};

// On-disk public parameters (JSON): curve id, scope catalog, network
// public material. The registry travels in its own file.
struct ParamsFile {
    ScopeCatalog catalog;
    std::optional<NetPublic> net;

    void save(const std::filesystem::path& path) const;
    static ParamsFile load(const std::filesystem::path& path);
};

}  // namespace dslrs
