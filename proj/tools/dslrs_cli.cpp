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

// dslrs: command line front end for the scoped-linkable ring signature
// scheme, the k-of-N deanonymization network and the consent ledger.
// Keys and signatures live on disk as raw binary (framing documented in
// the README); registries, parameters and logs are text.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "dslrs/ledger.hpp"
#include "dslrs/network_sim.hpp"
#include "dslrs/rng.hpp"

using namespace dslrs;
using nlohmann::json;

namespace {

// ---- small file / encoding helpers ----------------------------------------

std::string to_hex(std::span<const std::uint8_t> bytes) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0f]);
    }
    return out;
}

std::vector<std::uint8_t> from_hex(std::string_view hex) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    if (hex.size() % 2 != 0) throw std::runtime_error("hex: odd length");
    std::vector<std::uint8_t> out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        int hi = nibble(hex[2 * i]);
        int lo = nibble(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) throw std::runtime_error("hex: bad digit");
        out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return out;
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::span<const std::uint8_t> data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

// ---- rng / shuffle ---------------------------------------------------------

std::unique_ptr<RandomSource> make_rng(std::optional<std::uint64_t> seed) {
    if (seed) return std::make_unique<DeterministicRng>(*seed);
    return std::make_unique<SystemRng>();
}

std::uint64_t draw_u64(RandomSource& rng) {
    std::array<std::uint8_t, 8> b{};
    rng.fill(b);
    std::uint64_t v = 0;
    for (auto byte : b) v = (v << 8) | byte;
    return v;
}

template <typename T>
void shuffle_with(std::vector<T>& v, RandomSource& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[draw_u64(rng) % i]);
}

// ---- config / params plumbing ----------------------------------------------

// DSLRS_CONFIG may point to a JSON file with default paths:
//   {"params": "...", "registry": "...", "shares": "...", "ledger": "..."}
struct Defaults {
    std::string params, registry, shares, ledger;
};

Defaults load_defaults() {
    Defaults d;
    const char* env = std::getenv("DSLRS_CONFIG");
    if (!env || !*env) return d;
    std::ifstream in(env);
    if (!in) throw std::runtime_error(std::string("DSLRS_CONFIG: cannot read ") + env);
    json j = json::parse(in);
    d.params = j.value("params", "");
    d.registry = j.value("registry", "");
    d.shares = j.value("shares", "");
    d.ledger = j.value("ledger", "");
    return d;
}

std::string need(const std::string& value, const char* flag) {
    if (value.empty())
        throw CLI::RequiredError(std::string(flag) +
                                 " (or a DSLRS_CONFIG default)");
    return value;
}

struct KeyFile {
    KeyPair kp;
};

// key file: secret(32) || public(33)
KeyFile load_key(const std::string& path) {
    auto bytes = read_file(path);
    if (bytes.size() != kScalarLen + kPointLen)
        throw std::runtime_error("key file: expected 65 bytes");
    Scalar secret = Scalar::decode(std::span(bytes).subspan(0, kScalarLen));
    Point pub = Point::decode(std::span(bytes).subspan(kScalarLen));
    if (pub != Point::mul_gen(secret))
        throw std::runtime_error("key file: public key mismatch");
    return KeyFile{KeyPair{std::move(secret), std::move(pub)}};
}

void save_key(const std::string& path, const KeyPair& kp) {
    std::vector<std::uint8_t> bytes;
    auto s = kp.secret.encode();
    auto p = kp.public_key.encode();
    bytes.insert(bytes.end(), s.begin(), s.end());
    bytes.insert(bytes.end(), p.begin(), p.end());
    write_file(path, bytes);
}

PublicParams load_public_params(const std::string& params_path,
                                const std::string& registry_path,
                                bool check_registry) {
    ParamsFile pf = ParamsFile::load(need(params_path, "--params"));
    if (!pf.net)
        throw std::runtime_error(
            "params: no network key yet; run net-keygen first");
    Registry reg = Registry::load(need(registry_path, "--registry"));
    return PublicParams{std::move(pf.catalog), std::move(*pf.net),
                        std::move(reg), check_registry};
}

// --scope takes a 1-based catalog index (1 is the reserved registration
// scope) or a 64-hex-digit SID
Scalar parse_scope(const ScopeCatalog& catalog, const std::string& arg) {
    if (arg.size() == 64) return Scalar::decode(from_hex(arg));
    std::size_t idx = std::stoul(arg);
    if (idx < 1 || idx > catalog.size())
        throw std::runtime_error("scope index out of range (1.." +
                                 std::to_string(catalog.size()) + ")");
    return catalog.sids()[idx - 1];
}

std::vector<std::uint8_t> message_arg(const std::string& literal,
                                      const std::string& file) {
    if (!file.empty()) return read_file(file);
    return {literal.begin(), literal.end()};
}

std::vector<DecryptionShare> load_decryption_shares(
    const std::vector<std::string>& paths) {
    std::vector<DecryptionShare> out;
    for (const auto& p : paths)
        out.push_back(DecryptionShare::decode(read_file(p)));
    return out;
}

// ---- scenario runner (simulate) ---------------------------------------------

int run_scenario(const std::string& scenario_path,
                 const std::string& transcript_path) {
    json sc = json::parse(std::ifstream(scenario_path));
    const std::size_t n_nodes = sc.at("nodes").get<std::size_t>();
    const std::size_t k = sc.at("threshold").get<std::size_t>();
    const std::uint64_t seed = sc.value("seed", 1u);
    const std::size_t n_users = sc.value("users", std::size_t{8});
    const std::size_t scopes = sc.value("scopes", std::size_t{2});
    const std::size_t default_ring = sc.value("ring_size", std::size_t{4});

    sim::SimOptions opt;
    opt.complaint_round = sc.value("complaint_round", false);
    if (sc.contains("behaviors"))
        for (auto& [id, name] : sc["behaviors"].items()) {
            sim::Behavior b;
            std::string n = name.get<std::string>();
            if (n == "honest") b = sim::Behavior::honest;
            else if (n == "silent") b = sim::Behavior::silent;
            else if (n == "corrupt-share") b = sim::Behavior::corrupt_share;
            else throw std::runtime_error("scenario: unknown behavior " + n);
            opt.behaviors[std::stoi(id)] = b;
        }

    sim::Simulator simulator(n_nodes, k, seed, opt);
    DeterministicRng rng(seed ^ 0x736365);  // separate stream for users

    ScopeCatalog catalog = ScopeCatalog::random(scopes + 1, rng);
    Registry registry(2);
    std::vector<KeyPair> users;
    for (std::size_t i = 0; i < n_users; ++i) {
        KeyPair kp = gen_keypair(rng);
        registry.register_key(catalog, kp.public_key, pop_create(kp, catalog, rng));
        users.push_back(std::move(kp));
    }

    std::optional<PublicParams> pp;
    std::map<std::string, DslrsSignature> sigs;
    std::map<std::string, std::vector<std::uint8_t>> msgs;

    for (const auto& action : sc.at("actions")) {
        const std::string op = action.at("op").get<std::string>();
        json out;
        out["op"] = op;
        if (op == "dkg") {
            NetPublic net = simulator.run_dkg();
            pp = PublicParams{catalog, net, registry, true};
            out["p_net"] = to_hex(net.p_net.encode());
        } else if (op == "sign") {
            if (!pp) throw std::runtime_error("scenario: dkg before sign");
            std::size_t signer = action.at("signer").get<std::size_t>();
            if (signer < 1 || signer > users.size())
                throw std::runtime_error("scenario: signer out of range");
            std::size_t scope = action.value("scope", std::size_t{2});
            std::size_t ring_size = action.value("ring_size", default_ring);
            std::string name = action.value("as", std::string("sig"));
            auto m_str = action.value("message", std::string("consent"));
            std::vector<std::uint8_t> m(m_str.begin(), m_str.end());

            std::vector<Point> members;
            members.push_back(users[signer - 1].public_key);
            for (std::size_t i = 0; members.size() < ring_size; ++i) {
                std::size_t idx = (signer - 1 + 1 + i) % users.size();
                members.push_back(users[idx].public_key);
            }
            shuffle_with(members, rng);
            auto sig = sign(m, users[signer - 1].secret, Ring(std::move(members)),
                            catalog.sids().at(scope - 1), *pp, rng);
            out["as"] = name;
            out["key_image"] = to_hex(sig.key_image.point().encode());
            out["bytes"] = serialize(sig).size();
            sigs.insert_or_assign(name, std::move(sig));
            msgs.insert_or_assign(name, std::move(m));
        } else if (op == "deanonymize") {
            if (!pp) throw std::runtime_error("scenario: dkg before deanonymize");
            std::string name = action.value("sig", std::string("sig"));
            std::string requester = action.value("requester", std::string("?"));
            auto it = sigs.find(name);
            if (it == sigs.end())
                throw std::runtime_error("scenario: unknown signature " + name);
            out["sig"] = name;
            out["requester"] = requester;
            try {
                Point signer = simulator.request_deanonymization(it->second,
                                                                 requester);
                out["signer"] = to_hex(signer.encode());
                int idx = 0;
                for (std::size_t u = 0; u < users.size(); ++u)
                    if (users[u].public_key == signer)
                        idx = static_cast<int>(u) + 1;
                out["signer_index"] = idx;  // 0 when not a known user
            } catch (const sim::TimeoutError& e) {
                out["error"] = e.what();
            }
        } else {
            throw std::runtime_error("scenario: unknown op " + op);
        }
        std::cout << out.dump() << "\n";
    }
    if (!transcript_path.empty()) simulator.write_transcript(transcript_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"DSLRS: scoped-linkable ring signatures with threshold "
                 "deanonymization"};
    app.require_subcommand(1);

    Defaults defaults;
    try {
        defaults = load_defaults();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    std::string params_path = defaults.params;
    std::string registry_path = defaults.registry;
    std::string shares_path = defaults.shares;
    std::string ledger_path = defaults.ledger;
    std::optional<std::uint64_t> seed;
    bool no_registry_check = false;
    bool no_shuffle = false;

    app.add_option("--params", params_path, "public parameters JSON file");
    app.add_option("--registry", registry_path, "registry file");
    app.add_option("--shares", shares_path, "network share file");
    app.add_option("--ledger", ledger_path, "consent ledger log file");
    app.add_option("--seed", seed,
                   "deterministic randomness (tests and demos only)");
    app.add_flag("--no-registry-check", no_registry_check,
                 "skip ring-membership checks against the registry");

    // setup
    auto* cmd_setup = app.add_subcommand(
        "setup", "create scope catalog, empty registry and parameter file");
    std::size_t setup_scopes = 4;
    std::size_t setup_n_min = 2;
    cmd_setup->add_option("--scopes", setup_scopes,
                          "number of scopes, the first is reserved for "
                          "registration");
    cmd_setup->add_option("--n-min", setup_n_min, "smallest allowed ring");

    // keygen
    auto* cmd_keygen = app.add_subcommand("keygen", "generate a user key pair");
    std::string key_out;
    cmd_keygen->add_option("--out", key_out, "key file (65 bytes)")->required();

    // register
    auto* cmd_register = app.add_subcommand(
        "register", "admit a key to the registry with a proof of possession");
    std::string reg_key;
    cmd_register->add_option("--key", reg_key, "key file")->required();

    // image
    auto* cmd_image =
        app.add_subcommand("image", "print the key image for a scope");
    std::string img_key, img_scope;
    cmd_image->add_option("--key", img_key, "key file")->required();
    cmd_image->add_option("--scope", img_scope, "scope index or hex SID")
        ->required();

    // sign
    auto* cmd_sign = app.add_subcommand("sign", "produce a signature");
    std::string sign_key, sign_scope, sign_msg, sign_msg_file, sign_out,
        sign_ring_file;
    std::size_t sign_ring_size = 0;
    cmd_sign->add_option("--key", sign_key, "key file")->required();
    cmd_sign->add_option("--scope", sign_scope, "scope index or hex SID")
        ->required();
    cmd_sign->add_option("--message", sign_msg, "message string");
    cmd_sign->add_option("--message-file", sign_msg_file, "message file");
    cmd_sign->add_option("--out", sign_out, "signature output file")->required();
    cmd_sign->add_option("--ring", sign_ring_file,
                         "ring file (hex point per line, must include the "
                         "signer)");
    cmd_sign->add_option("--ring-size", sign_ring_size,
                         "sample this many members from the registry");
    cmd_sign->add_flag("--no-shuffle", no_shuffle,
                       "keep the ring order as sampled or given");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "verify a signature");
    std::string ver_sig, ver_msg, ver_msg_file;
    cmd_verify->add_option("--sig", ver_sig, "signature file")->required();
    cmd_verify->add_option("--message", ver_msg, "message string");
    cmd_verify->add_option("--message-file", ver_msg_file, "message file");

    // link
    auto* cmd_link = app.add_subcommand(
        "link", "decide whether two signatures share signer and scope");
    std::string l_sig1, l_sig2, l_m1, l_m2, l_m1_file, l_m2_file;
    cmd_link->add_option("--sig1", l_sig1)->required();
    cmd_link->add_option("--m1", l_m1);
    cmd_link->add_option("--m1-file", l_m1_file);
    cmd_link->add_option("--sig2", l_sig2)->required();
    cmd_link->add_option("--m2", l_m2);
    cmd_link->add_option("--m2-file", l_m2_file);

    // net-keygen {dealer|dkg}
    auto* cmd_net = app.add_subcommand(
        "net-keygen", "generate the deanonymization network key");
    cmd_net->require_subcommand(1);
    std::size_t net_k = 0, net_nodes = 0;
    bool net_complaints = false;
    std::string net_transcript;
    auto* cmd_net_dealer =
        cmd_net->add_subcommand("dealer", "trusted dealer Shamir sharing");
    auto* cmd_net_dkg = cmd_net->add_subcommand(
        "dkg", "simulated joint-Feldman distributed key generation");
    for (auto* c : {cmd_net_dealer, cmd_net_dkg}) {
        c->add_option("--k", net_k, "reconstruction threshold")->required();
        c->add_option("--nodes", net_nodes, "number of nodes")->required();
    }
    cmd_net_dkg->add_flag("--complaints", net_complaints,
                          "enable the complaint round");
    cmd_net_dkg->add_option("--transcript", net_transcript,
                            "write the DKG message transcript (JSON lines)");

    // share
    auto* cmd_share = app.add_subcommand(
        "share", "compute one node's decryption share for a signature");
    std::string share_sig, share_out;
    std::size_t share_node = 0;
    cmd_share->add_option("--node", share_node, "node index (1-based)")
        ->required();
    cmd_share->add_option("--sig", share_sig, "signature file")->required();
    cmd_share->add_option("--out", share_out, "share output file (65 bytes)")
        ->required();

    // deanonymize
    auto* cmd_dean = app.add_subcommand(
        "deanonymize", "open a signature with k decryption shares");
    std::string dean_sig, dean_msg, dean_msg_file;
    std::vector<std::string> dean_shares;
    cmd_dean->add_option("--sig", dean_sig, "signature file")->required();
    cmd_dean->add_option("--share", dean_shares, "decryption share file")
        ->required()
        ->expected(-1);
    cmd_dean->add_option("--message", dean_msg,
                         "verify against this message before opening");
    cmd_dean->add_option("--message-file", dean_msg_file,
                         "verify against this message file before opening");

    // ledger {publish|revoke|reveal|status}
    auto* cmd_ledger = app.add_subcommand("ledger", "consent ledger operations");
    cmd_ledger->require_subcommand(1);
    std::string led_msg, led_msg_file, led_sig;
    std::size_t led_record = 0;
    std::vector<std::string> led_shares;
    auto* cmd_publish = cmd_ledger->add_subcommand("publish", "admit (m, sig)");
    cmd_publish->add_option("--message", led_msg);
    cmd_publish->add_option("--message-file", led_msg_file);
    cmd_publish->add_option("--sig", led_sig)->required();
    auto* cmd_revoke = cmd_ledger->add_subcommand(
        "revoke", "revoke a record with a linked replacement");
    cmd_revoke->add_option("--record", led_record)->required();
    cmd_revoke->add_option("--message", led_msg)->capture_default_str();
    cmd_revoke->add_option("--message-file", led_msg_file);
    cmd_revoke->add_option("--sig", led_sig)->required();
    auto* cmd_reveal = cmd_ledger->add_subcommand(
        "reveal", "open a record with k decryption shares");
    cmd_reveal->add_option("--record", led_record)->required();
    cmd_reveal->add_option("--share", led_shares)->required()->expected(-1);
    auto* cmd_status = cmd_ledger->add_subcommand("status", "dump the state");
    auto* status_record_opt = cmd_status->add_option("--record", led_record);

    // simulate
    auto* cmd_sim = app.add_subcommand(
        "simulate", "drive a deanonymization-network scenario file");
    std::string sim_scenario, sim_transcript;
    cmd_sim->add_option("--scenario", sim_scenario, "scenario JSON")->required();
    cmd_sim->add_option("--transcript", sim_transcript,
                        "write the message transcript (JSON lines)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // usage problems exit 2
    }

    try {
        auto rng = make_rng(seed);

        if (*cmd_setup) {
            if (setup_scopes < 2)
                throw std::runtime_error(
                    "setup: need at least 2 scopes (one is reserved for "
                    "registration)");
            ScopeCatalog catalog = ScopeCatalog::random(setup_scopes, *rng);
            ParamsFile pf{std::move(catalog), std::nullopt};
            pf.save(need(params_path, "--params"));
            Registry(setup_n_min).save(need(registry_path, "--registry"));
            json out{{"scopes", setup_scopes},
                     {"n_min", setup_n_min},
                     {"params", params_path},
                     {"registry", registry_path}};
            std::cout << out.dump() << "\n";
        } else if (*cmd_keygen) {
            KeyPair kp = gen_keypair(*rng);
            save_key(key_out, kp);
            std::cout << to_hex(kp.public_key.encode()) << "\n";
        } else if (*cmd_register) {
            ParamsFile pf = ParamsFile::load(need(params_path, "--params"));
            Registry reg = Registry::load(need(registry_path, "--registry"));
            KeyFile kf = load_key(reg_key);
            PoP pop = pop_create(kf.kp, pf.catalog, *rng);
            reg.register_key(pf.catalog, kf.kp.public_key, pop);
            reg.save(registry_path);
            json out{{"registered", to_hex(kf.kp.public_key.encode())},
                     {"registry_size", reg.size()}};
            std::cout << out.dump() << "\n";
        } else if (*cmd_image) {
            ParamsFile pf = ParamsFile::load(need(params_path, "--params"));
            KeyFile kf = load_key(img_key);
            Scalar sid = parse_scope(pf.catalog, img_scope);
            KeyImage ki = key_image(kf.kp.secret, kf.kp.public_key, sid);
            std::cout << to_hex(ki.point().encode()) << "\n";
        } else if (*cmd_sign) {
            PublicParams pp = load_public_params(params_path, registry_path,
                                                 !no_registry_check);
            KeyFile kf = load_key(sign_key);
            Scalar sid = parse_scope(pp.catalog, sign_scope);
            auto m = message_arg(sign_msg, sign_msg_file);

            std::vector<Point> members;
            if (!sign_ring_file.empty()) {
                std::ifstream in(sign_ring_file);
                if (!in)
                    throw std::runtime_error("cannot read " + sign_ring_file);
                std::string line;
                while (std::getline(in, line)) {
                    if (line.empty()) continue;
                    members.push_back(Point::decode(from_hex(line)));
                }
            } else if (sign_ring_size > 0) {
                if (sign_ring_size > pp.registry.size())
                    throw std::runtime_error("ring size exceeds the registry");
                // sample ring_size - 1 decoys, then add the signer
                std::vector<Point> pool;
                for (const auto& p : pp.registry.keys())
                    if (p != kf.kp.public_key) pool.push_back(p);
                shuffle_with(pool, *rng);
                members.assign(pool.begin(),
                               pool.begin() + static_cast<long>(sign_ring_size - 1));
                members.push_back(kf.kp.public_key);
            } else {
                throw std::runtime_error("sign: give --ring or --ring-size");
            }
            if (!no_shuffle) shuffle_with(members, *rng);
            auto sig = sign(m, kf.kp.secret, Ring(std::move(members)), sid, pp,
                            *rng);
            auto wire = serialize(sig);
            write_file(sign_out, wire);
            json out{{"signature", sign_out},
                     {"bytes", wire.size()},
                     {"key_image", to_hex(sig.key_image.point().encode())}};
            std::cout << out.dump() << "\n";
        } else if (*cmd_verify) {
            PublicParams pp = load_public_params(params_path, registry_path,
                                                 !no_registry_check);
            auto m = message_arg(ver_msg, ver_msg_file);
            bool ok = verify_bytes(m, read_file(ver_sig), pp);
            std::cout << (ok ? "1" : "0") << "\n";
            return ok ? 0 : 1;
        } else if (*cmd_link) {
            PublicParams pp = load_public_params(params_path, registry_path,
                                                 !no_registry_check);
            auto m1 = message_arg(l_m1, l_m1_file);
            auto m2 = message_arg(l_m2, l_m2_file);
            auto sig1 = deserialize(read_file(l_sig1), pp);
            auto sig2 = deserialize(read_file(l_sig2), pp);
            bool linked = link(sig1, m1, sig2, m2, pp);
            std::cout << (linked ? "1" : "0") << "\n";
            return linked ? 0 : 1;
        } else if (*cmd_net) {
            ParamsFile pf = ParamsFile::load(need(params_path, "--params"));
            NetPublic net;
            std::vector<NetShare> shares;
            if (*cmd_net_dealer) {
                auto [n, s] = dealer_keygen(net_k, net_nodes, *rng);
                net = std::move(n);
                shares = std::move(s);
            } else {
                sim::SimOptions opt;
                opt.complaint_round = net_complaints;
                std::uint64_t dkg_seed = seed ? *seed : draw_u64(*rng);
                sim::Simulator simulator(net_nodes, net_k, dkg_seed, opt);
                net = simulator.run_dkg();
                for (std::size_t j = 1; j <= net_nodes; ++j)
                    shares.push_back(*simulator.node_share(static_cast<int>(j)));
                if (!net_transcript.empty())
                    simulator.write_transcript(net_transcript);
            }
            pf.net = net;
            pf.save(params_path);
            save_shares(need(shares_path, "--shares"), shares);
            json out{{"p_net", to_hex(net.p_net.encode())},
                     {"k", net.k},
                     {"nodes", net.n_nodes},
                     {"shares", shares_path}};
            std::cout << out.dump() << "\n";
        } else if (*cmd_share) {
            auto shares = load_shares(need(shares_path, "--shares"));
            Scalar omega = Scalar::from_u64(share_node);
            const NetShare* mine = nullptr;
            for (const auto& s : shares)
                if (s.index == omega) mine = &s;
            if (!mine)
                throw std::runtime_error("share: node index not in share file");
            Point c1 = peek_c1(read_file(share_sig));
            DecryptionShare d = decryption_share(*mine, c1);
            auto wire = d.encode();
            write_file(share_out, wire);
            std::cout << to_hex(wire) << "\n";
        } else if (*cmd_dean) {
            PublicParams pp = load_public_params(params_path, registry_path,
                                                 !no_registry_check);
            auto sig_bytes = read_file(dean_sig);
            auto sig = deserialize(sig_bytes, pp);
            if (!dean_msg.empty() || !dean_msg_file.empty()) {
                auto m = message_arg(dean_msg, dean_msg_file);
                if (!verify(m, sig, pp))
                    throw std::runtime_error(
                        "deanonymize: signature does not verify");
            }
            auto shares = load_decryption_shares(dean_shares);
            Point signer = deanonymize(sig, shares, pp.net);
            json out;
            out["signer"] = to_hex(signer.encode());
            out["in_ring"] = sig.ring.contains(signer);
            std::cout << out.dump() << "\n";
        } else if (*cmd_ledger) {
            PublicParams pp =
                load_public_params(params_path, registry_path, true);
            Ledger ledger(std::move(pp), need(ledger_path, "--ledger"));
            if (*cmd_publish) {
                auto m = message_arg(led_msg, led_msg_file);
                auto sig = deserialize(read_file(led_sig), ledger.params());
                std::size_t id = ledger.publish(m, sig);
                std::cout << json{{"record", id}, {"status", "VALID"}}.dump()
                          << "\n";
            } else if (*cmd_revoke) {
                // no message given means a pure revocation: the literal REV
                auto m = led_msg.empty() && led_msg_file.empty()
                             ? std::vector<std::uint8_t>{'R', 'E', 'V'}
                             : message_arg(led_msg, led_msg_file);
                auto sig = deserialize(read_file(led_sig), ledger.params());
                std::size_t id = ledger.revoke(led_record, m, sig);
                std::cout << json{{"revoked", led_record}, {"record", id}}.dump()
                          << "\n";
            } else if (*cmd_reveal) {
                auto shares = load_decryption_shares(led_shares);
                Point signer = ledger.reveal(led_record, shares);
                std::cout << json{{"record", led_record},
                                  {"status", "REVEALED"},
                                  {"signer", to_hex(signer.encode())}}
                                 .dump()
                          << "\n";
            } else if (*cmd_status) {
                if (status_record_opt->count()) {
                    if (led_record >= ledger.records().size())
                        throw std::runtime_error("status: no such record");
                    json full = json::parse(ledger.dump());
                    std::cout << full.at(led_record).dump(2) << "\n";
                } else {
                    std::cout << ledger.dump() << "\n";
                }
            }
        } else if (*cmd_sim) {
            return run_scenario(sim_scenario, sim_transcript);
        }
    } catch (const CLI::RequiredError& e) {
        std::cerr << "error: missing " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
