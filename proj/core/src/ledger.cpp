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

#include "dslrs/ledger.hpp"

#include <fstream>

#include <json.hpp>

#include "hex.hpp"

namespace dslrs {

using nlohmann::json;
using Code = LedgerError::Code;

namespace {

const char* status_name(ConsentStatus s) {
    switch (s) {
        case ConsentStatus::valid: return "VALID";
        case ConsentStatus::revoked: return "REVOKED";
        case ConsentStatus::revealed: return "REVEALED";
    }
    return "?";
}

}  // namespace

Ledger::Ledger(PublicParams pp) : pp_(std::move(pp)) {
    pp_.check_registry = true;
}

Ledger::Ledger(PublicParams pp, const std::filesystem::path& log_path)
    : Ledger(std::move(pp)) {
    if (std::filesystem::exists(log_path)) replay(log_path);
    log_ = std::make_unique<std::ofstream>(log_path, std::ios::app);
    if (!*log_)
        throw std::runtime_error("ledger: cannot open log " +
                                 log_path.string());
}

Ledger::~Ledger() = default;
Ledger::Ledger(Ledger&&) noexcept = default;
Ledger& Ledger::operator=(Ledger&&) noexcept = default;

ConsentRecord& Ledger::checked_record(std::size_t record_id) {
    if (record_id >= records_.size())
        throw LedgerError(Code::record_not_valid, "ledger: no such record");
    return records_[record_id];
}

std::size_t Ledger::apply_publish(std::span<const std::uint8_t> m,
                                  const DslrsSignature& sig) {
    if (!verify(m, sig, pp_))
        throw LedgerError(Code::verify_failed,
                          "publish: signature does not verify");
    for (const auto& rec : records_)
        if (rec.status == ConsentStatus::valid &&
            rec.signature.sid == sig.sid &&
            rec.signature.key_image == sig.key_image)
            throw LedgerError(Code::duplicate_active_key_image,
                              "publish: active record with this key image "
                              "exists in this scope; revoke it instead");
    records_.push_back(ConsentRecord{{m.begin(), m.end()}, sig,
                                     ConsentStatus::valid, std::nullopt});
    return records_.size() - 1;
}

std::size_t Ledger::apply_revoke(std::size_t record_id,
                                 std::span<const std::uint8_t> m_new,
                                 const DslrsSignature& sig_new) {
    ConsentRecord& old = checked_record(record_id);
    if (old.status != ConsentStatus::valid)
        throw LedgerError(Code::record_not_valid, "revoke: record not VALID");
    if (!verify(m_new, sig_new, pp_))
        throw LedgerError(Code::verify_failed,
                          "revoke: replacement signature does not verify");
    if (!link(old.signature, old.consent_proof, sig_new, m_new, pp_))
        throw LedgerError(Code::not_linked,
                          "revoke: not the same signer and scope");
    old.status = ConsentStatus::revoked;
    records_.push_back(ConsentRecord{{m_new.begin(), m_new.end()}, sig_new,
                                     ConsentStatus::valid, std::nullopt});
    return records_.size() - 1;
}

Point Ledger::apply_reveal(std::size_t record_id,
                           std::span<const DecryptionShare> shares) {
    ConsentRecord& rec = checked_record(record_id);
    if (rec.status == ConsentStatus::revealed)
        throw LedgerError(Code::record_not_valid,
                          "reveal: record already REVEALED");
    Point signer = deanonymize(rec.signature, shares, pp_.net);
    if (!rec.signature.ring.contains(signer))
        throw LedgerError(Code::reveal_inconsistent,
                          "reveal: extracted key not in the record's ring");
    rec.status = ConsentStatus::revealed;
    rec.revealed_signer = signer;
    return signer;
}

std::size_t Ledger::publish(std::span<const std::uint8_t> m,
                            const DslrsSignature& sig) {
    std::size_t id = apply_publish(m, sig);
    json j;
    j["op"] = "publish";
    j["m"] = detail::to_hex(m);
    j["sig"] = detail::to_hex(serialize(sig));
    append_log(j.dump());
    return id;
}

std::size_t Ledger::revoke(std::size_t record_id,
                           std::span<const std::uint8_t> m_new,
                           const DslrsSignature& sig_new) {
    std::size_t id = apply_revoke(record_id, m_new, sig_new);
    json j;
    j["op"] = "revoke";
    j["record"] = record_id;
    j["m"] = detail::to_hex(m_new);
    j["sig"] = detail::to_hex(serialize(sig_new));
    append_log(j.dump());
    return id;
}

Point Ledger::reveal(std::size_t record_id,
                     std::span<const DecryptionShare> shares) {
    Point signer = apply_reveal(record_id, shares);
    json j;
    j["op"] = "reveal";
    j["record"] = record_id;
    j["shares"] = json::array();
    for (const auto& s : shares) j["shares"].push_back(detail::to_hex(s.encode()));
    append_log(j.dump());
    return signer;
}

void Ledger::append_log(const std::string& line) {
    if (!log_) return;
    *log_ << line << "\n";
    log_->flush();
    if (!*log_) throw std::runtime_error("ledger: log write failed");
}

void Ledger::replay(const std::filesystem::path& log_path) {
    std::ifstream in(log_path);
    if (!in)
        throw std::runtime_error("ledger: cannot read log " +
                                 log_path.string());
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json j = json::parse(line);
        const std::string op = j.at("op").get<std::string>();
        try {
            if (op == "publish") {
                auto m = detail::from_hex(j.at("m").get<std::string>());
                auto sig = deserialize(
                    detail::from_hex(j.at("sig").get<std::string>()), pp_);
                apply_publish(m, sig);
            } else if (op == "revoke") {
                auto m = detail::from_hex(j.at("m").get<std::string>());
                auto sig = deserialize(
                    detail::from_hex(j.at("sig").get<std::string>()), pp_);
                apply_revoke(j.at("record").get<std::size_t>(), m, sig);
            } else if (op == "reveal") {
                std::vector<DecryptionShare> shares;
                for (const auto& s : j.at("shares"))
                    shares.push_back(DecryptionShare::decode(
                        detail::from_hex(s.get<std::string>())));
                apply_reveal(j.at("record").get<std::size_t>(), shares);
            } else {
                throw std::runtime_error("unknown op " + op);
            }
        } catch (const std::exception& e) {
            throw std::runtime_error("ledger: replay failed at line " +
                                     std::to_string(line_no) + ": " +
                                     e.what());
        }
    }
}

std::string Ledger::dump() const {
    json arr = json::array();
    for (std::size_t i = 0; i < records_.size(); ++i) {
        const auto& rec = records_[i];
        json j;
        j["id"] = i;
        j["status"] = status_name(rec.status);
        j["m"] = detail::to_hex(rec.consent_proof);
        j["sid"] = detail::to_hex(rec.signature.sid.encode());
        j["key_image"] = detail::to_hex(rec.signature.key_image.point().encode());
        j["sig"] = detail::to_hex(serialize(rec.signature));
        if (rec.revealed_signer)
            j["revealed_signer"] = detail::to_hex(rec.revealed_signer->encode());
        else
            j["revealed_signer"] = nullptr;
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

}  // namespace dslrs
