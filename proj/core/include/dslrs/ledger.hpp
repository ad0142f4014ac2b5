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

#include "dslrs/signature.hpp"

// Consent-record state machine over an append-only operations log.
// Records move VALID -> REVOKED, VALID -> REVEALED or REVOKED -> REVEALED
// (audits may target already-revoked consents); REVEALED is terminal.
// State is the fold of the log, so replaying the log file reconstructs it
// exactly.

namespace dslrs {

enum class ConsentStatus { valid, revoked, revealed };

struct ConsentRecord {
    std::vector<std::uint8_t> consent_proof;  // the signed message m
    DslrsSignature signature;
    ConsentStatus status = ConsentStatus::valid;
    std::optional<Point> revealed_signer;  // set iff status == revealed
};

class LedgerError : public std::runtime_error {
public:
    enum class Code {
        verify_failed,
        duplicate_active_key_image,
        record_not_valid,
        not_linked,
        reveal_inconsistent,
    };
    LedgerError(Code code, const char* msg)
        : std::runtime_error(msg), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

class Ledger {
public:
    // In-memory ledger. Registry membership is always enforced here,
    // whatever pp.check_registry says.
    explicit Ledger(PublicParams pp);
    // File-backed: replays an existing log, then appends every accepted
    // operation as one JSON line.
    Ledger(PublicParams pp, const std::filesystem::path& log_path);
    ~Ledger();
    Ledger(Ledger&&) noexcept;
    Ledger& operator=(Ledger&&) noexcept;

    // Admits (m, sig) as a VALID record. Rejects a failing signature and a
    // second active record with the same key image in the same scope
    // (replacement goes through revoke).
    std::size_t publish(std::span<const std::uint8_t> m,
                        const DslrsSignature& sig);

    // Marks the target REVOKED and admits the replacement as VALID, after
    // checking the new signature links to the old one (same signer, same
    // scope). m_new may be the literal bytes "REV" for a pure revocation
    // or a fresh consent proof for an update.
    std::size_t revoke(std::size_t record_id,
                       std::span<const std::uint8_t> m_new,
                       const DslrsSignature& sig_new);

    // Opens the record's tuple with k decryption shares. The result must
    // be a ring member of the record's signature, otherwise the state is
    // left untouched and RevealInconsistent is thrown. Share-count and
    // index problems surface as ThresholdError.
    Point reveal(std::size_t record_id,
                 std::span<const DecryptionShare> shares);

    const std::vector<ConsentRecord>& records() const { return records_; }
    const PublicParams& params() const { return pp_; }

    // canonical JSON dump of the whole state
    std::string dump() const;

private:
    std::size_t apply_publish(std::span<const std::uint8_t> m,
                              const DslrsSignature& sig);
    std::size_t apply_revoke(std::size_t record_id,
                             std::span<const std::uint8_t> m_new,
                             const DslrsSignature& sig_new);
    Point apply_reveal(std::size_t record_id,
                       std::span<const DecryptionShare> shares);
    void replay(const std::filesystem::path& log_path);
    void append_log(const std::string& line);
    ConsentRecord& checked_record(std::size_t record_id);

    PublicParams pp_;
    std::vector<ConsentRecord> records_;
    std::unique_ptr<std::ofstream> log_;
};

}  // namespace dslrs
