#ifndef JCIRC_VERIFY_HPP
#define JCIRC_VERIFY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jcirc/jacobsthal.hpp"

namespace jcirc {

enum class ClaimStatus { Pass, Fail, Skipped };

std::string_view claim_status_name(ClaimStatus status);

/// One closed-form-vs-oracle check. Failures always carry both values;
/// passes carry them when they are scalars worth showing.
struct ClaimRecord {
    std::string id;
    ClaimStatus status;
    std::string closed_form_value;
    std::string oracle_value;
};

struct VerificationReport {
    SequenceKind kind;
    std::size_t n;
    std::vector<ClaimRecord> claims;

    std::size_t fail_count() const;
    bool all_passed() const;  // no fails; skips are fine
};

/// Harness self-test hook: offsets one closed-form inverse entry when it is
/// compared against the oracle. The product-identity claim always uses the
/// unperturbed entries, so a perturbation produces exactly one fail.
struct InverseEntryPerturbation {
    std::size_t entry_index;  // 0-based position in the first row
    Rational delta;
};

struct VerifyOptions {
    std::optional<InverseEntryPerturbation> inverse_perturbation;
    std::size_t inverse_oracle_limit = 12;
    double eigen_rel_tol = 1e-6;
};

/// Runs every closed form of one kind against its oracle for each n in
/// [n_from, n_to]: determinant vs Bareiss, inverse vs invert_exact,
/// triangular reduction, sign tables, bidiagonal lemma, direct-sum
/// factorization, Hankel inverses, eigenvalue bridge. Claims whose
/// hypotheses need larger n are recorded as skipped below their threshold.
/// Failures are data, never exceptions. Reports come back in n order.
std::vector<VerificationReport> verify_all(SequenceKind kind, std::size_t n_from,
                                           std::size_t n_to, const VerifyOptions& options = {});

}  // namespace jcirc

#endif
