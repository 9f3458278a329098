#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "jcirc/json_io.hpp"
#include "jcirc/verify.hpp"

using namespace jcirc;

TEST_CASE("clean build: every claim passes for 3 <= n <= 10, both kinds") {
    for (SequenceKind kind : {SequenceKind::Jacobsthal, SequenceKind::JacobsthalLucas}) {
        const std::vector<VerificationReport> reports = verify_all(kind, 3, 10);
        CHECK(reports.size() == 8);
        for (const VerificationReport& rep : reports) {
            CHECK(rep.all_passed());
            for (const ClaimRecord& claim : rep.claims)
                if (claim.status == ClaimStatus::Fail)
                    MESSAGE("unexpected fail: n=", rep.n, " ", claim.id, " closed=",
                            claim.closed_form_value, " oracle=", claim.oracle_value);
        }
    }
}

TEST_CASE("determinant claims carry the pinned values") {
    const std::vector<VerificationReport> reports =
        verify_all(SequenceKind::JacobsthalLucas, 3, 4);
    bool saw_104 = false, saw_675 = false;
    for (const VerificationReport& rep : reports)
        for (const ClaimRecord& claim : rep.claims)
            if (claim.id == "determinant") {
                if (rep.n == 3 && claim.closed_form_value == "104") saw_104 = true;
                if (rep.n == 4 && claim.closed_form_value == "-675") saw_675 = true;
                CHECK(claim.status == ClaimStatus::Pass);
            }
    CHECK(saw_104);
    CHECK(saw_675);
}

TEST_CASE("injected perturbation of m_2 yields exactly one fail") {
    VerifyOptions opt;
    opt.inverse_perturbation = InverseEntryPerturbation{1, Rational(1)};  // m_2 += 1
    const std::vector<VerificationReport> reports = verify_all(SequenceKind::Jacobsthal, 5, 5, opt);
    REQUIRE(reports.size() == 1);
    std::vector<const ClaimRecord*> fails;
    for (const ClaimRecord& claim : reports[0].claims)
        if (claim.status == ClaimStatus::Fail) fails.push_back(&claim);
    REQUIRE(fails.size() == 1);
    CHECK(fails[0]->id == "inverse-entry[2]");
    CHECK(!fails[0]->closed_form_value.empty());
    CHECK(!fails[0]->oracle_value.empty());
    CHECK(fails[0]->closed_form_value != fails[0]->oracle_value);
    // the product claim kept the unperturbed entries and still passes
    for (const ClaimRecord& claim : reports[0].claims)
        if (claim.id == "inverse-product") CHECK(claim.status == ClaimStatus::Pass);
}

TEST_CASE("claims below their order hypotheses are recorded as skipped") {
    const std::vector<VerificationReport> reports = verify_all(SequenceKind::Jacobsthal, 3, 4);
    const auto status_of = [&](std::size_t n, const std::string& id) {
        for (const VerificationReport& rep : reports)
            if (rep.n == n)
                for (const ClaimRecord& claim : rep.claims)
                    if (claim.id == id) return claim.status;
        return ClaimStatus::Fail;
    };
    CHECK(status_of(3, "triangular-shape") == ClaimStatus::Skipped);
    CHECK(status_of(3, "direct-sum") == ClaimStatus::Skipped);
    CHECK(status_of(4, "triangular-shape") == ClaimStatus::Pass);
    CHECK(status_of(4, "eigen-bridge") == ClaimStatus::Skipped);
    CHECK(status_of(3, "determinant") == ClaimStatus::Pass);
}

TEST_CASE("report ordering is deterministic and the json schema is stable") {
    const auto once = to_json(verify_all(SequenceKind::JacobsthalLucas, 3, 6)).dump();
    const auto twice = to_json(verify_all(SequenceKind::JacobsthalLucas, 3, 6)).dump();
    CHECK(once == twice);

    const nlohmann::json parsed = nlohmann::json::parse(once);
    CHECK(parsed.is_array());
    CHECK(!parsed.empty());
    for (const char* key : {"kind", "n", "claim", "status", "closed_form_value", "oracle_value"})
        CHECK(parsed.at(0).contains(key));
}

TEST_CASE("range validation") {
    CHECK_THROWS_AS(verify_all(SequenceKind::Jacobsthal, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(verify_all(SequenceKind::Jacobsthal, 6, 5), std::invalid_argument);
}

TEST_CASE("independent cells evaluate safely from concurrent threads") {
    std::vector<std::vector<VerificationReport>> results(8);
    std::vector<std::thread> workers;
    for (std::size_t i = 0; i < results.size(); ++i)
        workers.emplace_back([&results, i] {
            const SequenceKind kind =
                i % 2 == 0 ? SequenceKind::Jacobsthal : SequenceKind::JacobsthalLucas;
            results[i] = verify_all(kind, 3 + i / 2, 3 + i / 2 + 2);
        });
    for (std::thread& w : workers) w.join();
    for (std::size_t i = 0; i < results.size(); ++i) {
        const SequenceKind kind =
            i % 2 == 0 ? SequenceKind::Jacobsthal : SequenceKind::JacobsthalLucas;
        const auto serial = verify_all(kind, 3 + i / 2, 3 + i / 2 + 2);
        REQUIRE(results[i].size() == serial.size());
        for (std::size_t r = 0; r < serial.size(); ++r) {
            CHECK(results[i][r].n == serial[r].n);
            CHECK(results[i][r].claims.size() == serial[r].claims.size());
            for (std::size_t c = 0; c < serial[r].claims.size(); ++c) {
                CHECK(results[i][r].claims[c].id == serial[r].claims[c].id);
                CHECK(results[i][r].claims[c].status == serial[r].claims[c].status);
            }
        }
    }
}
