#include "jcirc/json_io.hpp"

namespace jcirc {

using nlohmann::json;

json to_json(const Integer& v) { return to_decimal(v); }

json to_json(const Rational& v) {
    return json{{"num", to_decimal(v.num())}, {"den", to_decimal(v.den())}};
}

json to_json(const DenseMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const CirculantMatrix& c) {
    json row = json::array();
    for (const Rational& v : c.first_row()) row.push_back(to_json(v));
    return json{{"n", c.order()}, {"first_row", std::move(row)}};
}

json to_json(const EigenSystem& e) {
    json lambdas = json::array();
    for (const auto& l : e.lambdas)
        lambdas.push_back(json{{"re", l.real()}, {"im", l.imag()}});
    return json{{"n", e.n},
                {"omega", json{{"re", e.omega.real()}, {"im", e.omega.imag()}}},
                {"lambdas", std::move(lambdas)},
                {"lambda0_exact", to_json(e.lambda0_exact)}};
}

json to_json(const std::vector<VerificationReport>& reports) {
    json out = json::array();
    for (const VerificationReport& report : reports)
        for (const ClaimRecord& claim : report.claims)
            out.push_back(json{{"kind", kind_name(report.kind)},
                               {"n", report.n},
                               {"claim", claim.id},
                               {"status", claim_status_name(claim.status)},
                               {"closed_form_value", claim.closed_form_value},
                               {"oracle_value", claim.oracle_value}});
    return out;
}

Integer integer_from_json(const json& j) { return integer_from_decimal(j.get<std::string>()); }

Rational rational_from_json(const json& j) {
    return Rational(integer_from_decimal(j.at("num").get<std::string>()),
                    integer_from_decimal(j.at("den").get<std::string>()));
}

DenseMatrix dense_from_json(const json& j) {
    std::vector<Rational> entries;
    const std::size_t rows = j.size();
    const std::size_t cols = j.at(0).size();
    entries.reserve(rows * cols);
    for (const auto& row : j)
        for (const auto& cell : row) entries.push_back(rational_from_json(cell));
    return DenseMatrix(rows, cols, std::move(entries));
}

CirculantMatrix circulant_from_json(const json& j) {
    std::vector<Rational> row;
    for (const auto& cell : j.at("first_row")) row.push_back(rational_from_json(cell));
    if (j.at("n").get<std::size_t>() != row.size())
        throw std::invalid_argument("circulant_from_json: n does not match first_row length");
    return CirculantMatrix(std::move(row));
}

}  // namespace jcirc
