#include "jcirc/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <complex>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

#include "jcirc/jacobsthal.hpp"
#include "jcirc/json_io.hpp"
#include "jcirc/verify.hpp"

namespace jcirc::cli {

namespace {

using nlohmann::json;

std::vector<SequenceKind> selected_kinds(KindSelect sel) {
    switch (sel) {
        case KindSelect::Jacobsthal: return {SequenceKind::Jacobsthal};
        case KindSelect::JacobsthalLucas: return {SequenceKind::JacobsthalLucas};
        case KindSelect::Both: return {SequenceKind::Jacobsthal, SequenceKind::JacobsthalLucas};
    }
    return {};
}

// Single-n commands accept --n or a one-element --range; sweep commands
// accept either.
std::optional<std::pair<std::size_t, std::size_t>> effective_range(const Command& cmd) {
    if (cmd.range) return cmd.range;
    if (cmd.n) return std::make_pair(*cmd.n, *cmd.n);
    return std::nullopt;
}

int usage_error(std::ostream& err, const std::string& message) {
    err << "error: " << message << "\n";
    return 2;
}

template <typename F>
long long best_time_ns(std::size_t reps, F&& body) {
    long long best = std::numeric_limits<long long>::max();
    for (std::size_t r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        body();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min<long long>(
            best, std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    }
    return best;
}

int run_seq(const Command& cmd, std::ostream& out) {
    const auto range = effective_range(cmd).value();
    json records = json::array();
    if (cmd.format == Format::Table) out << "kind\tk\tvalue\n";
    for (SequenceKind kind : selected_kinds(cmd.kind)) {
        for (std::size_t k = range.first; k <= range.second; ++k) {
            const Integer value = term(kind, k);
            if (cmd.format == Format::Table)
                out << kind_name(kind) << "\t" << k << "\t" << to_decimal(value) << "\n";
            else
                records.push_back(json{{"kind", kind_name(kind)},
                                       {"k", k},
                                       {"value", to_decimal(value)}});
        }
    }
    if (cmd.format == Format::Json) out << records.dump(2) << "\n";
    return 0;
}

int run_build(const Command& cmd, std::ostream& out) {
    const std::size_t n = *cmd.n;
    json records = json::array();
    for (SequenceKind kind : selected_kinds(cmd.kind)) {
        const CirculantMatrix circ = build_sequence_circulant(kind, n);
        if (cmd.format == Format::Json) {
            json rec = to_json(circ);
            rec["kind"] = kind_name(kind);
            if (cmd.dense) rec["dense"] = to_json(to_dense(circ));
            records.push_back(std::move(rec));
            continue;
        }
        out << kind_name(kind) << " circulant, n = " << n << "\nfirst_row:";
        for (const Rational& v : circ.first_row()) out << " " << v.to_string();
        out << "\n";
        if (cmd.dense) {
            const DenseMatrix d = to_dense(circ);
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t c = 0; c < n; ++c)
                    out << (c ? " " : "") << d(r, c).to_string();
                out << "\n";
            }
        }
    }
    if (cmd.format == Format::Json) out << records.dump(2) << "\n";
    return 0;
}

int run_det(const Command& cmd, std::ostream& out) {
    const auto range = effective_range(cmd).value();
    json records = json::array();
    if (cmd.format == Format::Table) out << "kind\tn\tdet_closed\tdet_bareiss\tmatch\n";
    for (SequenceKind kind : selected_kinds(cmd.kind)) {
        for (std::size_t n = range.first; n <= range.second; ++n) {
            const Integer closed = det_closed(kind, n);
            const Rational oracle = det_bareiss(to_dense(build_sequence_circulant(kind, n)));
            const bool match = Rational(closed) == oracle;
            if (cmd.format == Format::Table)
                out << kind_name(kind) << "\t" << n << "\t" << to_decimal(closed) << "\t"
                    << oracle.to_string() << "\tmatch=" << (match ? "true" : "false") << "\n";
            else
                records.push_back(json{{"kind", kind_name(kind)},
                                       {"n", n},
                                       {"det_closed", to_decimal(closed)},
                                       {"det_bareiss", oracle.to_string()},
                                       {"match", match}});
        }
    }
    if (cmd.format == Format::Json) out << records.dump(2) << "\n";
    return 0;
}

int run_invert(const Command& cmd, std::ostream& out) {
    const std::size_t n = *cmd.n;
    json records = json::array();
    for (SequenceKind kind : selected_kinds(cmd.kind)) {
        const ClosedInverse inv = inverse_closed(kind, n);
        const bool jac = kind == SequenceKind::Jacobsthal;
        if (cmd.format == Format::Json) {
            json rec = to_json(inv.matrix);
            rec["kind"] = kind_name(kind);
            rec["oracle_validated"] = inv.oracle_validated;
            records.push_back(std::move(rec));
            continue;
        }
        out << kind_name(kind) << " inverse, n = " << n
            << ", oracle_validated = " << (inv.oracle_validated ? "true" : "false") << "\n";
        const auto& row = inv.matrix.first_row();
        for (std::size_t i = 0; i < n; ++i)
            out << (jac ? "m_" : "h_") << (jac ? i + 1 : i) << " = " << row[i].to_string()
                << "\n";
    }
    if (cmd.format == Format::Json) out << records.dump(2) << "\n";
    return 0;
}

int run_eigs(const Command& cmd, std::ostream& out) {
    const std::size_t n = *cmd.n;
    json records = json::array();
    if (cmd.format == Format::Table)
        out << "kind\tk\tdft\tclosed\tabs_err\tmatch\n";
    std::ostringstream num;
    num.precision(12);
    const auto fmt = [&num](const std::complex<double>& z) {
        num.str("");
        num << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
        return num.str();
    };
    for (SequenceKind kind : selected_kinds(cmd.kind)) {
        const EigenSystem eig = eigenvalues_dft(build_sequence_circulant(kind, n));
        json comparison = json::array();
        for (std::size_t k = 0; k < n; ++k) {
            std::complex<double> closed;
            std::string note;
            if (k == 0) {
                closed = {eigenvalue_real_exact(kind, n, 0).to_double(), 0.0};
                note = "row-sum " + eigenvalue_real_exact(kind, n, 0).to_string();
            } else if (n % 2 == 0 && k == n / 2) {
                closed = {eigenvalue_real_exact(kind, n, k).to_double(), 0.0};
                note = "alternating-sum " + eigenvalue_real_exact(kind, n, k).to_string();
            } else {
                closed = eigenvalue_closed(kind, n, k);
            }
            const double abs_err = std::abs(closed - eig.lambdas[k]);
            const bool match = abs_err <= cmd.tol * (1.0 + std::abs(eig.lambdas[k]));
            if (cmd.format == Format::Table) {
                out << kind_name(kind) << "\t" << k << "\t" << fmt(eig.lambdas[k]) << "\t"
                    << fmt(closed);
                if (!note.empty()) out << " (" << note << ")";
                out << "\t" << abs_err << "\t" << (match ? "true" : "false") << "\n";
            } else {
                json rec{{"k", k},
                         {"closed", json{{"re", closed.real()}, {"im", closed.imag()}}},
                         {"abs_err", abs_err},
                         {"match", match}};
                if (!note.empty()) rec["exact"] = note;
                comparison.push_back(std::move(rec));
            }
        }
        if (cmd.format == Format::Json)
            records.push_back(json{{"kind", kind_name(kind)},
                                   {"eigensystem", to_json(eig)},
                                   {"comparison", std::move(comparison)}});
    }
    if (cmd.format == Format::Json) out << records.dump(2) << "\n";
    return 0;
}

int run_verify(const Command& cmd, std::ostream& out) {
    const auto range = effective_range(cmd).value();
    std::vector<VerificationReport> reports;
    for (SequenceKind kind : selected_kinds(cmd.kind)) {
        std::vector<VerificationReport> part = verify_all(kind, range.first, range.second);
        reports.insert(reports.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
    }
    std::size_t fails = 0, passes = 0, skips = 0;
    for (const VerificationReport& rep : reports)
        for (const ClaimRecord& claim : rep.claims) {
            if (claim.status == ClaimStatus::Fail) ++fails;
            else if (claim.status == ClaimStatus::Pass) ++passes;
            else ++skips;
        }
    if (cmd.format == Format::Json) {
        out << to_json(reports).dump(2) << "\n";
    } else {
        out << "kind\tn\tclaim\tstatus\n";
        for (const VerificationReport& rep : reports)
            for (const ClaimRecord& claim : rep.claims) {
                out << kind_name(rep.kind) << "\t" << rep.n << "\t" << claim.id << "\t"
                    << claim_status_name(claim.status);
                if (claim.status == ClaimStatus::Fail)
                    out << "\tclosed=" << claim.closed_form_value
                        << "\toracle=" << claim.oracle_value;
                out << "\n";
            }
        out << "summary: " << passes << " pass, " << fails << " fail, " << skips
            << " skipped\n";
    }
    return fails == 0 ? 0 : 1;
}

int run_bench(const Command& cmd, std::ostream& out) {
    const auto range = effective_range(cmd).value();
    const SequenceKind kind = selected_kinds(cmd.kind).front();
    out << "# bench: wall-clock steady_clock, min of " << cmd.reps
        << " runs per cell, kind = " << kind_name(kind) << "\n"
        << "# det_closed / det_bareiss: closed-form vs fraction-free elimination determinant\n"
        << "# inverse_closed (formula path, no oracle pass) / invert_exact: closed-form vs "
           "Gauss-Jordan inverse\n"
        << "# value_digits: decimal digits of |det|, or max digits over inverse entries\n"
        << "n,method,time_ns,value_digits\n";
    for (std::size_t n = range.first; n <= range.second; ++n) {
        const DenseMatrix dense = to_dense(build_sequence_circulant(kind, n));
        Integer det_value;
        const long long t_closed =
            best_time_ns(cmd.reps, [&] { det_value = det_closed(kind, n); });
        out << n << ",det_closed," << t_closed << "," << decimal_digits(det_value) << "\n";

        Rational det_oracle;
        const long long t_bareiss =
            best_time_ns(cmd.reps, [&] { det_oracle = det_bareiss(dense); });
        out << n << ",det_bareiss," << t_bareiss << "," << decimal_digits(det_oracle.num())
            << "\n";

        std::vector<Rational> inv_row;
        const long long t_inv_closed = best_time_ns(
            cmd.reps, [&] { inv_row = detail::inverse_closed_entries(kind, n); });
        std::size_t digits = 0;
        for (const Rational& v : inv_row)
            digits = std::max({digits, decimal_digits(v.num()), decimal_digits(v.den())});
        out << n << ",inverse_closed," << t_inv_closed << "," << digits << "\n";

        const long long t_inv_exact = best_time_ns(cmd.reps, [&] { (void)invert_exact(dense); });
        out << n << ",invert_exact," << t_inv_exact << "," << digits << "\n";

        out << "# n=" << n << " speedup: det "
            << static_cast<double>(t_bareiss) / static_cast<double>(std::max(1LL, t_closed))
            << "x, inverse "
            << static_cast<double>(t_inv_exact) / static_cast<double>(std::max(1LL, t_inv_closed))
            << "x\n";
    }
    return 0;
}

int dispatch(const Command& cmd, std::ostream& out, std::ostream& err) {
    const auto range = effective_range(cmd);
    switch (cmd.action) {
        case Action::Seq:
            if (!range) return usage_error(err, "seq: --n or --range required");
            return run_seq(cmd, out);
        case Action::Build:
            if (!cmd.n) return usage_error(err, "build: --n required");
            if (*cmd.n < 3) return usage_error(err, "build: n >= 3 required");
            return run_build(cmd, out);
        case Action::Det:
            if (!range) return usage_error(err, "det: --n or --range required");
            if (range->first < 3) return usage_error(err, "det: n >= 3 required");
            return run_det(cmd, out);
        case Action::Invert:
            if (!cmd.n) return usage_error(err, "invert: --n required");
            if (*cmd.n < 3) return usage_error(err, "invert: n >= 3 required");
            return run_invert(cmd, out);
        case Action::Eigs:
            if (!cmd.n) return usage_error(err, "eigs: --n required");
            if (*cmd.n < 5) return usage_error(err, "eigs: n >= 5 required");
            return run_eigs(cmd, out);
        case Action::Verify:
            if (!range) return usage_error(err, "verify: --range required");
            if (range->first < 3) return usage_error(err, "verify: n >= 3 required");
            return run_verify(cmd, out);
        case Action::Bench:
            if (!range) return usage_error(err, "bench: --range required");
            if (range->first < 3) return usage_error(err, "bench: n >= 3 required");
            if (cmd.kind == KindSelect::Both)
                return usage_error(err, "bench: pick one kind (CSV rows carry no kind column)");
            return run_bench(cmd, out);
    }
    return usage_error(err, "unknown action");
}

}  // namespace

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
    if (const auto range = effective_range(cmd); range && range->first > range->second)
        return usage_error(err, "empty range");
    if (!cmd.out_path.empty()) {
        std::ofstream file(cmd.out_path);
        if (!file) return usage_error(err, "cannot open output file " + cmd.out_path);
        return dispatch(cmd, file, err);
    }
    return dispatch(cmd, out, err);
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact circulant toolkit for the Jacobsthal family of sequences"};
    app.require_subcommand(1);

    Command cmd;
    std::string kind_str = "jacobsthal";
    std::string format_str = "table";
    std::string range_str;
    unsigned long long n_value = 0;
    bool n_given = false;

    const auto add_common = [&](CLI::App* sub, bool with_n, bool with_range) {
        sub->add_option("--kind", kind_str, "jacobsthal | jacobsthal-lucas | both")
            ->check(CLI::IsMember({"jacobsthal", "jacobsthal-lucas", "both"}));
        if (with_n)
            sub->add_option("--n", n_value, "single order / index")
                ->each([&](const std::string&) { n_given = true; });
        if (with_range) sub->add_option("--range", range_str, "inclusive range A..B");
        sub->add_option("--format", format_str, "json | table")
            ->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--out", cmd.out_path, "write output to a file");
    };

    add_common(app.add_subcommand("seq", "print sequence terms"), true, true);
    auto* build = app.add_subcommand("build", "print a sequence circulant");
    add_common(build, true, false);
    build->add_flag("--dense", cmd.dense, "table mode: print the dense rows too");
    add_common(app.add_subcommand("det", "closed-form and oracle determinants"), true, true);
    add_common(app.add_subcommand("invert", "closed-form inverse first row"), true, false);
    auto* eigs = app.add_subcommand("eigs", "dft and closed-form eigenvalues");
    add_common(eigs, true, false);
    eigs->add_option("--tol", cmd.tol, "relative match tolerance (default 1e-6)");
    add_common(app.add_subcommand("verify", "run every closed form against its oracle"), false,
               true);
    auto* bench = app.add_subcommand("bench", "closed forms vs elimination, CSV output");
    add_common(bench, false, true);
    bench->add_option("--reps", cmd.reps, "repetitions per timed cell (default 3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            app.exit(e, out, err);
            return 0;
        }
        app.exit(e, out, err);
        return 2;
    }

    if (app.got_subcommand("seq")) cmd.action = Action::Seq;
    else if (app.got_subcommand("build")) cmd.action = Action::Build;
    else if (app.got_subcommand("det")) cmd.action = Action::Det;
    else if (app.got_subcommand("invert")) cmd.action = Action::Invert;
    else if (app.got_subcommand("eigs")) cmd.action = Action::Eigs;
    else if (app.got_subcommand("verify")) cmd.action = Action::Verify;
    else if (app.got_subcommand("bench")) cmd.action = Action::Bench;

    if (kind_str == "jacobsthal") cmd.kind = KindSelect::Jacobsthal;
    else if (kind_str == "jacobsthal-lucas") cmd.kind = KindSelect::JacobsthalLucas;
    else cmd.kind = KindSelect::Both;
    cmd.format = format_str == "json" ? Format::Json : Format::Table;
    if (n_given) cmd.n = static_cast<std::size_t>(n_value);

    if (!range_str.empty()) {
        const auto sep = range_str.find("..");
        try {
            if (sep == std::string::npos) throw std::invalid_argument("no '..'");
            const std::size_t a = std::stoull(range_str.substr(0, sep));
            const std::size_t b = std::stoull(range_str.substr(sep + 2));
            cmd.range = {a, b};
        } catch (const std::exception&) {
            return usage_error(err, "bad --range '" + range_str + "', expected A..B");
        }
    }

    try {
        return run(cmd, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace jcirc::cli
