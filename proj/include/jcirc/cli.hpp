#ifndef JCIRC_CLI_HPP
#define JCIRC_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

namespace jcirc::cli {

enum class Action { Seq, Build, Det, Invert, Eigs, Verify, Bench };
enum class Format { Table, Json };
enum class KindSelect { Jacobsthal, JacobsthalLucas, Both };

/// A parsed, not yet validated command line. run() enforces each action's
/// order hypothesis (n >= 3, n > 3, n >= 5) and rejects what violates it.
struct Command {
    Action action = Action::Det;
    KindSelect kind = KindSelect::Jacobsthal;
    std::optional<std::size_t> n;
    std::optional<std::pair<std::size_t, std::size_t>> range;
    Format format = Format::Table;
    std::string out_path;    // empty: write to the provided stream
    double tol = 1e-6;       // eigs: closed-vs-dft match tolerance
    std::size_t reps = 3;    // bench: repetitions per timed cell
    bool dense = false;      // build: also print the dense rows (table mode)
};

/// Exit status: 0 success, 1 verification failures, 2 usage errors.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

/// Parse argv and run. Same exit-status convention; --help exits 0.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jcirc::cli

#endif
