#ifndef RENNER_CLI_HPP
#define RENNER_CLI_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "renner/conj.hpp"
#include "renner/renner_monoid.hpp"

namespace renner::cli {

enum class Command { lattice, build, classes, counts, reps, rook_count };
enum class OutputFormat { table, json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitCap = 3;

struct JobSpec {
  Command command = Command::counts;
  std::string type_label;                 // "G2", or just "G" with rank set
  std::optional<int> rank;                 // must agree with a full label
  std::optional<std::vector<int>> weight;  // fundamental-weight coordinates
  std::optional<std::vector<int>> j0;      // 1-based simple-root indices
  std::optional<ConjKind> kind;            // `classes` only
  OutputFormat format = OutputFormat::table;
  MonoidCaps caps;
  std::size_t max_pair_order = kDefaultPairCap;
  int rook_m = 0;
};

// Throws InvalidInput / InvalidType when the spec is inconsistent.
void validate(JobSpec const& spec);

// Runs one job. Output goes to `out`, diagnostics to `err`. Returns 0 on
// success, 2 on validation errors, 3 when a size cap is exceeded, 1 otherwise.
int run(JobSpec const& spec, std::ostream& out, std::ostream& err);

// Parses argv and runs. Parse errors return 2; --help returns 0.
int main(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace renner::cli

#endif  // RENNER_CLI_HPP
