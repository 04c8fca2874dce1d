#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gyro/gyrogroup.hpp"
#include "gyro/subgyrogroups.hpp"
#include "gyro/verify.hpp"

namespace gyro::io {

enum class TableFormat { Text, Csv };

/// Malformed table document. Line and column are 1-based; column 0 means the whole line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed document whose tables violate a structural requirement
/// (latin rows/columns, legend completeness).
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Legend symbol per entry of g.perms(): "I" for the identity, then A, B, ... (skipping
/// I) in order of first appearance, then P26, P27, ... once letters run out.
std::vector<std::string> legend_symbols(const FiniteGyrogroup& g);

/// CSV layout:
///
///   order,N
///   cayley
///   <N rows of N comma-separated elements>
///   gyration
///   <N rows of N comma-separated legend symbols>
///   perm I: 0 1 2 ...
///   perm A: <images of 0..N-1>
///
/// Text renders both tables as grids with row and column headers 0..N-1 followed by
/// the legend in cycle notation. Line endings are always "\n".
std::string emit_tables(const FiniteGyrogroup& g, TableFormat format);

struct LoadOptions {
  /// Reject tables whose rows or columns are not permutations.
  bool require_latin = true;
};

/// Parses the CSV layout above. Accepts "\r\n", blank lines and '#' comment lines.
/// If the left identity is not 0 it is relabeled to 0.
FiniteGyrogroup load_tables(std::string_view text, const LoadOptions& opts = {});

/// Graphviz digraph, bottom-up: one node per subgyrogroup in lattice order, labeled
/// with canonical generators and order; one edge child -> parent per cover.
std::string emit_lattice_dot(const SubgyrogroupLattice& lattice);

struct CheckEntry {
  std::string name;
  bool passed = true;
  std::vector<Element> witness;
  bool sampled = false;

  bool operator==(const CheckEntry&) const = default;
};

/// Structured verify output:
/// {params, checks:[{name,status,witness,sampled}], gyrocommutative, subgyrogroup_count,
///  gyroauto_order}.
struct ReportDocument {
  std::optional<int> n;  // construction parameter, absent for loaded tables
  std::size_t order = 0;
  std::optional<std::size_t> m;
  std::vector<CheckEntry> checks;
  bool gyrocommutative = false;
  std::optional<std::size_t> subgyrogroup_count;
  std::optional<std::size_t> gyroauto_order;

  bool all_passed() const;
  std::string to_json() const;
  static ReportDocument from_json(std::string_view text);

  bool operator==(const ReportDocument&) const = default;
};

ReportDocument make_report(const VerificationReport& report, std::size_t order);

/// Human-readable one-line-per-check summary.
std::string format_report(const ReportDocument& doc);

}  // namespace gyro::io
