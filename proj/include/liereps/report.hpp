#pragma once

// Input parsing and the text/JSON reports behind the command-line tool.

#include "liereps/exactmat.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace liereps {

struct InputSpec {
  std::optional<std::string> name;
  IntMatrix A;
  IntMatrix Acheck;
  IntMatrix F0;
  std::optional<Integer> q;
};

/// Throws UsageError for malformed JSON (with line and column) or schema violations.
InputSpec parse_input(const std::string& text);
InputSpec load_input(const std::string& path);

struct Report {
  std::string text;
  std::string json;
  bool ok = true;
  std::string total;  // empty when no single total applies
};

/// With q (argument, else the file's q): the full parameterization. Without:
/// one row per residue class mod m, plus a full summary for each sample q.
Report analyze(const InputSpec& in, const std::optional<Integer>& q,
               const std::vector<Integer>& sample_q);

Report catalog(char type, std::size_t l, const std::string& isogeny, int epsilon,
               const Integer& q);

/// Parameters (lambda, b, c) in lexicographic order, at most limit of them.
Report enumerate(const InputSpec& in, const std::optional<Integer>& q, std::size_t limit);

Report selftest(bool corrupt_catalog);

/// Decimal integer, optionally signed; throws UsageError otherwise.
Integer parse_integer(const std::string& s, const char* what);

}  // namespace liereps
