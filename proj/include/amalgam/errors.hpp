#pragma once

#include <stdexcept>
#include <string>

namespace amalgam {

enum class errc {
  parse,
  validation,
  budget,
  disagreement,
  hypothesis_not_met,
  internal,
};

inline const char* errc_name(errc k) noexcept {
  switch (k) {
    case errc::parse: return "parse";
    case errc::validation: return "validation";
    case errc::budget: return "budget";
    case errc::disagreement: return "disagreement";
    case errc::hypothesis_not_met: return "hypothesis-not-met";
    case errc::internal: return "internal";
  }
  return "unknown";
}

/// All library failures are thrown as `error`; `kind()` selects the CLI exit
/// code and the C-API status.
class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  errc kind() const noexcept { return kind_; }

 private:
  errc kind_;
};

class parse_error : public error {
 public:
  parse_error(int line, int col, const std::string& msg)
      : error(errc::parse, "parse error at " + std::to_string(line) + ":" +
                               std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}
  int line() const noexcept { return line_; }
  int col() const noexcept { return col_; }

 private:
  int line_;
  int col_;
};

inline error validation_error(const std::string& msg) { return {errc::validation, msg}; }
inline error budget_error(const std::string& msg) { return {errc::budget, msg}; }
inline error disagreement_error(const std::string& msg) { return {errc::disagreement, msg}; }
inline error internal_error(const std::string& msg) { return {errc::internal, msg}; }

}  // namespace amalgam
