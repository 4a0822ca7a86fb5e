#pragma once

#include <stdexcept>
#include <string>

namespace topo {

// Malformed input text (triangulation files, .gr files, JSON payloads).
// line/column are 1-based; 0 means "unknown" and is left out of the message.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(std::string message, int line = 0, int column = 0)
      : std::runtime_error(format(message, line, column)),
        line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  static std::string format(const std::string& message, int line, int column) {
    if (line <= 0) return message;
    std::string s = "line " + std::to_string(line);
    if (column > 0) s += ", column " + std::to_string(column);
    return s + ": " + message;
  }

  int line_;
  int column_;
};

// Structurally well-formed input that violates a domain precondition
// (triangulation not closed, incompatible splitting, cutoff exceeded, ...).
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& message)
      : std::runtime_error(message) {}
};

// Exact width solvers refuse instances above the configured size cutoff;
// callers are expected to fall back to heuristic_width.
class CutoffExceeded : public DomainError {
public:
  CutoffExceeded(int nodes, int cutoff)
      : DomainError("graph has " + std::to_string(nodes) +
                    " simplified nodes, exact solver cutoff is " +
                    std::to_string(cutoff) + "; use heuristic_width instead"),
        nodes_(nodes), cutoff_(cutoff) {}

  int nodes() const { return nodes_; }
  int cutoff() const { return cutoff_; }

private:
  int nodes_;
  int cutoff_;
};

}  // namespace topo
