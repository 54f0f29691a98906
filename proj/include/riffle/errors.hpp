#pragma once

#include <stdexcept>
#include <string>

namespace riffle {

/// A combinatorial object is too large to index or materialize (e.g. a
/// ranking table whose index space exceeds 64 bits).
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Conditioning on an observation that has zero mass under the prior.
/// `node` is the pre-order index of the first hierarchy node whose table
/// summed to zero while zeroing inconsistent entries.
class zero_evidence_error : public std::runtime_error {
 public:
  zero_evidence_error(const std::string& what, int node_index)
      : std::runtime_error(what), node(node_index) {}
  int node;
};

/// Malformed ballot or model file; `line` is 1-based (0 when unknown).
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what, int line_number = 0)
      : std::runtime_error(what), line(line_number) {}
  int line;
};

}  // namespace riffle
