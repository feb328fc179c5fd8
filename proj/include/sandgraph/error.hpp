#pragma once

#include <stdexcept>
#include <string>

namespace sandgraph {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A theorem or operation was invoked on a graph that violates one of its hypotheses.
class HypothesisError : public Error {
 public:
  HypothesisError(std::string hypothesis, const std::string& detail)
      : Error("hypothesis violated (" + hypothesis + "): " + detail),
        hypothesis_(std::move(hypothesis)) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

}  // namespace sandgraph
