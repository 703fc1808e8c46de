/*
Copyright 2026 The kzsim Authors.

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kzsim {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Inconsistent or unsupported configuration (units, parameters, files).
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Input file does not conform to its schema.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    /// 1-based line number of the offending row, 0 when not line specific.
    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

// Self-avoiding walk could not be completed within the retry budget.
class GenerationError : public std::runtime_error {
  public:
    GenerationError(const std::string& what, int attempts)
        : std::runtime_error(what + " (attempts: " + std::to_string(attempts) + ")"), attempts_(attempts) {}

    int attempts() const noexcept { return attempts_; }

  private:
    int attempts_;
};

// File could not be opened, read or written.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Time integration did not converge under step doubling.
class IntegrationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// 1-D minimization failed to bracket or converge.
class OptimizationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace kzsim
