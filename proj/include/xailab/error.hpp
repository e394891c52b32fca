/*
 * Copyright 2026 The xailab authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef XAILAB_ERROR_HPP_
#define XAILAB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace xailab {

// Every exception thrown by the library carries the name of the module it
// originated from so CLI messages can be traced back to a component.
class Error : public std::runtime_error {
 public:
  Error(const std::string& module, const std::string& message)
      : std::runtime_error(module + ": " + message), module_(module) {}

  const std::string& module() const { return module_; }

 private:
  std::string module_;
};

// Configuration and usage problems; mapped to exit code 2 by the CLI.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message) : Error("config", message) {}
};

}  // namespace xailab

#endif  // XAILAB_ERROR_HPP_
