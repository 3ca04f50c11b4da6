// Copyright 2026 The Guardgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GUARDGATE_CORE_ERROR_H_
#define GUARDGATE_CORE_ERROR_H_

#include <stdexcept>
#include <string>

namespace guardgate {

// Root of every exception thrown by this project.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller violated a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed configuration, or unknown keys in a config file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Benchmark or report file failed validation.
class LoadError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Remote scorer answered with something that breaks the wire contract.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

// Transport-level failure (timeout, refused connection). Safe to retry.
class RetriableError : public Error {
 public:
  using Error::Error;
};

// Remote scorer reported an internal failure (HTTP 5xx).
class BackendError : public Error {
 public:
  using Error::Error;
};

}  // namespace guardgate

#endif  // GUARDGATE_CORE_ERROR_H_
