// Copyright 2026 The k8s-atlas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace k8s_atlas {

/// Whether a failure is the user's input or the surrounding environment.
/// The CLI maps these to exit codes 1 and 2.
enum class ErrorClass { Input, Environment };

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, const std::string& what)
      : std::runtime_error(what), class_(cls) {}

  ErrorClass error_class() const noexcept { return class_; }

 private:
  ErrorClass class_;
};

/// An external executable (helm, kubectl, dot, ...) is not on PATH.
class MissingBinary : public Error {
 public:
  explicit MissingBinary(const std::string& binary)
      : Error(ErrorClass::Environment,
              "required executable '" + binary + "' not found on PATH"),
        binary_(binary) {}

  const std::string& binary() const noexcept { return binary_; }

 private:
  std::string binary_;
};

class SubprocessFailed : public Error {
 public:
  SubprocessFailed(const std::string& command, int exit_code,
                   const std::string& stderr_text)
      : Error(ErrorClass::Input, "'" + command + "' exited with status " +
                                     std::to_string(exit_code) +
                                     (stderr_text.empty() ? "" : ": " + stderr_text)),
        exit_code_(exit_code),
        stderr_(stderr_text) {}

  int exit_code() const noexcept { return exit_code_; }
  const std::string& stderr_text() const noexcept { return stderr_; }

 private:
  int exit_code_;
  std::string stderr_;
};

class IoError : public Error {
 public:
  IoError(const std::string& what, ErrorClass cls = ErrorClass::Input)
      : Error(cls, what) {}
};

class YamlSyntaxError : public Error {
 public:
  YamlSyntaxError(const std::string& origin, int line, int column,
                  const std::string& message)
      : Error(ErrorClass::Input, origin + ":" + std::to_string(line) + ":" +
                                     std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

class MalformedList : public Error {
 public:
  explicit MalformedList(const std::string& what) : Error(ErrorClass::Input, what) {}
};

class MissingIdentity : public Error {
 public:
  explicit MissingIdentity(const std::string& what) : Error(ErrorClass::Input, what) {}
};

class ConfigSchemaError : public Error {
 public:
  ConfigSchemaError(const std::string& path, const std::string& message)
      : Error(ErrorClass::Input, "config " + path + ": " + message), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class UnknownFormat : public Error {
 public:
  explicit UnknownFormat(const std::string& what) : Error(ErrorClass::Input, what) {}
};

class RenderFailed : public Error {
 public:
  RenderFailed(int exit_code, const std::string& stderr_text)
      : Error(ErrorClass::Environment,
              "layout engine exited with status " + std::to_string(exit_code) +
                  (stderr_text.empty() ? "" : ": " + stderr_text)),
        exit_code_(exit_code) {}

  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

}  // namespace k8s_atlas
