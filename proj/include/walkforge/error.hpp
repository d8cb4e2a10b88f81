// Copyright 2026 The WalkForge Authors
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

#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>

namespace walkforge {

/// Error classes; each maps to a distinct CLI exit code.
enum class ErrorKind {
  Parse,
  Precondition,
  DegreeMismatch,
  NotCommuting,
  Embedding,
  Dimension,
  Resource,
  Convergence,
  Io,
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorKind::Precondition, what) {}

 protected:
  PreconditionError(ErrorKind kind, const std::string& what)
      : Error(kind, what) {}
};

/// Interdependent pair with complete interlinks whose halves differ in degree.
class DegreeMismatchError : public PreconditionError {
 public:
  explicit DegreeMismatchError(const std::string& what)
      : PreconditionError(ErrorKind::DegreeMismatch, what) {}
};

/// [A, B] != 0 where an exact product factorization was requested.
class NotCommutingError : public Error {
 public:
  explicit NotCommutingError(const std::string& what)
      : Error(ErrorKind::NotCommuting, what) {}
};

class EmbeddingError : public Error {
 public:
  explicit EmbeddingError(const std::string& what)
      : Error(ErrorKind::Embedding, what) {}
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what)
      : Error(ErrorKind::Dimension, what) {}
};

/// Desk-scale caps (dimension, wire count) exceeded.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what)
      : Error(ErrorKind::Resource, what) {}
};

class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what)
      : Error(ErrorKind::Convergence, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error(ErrorKind::Internal, what) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::set<std::string> expected,
             const std::string& found);

  std::size_t offset() const { return offset_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::set<std::string> expected_;
};

}  // namespace walkforge
