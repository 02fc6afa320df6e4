// Copyright 2026 The faceid Authors
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
#include <stdexcept>
#include <string>
#include <vector>

namespace faceid {

// All library failures derive from Error. The CLI maps the three families
// onto its exit codes: ArgumentError -> 2, DataError -> 3, NumericError -> 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class DataError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

// Malformed PGM header; offset is the byte at which parsing failed.
class ParseError : public DataError {
 public:
  ParseError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class SizeMismatchError : public DataError {
 public:
  SizeMismatchError(std::size_t expected, std::size_t actual);
  std::size_t expected() const { return expected_; }
  std::size_t actual() const { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

// Missing files in a corpus tree. gaps() lists every missing "sX/Y" entry.
class InventoryError : public DataError {
 public:
  explicit InventoryError(std::vector<std::string> gaps);
  const std::vector<std::string>& gaps() const { return gaps_; }

 private:
  std::vector<std::string> gaps_;
};

class RankError : public NumericError {
 public:
  RankError(int requested, int attainable);
  int requested() const { return requested_; }
  int attainable() const { return attainable_; }

 private:
  int requested_;
  int attainable_;
};

class DivergenceError : public NumericError {
 public:
  explicit DivergenceError(int epoch);
  int epoch() const { return epoch_; }

 private:
  int epoch_;
};

}  // namespace faceid
