// Copyright 2026 The mipstart authors
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

#ifndef MIPSTART_MPS_READER_HPP_
#define MIPSTART_MPS_READER_HPP_

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mipstart/instance.hpp"

namespace mipstart {

class MpsParseError : public std::runtime_error {
 public:
  MpsParseError(std::string_view source, int line, const std::string& what)
      : std::runtime_error(std::string(source) + ":" + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Reads fixed- or free-form MPS. Sections: NAME, OBJSENSE, ROWS, COLUMNS
/// (with INTORG/INTEND markers), RHS, RANGES, BOUNDS, ENDATA. The result is
/// normalized: >= rows are negated to <=, ranged rows are split into two <=
/// rows, and a maximization objective is negated (the flag is kept so
/// reported objectives can be un-negated).
MipInstance parse_mps(std::istream& source, std::string_view source_name = "<stream>");

MipInstance parse_mps_file(const std::filesystem::path& path);

}  // namespace mipstart

#endif  // MIPSTART_MPS_READER_HPP_
