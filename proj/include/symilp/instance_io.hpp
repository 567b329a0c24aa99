// Copyright 2026 The symilp Authors
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

// Text format shared by every CLI subcommand:
//
//   ILP v1
//   # comment
//   vars <n>
//   obj <c_1> ... <c_n>
//   <a_1> ... <a_n> <= <b>      (one line per inequality)
//
// Numbers are exact rationals ("p/q", integers, or finite decimals).

#ifndef SYMILP_INSTANCE_IO_HPP_
#define SYMILP_INSTANCE_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "symilp/model.hpp"

namespace symilp {

struct RawProgram {
  std::vector<RawRow> rows;
  QVector objective;
};

RawProgram parse_program(std::istream& in);
ILPInstance read_instance(std::istream& in, std::string name = {});
ILPInstance read_instance_file(const std::string& path);

void write_program(std::ostream& out, const std::vector<RawRow>& rows, const QVector& objective,
                   const std::string& comment = {});
void write_instance(std::ostream& out, const ILPInstance& inst);
void write_instance_file(const std::string& path, const ILPInstance& inst);

}  // namespace symilp

#endif  // SYMILP_INSTANCE_IO_HPP_
