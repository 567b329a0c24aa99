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

#include "symilp/instance_io.hpp"

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "symilp/errors.hpp"

namespace symilp {
namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

Error parse_error(std::size_t line_no, const std::string& what) {
  return Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

RawProgram parse_program(std::istream& in) {
  RawProgram prog;
  long n = -1;
  bool header = false;
  bool have_obj = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tok = tokens(line);
    if (tok.empty()) continue;
    if (!header) {
      if (tok.size() != 2 || tok[0] != "ILP" || tok[1] != "v1") {
        throw parse_error(line_no, "expected header 'ILP v1'");
      }
      header = true;
      continue;
    }
    if (n < 0) {
      if (tok.size() != 2 || tok[0] != "vars") throw parse_error(line_no, "expected 'vars <n>'");
      try {
        std::size_t pos = 0;
        n = std::stol(tok[1], &pos);
        if (pos != tok[1].size()) n = -1;
      } catch (const std::exception&) {
        n = -1;
      }
      if (n < 1) throw parse_error(line_no, "invalid variable count '" + tok[1] + "'");
      continue;
    }
    try {
      if (!have_obj) {
        if (tok[0] != "obj" || static_cast<long>(tok.size()) != n + 1) {
          throw parse_error(line_no, "expected 'obj' followed by " + std::to_string(n) + " numbers");
        }
        prog.objective.resize(n);
        for (long j = 0; j < n; ++j) prog.objective(j) = Rational::parse(tok[j + 1]);
        have_obj = true;
        continue;
      }
      if (static_cast<long>(tok.size()) != n + 2 || tok[n] != "<=") {
        throw parse_error(line_no, "expected " + std::to_string(n) + " coefficients, '<=', rhs");
      }
      RawRow row(n + 1);
      for (long j = 0; j < n; ++j) row(j) = Rational::parse(tok[j]);
      row(n) = Rational::parse(tok[n + 1]);
      prog.rows.push_back(std::move(row));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kParse && std::string(e.what()).find("line ") == std::string::npos) {
        throw parse_error(line_no, e.what());
      }
      throw;
    }
  }
  if (!header) throw parse_error(line_no, "missing header 'ILP v1'");
  if (n < 0) throw parse_error(line_no, "missing 'vars' line");
  if (!have_obj) throw parse_error(line_no, "missing 'obj' line");
  return prog;
}

ILPInstance read_instance(std::istream& in, std::string name) {
  RawProgram prog = parse_program(in);
  return normalize(prog.rows, prog.objective, std::move(name));
}

ILPInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  return read_instance(in, std::filesystem::path(path).stem().string());
}

void write_program(std::ostream& out, const std::vector<RawRow>& rows, const QVector& objective,
                   const std::string& comment) {
  const Eigen::Index n = objective.size();
  out << "ILP v1\n";
  if (!comment.empty()) out << "# " << comment << "\n";
  out << "vars " << n << "\n";
  out << "obj";
  for (Eigen::Index j = 0; j < n; ++j) out << ' ' << objective(j);
  out << "\n";
  std::string buf;
  for (const RawRow& row : rows) {
    buf.clear();
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j) buf.push_back(' ');
      buf += row(j).str();
    }
    buf += " <= ";
    buf += row(n).str();
    buf.push_back('\n');
    out << buf;
  }
}

void write_instance(std::ostream& out, const ILPInstance& inst) {
  const Eigen::Index n = inst.cols();
  out << "ILP v1\n";
  if (!inst.name().empty()) out << "# " << inst.name() << "\n";
  out << "vars " << n << "\n";
  out << "obj";
  for (Eigen::Index j = 0; j < n; ++j) out << ' ' << inst.c()(j);
  out << "\n";
  std::string buf;
  for (Eigen::Index i = 0; i < inst.rows(); ++i) {
    buf.clear();
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j) buf.push_back(' ');
      buf += inst.A()(i, j).str();
    }
    buf += " <= ";
    buf += inst.b()(i).str();
    buf.push_back('\n');
    out << buf;
  }
}

void write_instance_file(const std::string& path, const ILPInstance& inst) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  write_instance(out, inst);
  if (!out) throw Error(ErrorCode::kIo, "write to '" + path + "' failed");
}

}  // namespace symilp
