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

#include "mipstart/mps_reader.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mipstart {
namespace {

enum class Section {
  kNone,
  kName,
  kObjSense,
  kRows,
  kColumns,
  kRhs,
  kRanges,
  kBounds,
  kEndata,
};

enum class RowSense : std::uint8_t { kObjective, kLessEqual, kGreaterEqual, kEqual };

struct PendingRow {
  RowSense sense;
  std::string name;
  std::vector<Index> cols;
  std::vector<double> coefs;
  double rhs = 0.0;
  std::optional<double> range;
};

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.emplace_back(line.substr(start, i - start));
  }
  return tokens;
}

class Parser {
 public:
  Parser(std::istream& in, std::string_view source) : in_(in), source_(source) {}

  MipInstance run() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '*') continue;

      const bool is_header = !std::isspace(static_cast<unsigned char>(line[0]));
      auto tokens = tokenize(line);
      if (tokens.empty()) continue;

      if (is_header) {
        handle_header(tokens);
        if (section_ == Section::kEndata) break;
        continue;
      }
      switch (section_) {
        case Section::kObjSense:
          set_objsense(tokens[0]);
          break;
        case Section::kRows:
          parse_row(tokens);
          break;
        case Section::kColumns:
          parse_column(tokens);
          break;
        case Section::kRhs:
          parse_rhs(tokens);
          break;
        case Section::kRanges:
          parse_range(tokens);
          break;
        case Section::kBounds:
          parse_bound(tokens);
          break;
        default:
          fail("data line outside of any section");
      }
    }
    return build();
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw MpsParseError(source_, line_no_, message);
  }

  void require_after(Section needed, const char* what) const {
    if (!seen_.contains(needed)) {
      fail(std::string(what) + " section before its prerequisite (malformed section order)");
    }
  }

  void handle_header(const std::vector<std::string>& tokens) {
    const std::string& word = tokens[0];
    if (word == "NAME") {
      enter(Section::kName);
      if (tokens.size() > 1) name_ = tokens[1];
    } else if (word == "OBJSENSE") {
      enter(Section::kObjSense);
      if (tokens.size() > 1) set_objsense(tokens[1]);
    } else if (word == "ROWS") {
      enter(Section::kRows);
    } else if (word == "COLUMNS") {
      require_after(Section::kRows, "COLUMNS");
      if (rows_.empty() && !objective_seen_) fail("empty ROWS section");
      enter(Section::kColumns);
    } else if (word == "RHS") {
      require_after(Section::kColumns, "RHS");
      enter(Section::kRhs);
    } else if (word == "RANGES") {
      require_after(Section::kColumns, "RANGES");
      enter(Section::kRanges);
    } else if (word == "BOUNDS") {
      require_after(Section::kColumns, "BOUNDS");
      enter(Section::kBounds);
    } else if (word == "ENDATA") {
      section_ = Section::kEndata;
    } else {
      fail("unknown section '" + word + "'");
    }
  }

  void enter(Section s) {
    if (seen_.contains(s)) fail("repeated section (malformed section order)");
    // Sections must not restart after COLUMNS data began, except the data
    // sections themselves.
    if (s == Section::kRows && seen_.contains(Section::kColumns)) {
      fail("ROWS after COLUMNS (malformed section order)");
    }
    if ((s == Section::kName || s == Section::kObjSense) && seen_.contains(Section::kRows)) {
      fail("header section after ROWS (malformed section order)");
    }
    seen_.insert(s);
    section_ = s;
  }

  void set_objsense(const std::string& token) {
    std::string t = token;
    std::transform(t.begin(), t.end(), t.begin(), ::toupper);
    if (t == "MAX" || t == "MAXIMIZE") {
      maximize_ = true;
    } else if (t == "MIN" || t == "MINIMIZE") {
      maximize_ = false;
    } else {
      fail("unknown OBJSENSE '" + token + "'");
    }
  }

  void parse_row(const std::vector<std::string>& tokens) {
    if (tokens.size() < 2) fail("ROWS line needs a sense and a name");
    const std::string& sense = tokens[0];
    const std::string& name = tokens[1];
    RowSense s;
    if (sense == "N" || sense == "n") {
      s = RowSense::kObjective;
    } else if (sense == "L" || sense == "l") {
      s = RowSense::kLessEqual;
    } else if (sense == "G" || sense == "g") {
      s = RowSense::kGreaterEqual;
    } else if (sense == "E" || sense == "e") {
      s = RowSense::kEqual;
    } else {
      fail("unknown row sense '" + sense + "'");
    }
    if (row_index_.contains(name) || name == objective_name_) {
      fail("duplicate row name '" + name + "'");
    }
    if (s == RowSense::kObjective) {
      // First N row is the objective; later free rows are ignored.
      if (!objective_seen_) {
        objective_seen_ = true;
        objective_name_ = name;
      } else {
        ignored_rows_.insert(name);
      }
      return;
    }
    row_index_.emplace(name, static_cast<Index>(rows_.size()));
    rows_.push_back(PendingRow{s, name, {}, {}, 0.0, std::nullopt});
  }

  Index column_id(const std::string& name) {
    auto it = col_index_.find(name);
    if (it != col_index_.end()) return it->second;
    const Index id = static_cast<Index>(col_names_.size());
    col_index_.emplace(name, id);
    col_names_.push_back(name);
    objective_coefs_.push_back(0.0);
    lower_.push_back(0.0);
    upper_.push_back(kInfinity);
    is_integer_.push_back(in_integer_block_);
    return id;
  }

  double parse_number(const std::string& token) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0' || errno == ERANGE) {
      fail("malformed numeric value '" + token + "'");
    }
    return v;
  }

  void parse_column(const std::vector<std::string>& tokens) {
    // Marker lines toggle integrality for the columns that follow.
    if (tokens.size() >= 3 && tokens[1] == "'MARKER'") {
      if (tokens[2] == "'INTORG'") {
        in_integer_block_ = true;
      } else if (tokens[2] == "'INTEND'") {
        in_integer_block_ = false;
      } else {
        fail("unknown marker '" + tokens[2] + "'");
      }
      return;
    }
    if (tokens.size() < 3 || tokens.size() % 2 == 0) {
      fail("COLUMNS line needs a column name and (row, value) pairs");
    }
    const Index col = column_id(tokens[0]);
    for (std::size_t k = 1; k + 1 < tokens.size(); k += 2) {
      const std::string& row_name = tokens[k];
      const double value = parse_number(tokens[k + 1]);
      if (row_name == objective_name_) {
        objective_coefs_[col] = value;
        continue;
      }
      if (ignored_rows_.contains(row_name)) continue;
      auto it = row_index_.find(row_name);
      if (it == row_index_.end()) fail("unknown row '" + row_name + "' in COLUMNS");
      PendingRow& row = rows_[it->second];
      if (std::find(row.cols.begin(), row.cols.end(), col) != row.cols.end()) {
        fail("duplicate entry for column '" + tokens[0] + "' in row '" + row_name + "'");
      }
      if (value != 0.0) {
        row.cols.push_back(col);
        row.coefs.push_back(value);
      }
    }
  }

  void parse_rhs(const std::vector<std::string>& tokens) {
    if (tokens.size() < 3 || tokens.size() % 2 == 0) {
      fail("RHS line needs a set name and (row, value) pairs");
    }
    for (std::size_t k = 1; k + 1 < tokens.size(); k += 2) {
      const std::string& row_name = tokens[k];
      const double value = parse_number(tokens[k + 1]);
      if (row_name == objective_name_) {
        // RHS on the objective row is the negated constant term.
        objective_constant_ = -value;
        continue;
      }
      if (ignored_rows_.contains(row_name)) continue;
      auto it = row_index_.find(row_name);
      if (it == row_index_.end()) fail("unknown row '" + row_name + "' in RHS");
      rows_[it->second].rhs = value;
    }
  }

  void parse_range(const std::vector<std::string>& tokens) {
    if (tokens.size() < 3 || tokens.size() % 2 == 0) {
      fail("RANGES line needs a set name and (row, value) pairs");
    }
    for (std::size_t k = 1; k + 1 < tokens.size(); k += 2) {
      auto it = row_index_.find(tokens[k]);
      if (it == row_index_.end()) fail("unknown row '" + tokens[k] + "' in RANGES");
      rows_[it->second].range = parse_number(tokens[k + 1]);
    }
  }

  void check_bounds(Index col) {
    if (lower_[col] > upper_[col]) {
      fail("conflicting bounds for column '" + col_names_[col] + "' (lower > upper)");
    }
  }

  void parse_bound(const std::vector<std::string>& tokens) {
    if (tokens.size() < 3) fail("BOUNDS line needs a type, a set name, and a column");
    std::string type = tokens[0];
    std::transform(type.begin(), type.end(), type.begin(), ::toupper);
    auto it = col_index_.find(tokens[2]);
    if (it == col_index_.end()) fail("unknown column '" + tokens[2] + "' in BOUNDS");
    const Index col = it->second;

    const bool needs_value = type == "UP" || type == "LO" || type == "FX" ||
                             type == "UI" || type == "LI";
    if (needs_value && tokens.size() < 4) fail("bound type '" + type + "' needs a value");
    const double value = needs_value ? parse_number(tokens[3]) : 0.0;

    if (type == "UP" || type == "UI") {
      upper_[col] = value;
    } else if (type == "LO" || type == "LI") {
      lower_[col] = value;
    } else if (type == "FX") {
      lower_[col] = value;
      upper_[col] = value;
    } else if (type == "FR") {
      lower_[col] = -kInfinity;
      upper_[col] = kInfinity;
    } else if (type == "MI") {
      lower_[col] = -kInfinity;
    } else if (type == "PL") {
      upper_[col] = kInfinity;
    } else if (type == "BV") {
      lower_[col] = 0.0;
      upper_[col] = 1.0;
      is_integer_[col] = true;
    } else {
      fail("unknown bound type '" + type + "'");
    }
    if (type == "UI" || type == "LI") is_integer_[col] = true;
    check_bounds(col);
  }

  MipInstance build() {
    if (!seen_.contains(Section::kRows)) fail("missing ROWS section");
    if (rows_.empty() && !objective_seen_) fail("empty ROWS section");

    MipInstance inst;
    inst.name = name_;
    inst.num_vars = static_cast<Index>(col_names_.size());
    inst.lower = lower_;
    inst.upper = upper_;
    inst.objective = objective_coefs_;
    inst.objective_offset = objective_constant_;
    inst.from_maximization = maximize_;
    if (maximize_) {
      for (double& c : inst.objective) c = -c;
      inst.objective_offset = -inst.objective_offset;
    }
    for (Index j = 0; j < inst.num_vars; ++j) {
      if (is_integer_[j]) inst.integer_vars.push_back(j);
    }

    for (const PendingRow& row : rows_) {
      emit_row(inst, row);
    }
    inst.finalize();
    return inst;
  }

  // Normalization: >= rows are negated, ranged rows become a <= pair.
  void emit_row(MipInstance& inst, const PendingRow& row) const {
    auto push_leq = [&inst](const PendingRow& src, double rhs, bool negate) {
      SparseRow out;
      out.cols = src.cols;
      out.coefs = src.coefs;
      if (negate) {
        for (double& c : out.coefs) c = -c;
      }
      out.rhs = rhs;
      inst.leq_rows.push_back(std::move(out));
    };

    if (!row.range.has_value()) {
      switch (row.sense) {
        case RowSense::kLessEqual:
          push_leq(row, row.rhs, false);
          return;
        case RowSense::kGreaterEqual:
          push_leq(row, -row.rhs, true);
          return;
        case RowSense::kEqual: {
          SparseRow out;
          out.cols = row.cols;
          out.coefs = row.coefs;
          out.rhs = row.rhs;
          inst.eq_rows.push_back(std::move(out));
          return;
        }
        case RowSense::kObjective:
          return;
      }
    }

    // Ranged row: activity confined to an interval [lo, hi] that depends on
    // the sense and the range sign; emitted as { ax <= hi, -ax <= -lo }.
    const double r = *row.range;
    double lo = 0.0, hi = 0.0;
    switch (row.sense) {
      case RowSense::kLessEqual:
        hi = row.rhs;
        lo = row.rhs - std::fabs(r);
        break;
      case RowSense::kGreaterEqual:
        lo = row.rhs;
        hi = row.rhs + std::fabs(r);
        break;
      case RowSense::kEqual:
        if (r >= 0.0) {
          lo = row.rhs;
          hi = row.rhs + r;
        } else {
          lo = row.rhs + r;
          hi = row.rhs;
        }
        break;
      case RowSense::kObjective:
        return;
    }
    push_leq(row, hi, false);
    push_leq(row, -lo, true);
  }

  std::istream& in_;
  std::string_view source_;
  int line_no_ = 0;
  Section section_ = Section::kNone;
  std::set<Section> seen_;

  std::string name_;
  bool maximize_ = false;
  bool objective_seen_ = false;
  std::string objective_name_;
  std::set<std::string> ignored_rows_;
  std::vector<PendingRow> rows_;
  std::unordered_map<std::string, Index> row_index_;
  std::unordered_map<std::string, Index> col_index_;
  std::vector<std::string> col_names_;
  std::vector<double> objective_coefs_;
  std::vector<double> lower_, upper_;
  std::vector<bool> is_integer_;
  double objective_constant_ = 0.0;
  bool in_integer_block_ = false;
};

}  // namespace

MipInstance parse_mps(std::istream& source, std::string_view source_name) {
  return Parser(source, source_name).run();
}

MipInstance parse_mps_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw MpsParseError(path.string(), 0, "cannot open file");
  }
  MipInstance inst = parse_mps(in, path.string());
  if (inst.name.empty()) inst.name = path.stem().string();
  return inst;
}

}  // namespace mipstart
