#include "ameforge/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ameforge {

using nlohmann::json;

std::string state_to_json(const PureState& state, double tol) {
  json out;
  out["num_parties"] = state.num_parties();
  out["local_dim"] = state.local_dim();
  json terms = json::array();
  for (const auto& [ket, amp] : state.terms(tol)) {
    terms.push_back({{"ket", ket}, {"re", amp.real()}, {"im", amp.imag()}});
  }
  out["terms"] = std::move(terms);
  return out.dump(2) + "\n";
}

PureState state_from_json(const std::string& text, double tol) {
  json in = json::parse(text);
  const int n = in.at("num_parties").get<int>();
  const int d = in.at("local_dim").get<int>();
  std::vector<std::pair<std::vector<int>, cplx>> terms;
  for (const auto& term : in.at("terms")) {
    auto ket = term.at("ket").get<std::vector<int>>();
    terms.emplace_back(std::move(ket),
                       cplx(term.at("re").get<double>(), term.at("im").get<double>()));
  }
  PureState state = PureState::from_terms(n, d, terms, /*renormalize=*/false);
  if (std::abs(state.norm() - 1.0) > std::sqrt(tol))
    throw numerical_error("state file is not normalized");
  return state;
}

std::string matrix_to_json(const IndexedMatrix& m) {
  json out;
  out["local_dim"] = m.local_dim;
  out["half_order"] = m.half_order;
  json rows = json::array();
  for (std::int64_t r = 0; r < m.order(); ++r) {
    json row = json::array();
    for (std::int64_t c = 0; c < m.order(); ++c) {
      row.push_back({{"re", m.m(r, c).real()}, {"im", m.m(r, c).imag()}});
    }
    rows.push_back(std::move(row));
  }
  out["rows"] = std::move(rows);
  return out.dump(2) + "\n";
}

IndexedMatrix matrix_from_json(const std::string& text) {
  json in = json::parse(text);
  const int d = in.at("local_dim").get<int>();
  const int k = in.at("half_order").get<int>();
  if (d < 2 || k < 1) throw std::invalid_argument("matrix file has a bad shape header");
  const std::int64_t order = ipow(d, k);
  IndexedMatrix m{d, k, Eigen::MatrixXcd::Zero(order, order)};
  const auto& rows = in.at("rows");
  if (static_cast<std::int64_t>(rows.size()) != m.order())
    throw std::invalid_argument("matrix file has the wrong number of rows");
  for (std::int64_t r = 0; r < m.order(); ++r) {
    const auto& row = rows[r];
    if (static_cast<std::int64_t>(row.size()) != m.order())
      throw std::invalid_argument("matrix file has a row of the wrong length");
    for (std::int64_t c = 0; c < m.order(); ++c) {
      m.m(r, c) = cplx(row[c].at("re").get<double>(), row[c].at("im").get<double>());
    }
  }
  return m;
}

std::string code_to_text(const Code& code) {
  std::ostringstream out;
  for (const auto& word : code.words) {
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (code.base <= 10) {
        out << word[i];
      } else {
        if (i) out << ',';
        out << word[i];
      }
    }
    out << '\n';
  }
  return out.str();
}

Code code_from_text(const std::string& text) {
  std::vector<std::vector<int>> words;
  int base = 0;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    std::vector<int> word;
    if (line.find(',') != std::string::npos) {
      std::istringstream cells(line);
      std::string cell;
      while (std::getline(cells, cell, ',')) word.push_back(std::stoi(cell));
    } else {
      for (char ch : line) {
        if (ch < '0' || ch > '9')
          throw std::invalid_argument("code line contains a non-digit character");
        word.push_back(ch - '0');
      }
    }
    for (int letter : word) base = std::max(base, letter + 1);
    words.push_back(std::move(word));
  }
  if (words.empty()) throw std::invalid_argument("code file contains no words");
  const int length = static_cast<int>(words.front().size());
  return Code(length, std::max(base, 2), std::move(words));
}

std::string squares_to_text(const std::vector<LatinSquare>& squares) {
  std::ostringstream out;
  for (std::size_t s = 0; s < squares.size(); ++s) {
    if (s) out << '\n';
    const auto& sq = squares[s];
    for (int r = 0; r < sq.order; ++r) {
      for (int c = 0; c < sq.order; ++c) {
        if (c) out << ' ';
        out << sq.cells[r][c];
      }
      out << '\n';
    }
  }
  return out.str();
}

SudokuGrid sudoku_from_text(const std::string& text) {
  std::vector<int> digits;
  for (char ch : text) {
    if (ch >= '1' && ch <= '9') digits.push_back(ch - '0');
    else if (ch == '0') throw std::invalid_argument("sudoku digits run from 1 to 9");
    else if (!std::isspace(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("sudoku file contains an unexpected character");
  }
  if (digits.size() != 81) throw std::invalid_argument("sudoku file must contain 81 digits");
  SudokuGrid grid{};
  for (int r = 0; r < 9; ++r) {
    for (int c = 0; c < 9; ++c) grid[r][c] = digits[9 * r + c];
  }
  return grid;
}

std::string sudoku_to_text(const SudokuGrid& grid) {
  std::ostringstream out;
  for (const auto& row : grid) {
    for (int digit : row) out << digit;
    out << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << contents;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace ameforge
