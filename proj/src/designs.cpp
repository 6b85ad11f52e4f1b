#include "ameforge/designs.hpp"

#include <algorithm>
#include <set>

namespace ameforge {

int LatinHypercube::at(const std::vector<int>& address) const {
  if (static_cast<int>(address.size()) != dim)
    throw std::domain_error("address length does not match hypercube dimension");
  std::int64_t idx = 0;
  for (int a : address) {
    if (a < 0 || a >= order) throw std::domain_error("address out of range");
    idx = idx * order + a;
  }
  return cells[idx];
}

bool is_latin(const LatinSquare& square) {
  const int d = square.order;
  if (static_cast<int>(square.cells.size()) != d) return false;
  for (const auto& row : square.cells) {
    if (static_cast<int>(row.size()) != d) return false;
  }
  for (int i = 0; i < d; ++i) {
    std::vector<bool> in_row(d, false), in_col(d, false);
    for (int j = 0; j < d; ++j) {
      int r = square.cells[i][j], c = square.cells[j][i];
      if (r < 0 || r >= d || c < 0 || c >= d) return false;
      if (in_row[r] || in_col[c]) return false;
      in_row[r] = in_col[c] = true;
    }
  }
  return true;
}

bool is_latin(const LatinHypercube& cube) {
  const int d = cube.order;
  const int k = cube.dim;
  if (static_cast<std::int64_t>(cube.cells.size()) != ipow(d, k)) return false;
  // Every axis-aligned line must contain each symbol exactly once.
  for (int axis = 0; axis < k; ++axis) {
    std::vector<int> address(k, 0);
    const std::int64_t lines = ipow(d, k - 1);
    for (std::int64_t line = 0; line < lines; ++line) {
      std::int64_t rest = line;
      for (int p = k - 1; p >= 0; --p) {
        if (p == axis) continue;
        address[p] = static_cast<int>(rest % d);
        rest /= d;
      }
      std::vector<bool> seen(d, false);
      for (int v = 0; v < d; ++v) {
        address[axis] = v;
        int sym = cube.at(address);
        if (sym < 0 || sym >= d || seen[sym]) return false;
        seen[sym] = true;
      }
    }
  }
  return true;
}

std::vector<LatinSquare> mols(int order) {
  GaloisField f(order);  // throws unless the order is a prime power
  std::vector<LatinSquare> squares;
  for (int m = 1; m < order; ++m) {
    LatinSquare sq{order, std::vector<std::vector<int>>(order, std::vector<int>(order))};
    for (int i = 0; i < order; ++i) {
      for (int j = 0; j < order; ++j) sq.cells[i][j] = f.add(i, f.mul(m, j));
    }
    squares.push_back(std::move(sq));
  }
  return squares;
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
  if (a.order != b.order) throw std::domain_error("squares must have equal orders");
  const int d = a.order;
  std::vector<bool> seen(d * d, false);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      int pair = a.cells[i][j] * d + b.cells[i][j];
      if (seen[pair]) return false;
      seen[pair] = true;
    }
  }
  return true;
}

bool are_mutually_orthogonal(const std::vector<LatinSquare>& squares) {
  for (std::size_t i = 0; i < squares.size(); ++i) {
    for (std::size_t j = i + 1; j < squares.size(); ++j) {
      if (!are_orthogonal(squares[i], squares[j])) return false;
    }
  }
  return true;
}

std::vector<LatinHypercube> hypercubes_from_code(const Code& code) {
  if (code.length % 2 != 0) throw std::domain_error("code words must have even length");
  const int k = code.length / 2;
  const int d = code.base;
  const std::int64_t addresses = ipow(d, k);
  if (code.size() != addresses)
    throw std::domain_error("code must have exactly d^k words");

  std::vector<std::vector<int>> by_address(addresses);
  for (const auto& word : code.words) {
    std::int64_t addr = 0;
    for (int i = 0; i < k; ++i) addr = addr * d + word[i];
    if (!by_address[addr].empty())
      throw std::domain_error("address letters must enumerate all k-tuples");
    by_address[addr] = word;
  }
  for (const auto& w : by_address) {
    if (w.empty()) throw std::domain_error("address letters must enumerate all k-tuples");
  }

  std::vector<LatinHypercube> cubes;
  for (int c = 0; c < k; ++c) {
    LatinHypercube cube{d, k, std::vector<int>(addresses)};
    for (std::int64_t addr = 0; addr < addresses; ++addr) {
      cube.cells[addr] = by_address[addr][k + c];
    }
    cubes.push_back(std::move(cube));
  }
  return cubes;
}

bool cube_planes_carry_mols(const std::vector<LatinHypercube>& cubes) {
  if (cubes.empty()) return false;
  const int d = cubes[0].order;
  for (const auto& cube : cubes) {
    if (cube.dim != 3 || cube.order != d) throw std::domain_error("expected order-d cubes of dimension 3");
  }
  // Slice every cube along each axis at each position; the resulting squares
  // must be Latin and pairwise orthogonal.
  for (int axis = 0; axis < 3; ++axis) {
    for (int pos = 0; pos < d; ++pos) {
      std::vector<LatinSquare> slices;
      for (const auto& cube : cubes) {
        LatinSquare sq{d, std::vector<std::vector<int>>(d, std::vector<int>(d))};
        for (int a = 0; a < d; ++a) {
          for (int b = 0; b < d; ++b) {
            std::vector<int> address(3);
            address[axis] = pos;
            address[(axis + 1) % 3] = a;
            address[(axis + 2) % 3] = b;
            sq.cells[a][b] = cube.at(address);
          }
        }
        slices.push_back(std::move(sq));
      }
      for (const auto& sq : slices) {
        if (!is_latin(sq)) return false;
      }
      if (!are_mutually_orthogonal(slices)) return false;
    }
  }
  return true;
}

bool is_irredundant_oa(const std::vector<std::vector<int>>& rows, int length,
                       int base, int strength) {
  if (rows.empty()) return false;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != length) return false;
    for (int v : row) {
      if (v < 0 || v >= base) return false;
    }
  }
  const std::int64_t tuples = ipow(base, strength);
  if (rows.size() % tuples != 0) return false;
  const std::int64_t index = static_cast<std::int64_t>(rows.size()) / tuples;

  for (const auto& cols : k_subsets(length, strength)) {
    std::vector<std::int64_t> counts(tuples, 0);
    std::set<std::vector<int>> projected;
    for (const auto& row : rows) {
      std::vector<int> proj;
      std::int64_t t = 0;
      for (int c : cols) {
        proj.push_back(row[c]);
        t = t * base + row[c];
      }
      ++counts[t];
      if (!projected.insert(proj).second) return false;  // repeated row survives
    }
    for (std::int64_t t = 0; t < tuples; ++t) {
      if (counts[t] != index) return false;
    }
  }
  return true;
}

bool SudokuReport::all_ok() const {
  return std::all_of(family_ok.begin(), family_ok.end(), [](bool b) { return b; });
}

const char* SudokuReport::family_name(int f) {
  static const char* names[kFamilies] = {"rows",      "columns",     "blocks",
                                         "locations", "broken rows", "broken columns"};
  return names[f];
}

SudokuReport verify_symmetric_sudoku(const SudokuGrid& grid) {
  for (const auto& row : grid) {
    for (int v : row) {
      if (v < 1 || v > 9) throw std::domain_error("sudoku symbols must lie in 1..9");
    }
  }

  // Each family partitions the grid into nine 9-cell classes.
  auto cells_of = [](int family, int cls) {
    std::vector<std::pair<int, int>> cells;
    int a = cls / 3, b = cls % 3;
    for (int t = 0; t < 9; ++t) {
      int u = t / 3, v = t % 3;
      switch (family) {
        case 0: cells.emplace_back(cls, t); break;                    // row
        case 1: cells.emplace_back(t, cls); break;                    // column
        case 2: cells.emplace_back(3 * a + u, 3 * b + v); break;      // block
        case 3: cells.emplace_back(3 * u + a, 3 * v + b); break;      // location
        case 4: cells.emplace_back(3 * u + b, 3 * a + v); break;      // broken row
        case 5: cells.emplace_back(3 * a + u, 3 * v + b); break;      // broken column
      }
    }
    return cells;
  };

  SudokuReport report;
  for (int family = 0; family < SudokuReport::kFamilies; ++family) {
    report.family_ok[family] = true;
    report.first_violation[family] = {-1, -1};
    for (int cls = 0; cls < 9 && report.family_ok[family]; ++cls) {
      std::array<bool, 10> seen{};
      for (auto [r, c] : cells_of(family, cls)) {
        int sym = grid[r][c];
        if (seen[sym]) {
          report.family_ok[family] = false;
          report.first_violation[family] = {r, c};
          break;
        }
        seen[sym] = true;
      }
    }
  }
  return report;
}

IndexedMatrix sudoku_digit_to_permutation(const SudokuGrid& grid, int digit) {
  if (digit < 1 || digit > 9) throw std::domain_error("digit must lie in 1..9");
  int count = 0;
  IndexedMatrix m{3, 2, Eigen::MatrixXcd::Zero(9, 9)};
  for (int r = 0; r < 9; ++r) {
    for (int c = 0; c < 9; ++c) {
      if (grid[r][c] == digit) {
        m.m(r, c) = 1.0;
        ++count;
      }
    }
  }
  if (count != 9) throw std::domain_error("digit must appear exactly nine times");
  return m;
}

}  // namespace ameforge
