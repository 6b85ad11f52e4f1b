#pragma once

#include <array>
#include <string>
#include <vector>

#include "ameforge/codes.hpp"
#include "ameforge/gf.hpp"
#include "ameforge/multiunitary.hpp"

namespace ameforge {

struct LatinSquare {
  int order = 0;
  std::vector<std::vector<int>> cells;
};

// k-dimensional array of order d stored flat in big-endian address order.
struct LatinHypercube {
  int order = 0;
  int dim = 0;
  std::vector<int> cells;

  int at(const std::vector<int>& address) const;
};

bool is_latin(const LatinSquare& square);
bool is_latin(const LatinHypercube& cube);

// Maximal set of d-1 pairwise-orthogonal Latin squares for a prime power d:
// square m has cells lambda_m[i][j] = i + m*j in GF(d).
std::vector<LatinSquare> mols(int order);

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);
bool are_mutually_orthogonal(const std::vector<LatinSquare>& squares);

// A code of d^k words of length 2k whose first k letters enumerate all
// k-tuples defines k hypercubes of dimension k: cube c maps the address
// (first k letters) to letter k+c.
std::vector<LatinHypercube> hypercubes_from_code(const Code& code);

// Every axis-aligned plane slice of a trio of order-4 cubes carries a set of
// mutually orthogonal Latin squares; exposed for the dim-3 check.
bool cube_planes_carry_mols(const std::vector<LatinHypercube>& cubes);

// Orthogonal array of strength t: every t columns balanced; irredundant if
// keeping any t columns leaves no repeated rows.
bool is_irredundant_oa(const std::vector<std::vector<int>>& rows, int length,
                       int base, int strength);

using SudokuGrid = std::array<std::array<int, 9>, 9>;

struct SudokuReport {
  // rows, columns, blocks, locations, broken rows, broken columns
  static constexpr int kFamilies = 6;
  std::array<bool, kFamilies> family_ok{};
  std::array<std::pair<int, int>, kFamilies> first_violation{};

  bool all_ok() const;
  static const char* family_name(int f);
};

// Six constraint families over symbols 1..9: rows; columns; the nine aligned
// 3x3 blocks; locations (same intra-block cell across all blocks); broken
// rows (same row offset across the three vertically stacked blocks of a
// block column); broken columns (same column offset across the three
// horizontally adjacent blocks of a block row).
SudokuReport verify_symmetric_sudoku(const SudokuGrid& grid);

// 9x9 permutation matrix with ones at the cells holding the given digit,
// viewed as an order-9 indexed matrix over two qutrit indices.
IndexedMatrix sudoku_digit_to_permutation(const SudokuGrid& grid, int digit);

}  // namespace ameforge
