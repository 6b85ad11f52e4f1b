#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ameforge/codes.hpp"
#include "ameforge/designs.hpp"
#include "ameforge/multiunitary.hpp"
#include "ameforge/state.hpp"

namespace ameforge {

// State files: {"num_parties": N, "local_dim": d, "terms": [{"ket": [...],
// "re": x, "im": y}, ...]} with terms sorted by big-endian ket index. The
// reader validates letter ranges, duplicate kets, and normalization.
std::string state_to_json(const PureState& state, double tol = kDefaultTol);
PureState state_from_json(const std::string& text, double tol = kDefaultTol);

// Matrix files: {"local_dim": d, "half_order": k, "rows": [[{"re": x,
// "im": y}, ...], ...]}.
std::string matrix_to_json(const IndexedMatrix& m);
IndexedMatrix matrix_from_json(const std::string& text);

// Code files: one word per line; contiguous digits for base <= 10,
// comma-separated integers above.
std::string code_to_text(const Code& code);
Code code_from_text(const std::string& text);

// Square grids: d lines of d space-separated symbols; squares separated by a
// blank line.
std::string squares_to_text(const std::vector<LatinSquare>& squares);

// Sudoku grids: 9 lines of 9 digits (whitespace between digits optional).
SudokuGrid sudoku_from_text(const std::string& text);
std::string sudoku_to_text(const SudokuGrid& grid);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace ameforge
