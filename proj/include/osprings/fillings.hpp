#pragma once

#include <vector>

#include "osprings/combinat.hpp"

namespace osprings {

// Column i (1-based) has shape[i-1] diagram cells in rows shape[i-1]..1 and
// basement cells in rows 0,-1,...  Both lists are stored top to bottom.
struct ExtendedFilling {
  Composition shape;
  std::vector<std::vector<int>> diagram;
  std::vector<std::vector<int>> basement;

  int columns() const { return static_cast<int>(shape.size()); }
  int cells() const;
  bool has(int col, int row) const;
  int label(int col, int row) const;  // requires has(col,row)
  bool valid() const;                 // weakly increasing columns, positive labels
  bool standard() const;              // labels exactly 1..cells()
  Composition basement_sizes() const;
  Composition content(int max_label) const;

  bool operator==(const ExtendedFilling& o) const {
    return shape == o.shape && diagram == o.diagram && basement == o.basement;
  }
  bool operator<(const ExtendedFilling& o) const {
    if (shape != o.shape) return shape < o.shape;
    if (diagram != o.diagram) return diagram < o.diagram;
    return basement < o.basement;
  }
};

struct Cell {
  int col;
  int row;
  int label;
};

std::vector<Cell> cells_in_reading_order(const ExtendedFilling& f);
std::vector<Cell> cells_in_inv_reading_order(const ExtendedFilling& f);

std::vector<int> reading_word(const ExtendedFilling& f);
std::vector<int> inv_reading_word(const ExtendedFilling& f);

int inv(const ExtendedFilling& f);
// s may exceed the number of columns; the extra columns are empty
int dinv(const ExtendedFilling& f, int s);

// codes are returned as (c_n, ..., c_1)
Composition invcode(const ExtendedFilling& f);
Composition dinvcode(const ExtendedFilling& f, int s);

// code in C_{n,sort(shape),s} and weakly decreasing along each block of rev(content)
bool is_valid_code(const Composition& code, const Composition& shape, int s, const Composition& content);

ExtendedFilling insert_inv(const Composition& code, const Composition& shape, int s, const Composition& content);
ExtendedFilling insert_dinv(const Composition& code, const Composition& shape, int s, const Composition& content);

std::vector<ExtendedFilling> enumerate_seci(int n, const Composition& shape, int s);
std::vector<ExtendedFilling> enumerate_eci_bounded(int n, const Composition& shape, int s, int max_label);

// i with i+1 occurring before i in the word; the word is a permutation of 1..n
std::vector<int> inverse_descents(const std::vector<int>& word);

}  // namespace osprings
