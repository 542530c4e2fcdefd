#include "osprings/fillings.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace osprings {

int ExtendedFilling::cells() const {
  int c = 0;
  for (size_t i = 0; i < shape.size(); ++i) c += diagram[i].size() + basement[i].size();
  return c;
}

bool ExtendedFilling::has(int col, int row) const {
  if (col < 1 || col > columns()) return false;
  if (row >= 1) return row <= shape[col - 1];
  return -row < static_cast<int>(basement[col - 1].size());
}

int ExtendedFilling::label(int col, int row) const {
  if (row >= 1) return diagram[col - 1][shape[col - 1] - row];
  return basement[col - 1][-row];
}

bool ExtendedFilling::valid() const {
  if (diagram.size() != shape.size() || basement.size() != shape.size()) return false;
  for (size_t i = 0; i < shape.size(); ++i) {
    if (shape[i] < 0 || static_cast<int>(diagram[i].size()) != shape[i]) return false;
    std::vector<int> col = diagram[i];
    col.insert(col.end(), basement[i].begin(), basement[i].end());
    for (size_t t = 0; t < col.size(); ++t) {
      if (col[t] < 1) return false;
      if (t > 0 && col[t] < col[t - 1]) return false;
    }
  }
  return true;
}

bool ExtendedFilling::standard() const {
  std::vector<int> all;
  for (size_t i = 0; i < shape.size(); ++i) {
    all.insert(all.end(), diagram[i].begin(), diagram[i].end());
    all.insert(all.end(), basement[i].begin(), basement[i].end());
  }
  std::sort(all.begin(), all.end());
  for (size_t t = 0; t < all.size(); ++t)
    if (all[t] != static_cast<int>(t) + 1) return false;
  return true;
}

Composition ExtendedFilling::basement_sizes() const {
  Composition b;
  for (auto& col : basement) b.push_back(col.size());
  return b;
}

Composition ExtendedFilling::content(int max_label) const {
  Composition g(max_label, 0);
  for (size_t i = 0; i < shape.size(); ++i) {
    for (int x : diagram[i]) ++g.at(x - 1);
    for (int x : basement[i]) ++g.at(x - 1);
  }
  return g;
}

static std::vector<Cell> diagram_cells_in_reading_order(const ExtendedFilling& f) {
  std::vector<Cell> out;
  int top = f.shape.empty() ? 0 : *std::max_element(f.shape.begin(), f.shape.end());
  for (int row = top; row >= 1; --row)
    for (int col = 1; col <= f.columns(); ++col)
      if (f.has(col, row)) out.push_back({col, row, f.label(col, row)});
  return out;
}

std::vector<Cell> cells_in_reading_order(const ExtendedFilling& f) {
  auto out = diagram_cells_in_reading_order(f);
  size_t depth = 0;
  for (auto& b : f.basement) depth = std::max(depth, b.size());
  for (int row = 0; row > -static_cast<int>(depth); --row)
    for (int col = 1; col <= f.columns(); ++col)
      if (f.has(col, row)) out.push_back({col, row, f.label(col, row)});
  return out;
}

std::vector<Cell> cells_in_inv_reading_order(const ExtendedFilling& f) {
  auto out = diagram_cells_in_reading_order(f);
  for (int col = 1; col <= f.columns(); ++col)
    for (size_t t = 0; t < f.basement[col - 1].size(); ++t)
      out.push_back({col, -static_cast<int>(t), f.basement[col - 1][t]});
  return out;
}

std::vector<int> reading_word(const ExtendedFilling& f) {
  std::vector<int> w;
  for (auto& c : cells_in_reading_order(f)) w.push_back(c.label);
  return w;
}

std::vector<int> inv_reading_word(const ExtendedFilling& f) {
  std::vector<int> w;
  for (auto& c : cells_in_inv_reading_order(f)) w.push_back(c.label);
  return w;
}

// Number of inversions having (col,row) as their second cell.
static int inv_at(const ExtendedFilling& f, int col, int row) {
  int s = f.columns();
  int me = f.label(col, row);
  int c = 0;
  if (row >= 1) {
    for (int i = 1; i < col; ++i)
      if (f.has(i, row) && f.label(i, row) > me) ++c;
    for (int i = col + 1; i <= s; ++i)
      if (f.has(i, row + 1) && f.label(i, row + 1) > me) ++c;
  } else {
    c += col - 1;
    for (int i = col + 1; i <= s; ++i)
      if (f.shape[i - 1] >= 1 && f.label(i, 1) > me) ++c;
  }
  return c;
}

static int height(const ExtendedFilling& f, int col) {
  return col <= f.columns() ? f.shape[col - 1] : 0;
}

static bool present(const ExtendedFilling& f, int col, int row) {
  return col <= f.columns() && f.has(col, row);
}

// Diagonal inversions (both kinds) whose second coordinate is (col,row).
static int dinv_at(const ExtendedFilling& f, int s, int col, int row) {
  int me = f.label(col, row);
  int c = 0;
  auto first = [&](int i, int j) {
    if (j > height(f, i)) return;
    if (present(f, i, j)) {
      if (f.label(i, j) > me) ++c;
    } else if (j <= 0 && row <= 0) {
      ++c;
    }
  };
  for (int i = 1; i < col; ++i) first(i, row);
  for (int i = col + 1; i <= s; ++i) first(i, row + 1);
  return c;
}

int inv(const ExtendedFilling& f) {
  int total = 0;
  for (auto& c : cells_in_reading_order(f)) total += inv_at(f, c.col, c.row);
  return total;
}

int dinv(const ExtendedFilling& f, int s) {
  if (s < f.columns()) throw std::invalid_argument("dinv: s smaller than the number of columns");
  int total = 0;
  for (auto& c : cells_in_reading_order(f)) total += dinv_at(f, s, c.col, c.row);
  return total;
}

static Composition code_from(std::vector<Cell> order, const std::function<int(const Cell&)>& count) {
  std::stable_sort(order.begin(), order.end(), [](const Cell& a, const Cell& b) { return a.label < b.label; });
  Composition code;
  for (auto it = order.rbegin(); it != order.rend(); ++it) code.push_back(count(*it));
  return code;
}

Composition invcode(const ExtendedFilling& f) {
  return code_from(cells_in_inv_reading_order(f), [&](const Cell& c) { return inv_at(f, c.col, c.row); });
}

Composition dinvcode(const ExtendedFilling& f, int s) {
  if (s < f.columns()) throw std::invalid_argument("dinvcode: s smaller than the number of columns");
  return code_from(cells_in_reading_order(f), [&](const Cell& c) { return dinv_at(f, s, c.col, c.row); });
}

bool is_valid_code(const Composition& code, const Composition& shape, int s, const Composition& content) {
  int n = code.size();
  if (size_of(content) != n) return false;
  if (!in_staircase_set(code, n, sorted_partition(shape), s)) return false;
  // blocks of rev(content) read left to right over (c_n, ..., c_1)
  int pos = 0;
  for (auto it = content.rbegin(); it != content.rend(); ++it) {
    for (int t = 1; t < *it; ++t)
      if (code[pos + t] > code[pos + t - 1]) return false;
    pos += *it;
  }
  return true;
}

namespace {

struct InsertState {
  Composition shape;
  int s;
  std::vector<int> filled;  // diagram cells filled per column, from the top
  std::vector<std::vector<int>> diagram;
  std::vector<std::vector<int>> basement;

  InsertState(const Composition& sh, int s_) : shape(sh), s(s_) {
    shape.resize(s, 0);
    filled.assign(s, 0);
    diagram.resize(s);
    basement.resize(s);
    for (int i = 0; i < s; ++i) diagram[i].assign(shape[i], 0);
  }

  // row of the first unfilled coordinate of column i (0-based)
  int next_row(int i) const {
    if (filled[i] < shape[i]) return shape[i] - filled[i];
    return -static_cast<int>(basement[i].size());
  }

  void place(int i, int label) {
    if (filled[i] < shape[i]) {
      diagram[i][filled[i]++] = label;
    } else {
      basement[i].push_back(label);
    }
  }
};

std::vector<int> sorted_labels(const Composition& content) {
  std::vector<int> a;
  for (size_t v = 0; v < content.size(); ++v) a.insert(a.end(), content[v], static_cast<int>(v) + 1);
  return a;
}

ExtendedFilling run_insertion(const Composition& code, const Composition& shape, int s, const Composition& content,
                              bool diagonal) {
  if (static_cast<int>(shape.size()) > s) throw std::invalid_argument("insertion: shape longer than s");
  int n = code.size();
  auto a = sorted_labels(content);
  if (static_cast<int>(a.size()) != n) throw std::invalid_argument("insertion: content size differs from code length");
  InsertState st(shape, s);
  for (int p = 0; p < n; ++p) {
    int c = code[n - 1 - p];
    if (c < 0 || c >= s) throw std::invalid_argument("insertion: code entry out of range");
    std::vector<int> order(s);
    std::iota(order.begin(), order.end(), 0);
    if (diagonal) {
      std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return st.next_row(x) > st.next_row(y); });
    } else {
      // unfilled columns by reading order of their highest gap, then full columns left to right
      std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        bool ux = st.filled[x] < st.shape[x], uy = st.filled[y] < st.shape[y];
        if (ux != uy) return ux;
        if (ux) return st.next_row(x) > st.next_row(y);
        return false;
      });
    }
    st.place(order[c], a[p]);
  }
  for (int i = 0; i < s; ++i)
    if (st.filled[i] != st.shape[i]) throw std::invalid_argument("insertion: code leaves diagram cells empty");
  ExtendedFilling f;
  f.shape = shape;
  f.shape.resize(s, 0);
  f.diagram = st.diagram;
  f.basement = st.basement;
  return f;
}

}  // namespace

ExtendedFilling insert_inv(const Composition& code, const Composition& shape, int s, const Composition& content) {
  return run_insertion(code, shape, s, content, false);
}

ExtendedFilling insert_dinv(const Composition& code, const Composition& shape, int s, const Composition& content) {
  return run_insertion(code, shape, s, content, true);
}

std::vector<ExtendedFilling> enumerate_seci(int n, const Composition& shape, int s) {
  std::vector<ExtendedFilling> out;
  Composition sh = shape;
  if (static_cast<int>(sh.size()) > s) return out;
  sh.resize(s, 0);
  if (size_of(sh) > n) return out;
  std::vector<std::vector<int>> blocks(s);
  std::vector<int> need(sh.begin(), sh.end());
  int deficit = size_of(sh);
  std::function<void(int)> rec = [&](int e) {
    if (e > n) {
      ExtendedFilling f;
      f.shape = sh;
      for (int i = 0; i < s; ++i) {
        f.diagram.emplace_back(blocks[i].begin(), blocks[i].begin() + sh[i]);
        f.basement.emplace_back(blocks[i].begin() + sh[i], blocks[i].end());
      }
      out.push_back(std::move(f));
      return;
    }
    for (int i = 0; i < s; ++i) {
      bool fills = static_cast<int>(blocks[i].size()) < need[i];
      if (!fills && n - e + 1 <= deficit) continue;
      blocks[i].push_back(e);
      if (fills) --deficit;
      rec(e + 1);
      if (fills) ++deficit;
      blocks[i].pop_back();
    }
  };
  rec(1);
  return out;
}

std::vector<ExtendedFilling> enumerate_eci_bounded(int n, const Composition& shape, int s, int max_label) {
  std::vector<ExtendedFilling> out;
  Composition sh = shape;
  if (static_cast<int>(sh.size()) > s) return out;
  sh.resize(s, 0);
  int k = size_of(sh);
  if (k > n) return out;
  for (const auto& beta : weak_compositions(n - k, s)) {
    std::vector<std::vector<int>> cols(s);
    std::function<void(int, int, int)> rec = [&](int i, int t, int lo) {
      if (i == s) {
        ExtendedFilling f;
        f.shape = sh;
        for (int c = 0; c < s; ++c) {
          f.diagram.emplace_back(cols[c].begin(), cols[c].begin() + sh[c]);
          f.basement.emplace_back(cols[c].begin() + sh[c], cols[c].end());
        }
        out.push_back(std::move(f));
        return;
      }
      if (t == sh[i] + beta[i]) {
        rec(i + 1, 0, 1);
        return;
      }
      for (int x = lo; x <= max_label; ++x) {
        cols[i].push_back(x);
        rec(i, t + 1, x);
        cols[i].pop_back();
      }
    };
    rec(0, 0, 1);
  }
  return out;
}

std::vector<int> inverse_descents(const std::vector<int>& word) {
  int n = word.size();
  std::vector<int> where(n + 1, -1);
  for (int p = 0; p < n; ++p) {
    if (word[p] < 1 || word[p] > n || where[word[p]] != -1) throw std::invalid_argument("inverse_descents: not a permutation");
    where[word[p]] = p;
  }
  std::vector<int> d;
  for (int i = 1; i < n; ++i)
    if (where[i + 1] < where[i]) d.push_back(i);
  return d;
}

}  // namespace osprings
