#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qecc/errors.hpp"

namespace qecc {

// Dense GF(2) matrix with rows packed into 64-bit words. Sized for
// classical-code work (parity checks, duality, CSS compatibility), not for
// asymptotics: elimination is plain Gaussian on packed words.
class BinaryMatrix {
 public:
  BinaryMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows),
        cols_(cols),
        wpr_((cols + 63) / 64),
        bits_(rows * ((cols + 63) / 64), 0) {}

  static BinaryMatrix identity(std::size_t n) {
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  static BinaryMatrix from_strings(std::initializer_list<std::string_view> rows) {
    std::string text;
    for (auto r : rows) {
      text.append(r);
      text.push_back('\n');
    }
    return parse(text);
  }

  // One row per line, characters '0'/'1', optional spaces, '#' comments.
  // An all-comment or empty text yields a 0x0 matrix.
  static BinaryMatrix parse(std::string_view text) {
    std::vector<std::string> row_strings;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      start = end + 1;
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      std::string row;
      for (char c : line) {
        if (c == '0' || c == '1') {
          row.push_back(c);
        } else if (c != ' ' && c != '\t' && c != '\r') {
          throw parse_error(std::string("invalid character '") + c +
                            "' in matrix row on line " +
                            std::to_string(line_no));
        }
      }
      if (!row.empty()) row_strings.push_back(std::move(row));
      if (end == text.size()) break;
    }
    if (row_strings.empty()) return BinaryMatrix(0, 0);
    const std::size_t cols = row_strings[0].size();
    for (std::size_t r = 1; r < row_strings.size(); ++r) {
      if (row_strings[r].size() != cols) {
        throw parse_error("matrix rows have inconsistent widths (" +
                          std::to_string(cols) + " vs " +
                          std::to_string(row_strings[r].size()) + ")");
      }
    }
    BinaryMatrix m(row_strings.size(), cols);
    for (std::size_t r = 0; r < row_strings.size(); ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (row_strings[r][c] == '1') m.set(r, c, true);
      }
    }
    return m;
  }

  static BinaryMatrix load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open matrix file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1ULL;
  }

  void set(std::size_t r, std::size_t c, bool v) {
    auto& w = bits_[r * wpr_ + (c >> 6)];
    if (v) {
      w |= 1ULL << (c & 63);
    } else {
      w &= ~(1ULL << (c & 63));
    }
  }

  bool is_zero() const {
    for (auto w : bits_) {
      if (w) return false;
    }
    return true;
  }

  BinaryMatrix transposed() const {
    BinaryMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (get(r, c)) out.set(c, r, true);
      }
    }
    return out;
  }

  // GF(2) product; inner dimensions must agree.
  BinaryMatrix multiplied(const BinaryMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
      throw dimension_error("GF(2) product of " + shape_string() + " by " +
                            rhs.shape_string());
    }
    const BinaryMatrix rt = rhs.transposed();
    BinaryMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        int acc = 0;
        for (std::size_t w = 0; w < wpr_; ++w) {
          acc ^= std::popcount(bits_[r * wpr_ + w] & rt.bits_[c * wpr_ + w]);
        }
        if (acc & 1) out.set(r, c, true);
      }
    }
    return out;
  }

  std::size_t rank() const {
    std::vector<std::vector<std::uint64_t>> rows = row_copies();
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols_ && pivot_row < rows.size(); ++c) {
      std::size_t sel = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        if ((rows[r][c >> 6] >> (c & 63)) & 1ULL) {
          sel = r;
          break;
        }
      }
      if (sel == rows.size()) continue;
      std::swap(rows[pivot_row], rows[sel]);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r != pivot_row && ((rows[r][c >> 6] >> (c & 63)) & 1ULL)) {
          for (std::size_t w = 0; w < wpr_; ++w) rows[r][w] ^= rows[pivot_row][w];
        }
      }
      ++pivot_row;
    }
    return pivot_row;
  }

  // Basis of {v : M v = 0}, one length-cols 0/1 vector per free column.
  std::vector<std::vector<std::uint8_t>> null_space_basis() const {
    std::vector<std::vector<std::uint64_t>> rows = row_copies();
    std::vector<std::size_t> pivot_col_of_row;
    std::vector<bool> is_pivot(cols_, false);
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols_ && pivot_row < rows.size(); ++c) {
      std::size_t sel = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        if ((rows[r][c >> 6] >> (c & 63)) & 1ULL) {
          sel = r;
          break;
        }
      }
      if (sel == rows.size()) continue;
      std::swap(rows[pivot_row], rows[sel]);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r != pivot_row && ((rows[r][c >> 6] >> (c & 63)) & 1ULL)) {
          for (std::size_t w = 0; w < wpr_; ++w) rows[r][w] ^= rows[pivot_row][w];
        }
      }
      pivot_col_of_row.push_back(c);
      is_pivot[c] = true;
      ++pivot_row;
    }
    std::vector<std::vector<std::uint8_t>> basis;
    for (std::size_t free_c = 0; free_c < cols_; ++free_c) {
      if (is_pivot[free_c]) continue;
      std::vector<std::uint8_t> v(cols_, 0);
      v[free_c] = 1;
      for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
        if ((rows[r][free_c >> 6] >> (free_c & 63)) & 1ULL) {
          v[pivot_col_of_row[r]] = 1;
        }
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

  std::string str() const {
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out.push_back(get(r, c) ? '1' : '0');
      out.push_back('\n');
    }
    return out;
  }

  std::string shape_string() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

  bool operator==(const BinaryMatrix& rhs) const = default;

 private:
  std::vector<std::vector<std::uint64_t>> row_copies() const {
    std::vector<std::vector<std::uint64_t>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      out[r].assign(bits_.begin() + r * wpr_, bits_.begin() + (r + 1) * wpr_);
    }
    return out;
  }

  std::size_t rows_, cols_, wpr_;
  std::vector<std::uint64_t> bits_;
};

// H . e over GF(2); a zero result means "no detected error".
inline std::vector<std::uint8_t> parity_syndrome(
    const BinaryMatrix& h, const std::vector<std::uint8_t>& e) {
  if (e.size() != h.cols()) {
    throw dimension_error("error vector length " + std::to_string(e.size()) +
                          " does not match " + std::to_string(h.cols()) +
                          " columns");
  }
  std::vector<std::uint8_t> s(h.rows(), 0);
  for (std::size_t r = 0; r < h.rows(); ++r) {
    int acc = 0;
    for (std::size_t c = 0; c < h.cols(); ++c) {
      acc ^= (h.get(r, c) && e[c]) ? 1 : 0;
    }
    s[r] = static_cast<std::uint8_t>(acc);
  }
  return s;
}

// True iff H G = 0 over GF(2), i.e. every column of G is a codeword of H.
inline bool check_duality(const BinaryMatrix& h, const BinaryMatrix& g) {
  return h.multiplied(g).is_zero();
}

// True iff Hx Hz^T = 0 over GF(2); with Hx == Hz this is the
// self-orthogonality test required for CSS construction from one code.
inline bool css_compatible(const BinaryMatrix& hx, const BinaryMatrix& hz) {
  if (hx.cols() != hz.cols()) {
    throw dimension_error("CSS check needs equal column counts, got " +
                          std::to_string(hx.cols()) + " and " +
                          std::to_string(hz.cols()));
  }
  if (hx.rows() == 0 || hz.rows() == 0) return true;
  return hx.multiplied(hz.transposed()).is_zero();
}

// Parity check of the 3-bit repetition code.
inline BinaryMatrix repetition3_parity_check() {
  return BinaryMatrix::from_strings({"110", "011"});
}

// Parity check of the [7,4,3] Hamming code; column c is the binary
// expansion of c+1 read top-down.
inline BinaryMatrix hamming7_parity_check() {
  return BinaryMatrix::from_strings({"0001111", "0110011", "1010101"});
}

}  // namespace qecc
