#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qecc/errors.hpp"

namespace qecc {

// An n-qubit Pauli group element in binary symplectic form.
//
// The operator is i^phase_exp * prod_q X^{x_q} Z^{z_q} with X written to the
// left of Z on every qubit. Qubit 0 corresponds to the leftmost character of
// the string form, and Y is stored as x=z=1 with phase_exp incremented once
// (Y = iXZ). Values are immutable in practice: all algebra returns new
// operators, so they are safe to share between threads.
class PauliOperator {
 public:
  explicit PauliOperator(std::size_t num_qubits)
      : n_(num_qubits),
        x_(word_count(num_qubits), 0),
        z_(word_count(num_qubits), 0) {
    if (num_qubits == 0) {
      throw dimension_error("Pauli operator needs at least one qubit");
    }
  }

  static PauliOperator identity(std::size_t num_qubits) {
    return PauliOperator(num_qubits);
  }

  // Parses "[+|-][i]LETTERS" where LETTERS is a nonempty run of I,X,Y,Z.
  // Examples: "XIZ", "-Y", "+iXZ". The optional prefix multiplies by a
  // fourth root of unity; each Y additionally contributes one factor of i
  // to the canonical X-before-Z form.
  static PauliOperator from_string(std::string_view s) {
    std::size_t pos = 0;
    int prefix = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') prefix += 2;
      ++pos;
    }
    if (pos < s.size() && s[pos] == 'i') {
      prefix += 1;
      ++pos;
    }
    if (pos >= s.size()) {
      throw parse_error("Pauli string \"" + std::string(s) +
                        "\" has no I/X/Y/Z letters");
    }
    PauliOperator out(s.size() - pos);
    int phase = prefix;
    for (std::size_t q = 0; pos < s.size(); ++pos, ++q) {
      switch (s[pos]) {
        case 'I':
          break;
        case 'X':
          out.set_x(q, true);
          break;
        case 'Z':
          out.set_z(q, true);
          break;
        case 'Y':
          out.set_x(q, true);
          out.set_z(q, true);
          phase += 1;
          break;
        default:
          throw parse_error(std::string("invalid character '") + s[pos] +
                            "' at position " + std::to_string(pos) +
                            " in Pauli string \"" + std::string(s) + "\"");
      }
    }
    out.phase_ = phase & 3;
    return out;
  }

  // Single-qubit letter placed at `qubit`, identity elsewhere.
  static PauliOperator single(std::size_t num_qubits, std::size_t qubit,
                              char letter) {
    PauliOperator out(num_qubits);
    if (qubit >= num_qubits) {
      throw dimension_error("qubit index out of range");
    }
    switch (letter) {
      case 'I':
        break;
      case 'X':
        out.set_x(qubit, true);
        break;
      case 'Z':
        out.set_z(qubit, true);
        break;
      case 'Y':
        out.set_x(qubit, true);
        out.set_z(qubit, true);
        out.phase_ = 1;
        break;
      default:
        throw parse_error(std::string("invalid Pauli letter '") + letter +
                          "'");
    }
    return out;
  }

  std::size_t num_qubits() const { return n_; }
  int phase_exp() const { return phase_; }
  void set_phase_exp(int l) { phase_ = ((l % 4) + 4) & 3; }

  bool x_bit(std::size_t q) const {
    return (x_[q >> 6] >> (q & 63)) & 1ULL;
  }
  bool z_bit(std::size_t q) const {
    return (z_[q >> 6] >> (q & 63)) & 1ULL;
  }
  void set_x(std::size_t q, bool v) { set_bit(x_, q, v); }
  void set_z(std::size_t q, bool v) { set_bit(z_, q, v); }

  char letter_at(std::size_t q) const {
    const bool x = x_bit(q), z = z_bit(q);
    if (x && z) return 'Y';
    if (x) return 'X';
    if (z) return 'Z';
    return 'I';
  }

  // Exact group product this * rhs, phase tracked mod 4. Moving the right
  // factor's X block through the left factor's Z block flips sign once per
  // overlapping qubit.
  PauliOperator operator*(const PauliOperator& rhs) const {
    if (n_ != rhs.n_) {
      throw dimension_error("Pauli product on " + std::to_string(n_) +
                            " vs " + std::to_string(rhs.n_) + " qubits");
    }
    PauliOperator out(n_);
    int reorder = 0;
    for (std::size_t w = 0; w < x_.size(); ++w) {
      reorder += std::popcount(z_[w] & rhs.x_[w]);
      out.x_[w] = x_[w] ^ rhs.x_[w];
      out.z_[w] = z_[w] ^ rhs.z_[w];
    }
    out.phase_ = (phase_ + rhs.phase_ + 2 * reorder) & 3;
    return out;
  }

  PauliOperator adjoint() const {
    PauliOperator out = *this;
    out.phase_ = ((-phase_ + 2 * static_cast<int>(y_count())) % 4 + 4) & 3;
    return out;
  }

  // True iff the symplectic inner product x1.z2 + z1.x2 vanishes mod 2.
  bool commutes_with(const PauliOperator& rhs) const {
    if (n_ != rhs.n_) {
      throw dimension_error("commutation check on " + std::to_string(n_) +
                            " vs " + std::to_string(rhs.n_) + " qubits");
    }
    int acc = 0;
    for (std::size_t w = 0; w < x_.size(); ++w) {
      acc ^= std::popcount(x_[w] & rhs.z_[w]) ^
             std::popcount(z_[w] & rhs.x_[w]);
    }
    return (acc & 1) == 0;
  }

  // Number of qubits carrying a non-identity letter.
  std::size_t weight() const {
    std::size_t acc = 0;
    for (std::size_t w = 0; w < x_.size(); ++w) {
      acc += std::popcount(x_[w] | z_[w]);
    }
    return acc;
  }

  std::size_t y_count() const {
    std::size_t acc = 0;
    for (std::size_t w = 0; w < x_.size(); ++w) {
      acc += std::popcount(x_[w] & z_[w]);
    }
    return acc;
  }

  bool is_phase_only() const {
    for (std::size_t w = 0; w < x_.size(); ++w) {
      if (x_[w] | z_[w]) return false;
    }
    return true;
  }

  bool is_identity() const { return phase_ == 0 && is_phase_only(); }

  // Hermitian iff phase_exp and the Y count have the same parity; only such
  // operators have +-1 eigenvalues and square to +I.
  bool is_hermitian() const {
    return ((phase_ - static_cast<int>(y_count())) & 1) == 0;
  }

  // Renders back to the from_string format; the phase prefix is omitted
  // when the displayed phase is +1 (e.g. "Y" rather than "+iY").
  std::string str() const {
    const int disp =
        ((phase_ - static_cast<int>(y_count())) % 4 + 4) & 3;
    static constexpr const char* kPrefix[4] = {"", "i", "-", "-i"};
    std::string out = kPrefix[disp];
    out.reserve(out.size() + n_);
    for (std::size_t q = 0; q < n_; ++q) out.push_back(letter_at(q));
    return out;
  }

  bool operator==(const PauliOperator& rhs) const = default;

  // Deterministic total order (qubit count, bits, phase) for sorted sets.
  bool operator<(const PauliOperator& rhs) const {
    if (n_ != rhs.n_) return n_ < rhs.n_;
    if (x_ != rhs.x_) return x_ < rhs.x_;
    if (z_ != rhs.z_) return z_ < rhs.z_;
    return phase_ < rhs.phase_;
  }

  std::size_t hash_value() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ (n_ * 0xff51afd7ed558ccdULL);
    auto mix = [&h](std::uint64_t v) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (auto w : x_) mix(w);
    for (auto w : z_) mix(w);
    mix(static_cast<std::uint64_t>(phase_));
    return static_cast<std::size_t>(h);
  }

  const std::vector<std::uint64_t>& x_words() const { return x_; }
  const std::vector<std::uint64_t>& z_words() const { return z_; }

 private:
  static std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

  static void set_bit(std::vector<std::uint64_t>& words, std::size_t q,
                      bool v) {
    if (v) {
      words[q >> 6] |= 1ULL << (q & 63);
    } else {
      words[q >> 6] &= ~(1ULL << (q & 63));
    }
  }

  std::size_t n_;
  int phase_ = 0;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
};

struct PauliHash {
  std::size_t operator()(const PauliOperator& p) const {
    return p.hash_value();
  }
};

}  // namespace qecc
