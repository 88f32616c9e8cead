#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qecc/binary_matrix.hpp"
#include "qecc/errors.hpp"
#include "qecc/pauli.hpp"

namespace qecc {

// Error syndrome: bit i is 1 iff the error anticommutes with generator i
// (measurement outcome -1). Bit order follows the generator list.
struct Syndrome {
  std::vector<std::uint8_t> bits;

  bool trivial() const {
    return std::all_of(bits.begin(), bits.end(),
                       [](std::uint8_t b) { return b == 0; });
  }

  // Packs bits with bits[0] as the most significant, so numeric order
  // matches lexicographic order of bit_string().
  std::uint32_t key() const {
    if (bits.size() > 32) {
      throw capacity_error("syndrome key limited to 32 generators");
    }
    std::uint32_t k = 0;
    for (auto b : bits) k = (k << 1) | (b ? 1u : 0u);
    return k;
  }

  std::string bit_string() const {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
  }

  // Paper convention: +1 for commuting generators, -1 for anticommuting.
  std::string outcome_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (i) s.push_back(',');
      s += bits[i] ? "-1" : "+1";
    }
    s.push_back(')');
    return s;
  }

  bool operator==(const Syndrome&) const = default;
};

// Anticommuting logical pair (X-bar, Z-bar) for one encoded qubit.
struct LogicalPair {
  PauliOperator x;
  PauliOperator z;
};

// A validated stabilizer code: independent, pairwise commuting generators
// whose group excludes -I. logical_pairs may be empty until computed (see
// logical_operators); cached_distance is set for catalog codes.
struct StabilizerCode {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<PauliOperator> generators;
  std::vector<LogicalPair> logical_pairs;
  std::string name;
  std::optional<int> cached_distance;
  bool had_dependent_generators = false;

  std::size_t num_generators() const { return generators.size(); }
};

namespace detail {

// Phase-exact row-echelon basis of Pauli operators over the symplectic
// GF(2) vector space. Bit order: x bits of qubits 0..n-1, then z bits.
// Reduction multiplies actual group elements, so dependencies come out as
// +I or -I and membership queries can distinguish the sign.
class PauliRowBasis {
 public:
  enum class AddResult { independent, dependent_identity, dependent_minus };

  explicit PauliRowBasis(std::size_t n) : n_(n) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t leading_bit(const PauliOperator& p) const {
    for (std::size_t q = 0; q < n_; ++q) {
      if (p.x_bit(q)) return q;
    }
    for (std::size_t q = 0; q < n_; ++q) {
      if (p.z_bit(q)) return n_ + q;
    }
    return npos;
  }

  PauliOperator reduce(PauliOperator p) const {
    for (const auto& [bit, row] : pivots_) {
      if (bit_at(p, bit)) p = p * row;
    }
    return p;
  }

  AddResult add(const PauliOperator& p) {
    PauliOperator h = reduce(p);
    if (h.is_phase_only()) {
      return (h.phase_exp() == 0) ? AddResult::dependent_identity
                                  : AddResult::dependent_minus;
    }
    const std::size_t lead = leading_bit(h);
    auto it = std::lower_bound(
        pivots_.begin(), pivots_.end(), lead,
        [](const auto& a, std::size_t b) { return a.first < b; });
    pivots_.insert(it, {lead, std::move(h)});
    return AddResult::independent;
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  bool bit_at(const PauliOperator& p, std::size_t bit) const {
    return bit < n_ ? p.x_bit(bit) : p.z_bit(bit - n_);
  }

  std::size_t n_;
  // Sorted by leading bit; each row's leading bit is its first set bit, so
  // in-order reduction clears pivot positions monotonically.
  std::vector<std::pair<std::size_t, PauliOperator>> pivots_;
};

inline PauliRowBasis generator_basis(const StabilizerCode& code) {
  PauliRowBasis basis(code.n);
  for (const auto& g : code.generators) basis.add(g);
  return basis;
}

// Visits weight-w operators over the given letter alphabet in
// lexicographic (positions ascending, letters in alphabet order) order.
// The visitor returns true to stop early; the function reports whether it
// was stopped.
template <class Visitor>
bool for_each_error_of_weight(std::size_t n, int w, std::string_view alphabet,
                              Visitor&& visit) {
  if (w == 0) {
    return visit(PauliOperator::identity(n));
  }
  if (w < 0 || static_cast<std::size_t>(w) > n) return false;
  std::vector<std::size_t> pos(w);
  for (int i = 0; i < w; ++i) pos[i] = i;
  std::vector<std::size_t> letter(w, 0);
  while (true) {
    // All letter assignments for the current position set, odometer order.
    std::fill(letter.begin(), letter.end(), 0);
    while (true) {
      PauliOperator e(n);
      int phase = 0;
      for (int i = 0; i < w; ++i) {
        const char c = alphabet[letter[i]];
        if (c == 'X' || c == 'Y') e.set_x(pos[i], true);
        if (c == 'Z' || c == 'Y') e.set_z(pos[i], true);
        if (c == 'Y') ++phase;
      }
      e.set_phase_exp(phase);
      if (visit(e)) return true;
      int d = w - 1;
      while (d >= 0 && letter[d] + 1 == alphabet.size()) {
        letter[d] = 0;
        --d;
      }
      if (d < 0) break;
      ++letter[d];
    }
    // Next position combination.
    int i = w - 1;
    while (i >= 0 && pos[i] == n - static_cast<std::size_t>(w - i)) --i;
    if (i < 0) break;
    ++pos[i];
    for (int j = i + 1; j < w; ++j) pos[j] = pos[j - 1] + 1;
  }
  return false;
}

}  // namespace detail

// Checks commutativity, independence and the -I exclusion, returning a code
// with k = n - rank. Dependent generators are dropped with a warning flag
// rather than rejected; logical pairs and distance are left unset.
inline StabilizerCode validate_generators(
    const std::vector<PauliOperator>& gens) {
  if (gens.empty()) {
    throw validation_error("at least one stabilizer generator is required");
  }
  const std::size_t n = gens[0].num_qubits();
  for (const auto& g : gens) {
    if (g.num_qubits() != n) {
      throw dimension_error("generators mix qubit counts " +
                            std::to_string(n) + " and " +
                            std::to_string(g.num_qubits()));
    }
    if (!g.is_hermitian()) {
      throw validation_error("generator " + g.str() +
                             " squares to -I, so the generated group "
                             "contains -I");
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!gens[i].commutes_with(gens[j])) {
        throw validation_error("generators " + gens[i].str() + " and " +
                               gens[j].str() + " anticommute");
      }
    }
  }
  StabilizerCode code;
  code.n = n;
  detail::PauliRowBasis basis(n);
  for (const auto& g : gens) {
    switch (basis.add(g)) {
      case detail::PauliRowBasis::AddResult::independent:
        code.generators.push_back(g);
        break;
      case detail::PauliRowBasis::AddResult::dependent_identity:
        code.had_dependent_generators = true;
        break;
      case detail::PauliRowBasis::AddResult::dependent_minus:
        throw validation_error(
            "a product of the generators equals -I (offending generator: " +
            g.str() + ")");
    }
  }
  code.k = n - code.generators.size();
  return code;
}

// All 2^r products of the generators, exact phases included.
inline std::vector<PauliOperator> enumerate_group(const StabilizerCode& code) {
  if (code.num_generators() > 20) {
    throw capacity_error("group enumeration limited to 20 generators, code has " +
                         std::to_string(code.num_generators()));
  }
  std::vector<PauliOperator> group{PauliOperator::identity(code.n)};
  for (const auto& g : code.generators) {
    const std::size_t count = group.size();
    for (std::size_t i = 0; i < count; ++i) {
      group.push_back(group[i] * g);
    }
  }
  return group;
}

inline Syndrome syndrome_of(const StabilizerCode& code,
                            const PauliOperator& error) {
  if (error.num_qubits() != code.n) {
    throw dimension_error("error acts on " +
                          std::to_string(error.num_qubits()) +
                          " qubits, code has " + std::to_string(code.n));
  }
  Syndrome s;
  s.bits.reserve(code.num_generators());
  for (const auto& g : code.generators) {
    s.bits.push_back(error.commutes_with(g) ? 0 : 1);
  }
  return s;
}

inline bool in_normalizer(const StabilizerCode& code, const PauliOperator& p) {
  for (const auto& g : code.generators) {
    if (!p.commutes_with(g)) return false;
  }
  return true;
}

// Membership in the stabilizer group itself (exact, phase included).
inline bool in_stabilizer(const StabilizerCode& code, const PauliOperator& p) {
  const PauliOperator rem = detail::generator_basis(code).reduce(p);
  return rem.is_identity();
}

// Membership up to a global phase: the symplectic part lies in the
// generator row space.
inline bool in_stabilizer_up_to_phase(const StabilizerCode& code,
                                      const PauliOperator& p) {
  return detail::generator_basis(code).reduce(p).is_phase_only();
}

// Builds the CSS code whose X-type generators follow the rows of Hx and
// Z-type generators the rows of Hz; requires Hx Hz^T = 0. Either matrix may
// have zero rows (pass BinaryMatrix(0, n) or a 0x0 placeholder).
inline StabilizerCode css_from_parity_checks(const BinaryMatrix& hx,
                                             const BinaryMatrix& hz) {
  std::size_t n = 0;
  if (hx.rows() > 0 && hz.rows() > 0) {
    if (hx.cols() != hz.cols()) {
      throw dimension_error("Hx has " + std::to_string(hx.cols()) +
                            " columns but Hz has " +
                            std::to_string(hz.cols()));
    }
    n = hx.cols();
  } else if (hx.rows() > 0) {
    n = hx.cols();
  } else if (hz.rows() > 0) {
    n = hz.cols();
  } else {
    throw validation_error("CSS construction needs at least one check row");
  }
  for (std::size_t i = 0; i < hx.rows(); ++i) {
    for (std::size_t j = 0; j < hz.rows(); ++j) {
      int overlap = 0;
      for (std::size_t c = 0; c < n; ++c) {
        overlap ^= (hx.get(i, c) && hz.get(j, c)) ? 1 : 0;
      }
      if (overlap) {
        throw validation_error(
            "CSS compatibility fails: Hx row " + std::to_string(i) +
            " and Hz row " + std::to_string(j) +
            " overlap on an odd number of columns");
      }
    }
  }
  std::vector<PauliOperator> gens;
  for (std::size_t i = 0; i < hx.rows(); ++i) {
    PauliOperator g(n);
    for (std::size_t c = 0; c < n; ++c) {
      if (hx.get(i, c)) g.set_x(c, true);
    }
    gens.push_back(g);
  }
  for (std::size_t i = 0; i < hz.rows(); ++i) {
    PauliOperator g(n);
    for (std::size_t c = 0; c < n; ++c) {
      if (hz.get(i, c)) g.set_z(c, true);
    }
    gens.push_back(g);
  }
  return validate_generators(gens);
}

// Minimum weight of a Pauli operator that commutes with every generator but
// lies outside the stabilizer group (normalizer minus stabilizer, which is
// what makes degenerate codes like Shor's come out as distance 3). Returns
// nullopt when no such operator of weight <= max_weight_cap exists, i.e.
// d >= cap + 1.
inline std::optional<int> distance(const StabilizerCode& code,
                                   int max_weight_cap = 4) {
  const detail::PauliRowBasis basis = detail::generator_basis(code);
  for (int w = 1; w <= max_weight_cap; ++w) {
    bool found = detail::for_each_error_of_weight(
        code.n, w, "XYZ", [&](const PauliOperator& e) {
          return in_normalizer(code, e) && !basis.reduce(e).is_phase_only();
        });
    if (found) return w;
  }
  return std::nullopt;
}

// Canonical logical pairs from symplectic Gaussian elimination: a basis of
// the normalizer kernel is reduced modulo the stabilizer row space and then
// paired by symplectic Gram-Schmidt. Each pair anticommutes internally and
// commutes with the generators and all other pairs.
inline std::vector<LogicalPair> logical_operators(const StabilizerCode& code) {
  const std::size_t n = code.n;
  const std::size_t r = code.num_generators();
  if (code.k == 0) return {};

  // v = (vx|vz) commutes with g iff (g.z|g.x) . v = 0.
  BinaryMatrix m(r, 2 * n);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t q = 0; q < n; ++q) {
      if (code.generators[i].z_bit(q)) m.set(i, q, true);
      if (code.generators[i].x_bit(q)) m.set(i, n + q, true);
    }
  }
  detail::PauliRowBasis quotient(n);
  for (const auto& g : code.generators) quotient.add(g);

  std::vector<PauliOperator> reps;
  for (const auto& v : m.null_space_basis()) {
    PauliOperator p(n);
    for (std::size_t q = 0; q < n; ++q) {
      if (v[q]) p.set_x(q, true);
      if (v[n + q]) p.set_z(q, true);
    }
    p.set_phase_exp(static_cast<int>(p.y_count()));
    PauliOperator rem = quotient.reduce(p);
    if (rem.is_phase_only()) continue;
    quotient.add(rem);
    rem.set_phase_exp(static_cast<int>(rem.y_count()));
    reps.push_back(std::move(rem));
  }
  if (reps.size() != 2 * code.k) {
    throw validation_error("normalizer quotient has unexpected dimension " +
                           std::to_string(reps.size()) + " (expected " +
                           std::to_string(2 * code.k) + ")");
  }

  std::vector<LogicalPair> pairs;
  std::vector<PauliOperator> pool(reps.begin(), reps.end());
  while (!pool.empty()) {
    PauliOperator a = pool.front();
    pool.erase(pool.begin());
    std::size_t partner = pool.size();
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (!a.commutes_with(pool[j])) {
        partner = j;
        break;
      }
    }
    if (partner == pool.size()) {
      throw validation_error(
          "symplectic pairing failed; generators may be inconsistent");
    }
    PauliOperator b = pool[partner];
    pool.erase(pool.begin() + partner);
    for (auto& u : pool) {
      if (!u.commutes_with(b)) u = u * a;
      if (!u.commutes_with(a)) u = u * b;
    }
    a.set_phase_exp(static_cast<int>(a.y_count()));
    b.set_phase_exp(static_cast<int>(b.y_count()));
    // Prefer an X-bar that actually carries X content.
    const bool a_z_only =
        std::all_of(a.x_words().begin(), a.x_words().end(),
                    [](std::uint64_t w) { return w == 0; });
    const bool b_z_only =
        std::all_of(b.x_words().begin(), b.x_words().end(),
                    [](std::uint64_t w) { return w == 0; });
    if (a_z_only && !b_z_only) std::swap(a, b);
    pairs.push_back({std::move(a), std::move(b)});
  }
  return pairs;
}

struct DegeneracyReport {
  bool degenerate = false;
  std::optional<std::pair<PauliOperator, PauliOperator>> witness;
};

// Looks for two distinct errors of weight <= weight_limit that differ by a
// stabilizer element (same syndrome, same corrective action).
inline DegeneracyReport is_degenerate(const StabilizerCode& code,
                                      int weight_limit) {
  const detail::PauliRowBasis basis = detail::generator_basis(code);
  std::map<std::string, std::vector<PauliOperator>> buckets;
  DegeneracyReport report;
  for (int w = 0; w <= weight_limit && !report.degenerate; ++w) {
    detail::for_each_error_of_weight(
        code.n, w, "XYZ", [&](const PauliOperator& e) {
          auto& bucket = buckets[syndrome_of(code, e).bit_string()];
          for (const auto& prior : bucket) {
            if (basis.reduce(prior * e).is_phase_only()) {
              report.degenerate = true;
              report.witness = {prior, e};
              return true;
            }
          }
          bucket.push_back(e);
          return false;
        });
  }
  return report;
}

// Default limit floor((d-1)/2), the full correctable-error set. Uses the
// cached distance when available, otherwise searches under the default cap.
inline DegeneracyReport is_degenerate(const StabilizerCode& code) {
  std::optional<int> d = code.cached_distance;
  if (!d) d = distance(code);
  if (!d) {
    throw capacity_error(
        "distance exceeds the default search cap; pass weight_limit "
        "explicitly");
  }
  return is_degenerate(code, (*d - 1) / 2);
}

struct PerfectCodeBound {
  bool holds = false;      // 3n + 1 <= 2^(n-k)
  bool saturated = false;  // equality, the "perfect" case
};

// Syndrome-counting bound: n physical qubits need 3n + 1 distinguishable
// syndromes to correct an arbitrary single-qubit error.
inline PerfectCodeBound perfect_code_bound(int n, int k) {
  if (n <= k || k < 0) {
    throw std::domain_error("perfect-code bound needs n > k >= 0");
  }
  PerfectCodeBound out;
  const int r = n - k;
  if (r >= 63) {
    out.holds = true;
    return out;
  }
  const std::uint64_t lhs = 3ULL * static_cast<std::uint64_t>(n) + 1ULL;
  const std::uint64_t rhs = 1ULL << r;
  out.holds = lhs <= rhs;
  out.saturated = lhs == rhs;
  return out;
}

// One Pauli string per line, '#' comments (full-line or trailing), blank
// lines skipped.
inline std::vector<PauliOperator> parse_pauli_lines(std::string_view text) {
  std::vector<PauliOperator> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    const bool at_end = end == text.size();
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t' ||
                             line.front() == '\r')) {
      line.remove_prefix(1);
    }
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                             line.back() == '\r')) {
      line.remove_suffix(1);
    }
    if (!line.empty()) out.push_back(PauliOperator::from_string(line));
    if (at_end) break;
  }
  return out;
}

inline std::vector<PauliOperator> load_pauli_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open Pauli file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_pauli_lines(ss.str());
}

}  // namespace qecc
