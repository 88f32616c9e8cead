#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qecc/catalog.hpp"
#include "qecc/decoder.hpp"
#include "qecc/errors.hpp"
#include "qecc/pauli.hpp"
#include "qecc/rng.hpp"
#include "qecc/stabilizer.hpp"

// Small-n exact state-vector simulator. This is the ground-truth oracle for
// the symbolic machinery: everything here is O(2^n) or worse and guarded at
// kDenseQubitGuard qubits, enough for the whole code catalog.

namespace qecc {

using Complex = std::complex<double>;

inline constexpr std::size_t kDenseQubitGuard = 12;
inline constexpr double kKlResidualTol = 1e-8;
inline constexpr double kKlHermitianTol = 1e-10;

// Dense amplitude vector over 2^n basis states. Basis ordering follows the
// ket notation |i_1 i_2 ... i_n>: qubit 0 (leftmost) is the most
// significant bit of the index.
class StateVector {
 public:
  explicit StateVector(std::size_t n) : n_(check_guard(n)) {
    amps_ = Eigen::VectorXcd::Zero(1LL << n);
    amps_(0) = 1.0;
  }

  static StateVector basis_state(std::size_t n, std::uint64_t index) {
    StateVector s(n);
    if (index >= s.dim()) throw dimension_error("basis index out of range");
    s.amps_(0) = 0.0;
    s.amps_(static_cast<Eigen::Index>(index)) = 1.0;
    return s;
  }

  static StateVector from_amplitudes(std::size_t n, Eigen::VectorXcd amps) {
    StateVector s(n);
    if (amps.size() != static_cast<Eigen::Index>(s.dim())) {
      throw dimension_error("amplitude vector has wrong length");
    }
    s.amps_ = std::move(amps);
    return s;
  }

  std::size_t num_qubits() const { return n_; }
  std::size_t dim() const { return 1ULL << n_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Eigen::VectorXcd& amplitudes() { return amps_; }

  double norm() const { return amps_.norm(); }

  StateVector normalized() const {
    const double nrm = norm();
    if (nrm < 1e-14) throw validation_error("cannot normalize a null state");
    StateVector out = *this;
    out.amps_ /= nrm;
    return out;
  }

  Complex inner_product(const StateVector& other) const {
    if (n_ != other.n_) throw dimension_error("state qubit counts differ");
    return amps_.dot(other.amps_);  // conjugates *this
  }

  // |<this|other>|, which ignores the unobservable global phase.
  double fidelity_with(const StateVector& other) const {
    return std::abs(inner_product(other));
  }

 private:
  static std::size_t check_guard(std::size_t n) {
    if (n == 0) throw dimension_error("state needs at least one qubit");
    if (n > kDenseQubitGuard) {
      throw capacity_error("dense oracle guarded at " +
                           std::to_string(kDenseQubitGuard) +
                           " qubits, requested " + std::to_string(n));
    }
    return n;
  }

  std::size_t n_;
  Eigen::VectorXcd amps_;
};

enum class GateKind { H, S, T, X, Y, Z, CNOT, CZ };

struct GateOp {
  GateKind kind;
  int target0 = 0;
  int target1 = -1;

  static GateOp single(GateKind kind, int q) { return {kind, q, -1}; }
  static GateOp cnot(int control, int target) {
    return {GateKind::CNOT, control, target};
  }
  static GateOp cz(int a, int b) { return {GateKind::CZ, a, b}; }

  int arity() const {
    return (kind == GateKind::CNOT || kind == GateKind::CZ) ? 2 : 1;
  }
};

inline StateVector apply_gate(const StateVector& state, const GateOp& g) {
  const std::size_t n = state.num_qubits();
  auto check_index = [&](int q) {
    if (q < 0 || static_cast<std::size_t>(q) >= n) {
      throw dimension_error("gate target " + std::to_string(q) +
                            " out of range for " + std::to_string(n) +
                            " qubits");
    }
  };
  check_index(g.target0);
  if (g.arity() == 2) {
    check_index(g.target1);
    if (g.target0 == g.target1) {
      throw dimension_error("two-qubit gate needs distinct targets");
    }
  }
  StateVector out = state;
  auto& a = out.amplitudes();
  const std::uint64_t dim = state.dim();
  const std::uint64_t m0 = 1ULL << (n - 1 - g.target0);
  static const Complex kI(0.0, 1.0);

  switch (g.kind) {
    case GateKind::CNOT: {
      const std::uint64_t mt = 1ULL << (n - 1 - g.target1);
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & m0) && !(i & mt)) std::swap(a(i), a(i | mt));
      }
      return out;
    }
    case GateKind::CZ: {
      const std::uint64_t mt = 1ULL << (n - 1 - g.target1);
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & m0) && (i & mt)) a(i) = -a(i);
      }
      return out;
    }
    default:
      break;
  }
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & m0) continue;
    const std::uint64_t j = i | m0;
    const Complex lo = a(i), hi = a(j);
    switch (g.kind) {
      case GateKind::H:
        a(i) = (lo + hi) * M_SQRT1_2;
        a(j) = (lo - hi) * M_SQRT1_2;
        break;
      case GateKind::S:
        a(j) = kI * hi;
        break;
      case GateKind::T:
        a(j) = Complex(M_SQRT1_2, M_SQRT1_2) * hi;
        break;
      case GateKind::X:
        a(i) = hi;
        a(j) = lo;
        break;
      case GateKind::Y:
        a(i) = -kI * hi;
        a(j) = kI * lo;
        break;
      case GateKind::Z:
        a(j) = -hi;
        break;
      default:
        break;
    }
  }
  return out;
}

// Exact action including the global phase i^phase_exp:
// P|b> = i^l (-1)^(z.b) |b xor x>.
inline StateVector apply_pauli(const StateVector& state,
                               const PauliOperator& p) {
  const std::size_t n = state.num_qubits();
  if (p.num_qubits() != n) {
    throw dimension_error("Pauli acts on " + std::to_string(p.num_qubits()) +
                          " qubits, state has " + std::to_string(n));
  }
  std::uint64_t xmask = 0, zmask = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (p.x_bit(q)) xmask |= 1ULL << (n - 1 - q);
    if (p.z_bit(q)) zmask |= 1ULL << (n - 1 - q);
  }
  static const Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex global = kPhases[p.phase_exp() & 3];
  StateVector out = state;
  auto& dst = out.amplitudes();
  const auto& src = state.amplitudes();
  for (std::uint64_t b = 0; b < state.dim(); ++b) {
    const int sign = std::popcount(b & zmask) & 1;
    dst(b ^ xmask) = (sign ? -global : global) * src(b);
  }
  return out;
}

inline Eigen::MatrixXcd pauli_matrix(const PauliOperator& p) {
  if (p.num_qubits() > kDenseQubitGuard) {
    throw capacity_error("dense Pauli matrix guarded at " +
                         std::to_string(kDenseQubitGuard) + " qubits");
  }
  const std::uint64_t dim = 1ULL << p.num_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::uint64_t b = 0; b < dim; ++b) {
    const StateVector col =
        apply_pauli(StateVector::basis_state(p.num_qubits(), b), p);
    m.col(b) = col.amplitudes();
  }
  return m;
}

namespace detail {

// (I + g)/2 applied in sequence for every generator; commuting projectors,
// so the order is irrelevant.
inline StateVector project_on_codespace(const StabilizerCode& code,
                                        StateVector v) {
  for (const auto& g : code.generators) {
    const StateVector gv = apply_pauli(v, g);
    v = StateVector::from_amplitudes(code.n,
                                     0.5 * (v.amplitudes() + gv.amplitudes()));
  }
  return v;
}

// Multiplies by a unit phase so the first nonzero amplitude is real and
// positive; fixes the representative of a physically equivalent family.
inline StateVector canonical_phase(StateVector v) {
  auto& a = v.amplitudes();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (std::abs(a(i)) > 1e-10) {
      a *= std::conj(a(i)) / std::abs(a(i));
      return v;
    }
  }
  return v;
}

}  // namespace detail

// Projector onto the joint +1 eigenspace of the generators; Hermitian,
// idempotent, trace 2^k.
inline Eigen::MatrixXcd codespace_projector(const StabilizerCode& code) {
  if (code.n > kDenseQubitGuard) {
    throw capacity_error("dense projector guarded at " +
                         std::to_string(kDenseQubitGuard) + " qubits");
  }
  const std::uint64_t dim = 1ULL << code.n;
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::uint64_t b = 0; b < dim; ++b) {
    p.col(b) = detail::project_on_codespace(
                   code, StateVector::basis_state(code.n, b))
                   .amplitudes();
  }
  return p;
}

// Encoded basis for a k=1 code: |0_L> is the +1 eigenvector of the stored
// logical Z within the code space (phase-canonicalized), |1_L> = X-bar|0_L>.
inline std::pair<StateVector, StateVector> logical_basis(
    const StabilizerCode& code) {
  if (code.k != 1) {
    throw validation_error("logical basis construction requires k = 1");
  }
  StabilizerCode c = code;
  if (c.logical_pairs.empty()) c.logical_pairs = logical_operators(code);
  const PauliOperator& xbar = c.logical_pairs[0].x;
  const PauliOperator& zbar = c.logical_pairs[0].z;
  for (std::uint64_t b = 0; b < (1ULL << code.n); ++b) {
    StateVector v = detail::project_on_codespace(
        code, StateVector::basis_state(code.n, b));
    const StateVector zv = apply_pauli(v, zbar);
    v = StateVector::from_amplitudes(code.n,
                                     0.5 * (v.amplitudes() + zv.amplitudes()));
    if (v.norm() > 1e-6) {
      const StateVector zero = detail::canonical_phase(v.normalized());
      return {zero, apply_pauli(zero, xbar)};
    }
  }
  throw validation_error("code space projection is empty");
}

inline StateVector encode(const StabilizerCode& code, Complex alpha,
                          Complex beta) {
  const double norm2 = std::norm(alpha) + std::norm(beta);
  if (std::abs(norm2 - 1.0) > 1e-10) {
    throw std::invalid_argument("input state (alpha, beta) is not normalized");
  }
  const auto [zero, one] = logical_basis(code);
  return StateVector::from_amplitudes(
      code.n, alpha * zero.amplitudes() + beta * one.amplitudes());
}

inline StateVector encode(const std::string& code_name, Complex alpha,
                          Complex beta) {
  return encode(catalog(code_name), alpha, beta);
}

struct MeasurementResult {
  int outcome = 0;  // +1 or -1
  StateVector post_state;
};

// Projective measurement of a Hermitian Pauli observable with Born-rule
// sampling; the post state is the normalized projection onto the observed
// eigenspace.
inline MeasurementResult measure_stabilizer(const StateVector& state,
                                            const PauliOperator& g, Rng& rng) {
  if (!g.is_hermitian()) {
    throw std::domain_error("measured operator " + g.str() +
                            " is not Hermitian");
  }
  if (g.num_qubits() != state.num_qubits()) {
    throw dimension_error("observable and state qubit counts differ");
  }
  const StateVector gs = apply_pauli(state, g);
  const Eigen::VectorXcd plus = 0.5 * (state.amplitudes() + gs.amplitudes());
  const Eigen::VectorXcd minus = 0.5 * (state.amplitudes() - gs.amplitudes());
  const double p_plus = plus.squaredNorm();
  const double p_minus = minus.squaredNorm();
  bool take_plus = rng.uniform01() < p_plus;
  if (take_plus && p_plus < 1e-24) take_plus = false;
  if (!take_plus && p_minus < 1e-24) take_plus = true;
  const Eigen::VectorXcd& chosen = take_plus ? plus : minus;
  return {take_plus ? +1 : -1,
          StateVector::from_amplitudes(state.num_qubits(),
                                       chosen / chosen.norm())};
}

inline MeasurementResult measure_stabilizer(const StateVector& state,
                                            const PauliOperator& g,
                                            std::uint64_t seed) {
  Rng rng(seed);
  return measure_stabilizer(state, g, rng);
}

struct KlReport {
  Eigen::MatrixXcd alpha;
  double hermitian_deviation = 0.0;
  double projection_residual = 0.0;
  bool correctable = false;
};

namespace detail {

// Orthonormal basis of the code space, built by projecting computational
// basis states and Gram-Schmidt filtering until 2^k vectors survive.
inline std::vector<StateVector> codespace_basis(const StabilizerCode& code) {
  const std::size_t want = 1ULL << code.k;
  std::vector<StateVector> basis;
  for (std::uint64_t b = 0; b < (1ULL << code.n) && basis.size() < want; ++b) {
    StateVector v =
        project_on_codespace(code, StateVector::basis_state(code.n, b));
    Eigen::VectorXcd amps = v.amplitudes();
    for (const auto& prev : basis) {
      amps -= prev.amplitudes().dot(amps) * prev.amplitudes();
    }
    if (amps.norm() > 1e-8) {
      basis.push_back(
          StateVector::from_amplitudes(code.n, amps / amps.norm()));
    }
  }
  if (basis.size() != want) {
    throw validation_error("code space has unexpected dimension");
  }
  return basis;
}

// Knill-Laflamme test against P E_i^dag E_j P = alpha_ij P, evaluated in
// the code-space basis where the residual's Frobenius norm is exact.
template <class ApplyError>
KlReport kl_check_impl(const StabilizerCode& code, std::size_t count,
                       ApplyError&& apply) {
  if (code.n > kDenseQubitGuard) {
    throw capacity_error("Knill-Laflamme check guarded at " +
                         std::to_string(kDenseQubitGuard) + " qubits");
  }
  const std::vector<StateVector> basis = codespace_basis(code);
  const std::size_t dim_code = basis.size();
  // images[j] holds E_j applied to each basis codeword.
  std::vector<std::vector<Eigen::VectorXcd>> images(count);
  for (std::size_t j = 0; j < count; ++j) {
    for (const auto& psi : basis) images[j].push_back(apply(j, psi));
  }
  KlReport report;
  report.alpha = Eigen::MatrixXcd::Zero(count, count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      Eigen::MatrixXcd m(dim_code, dim_code);
      for (std::size_t a = 0; a < dim_code; ++a) {
        for (std::size_t b = 0; b < dim_code; ++b) {
          m(a, b) = images[i][a].dot(images[j][b]);
        }
      }
      const Complex alpha_ij = m.trace() / static_cast<double>(dim_code);
      report.alpha(i, j) = alpha_ij;
      m.diagonal().array() -= alpha_ij;
      report.projection_residual =
          std::max(report.projection_residual, m.norm());
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      report.hermitian_deviation =
          std::max(report.hermitian_deviation,
                   std::abs(report.alpha(i, j) -
                            std::conj(report.alpha(j, i))));
    }
  }
  report.correctable = report.projection_residual <= kKlResidualTol &&
                       report.hermitian_deviation <= kKlHermitianTol;
  return report;
}

}  // namespace detail

inline KlReport kl_check(const StabilizerCode& code,
                         const std::vector<PauliOperator>& errors) {
  for (const auto& e : errors) {
    if (e.num_qubits() != code.n) {
      throw dimension_error("error operator qubit count differs from code");
    }
  }
  return detail::kl_check_impl(
      code, errors.size(), [&](std::size_t j, const StateVector& psi) {
        return apply_pauli(psi, errors[j]).amplitudes();
      });
}

inline KlReport kl_check(const StabilizerCode& code,
                         const std::vector<Eigen::MatrixXcd>& errors) {
  const Eigen::Index dim = 1LL << code.n;
  for (const auto& e : errors) {
    if (e.rows() != dim || e.cols() != dim) {
      throw dimension_error("dense error operator has wrong shape");
    }
  }
  return detail::kl_check_impl(
      code, errors.size(), [&](std::size_t j, const StateVector& psi) {
        return Eigen::VectorXcd(errors[j] * psi.amplitudes());
      });
}

// Applies a (not necessarily unitary) single-qubit operator and
// renormalizes; used to build continuous aI + bX + cY + dZ corruptions.
inline StateVector apply_one_qubit_operator(const StateVector& state, int qubit,
                                            const Eigen::Matrix2cd& op) {
  const std::size_t n = state.num_qubits();
  if (qubit < 0 || static_cast<std::size_t>(qubit) >= n) {
    throw dimension_error("qubit index out of range");
  }
  const std::uint64_t mask = 1ULL << (n - 1 - qubit);
  Eigen::VectorXcd out(state.dim());
  const auto& a = state.amplitudes();
  for (std::uint64_t i = 0; i < state.dim(); ++i) {
    if (i & mask) continue;
    const std::uint64_t j = i | mask;
    out(i) = op(0, 0) * a(i) + op(0, 1) * a(j);
    out(j) = op(1, 0) * a(i) + op(1, 1) * a(j);
  }
  const double nrm = out.norm();
  if (nrm < 1e-12) {
    throw validation_error("single-qubit operator annihilated the state");
  }
  return StateVector::from_amplitudes(n, out / nrm);
}

// Full correction round: measure every stabilizer generator (collapsing the
// superposition of error branches), decode the observed syndrome with the
// full-alphabet lookup table, and apply the correction.
inline StateVector correct_errors(const StabilizerCode& code,
                                  const SyndromeTable& table,
                                  const StateVector& corrupted, Rng& rng) {
  if (corrupted.num_qubits() != code.n) {
    throw dimension_error("state qubit count differs from code");
  }
  StateVector state = corrupted;
  Syndrome s;
  for (const auto& g : code.generators) {
    MeasurementResult mr = measure_stabilizer(state, g, rng);
    state = mr.post_state;
    s.bits.push_back(mr.outcome == -1 ? 1 : 0);
  }
  return apply_pauli(state, decode(table, s).correction);
}

inline StateVector correct_continuous_error(const std::string& code_name,
                                            const StateVector& corrupted,
                                            std::uint64_t seed) {
  const StabilizerCode code = catalog(code_name);
  const SyndromeTable table = build_table(code, ChannelKind::depolarizing);
  Rng rng(seed);
  return correct_errors(code, table, corrupted, rng);
}

// Fig. 1(a): two CNOTs from the data qubit produce a|000> + b|111>.
inline StateVector bit_flip_encode_circuit(Complex alpha, Complex beta) {
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(8);
  amps(0) = alpha;  // |000>
  amps(4) = beta;   // |100>
  StateVector s = StateVector::from_amplitudes(3, amps);
  s = apply_gate(s, GateOp::cnot(0, 1));
  s = apply_gate(s, GateOp::cnot(0, 2));
  return s;
}

// Fig. 1(b): the bit-flip circuit followed by Hadamards on all three
// qubits, producing a|+++> + b|--->.
inline StateVector phase_flip_encode_circuit(Complex alpha, Complex beta) {
  StateVector s = bit_flip_encode_circuit(alpha, beta);
  for (int q = 0; q < 3; ++q) s = apply_gate(s, GateOp::single(GateKind::H, q));
  return s;
}

struct CircuitSyndromeResult {
  Syndrome syndrome;
  StateVector post_state;  // the three data qubits, ancillas measured away
};

// Fig. 2: two ancillas collect the Z1Z2 and Z2Z3 parities through CNOTs and
// are measured in the Z basis; outcome -1 on ancilla i sets syndrome bit i.
inline CircuitSyndromeResult bit_flip_syndrome_circuit(const StateVector& data,
                                                       std::uint64_t seed) {
  if (data.num_qubits() != 3) {
    throw dimension_error("syndrome circuit expects a 3-qubit state");
  }
  Eigen::VectorXcd full = Eigen::VectorXcd::Zero(32);
  for (std::uint64_t d = 0; d < 8; ++d) {
    full(d << 2) = data.amplitudes()(d);
  }
  StateVector reg = StateVector::from_amplitudes(5, full);
  reg = apply_gate(reg, GateOp::cnot(0, 3));
  reg = apply_gate(reg, GateOp::cnot(1, 3));
  reg = apply_gate(reg, GateOp::cnot(1, 4));
  reg = apply_gate(reg, GateOp::cnot(2, 4));

  Rng rng(seed);
  CircuitSyndromeResult result{Syndrome{}, StateVector(3)};
  std::uint64_t ancilla_bits = 0;
  for (int anc = 3; anc <= 4; ++anc) {
    MeasurementResult mr =
        measure_stabilizer(reg, PauliOperator::single(5, anc, 'Z'), rng);
    reg = mr.post_state;
    const bool bit = mr.outcome == -1;
    result.syndrome.bits.push_back(bit ? 1 : 0);
    ancilla_bits = (ancilla_bits << 1) | (bit ? 1 : 0);
  }
  Eigen::VectorXcd out(8);
  for (std::uint64_t d = 0; d < 8; ++d) {
    out(d) = reg.amplitudes()((d << 2) | ancilla_bits);
  }
  result.post_state = StateVector::from_amplitudes(3, out);
  return result;
}

}  // namespace qecc
