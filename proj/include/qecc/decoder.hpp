#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "qecc/errors.hpp"
#include "qecc/noise.hpp"
#include "qecc/pauli.hpp"
#include "qecc/stabilizer.hpp"

namespace qecc {

// Minimum-weight lookup decoder: maps each reachable syndrome to the
// lowest-weight error over the channel's Pauli alphabet that produces it.
// Immutable after construction and shareable between workers.
struct SyndromeTable {
  StabilizerCode code;
  ChannelKind channel = ChannelKind::depolarizing;
  std::map<std::uint32_t, PauliOperator> entries;
  int max_search_weight = 0;

  double coverage() const {
    return static_cast<double>(entries.size()) /
           static_cast<double>(1ULL << code.num_generators());
  }
};

inline constexpr int kDefaultTableSearchWeight = 2;

// Searches errors in increasing weight; within a weight class candidates
// arrive in lexicographic (qubit index, letter X<Y<Z) order and the first
// producer of a syndrome wins, which fixes tie-breaking deterministically.
// Syndromes no candidate reaches are left absent.
inline SyndromeTable build_table(const StabilizerCode& code, ChannelKind kind,
                                 int max_search_weight = kDefaultTableSearchWeight) {
  if (code.num_generators() > 20) {
    throw capacity_error("syndrome table limited to 20 generators, code has " +
                         std::to_string(code.num_generators()));
  }
  SyndromeTable table;
  table.code = code;
  table.channel = kind;
  table.max_search_weight = max_search_weight;
  const std::string_view alphabet = channel_alphabet(kind);
  const std::size_t full = 1ULL << code.num_generators();
  for (int w = 0; w <= max_search_weight; ++w) {
    if (table.entries.size() == full) break;
    detail::for_each_error_of_weight(
        code.n, w, alphabet, [&](const PauliOperator& e) {
          table.entries.emplace(syndrome_of(code, e).key(), e);
          return table.entries.size() == full;
        });
  }
  return table;
}

struct DecodeResult {
  PauliOperator correction;
  // Set when the syndrome has no table entry; the identity is returned so
  // Monte Carlo counts the trial as a failure instead of aborting.
  bool detected_uncorrectable = false;
};

inline DecodeResult decode(const SyndromeTable& table, const Syndrome& s) {
  if (s.bits.size() != table.code.num_generators()) {
    throw dimension_error("syndrome has " + std::to_string(s.bits.size()) +
                          " bits, table expects " +
                          std::to_string(table.code.num_generators()));
  }
  auto it = table.entries.find(s.key());
  if (it == table.entries.end()) {
    return {PauliOperator::identity(table.code.n), true};
  }
  return {it->second, false};
}

enum class ResidualClass {
  success,          // residual is a stabilizer element (up to global phase)
  logical_failure,  // commutes with all generators but lies outside the group
  detected,         // nonzero syndrome remains
};

inline const char* to_string(ResidualClass c) {
  switch (c) {
    case ResidualClass::success:
      return "success";
    case ResidualClass::logical_failure:
      return "logical_failure";
    case ResidualClass::detected:
      return "detected";
  }
  return "?";
}

inline ResidualClass classify_residual(const StabilizerCode& code,
                                       const PauliOperator& residual) {
  if (residual.num_qubits() != code.n) {
    throw dimension_error("residual acts on " +
                          std::to_string(residual.num_qubits()) +
                          " qubits, code has " + std::to_string(code.n));
  }
  if (!in_normalizer(code, residual)) return ResidualClass::detected;
  return in_stabilizer_up_to_phase(code, residual)
             ? ResidualClass::success
             : ResidualClass::logical_failure;
}

// One line per entry, "bits<TAB>pauli-string", sorted by syndrome bits.
inline std::string dump_table(const SyndromeTable& table) {
  const std::size_t r = table.code.num_generators();
  std::string out;
  for (const auto& [key, correction] : table.entries) {
    std::string bits(r, '0');
    for (std::size_t i = 0; i < r; ++i) {
      if ((key >> (r - 1 - i)) & 1u) bits[i] = '1';
    }
    out += bits;
    out.push_back('\t');
    out += correction.str();
    out.push_back('\n');
  }
  return out;
}

}  // namespace qecc
