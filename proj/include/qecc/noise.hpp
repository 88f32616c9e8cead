#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "qecc/errors.hpp"
#include "qecc/pauli.hpp"
#include "qecc/rng.hpp"

namespace qecc {

enum class ChannelKind { bit_flip, phase_flip, depolarizing };

inline const char* to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::bit_flip:
      return "bit_flip";
    case ChannelKind::phase_flip:
      return "phase_flip";
    case ChannelKind::depolarizing:
      return "depolarizing";
  }
  return "?";
}

inline ChannelKind parse_channel_kind(std::string_view name) {
  if (name == "bit_flip") return ChannelKind::bit_flip;
  if (name == "phase_flip") return ChannelKind::phase_flip;
  if (name == "depolarizing") return ChannelKind::depolarizing;
  throw lookup_error("unknown channel '" + std::string(name) +
                     "'; valid kinds: bit_flip, phase_flip, depolarizing");
}

// The Pauli alphabet a channel can emit, used to restrict syndrome-table
// search to errors the channel actually produces.
inline std::string_view channel_alphabet(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::bit_flip:
      return "X";
    case ChannelKind::phase_flip:
      return "Z";
    case ChannelKind::depolarizing:
      return "XYZ";
  }
  return "";
}

// i.i.d. single-qubit Pauli noise with per-qubit error probability p.
struct NoiseChannel {
  ChannelKind kind;
  double p;

  NoiseChannel(ChannelKind k, double prob) : kind(k), p(prob) {
    if (!(prob >= 0.0 && prob <= 1.0)) {
      throw std::invalid_argument("error probability must lie in [0, 1]");
    }
  }
};

// Per qubit independently: identity with probability 1-p, otherwise X for
// bit_flip, Z for phase_flip, or X/Y/Z with p/3 each for depolarizing.
inline PauliOperator sample_error(const NoiseChannel& channel, std::size_t n,
                                  Rng& rng) {
  PauliOperator e(n);
  int phase = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (rng.uniform01() >= channel.p) continue;
    char letter = 'X';
    switch (channel.kind) {
      case ChannelKind::bit_flip:
        letter = 'X';
        break;
      case ChannelKind::phase_flip:
        letter = 'Z';
        break;
      case ChannelKind::depolarizing:
        letter = "XYZ"[rng.below(3)];
        break;
    }
    if (letter == 'X' || letter == 'Y') e.set_x(q, true);
    if (letter == 'Z' || letter == 'Y') e.set_z(q, true);
    if (letter == 'Y') ++phase;
  }
  e.set_phase_exp(phase);
  return e;
}

inline PauliOperator sample_error(const NoiseChannel& channel, std::size_t n,
                                  std::uint64_t seed) {
  Rng rng(seed);
  return sample_error(channel, n, rng);
}

}  // namespace qecc
