#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qecc/errors.hpp"
#include "qecc/stabilizer.hpp"

namespace qecc {

inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "bit_flip", "phase_flip", "shor9", "steane7", "five_qubit"};
  return names;
}

inline bool is_catalog_name(std::string_view name) {
  for (const auto& n : catalog_names()) {
    if (n == name) return true;
  }
  return false;
}

namespace detail {

struct CatalogEntry {
  const char* name;
  std::vector<const char*> generators;
  // Conventional logical representatives; X-bar maps |0_L> to |1_L>.
  const char* logical_x;
  const char* logical_z;
  int distance;
};

inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"bit_flip", {"ZZI", "IZZ"}, "XXX", "ZII", 1},
      {"phase_flip", {"XXI", "IXX"}, "ZZZ", "XII", 1},
      {"shor9",
       {"ZZIIIIIII", "IZZIIIIII", "IIIZZIIII", "IIIIZZIII", "IIIIIIZZI",
        "IIIIIIIZZ", "XXXXXXIII", "IIIXXXXXX"},
       "ZIIZIIZII", "XXXIIIIII", 3},
      {"steane7",
       {"IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"},
       "XXXXXXX", "ZZZZZZZ", 3},
      {"five_qubit", {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}, "XXXXX", "ZZZZZ", 3},
  };
  return entries;
}

// Both pairs must generate the same group modulo the stabilizer: every
// element of one pair reduces to a phase over the basis spanned by the
// generators plus the other pair.
inline bool equivalent_logical_pairs(const StabilizerCode& code,
                                     const LogicalPair& a,
                                     const LogicalPair& b) {
  auto spans = [&](const LogicalPair& spanning, const LogicalPair& tested) {
    PauliRowBasis basis = generator_basis(code);
    basis.add(spanning.x);
    basis.add(spanning.z);
    return basis.reduce(tested.x).is_phase_only() &&
           basis.reduce(tested.z).is_phase_only();
  };
  return spans(a, b) && spans(b, a);
}

}  // namespace detail

// Builds one of the named codes with validated generators, conventional
// logical representatives (cross-checked against the symplectic-elimination
// output) and the cached distance.
inline StabilizerCode catalog(std::string_view name) {
  for (const auto& entry : detail::catalog_entries()) {
    if (name != entry.name) continue;
    std::vector<PauliOperator> gens;
    gens.reserve(entry.generators.size());
    for (const char* g : entry.generators) {
      gens.push_back(PauliOperator::from_string(g));
    }
    StabilizerCode code = validate_generators(gens);
    code.name = entry.name;
    code.cached_distance = entry.distance;

    const PauliOperator lx = PauliOperator::from_string(entry.logical_x);
    const PauliOperator lz = PauliOperator::from_string(entry.logical_z);
    if (lx.commutes_with(lz) || !in_normalizer(code, lx) ||
        !in_normalizer(code, lz) || in_stabilizer_up_to_phase(code, lx) ||
        in_stabilizer_up_to_phase(code, lz)) {
      throw validation_error(std::string("catalog logical pair for ") +
                             entry.name + " is inconsistent");
    }
    const auto computed = logical_operators(code);
    if (computed.size() != 1 ||
        !detail::equivalent_logical_pairs(code, computed[0], {lx, lz})) {
      throw validation_error(
          std::string("computed logical pair for ") + entry.name +
          " does not match the documented representatives");
    }
    code.logical_pairs = {{lx, lz}};
    return code;
  }
  std::string valid;
  for (const auto& n : catalog_names()) {
    if (!valid.empty()) valid += ", ";
    valid += n;
  }
  throw lookup_error("unknown code '" + std::string(name) +
                     "'; valid names: " + valid);
}

}  // namespace qecc
