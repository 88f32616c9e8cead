// Command-line front end for the stabilizer QEC workbench.
//
// Exit codes: 0 success, 2 usage error, 3 bad Pauli/matrix text, 4 missing
// or unreadable file, 5 invalid generator set, 6 unknown code/channel name,
// 7 capacity guard exceeded, 1 anything else.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qecc/qecc.hpp"

namespace {

constexpr const char* kSeedEnvVar = "QECC_SEED";

std::uint64_t default_seed() {
  if (const char* env = std::getenv(kSeedEnvVar)) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw qecc::parse_error(std::string("cannot parse ") + kSeedEnvVar +
                              "='" + env + "' as an unsigned integer");
    }
  }
  return 1;
}

// A --code argument is either a catalog name or a generator file path.
qecc::StabilizerCode resolve_code(const std::string& spec) {
  if (qecc::is_catalog_name(spec)) return qecc::catalog(spec);
  qecc::StabilizerCode code =
      qecc::validate_generators(qecc::load_pauli_file(spec));
  code.name = std::filesystem::path(spec).filename().string();
  return code;
}

std::string distance_label(const qecc::StabilizerCode& code,
                           std::optional<int>& d_out) {
  std::optional<int> d = code.cached_distance;
  if (!d) d = qecc::distance(code);
  d_out = d;
  return d ? std::to_string(*d) : ">=5";
}

void print_code_info(const qecc::StabilizerCode& code) {
  std::optional<int> d;
  const std::string d_label = distance_label(code, d);
  std::cout << "name: " << (code.name.empty() ? "(unnamed)" : code.name)
            << "\n";
  std::cout << "parameters: [[" << code.n << "," << code.k << "," << d_label
            << "]]\n";
  if (code.had_dependent_generators) {
    std::cout << "warning: input generators were dependent; reduced to an "
                 "independent subset\n";
  }
  std::cout << "generators:\n";
  for (std::size_t i = 0; i < code.generators.size(); ++i) {
    std::cout << "  g" << (i + 1) << " = " << code.generators[i].str() << "\n";
  }
  auto pairs = code.logical_pairs;
  if (pairs.empty() && code.k > 0) pairs = qecc::logical_operators(code);
  std::cout << "logical operators:\n";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::cout << "  X" << (i + 1) << " = " << pairs[i].x.str() << "\n";
    std::cout << "  Z" << (i + 1) << " = " << pairs[i].z.str() << "\n";
  }
  const int limit = d ? (*d - 1) / 2 : 1;
  const auto report = qecc::is_degenerate(code, limit);
  std::cout << "degenerate (weight <= " << limit << "): "
            << (report.degenerate ? "yes" : "no");
  if (report.witness) {
    std::cout << "  witness: (" << report.witness->first.str() << ", "
              << report.witness->second.str() << ")";
  }
  std::cout << "\n";
}

std::vector<double> parse_p_list(const std::string& text) {
  std::vector<double> ps;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    if (!item.empty()) {
      try {
        std::size_t used = 0;
        const double value = std::stod(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
        ps.push_back(value);
      } catch (const std::exception&) {
        throw qecc::parse_error("cannot parse probability '" + item + "'");
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (ps.empty()) throw qecc::parse_error("empty probability list");
  return ps;
}

double gaussian(qecc::Rng& rng) {
  const double u1 = rng.uniform01();
  const double u2 = rng.uniform01();
  return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(2.0 * M_PI * u2);
}

qecc::Complex random_phaseful(qecc::Rng& rng) {
  return {gaussian(rng), gaussian(rng)};
}

int run(int argc, char** argv) {
  CLI::App app{"Stabilizer quantum error correction workbench"};
  app.require_subcommand(1);

  // codes list
  auto* codes = app.add_subcommand("codes", "Catalog operations");
  codes->require_subcommand(1);
  codes->add_subcommand("list", "List catalog codes with [[n,k,d]]")
      ->callback([] {
        for (const auto& name : qecc::catalog_names()) {
          const auto code = qecc::catalog(name);
          std::cout << name << " [[" << code.n << "," << code.k << ","
                    << *code.cached_distance << "]]\n";
        }
      });

  // code info <name|file>
  auto* code_cmd = app.add_subcommand("code", "Single-code operations");
  code_cmd->require_subcommand(1);
  auto* info = code_cmd->add_subcommand(
      "info", "Generators, logicals, distance and degeneracy");
  static std::string info_spec;
  info->add_option("spec", info_spec, "catalog name or generator file")
      ->required();
  info->callback([] { print_code_info(resolve_code(info_spec)); });
  auto* load = code_cmd->add_subcommand(
      "load", "Validate a generator file and print the resulting code");
  static std::string load_path;
  load->add_option("file", load_path, "generator file")->required();
  load->callback([] {
    qecc::StabilizerCode code =
        qecc::validate_generators(qecc::load_pauli_file(load_path));
    code.name = std::filesystem::path(load_path).filename().string();
    print_code_info(code);
  });

  // syndrome
  auto* syn = app.add_subcommand("syndrome",
                                 "Syndrome and table correction for an error");
  static std::string syn_code, syn_error, syn_channel = "depolarizing";
  syn->add_option("--code", syn_code)->required();
  syn->add_option("--error", syn_error, "Pauli string")->required();
  syn->add_option("--channel", syn_channel,
                  "table alphabet (default depolarizing)");
  syn->callback([] {
    const auto code = resolve_code(syn_code);
    const auto error = qecc::PauliOperator::from_string(syn_error);
    const auto s = qecc::syndrome_of(code, error);
    const auto table =
        qecc::build_table(code, qecc::parse_channel_kind(syn_channel));
    const auto dr = qecc::decode(table, s);
    std::cout << "error: " << error.str() << "\n";
    std::cout << "syndrome (bits): " << s.bit_string() << "\n";
    std::cout << "syndrome (outcomes): " << s.outcome_string();
    if (dr.detected_uncorrectable) {
      std::cout << " → no table entry; identity applied\n";
    } else {
      std::cout << " → correct with " << dr.correction.str() << "\n";
    }
  });

  // table dump
  auto* table_cmd = app.add_subcommand("table", "Syndrome table operations");
  table_cmd->require_subcommand(1);
  auto* dump = table_cmd->add_subcommand(
      "dump", "Emit syndrome→correction pairs as bits<TAB>pauli");
  static std::string dump_code, dump_channel;
  dump->add_option("--code", dump_code)->required();
  dump->add_option("--channel", dump_channel)->required();
  dump->callback([] {
    const auto code = resolve_code(dump_code);
    const auto table =
        qecc::build_table(code, qecc::parse_channel_kind(dump_channel));
    std::cout << qecc::dump_table(table);
  });

  // css build
  auto* css = app.add_subcommand("css", "CSS construction");
  css->require_subcommand(1);
  auto* build = css->add_subcommand(
      "build", "Build a stabilizer code from classical parity checks");
  static std::string css_hx, css_hz;
  build->add_option("--hx", css_hx, "X-check matrix file");
  build->add_option("--hz", css_hz, "Z-check matrix file");
  build->callback([] {
    if (css_hx.empty() && css_hz.empty()) {
      throw qecc::validation_error("css build needs --hx and/or --hz");
    }
    const qecc::BinaryMatrix hx = css_hx.empty()
                                      ? qecc::BinaryMatrix(0, 0)
                                      : qecc::BinaryMatrix::load_file(css_hx);
    const qecc::BinaryMatrix hz = css_hz.empty()
                                      ? qecc::BinaryMatrix(0, 0)
                                      : qecc::BinaryMatrix::load_file(css_hz);
    qecc::StabilizerCode code = qecc::css_from_parity_checks(hx, hz);
    code.name = "css";
    print_code_info(code);
  });

  // kl-check
  auto* kl = app.add_subcommand("kl-check",
                                "Knill-Laflamme correctability test");
  static std::string kl_code, kl_errors;
  kl->add_option("--code", kl_code)->required();
  kl->add_option("--errors", kl_errors, "file of Pauli strings")->required();
  kl->callback([] {
    const auto code = resolve_code(kl_code);
    const auto errors = qecc::load_pauli_file(kl_errors);
    const auto report = qecc::kl_check(code, errors);
    std::printf("errors: %zu\n", errors.size());
    std::printf("hermitian_deviation: %.3e\n", report.hermitian_deviation);
    std::printf("projection_residual: %.3e\n", report.projection_residual);
    std::printf("correctable: %s\n", report.correctable ? "yes" : "no");
  });

  // verify-continuous
  auto* cont = app.add_subcommand(
      "verify-continuous",
      "Correct a random continuous single-qubit error on a random codeword");
  static std::string cont_code;
  static int cont_qubit = 0;
  static std::uint64_t cont_seed = 0;
  static bool cont_seed_set = false;
  cont->add_option("--code", cont_code)->required();
  cont->add_option("--qubit", cont_qubit)->required();
  cont->add_option("--seed", cont_seed)->each([](const std::string&) {
    cont_seed_set = true;
  });
  cont->callback([] {
    const std::uint64_t seed = cont_seed_set ? cont_seed : default_seed();
    const auto code = resolve_code(cont_code);
    qecc::Rng rng(seed);
    qecc::Complex alpha = random_phaseful(rng), beta = random_phaseful(rng);
    const double cw_norm = std::sqrt(std::norm(alpha) + std::norm(beta));
    alpha /= cw_norm;
    beta /= cw_norm;
    const auto codeword = qecc::encode(code, alpha, beta);
    Eigen::Vector4cd coeff;
    for (int i = 0; i < 4; ++i) coeff(i) = random_phaseful(rng);
    coeff.normalize();
    Eigen::Matrix2cd op = Eigen::Matrix2cd::Zero();
    op += coeff(0) * Eigen::Matrix2cd::Identity();
    op += coeff(1) * (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
    op += coeff(2) *
          (Eigen::Matrix2cd() << 0, qecc::Complex(0, -1), qecc::Complex(0, 1), 0)
              .finished();
    op += coeff(3) * (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
    const auto corrupted =
        qecc::apply_one_qubit_operator(codeword, cont_qubit, op);
    const auto table = qecc::build_table(code, qecc::ChannelKind::depolarizing);
    const auto recovered =
        qecc::correct_errors(code, table, corrupted, rng);
    const double fidelity = codeword.fidelity_with(recovered);
    std::printf("qubit: %d\nseed: %llu\nfidelity: %.12f\n%s\n", cont_qubit,
                static_cast<unsigned long long>(seed), fidelity,
                fidelity >= 1.0 - 1e-8 ? "recovered" : "NOT recovered");
  });

  // mc
  auto* mc = app.add_subcommand("mc", "Monte Carlo logical error rates");
  static std::string mc_code, mc_channel, mc_plist, mc_out;
  static std::uint64_t mc_trials = 100000;
  static std::uint64_t mc_seed = 0;
  static bool mc_seed_set = false;
  mc->add_option("--code", mc_code)->required();
  mc->add_option("--channel", mc_channel)->required();
  mc->add_option("--p", mc_plist, "comma-separated probabilities")->required();
  mc->add_option("--trials", mc_trials);
  mc->add_option("--seed", mc_seed)->each([](const std::string&) {
    mc_seed_set = true;
  });
  mc->add_option("--out", mc_out, "CSV output path (default stdout)");
  mc->callback([] {
    const std::uint64_t seed = mc_seed_set ? mc_seed : default_seed();
    const auto code = resolve_code(mc_code);
    const auto kind = qecc::parse_channel_kind(mc_channel);
    const std::string csv = qecc::monte_carlo_sweep_csv(
        code, mc_code, kind, parse_p_list(mc_plist), mc_trials, seed);
    if (mc_out.empty()) {
      std::cout << csv;
    } else {
      std::ofstream out(mc_out, std::ios::binary);
      if (!out) throw qecc::io_error("cannot write CSV file: " + mc_out);
      out << csv;
    }
  });

  // threshold
  auto* thr = app.add_subcommand(
      "threshold", "Pseudothreshold where encoding stops paying off");
  static std::string thr_code;
  thr->add_option("--code", thr_code)->required();
  thr->callback([] {
    qecc::catalog(thr_code);  // reject unknown names with the name list
    std::printf("%.7g\n", qecc::pseudothreshold(thr_code));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      return app.exit(e);
    }
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const qecc::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const qecc::io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const qecc::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const qecc::lookup_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 6;
  } catch (const qecc::capacity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 7;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
