// lieder: exact computations with Lie (super)algebra structure constants --
// delta-derivation spaces, transposed Poisson structures, and shift-ansatz
// solves on graded algebras.
//
// Exit codes: 0 success/pass, 1 mathematical failure (a witness exists),
// 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "lieder/report.hpp"

using namespace lieder;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << text;
}

// zoo selection options shared by several subcommands
struct ZooOpts {
  std::string name;
  std::optional<long> d, n;
  std::string l, lambda;

  void attach(CLI::App* cmd, bool required_name) {
    auto* opt = cmd->add_option("--zoo", name, "zoo entry name");
    if (required_name) opt->required();
    cmd->add_option("--d", d, "spatial dimension parameter");
    cmd->add_option("--n", n, "size parameter");
    cmd->add_option("--l", l, "half-integer parameter, e.g. 3/2");
    cmd->add_option("--lambda", lambda, "rational parameter");
  }

  Params params() const {
    Params p;
    if (d) p["d"] = rat(*d);
    if (n) p["n"] = rat(*n);
    if (!l.empty()) p["l"] = parse_rational(l);
    if (!lambda.empty()) p["lambda"] = parse_rational(lambda);
    return p;
  }
};

LieAlgebra load_target(const std::string& file, const ZooOpts& zoo) {
  if (!zoo.name.empty()) return zoo_build_finite(zoo.name, zoo.params());
  if (file.empty())
    throw FormatError("give an algebra file or --zoo NAME");
  return load_algebra(read_file(file));
}

void emit(const Json& machine, const std::string& pretty, bool json_mode) {
  if (json_mode)
    std::cout << machine.dump(2) << "\n";
  else
    std::cout << pretty;
}

int cmd_validate(const std::string& file, bool json_mode) {
  LieAlgebra L = load_algebra(read_file(file));
  JacobiReport r = L.validate_jacobi();
  Json machine{{"algebra", algebra_json(L)}, {"jacobi", jacobi_json(L, r)}};
  std::ostringstream pretty;
  pretty << L.name() << ": dim " << L.dim() << "\n";
  if (r.pass) {
    pretty << "jacobi: PASS\n";
  } else {
    pretty << "jacobi: FAIL (" << r.violations.size() << " violating triples)\n";
    for (const auto& v : r.violations) {
      pretty << "  (" << L.label(v.i) << ", " << L.label(v.j) << ", "
             << L.label(v.k) << ") -> " << pretty_value(L, v.residual) << "\n";
    }
  }
  emit(machine, pretty.str(), json_mode);
  return r.pass ? kExitPass : kExitMathFail;
}

int cmd_derivations(const std::string& file, const ZooOpts& zoo,
                    const std::string& delta, const std::string& parity,
                    bool json_mode) {
  LieAlgebra L = load_target(file, zoo);
  Rational d = parse_rational(delta);
  ParityMode mode = parse_parity_mode(parity);
  DerivationSpace D = delta_derivations(L, d, mode);
  bool with_basis = report_verbosity() >= 1;
  Json machine{{"algebra", algebra_json(L)},
               {"derivations", derivation_space_json(D, with_basis)}};
  std::ostringstream pretty;
  pretty << L.name() << ": dim " << L.dim() << "\n";
  pretty << "delta-derivations, delta=" << to_string(d)
         << ", parity=" << to_string(mode) << "\n";
  pretty << "dim " << D.dim() << ", "
         << (is_trivial_space(D) ? "TRIVIAL" : "NONTRIVIAL") << "\n";
  if (with_basis)
    for (int i = 0; i < D.dim(); ++i) {
      pretty << "basis[" << i << "] (parity " << D.basis[i].parity << "):\n";
      pretty << pretty_matrix(D.basis[i].matrix, "  ");
    }
  emit(machine, pretty.str(), json_mode);
  return kExitPass;
}

int cmd_graded(const ZooOpts& zoo, long K, long N, const std::string& parity,
               bool json_mode) {
  GradedAlgebra G = zoo_build_graded(zoo.name, zoo.params());
  ParityMode mode = parse_parity_mode(parity);
  ShiftSolveResult r = shift_ansatz_solve(G, K, N, mode);
  bool with_basis = report_verbosity() >= 1;
  Json machine{{"algebra", G.name}, {"solve", shift_solve_json(r, with_basis)}};
  std::ostringstream pretty;
  pretty << G.name << ": shift-ansatz solve, K=" << K << ", N=" << N
         << ", parity=" << to_string(mode) << "\n";
  pretty << "dim " << r.dim() << ", "
         << (solution_is_trivial(r) ? "TRIVIAL" : "NONTRIVIAL") << "\n";
  if (!r.caveat.empty()) pretty << r.caveat << "\n";
  if (with_basis)
    for (int i = 0; i < r.dim(); ++i) {
      pretty << "basis[" << i << "]:\n";
      for (const auto& [key, c] : r.basis[i].shift_coeffs) {
        auto [src, tgt, j2] = key;
        pretty << "  " << r.classes[src].display << " -> "
               << r.classes[tgt].display << " shift "
               << to_string(rat(j2, 2)) << " : " << to_string(c) << "\n";
      }
      for (const auto& [key, c] : r.basis[i].central_rows)
        pretty << "  " << G.families[key.first.family].name << "_("
               << to_string(rat(key.first.deg2, 2)) << ") -> "
               << r.central_names[key.second] << " : " << to_string(c) << "\n";
      for (const auto& [key, c] : r.basis[i].central_to_class)
        pretty << "  " << r.central_names[key.first] << " -> "
               << r.classes[key.second].display << "_0 : " << to_string(c)
               << "\n";
      for (const auto& [key, c] : r.basis[i].central_to_central)
        pretty << "  " << r.central_names[key.first] << " -> "
               << r.central_names[key.second] << " : " << to_string(c) << "\n";
    }
  emit(machine, pretty.str(), json_mode);
  return kExitPass;
}

int cmd_tp_construct(const std::string& file, const ZooOpts& zoo,
                     const std::string& out_product, bool json_mode) {
  LieAlgebra L = load_target(file, zoo);
  TPStructure tp = tp_construct_solvable(L);
  Json machine = tp_structure_json(L, tp);
  std::ostringstream pretty;
  pretty << L.name() << ": constructed transposed Poisson product\n";
  for (const auto& [ij, v] : tp.product.entries())
    pretty << "  " << L.label(ij.first) << " . " << L.label(ij.second) << " = "
           << pretty_value(L, v) << "\n";
  pretty << (tp.verified == TPVerified::Verified ? "VERIFIED" : "FAILED")
         << (tp.nontrivial() ? " NONTRIVIAL" : " TRIVIAL") << "\n";
  if (!out_product.empty()) write_file(out_product, serialize_product(L, tp.product));
  emit(machine, pretty.str(), json_mode);
  return tp.verified == TPVerified::Verified ? kExitPass : kExitMathFail;
}

int cmd_tp_verify(const std::string& file, const std::string& product_file,
                  bool json_mode) {
  LieAlgebra L = load_algebra(read_file(file));
  CommProduct p = parse_product(L, read_file(product_file));
  VerifyReport assoc = verify_comm_assoc(L, p);
  VerifyReport compat = verify_tp_compat(L, p);
  bool pass = assoc.pass && compat.pass;
  Json machine{{"algebra", algebra_json(L)},
               {"associative", verify_report_json(L, assoc)},
               {"compatible", verify_report_json(L, compat)},
               {"pass", pass}};
  std::ostringstream pretty;
  pretty << L.name() << ": transposed Poisson verification\n";
  pretty << "commutative-associative: " << (assoc.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& w : assoc.witnesses)
    pretty << "  assoc fails at (" << L.label(w.a) << ", " << L.label(w.b)
           << ", " << L.label(w.c) << "): " << pretty_value(L, w.lhs)
           << " != " << pretty_value(L, w.rhs) << "\n";
  pretty << "compatibility: " << (compat.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& w : compat.witnesses)
    pretty << "  compat fails at (" << L.label(w.a) << ", " << L.label(w.b)
           << ", " << L.label(w.c) << "): " << pretty_value(L, w.lhs)
           << " != " << pretty_value(L, w.rhs) << "\n";
  pretty << (pass ? "VERIFIED" : "FAIL") << "\n";
  emit(machine, pretty.str(), json_mode);
  return pass ? kExitPass : kExitMathFail;
}

int cmd_tp_certify(const std::string& file, const ZooOpts& zoo, bool json_mode) {
  LieAlgebra L = load_target(file, zoo);
  NonexistenceReport r = tp_nonexistence_report(L);
  bool with_basis = report_verbosity() >= 1 && !r.certified;
  Json machine{{"algebra", algebra_json(L)},
               {"certified", r.certified},
               {"statement", r.statement},
               {"derivations", derivation_space_json(r.half_derivations, with_basis)}};
  std::ostringstream pretty;
  pretty << r.statement << "\n";
  if (!r.certified && with_basis) {
    pretty << "half-derivation basis:\n";
    for (const auto& b : r.half_derivations.basis)
      pretty << pretty_matrix(b.matrix, "  ") << "\n";
  }
  emit(machine, pretty.str(), json_mode);
  return r.certified ? kExitPass : kExitMathFail;
}

int cmd_zoo_list() {
  for (const auto& e : zoo_entries()) {
    std::cout << e.name << "  [" << e.kind << "]";
    if (!e.params_doc.empty()) std::cout << "  (" << e.params_doc << ")";
    std::cout << "\n    " << e.description << "\n";
  }
  return kExitPass;
}

int cmd_zoo_emit(const std::string& name, const ZooOpts& zoo,
                 const std::string& out) {
  LieAlgebra L = zoo_build_finite(name, zoo.params());
  std::string doc = print_algebra_description(L.description());
  if (out.empty())
    std::cout << doc;
  else
    write_file(out, doc);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact delta-derivation and transposed Poisson computations on Lie "
      "(super)algebra structure constants"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "machine-readable output");

  std::string val_file;
  auto* validate = app.add_subcommand("validate", "check the Jacobi identity");
  validate->add_option("file", val_file, "algebra description file")->required();

  std::string der_file, der_delta = "1/2", der_parity = "full";
  ZooOpts der_zoo;
  auto* der = app.add_subcommand("derivations", "solve for delta-derivations");
  der->add_option("file", der_file, "algebra description file");
  der_zoo.attach(der, false);
  der->add_option("--delta", der_delta, "delta value, e.g. 1/2")->required();
  der->add_option("--parity", der_parity, "even|odd|full");

  ZooOpts gr_zoo;
  long gr_K = 2, gr_N = 6;
  std::string gr_parity = "even";
  auto* graded = app.add_subcommand("graded-derivations",
                                    "shift-ansatz half-derivation solve");
  gr_zoo.attach(graded, true);
  graded->add_option("--shift", gr_K, "shift bound K")->required();
  graded->add_option("--window", gr_N, "equation window N >= 2K+2")->required();
  graded->add_option("--parity", gr_parity, "even|odd|full");

  auto* tp = app.add_subcommand("tp", "transposed Poisson operations");
  tp->require_subcommand(1);
  std::string tpc_file, tpc_out;
  ZooOpts tpc_zoo;
  auto* tpc = tp->add_subcommand("construct",
                                 "build a nontrivial product on a solvable algebra");
  tpc->add_option("file", tpc_file, "algebra description file");
  tpc_zoo.attach(tpc, false);
  tpc->add_option("-o,--output", tpc_out, "write the product document here");

  std::string tpv_file, tpv_product;
  auto* tpv = tp->add_subcommand("verify", "verify a product document");
  tpv->add_option("file", tpv_file, "algebra description file")->required();
  tpv->add_option("--product", tpv_product, "product document")->required();

  std::string cert_file;
  ZooOpts cert_zoo;
  auto* cert = tp->add_subcommand("certify",
                                  "certify that every product is trivial");
  cert->add_option("file", cert_file, "algebra description file");
  cert_zoo.attach(cert, false);

  auto* zoo = app.add_subcommand("zoo", "builtin algebra catalogue");
  zoo->require_subcommand(1);
  zoo->add_subcommand("list", "list entries");
  std::string emit_name, emit_out;
  ZooOpts emit_zoo;
  auto* zemit = zoo->add_subcommand("emit", "write an algebra description");
  zemit->add_option("name", emit_name, "zoo entry")->required();
  emit_zoo.attach(zemit, false);
  zemit->add_option("-o,--output", emit_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(val_file, json_mode);
    if (der->parsed())
      return cmd_derivations(der_file, der_zoo, der_delta, der_parity, json_mode);
    if (graded->parsed())
      return cmd_graded(gr_zoo, gr_K, gr_N, gr_parity, json_mode);
    if (tp->parsed()) {
      if (tpc->parsed())
        return cmd_tp_construct(tpc_file, tpc_zoo, tpc_out, json_mode);
      if (tpv->parsed()) return cmd_tp_verify(tpv_file, tpv_product, json_mode);
      if (cert->parsed()) return cmd_tp_certify(cert_file, cert_zoo, json_mode);
    }
    if (zoo->parsed()) {
      if (zoo->get_subcommand("list")->parsed()) return cmd_zoo_list();
      if (zemit->parsed()) return cmd_zoo_emit(emit_name, emit_zoo, emit_out);
    }
  } catch (const FieldExtensionRequired& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMathFail;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
