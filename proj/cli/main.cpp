// Command-line front end; talks to the core library only through the C API.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "../capi/bilat.h"

namespace {

int fail(blt_status st) {
  std::cerr << "error: " << blt_last_error() << " (status " << (int)st << ")\n";
  return 2;
}

std::string read_input(const std::string& arg) {
  if (arg.empty() || arg == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  return arg;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(2);
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct StringOut {
  char* p = nullptr;
  ~StringOut() { blt_string_free(p); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-algebra toolkit and decision engine for bilattice-based logics"};
  app.require_subcommand(1);

  // decide
  std::string d_logic = "lb", d_method = "semantic", d_seq;
  auto* decide = app.add_subcommand("decide", "Decide a consequence Γ |- φ");
  decide->add_option("--logic", d_logic)->check(CLI::IsMember({"lb", "lbs"}));
  decide->add_option("--method", d_method)->check(CLI::IsMember({"semantic", "nf"}));
  decide->add_option("sequent", d_seq, "\"Γ |- φ\" (or - for stdin)");

  // nf
  std::string n_formula;
  auto* nf = app.add_subcommand("nf", "Clause normal form of a formula");
  nf->add_option("formula", n_formula, "formula (or - for stdin)");

  // prove
  std::string p_seq;
  int p_depth = 40;
  auto* prove = app.add_subcommand("prove", "Backward cut-free sequent proof search");
  prove->add_option("sequent", p_seq, "\"Γ |- Δ\" (or - for stdin)");
  prove->add_option("--depth", p_depth, "search depth limit");

  // check-proof
  std::string c_calculus, c_file;
  auto* checkp = app.add_subcommand("check-proof", "Validate a derivation file");
  checkp->add_option("--calculus", c_calculus)->required()->check(
      CLI::IsMember({"hlb", "hlbs", "glb"}));
  checkp->add_option("file", c_file)->required();

  // algebra
  auto* algebra = app.add_subcommand("algebra", "Algebra operations");
  algebra->require_subcommand(1);
  std::string ac_file, ac_variety = "pre";
  auto* acheck = algebra->add_subcommand("check", "Check membership in a variety");
  acheck->add_option("file", ac_file)->required();
  acheck->add_option("--variety", ac_variety)->check(
      CLI::IsMember({"pre", "int", "dist", "bil", "conf", "imp", "rdm", "ialg"}));
  std::string ad_file;
  auto* adec = algebra->add_subcommand("decompose", "Decompose into a lattice product");
  adec->add_option("file", ad_file)->required();
  std::string ae_file, ae_what;
  auto* aenum = algebra->add_subcommand("enumerate", "Enumerate bifilters or congruences");
  aenum->add_option("file", ae_file)->required();
  aenum->add_option("--what", ae_what)->required()->check(
      CLI::IsMember({"bifilters", "congruences"}));
  std::string an_name, an_emit = "json";
  auto* anamed = algebra->add_subcommand("named", "Emit a named algebra");
  anamed->add_option("name", an_name)->required();
  anamed->add_option("--emit", an_emit)->check(CLI::IsMember({"json", "tables"}));

  // translate
  std::string t_dir, t_system = "glb", t_input;
  auto* translate = app.add_subcommand("translate", "Algebraizability translations");
  translate->add_option("--dir", t_dir)->required()->check(CLI::IsMember({"tau", "rho"}));
  translate->add_option("--system", t_system)->check(CLI::IsMember({"glb", "lbs"}));
  translate->add_option("input", t_input, "sequent/equation/formula (or - for stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (*decide) {
    int valid = 0;
    blt_status st = blt_decide(d_logic.c_str(), d_method.c_str(),
                               read_input(d_seq).c_str(), &valid);
    if (st != BLT_OK) return fail(st);
    std::cout << (valid ? "VALID" : "INVALID") << "\n";
    return valid ? 0 : 1;
  }

  if (*nf) {
    StringOut out;
    blt_status st = blt_normal_form(read_input(n_formula).c_str(), &out.p);
    if (st != BLT_OK) return fail(st);
    std::cout << out.p << "\n";
    return 0;
  }

  if (*prove) {
    int proved = 0;
    StringOut proof;
    blt_status st = blt_prove(read_input(p_seq).c_str(), p_depth, &proved, &proof.p);
    if (st == BLT_ERR_DEPTH_EXCEEDED) {
      std::cout << "UNKNOWN (depth limit reached)\n";
      return 1;
    }
    if (st != BLT_OK) return fail(st);
    if (proved) {
      std::cout << "PROVED\n" << proof.p << "\n";
      return 0;
    }
    std::cout << "NOT PROVABLE\n";
    return 1;
  }

  if (*checkp) {
    int ok = 0;
    StringOut diag;
    blt_status st = blt_check_proof(c_calculus.c_str(), read_file(c_file).c_str(), &ok,
                                    &diag.p);
    if (st != BLT_OK) return fail(st);
    std::cout << (ok ? "OK" : "INVALID") << "\n";
    if (!ok && diag.p) std::cerr << diag.p << "\n";
    return ok ? 0 : 1;
  }

  if (*translate) {
    StringOut out;
    blt_status st = blt_translate(t_dir.c_str(), t_system.c_str(),
                                  read_input(t_input).c_str(), &out.p);
    if (st != BLT_OK) return fail(st);
    std::cout << out.p << "\n";
    return 0;
  }

  // algebra subcommands
  blt_algebra* a = nullptr;
  blt_status st = BLT_OK;
  if (*anamed) {
    st = blt_algebra_named(an_name.c_str(), &a);
  } else {
    std::string file = *acheck ? ac_file : (*adec ? ad_file : ae_file);
    st = blt_algebra_from_json(read_file(file).c_str(), &a);
  }
  if (st != BLT_OK) return fail(st);

  int rc = 0;
  if (*acheck) {
    int holds = 0;
    StringOut report;
    st = blt_algebra_check(a, ac_variety.c_str(), &holds, &report.p);
    if (st != BLT_OK) rc = fail(st);
    else {
      std::cout << report.p << "\n";
      rc = holds ? 0 : 1;
    }
  } else if (*adec) {
    StringOut out;
    st = blt_algebra_decompose(a, &out.p);
    if (st != BLT_OK) rc = fail(st);
    else std::cout << out.p << "\n";
  } else if (*aenum) {
    StringOut out;
    st = blt_algebra_enumerate(a, ae_what.c_str(), &out.p);
    if (st != BLT_OK) rc = fail(st);
    else std::cout << out.p << "\n";
  } else if (*anamed) {
    StringOut out;
    st = blt_algebra_emit(a, an_emit.c_str(), &out.p);
    if (st != BLT_OK) rc = fail(st);
    else std::cout << out.p << "\n";
  }
  blt_algebra_free(a);
  return rc;
}
