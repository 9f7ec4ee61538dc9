// naryalg: command-line front end for the n-ary algebra workbench.
//
//   naryalg check FILE --identity filippov [--identity sh-jacobi] [--sigma 3,2,1]
//   naryalg analyze FILE
//   naryalg mc FILE
//   naryalg catalog NAME [params]
//   naryalg groupalg wv --arity N
//   naryalg groupalg colored --alpha A --beta B --gamma C
//
// FILE may be `-` for standard input. Exit status: 0 when every requested
// check passes, 1 when some check produced a witness, 2 on bad input.

#include "nary/algebra_file.hpp"
#include "nary/catalog.hpp"
#include "nary/errors.hpp"
#include "nary/exterior.hpp"
#include "nary/group_algebra.hpp"
#include "nary/identities.hpp"
#include "nary/structure.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace nary;

constexpr int kExitPass = 0;
constexpr int kExitWitness = 1;
constexpr int kExitInput = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ordered key/value report, printed as `key: value` or `key = value`.
class Report {
public:
  explicit Report(bool flat) : flat_(flat) {}

  void add(const std::string& human_key, const std::string& flat_key, const std::string& value) {
    lines_.push_back(flat_ ? flat_key + " = " + value : human_key + ": " + value);
  }
  void print(std::ostream& os) const {
    for (const std::string& l : lines_) os << l << "\n";
  }

private:
  bool flat_;
  std::vector<std::string> lines_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

NAryProduct load(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    buf << in.rdbuf();
  }
  return parse_algebra(buf.str());
}

Permutation parse_sigma(const std::string& text) {
  std::vector<int> images;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      images.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--sigma expects comma-separated integers, got '" + text + "'");
    }
  }
  return Permutation::from_one_based(images);
}

Rational parse_rational_flag(const std::string& name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError(name + " expects a rational a or a/b, got '" + text + "'");
  }
}

// ---------------------------------------------------------------- check

struct CheckOptions {
  std::string file;
  std::vector<std::string> identities;
  std::string sigma;
};

int run_check(const CheckOptions& opt, bool flat) {
  std::vector<Identity> ids;
  for (const std::string& name : opt.identities) {
    const auto id = parse_identity(name);
    if (!id) throw UsageError("unknown identity '" + name + "'");
    ids.push_back(*id);
  }
  std::optional<Permutation> sigma;
  if (!opt.sigma.empty()) sigma = parse_sigma(opt.sigma);

  const NAryProduct prod = load(opt.file);
  for (Identity id : ids) {
    if (needs_sigma(id) && !sigma) throw UsageError(std::string(to_string(id)) + " needs --sigma");
    if (needs_sigma(id) && sigma->degree() != prod.arity())
      throw UsageError("--sigma must permute " + std::to_string(prod.arity()) + " points");
  }

  Report rep(flat);
  bool witness = false;
  for (Identity id : ids) {
    const std::string name(to_string(id));
    const CheckResult res = run_identity(prod, id, needs_sigma(id) ? sigma : std::nullopt);
    if (res.passed()) {
      rep.add(name, "check." + name, res.vacuous ? "PASS (vacuous)" : "PASS");
      continue;
    }
    witness = true;
    const Witness& w = *res.witness;
    rep.add(name, "check." + name, "FAIL");
    rep.add("  tuple", "check." + name + ".tuple", "[" + format_tuple(w.tuple) + "]");
    if (w.position) rep.add("  position", "check." + name + ".position", std::to_string(*w.position));
    rep.add("  defect", "check." + name + ".defect", format_combination(w.defect));
  }
  rep.print(std::cout);
  return witness ? kExitWitness : kExitPass;
}

// ---------------------------------------------------------------- analyze

int run_analyze(const std::string& file, std::uint64_t seed, bool flat) {
  const NAryProduct prod = load(file);
  if (prod.symmetry() != Symmetry::skew) throw UsageError("analyze needs a skew product");

  Report rep(flat);
  rep.add("arity", "arity", std::to_string(prod.arity()));
  rep.add("dim", "dim", std::to_string(prod.dim()));
  const SeriesReport derived = derived_series(prod);
  const SeriesReport lower = lower_central_series(prod);
  rep.add("derived series dims", "derived_series", join_ints(derived.dims()));
  rep.add("lower central series dims", "lower_central_series", join_ints(lower.dims()));
  const bool nilpotent = lower.vanishing_index.has_value();
  rep.add("nilpotent", "nilpotent", yes_no(nilpotent));
  rep.add("solvable", "solvable", yes_no(derived.vanishing_index.has_value()));
  rep.add("kasymov (basis adjoints nilpotent)", "kasymov", yes_no(check_kasymov(prod)));
  rep.add("dim V/V^2", "generators_quotient_dim", std::to_string(generators_quotient_dim(prod)));
  if (nilpotent) {
    CharacteristicOptions options;
    options.seed = seed;
    const CharacteristicResult cs = characteristic_sequence(prod, options);
    rep.add("characteristic sequence", "characteristic_sequence", cs.sequence.str());
    rep.add("characteristic sequence certified", "characteristic_sequence_certified", yes_no(cs.certified));
    rep.add("filiform", "filiform",
            yes_no(prod.dim() >= prod.arity() && cs.sequence == filiform_sequence(prod.arity(), prod.dim())));
  } else {
    rep.add("characteristic sequence", "characteristic_sequence", "n/a");
    rep.add("characteristic sequence certified", "characteristic_sequence_certified", "n/a");
    rep.add("filiform", "filiform", "no");
  }
  rep.add("dim Der(V)", "derivation_dim", std::to_string(derivation_algebra(prod).size()));
  const NonsingularDerivationSearch ns = find_nonsingular_derivation(prod);
  rep.add("nonsingular derivation", "nonsingular_derivation", ns.found ? "yes" : (ns.exact ? "no" : "unknown"));
  rep.add("diagonal rank (file basis)", "diagonal_rank", std::to_string(diagonal_derivation_weights(prod).solution_dim));
  rep.print(std::cout);
  return kExitPass;
}

// ---------------------------------------------------------------- mc

int run_mc(const std::string& file, bool flat) {
  const NAryProduct prod = load(file);
  if (prod.symmetry() != Symmetry::skew) throw UsageError("mc needs a skew product");
  const MaurerCartanResult res = maurer_cartan_check(prod);
  Report rep(flat);
  if (res.passed()) {
    rep.add("maurer-cartan", "mc", res.vacuous ? "PASS (vacuous)" : "PASS");
    rep.print(std::cout);
    return kExitPass;
  }
  const MaurerCartanWitness& w = *res.witness;
  rep.add("maurer-cartan", "mc", "FAIL");
  rep.add("  l", "mc.l", std::to_string(w.l + 1));
  rep.add("  tuple", "mc.tuple", "[" + format_tuple(w.tuple) + "]");
  rep.add("  d(dw_l)", "mc.defect", w.defect.str());
  rep.print(std::cout);
  return kExitWitness;
}

// ---------------------------------------------------------------- catalog

struct CatalogParams {
  std::string name;
  int arity = 3;
  int dim = 0;
  std::string kind = "e1";
  std::string a = "0";
  std::string b = "0";
  int vars = 2;
  int r = 5;
  int rows = 2;
  int cols = 2;
  int d = 2;
};

NAryProduct catalog_product(const CatalogParams& c) {
  if (c.name == "simple") return simple_algebra(c.arity);
  if (c.name == "dim-n") {
    if (c.kind != "abelian" && c.kind != "e1") throw BadParams("--kind must be abelian or e1");
    return dim_n_algebra(c.arity, c.kind == "e1" ? DimNKind::e1 : DimNKind::abelian);
  }
  if (c.name == "filiform") return filiform_model(c.arity, c.dim);
  if (c.name == "filiform5") return filiform5(parse_rational_flag("--a", c.a), parse_rational_flag("--b", c.b));
  if (c.name == "counterexample") return counterexample_algebra(c.arity);
  if (c.name == "jr") return truncated_jacobian_algebra(c.vars, c.r);
  if (c.name == "matrix") return ternary_matrix_product(c.rows, c.cols);
  if (c.name == "cyclic") return cyclic_tensor_product(c.d);
  if (c.name == "abelian") return abelian(c.arity, c.dim);
  throw UnknownCatalogEntry("unknown catalog entry '" + c.name +
                            "' (simple, dim-n, filiform, filiform5, counterexample, jr, matrix, cyclic, abelian)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic workbench for n-ary algebras"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::string format = "human";
  app.add_option("--seed", seed, "Seed for sampled candidates")->envname("NARYALG_SEED");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"human", "flat"}));

  CheckOptions check_opt;
  CLI::App* check = app.add_subcommand("check", "Check identities on an algebra file");
  check->add_option("file", check_opt.file, "Algebra file or -")->required();
  check->add_option("--identity", check_opt.identities,
                    "commutative, filippov, n-leibniz, sh-jacobi, partial-assoc, total-assoc, sigma-partial, "
                    "sigma-total, 3lie-admissible")
      ->required()
      ->take_all();
  check->add_option("--sigma", check_opt.sigma, "Permutation images, 1-based, e.g. 3,2,1");

  std::string analyze_file;
  CLI::App* analyze = app.add_subcommand("analyze", "Structural report for a skew algebra file");
  analyze->add_option("file", analyze_file, "Algebra file or -")->required();

  std::string mc_file;
  CLI::App* mc = app.add_subcommand("mc", "Maurer-Cartan check d(dw) = 0");
  mc->add_option("file", mc_file, "Algebra file or -")->required();

  CatalogParams cat;
  CLI::App* catalog = app.add_subcommand("catalog", "Print a catalog algebra in file format");
  catalog->add_option("name", cat.name, "simple, dim-n, filiform, filiform5, counterexample, jr, matrix, cyclic, abelian")
      ->required();
  catalog->add_option("--arity", cat.arity);
  catalog->add_option("--dim", cat.dim);
  catalog->add_option("--kind", cat.kind, "abelian or e1 (dim-n)");
  catalog->add_option("--a", cat.a);
  catalog->add_option("--b", cat.b);
  catalog->add_option("--vars", cat.vars);
  catalog->add_option("--r", cat.r);
  catalog->add_option("--rows", cat.rows);
  catalog->add_option("--cols", cat.cols);
  catalog->add_option("--d", cat.d);

  CLI::App* groupalg = app.add_subcommand("groupalg", "Group algebra identities");
  groupalg->require_subcommand(1);
  int wv_arity = 3;
  CLI::App* wv = groupalg->add_subcommand("wv", "Scalar alpha(n) with w o v = alpha(n) w");
  wv->add_option("--arity", wv_arity)->required();
  std::string alpha = "1", beta = "1", gamma = "1";
  CLI::App* colored = groupalg->add_subcommand("colored", "Scalar of w o (alpha Id + beta c + gamma c^2)");
  colored->add_option("--alpha", alpha);
  colored->add_option("--beta", beta);
  colored->add_option("--gamma", gamma);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  const bool flat = format == "flat";
  try {
    if (*check) return run_check(check_opt, flat);
    if (*analyze) return run_analyze(analyze_file, seed, flat);
    if (*mc) return run_mc(mc_file, flat);
    if (*catalog) {
      std::cout << serialize_algebra(catalog_product(cat));
      return kExitPass;
    }
    if (*wv) {
      Report rep(flat);
      rep.add("alpha(" + std::to_string(wv_arity) + ")", "alpha", verify_wv_identity(wv_arity).str());
      rep.print(std::cout);
      return kExitPass;
    }
    if (*colored) {
      Report rep(flat);
      const Rational s = colored_reduction(parse_rational_flag("--alpha", alpha), parse_rational_flag("--beta", beta),
                                           parse_rational_flag("--gamma", gamma));
      rep.add("scalar", "scalar", s.str());
      rep.print(std::cout);
      return kExitPass;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
