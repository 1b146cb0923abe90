// Command-line front end: validate algebras, print eulerian idempotents,
// compute (co)homology, run the Barr decomposition check, and extend or
// verify star products.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "harrco/deform.hpp"
#include "harrco/io.hpp"

using namespace harrco;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;
constexpr int kExitObstruction = 3;

std::size_t default_cap()
{
  if (const char* env = std::getenv("HARRCO_CAP")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0)
      return static_cast<std::size_t>(v);
  }
  return kDefaultCap;
}

std::string tuple_names(const StructureAlgebra& a, const std::vector<std::size_t>& t)
{
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i)
      out += ",";
    out += a.basis_names[t[i]];
  }
  return out + ")";
}

int cmd_validate(const std::string& path, const std::string& export_path, bool machine)
{
  StructureAlgebra a = load_algebra(path);
  std::vector<ValidationIssue> issues = validate(a);
  if (machine) {
    std::cout << "dim=" << a.dim << "\n";
    std::cout << "issues=" << issues.size() << "\n";
    for (const auto& issue : issues)
      std::cout << "issue kind=" << issue.kind << " indices=" << issue.indices[0] << ","
                << issue.indices[1] << "," << issue.indices[2] << "," << issue.indices[3]
                << "\n";
  } else {
    if (issues.empty()) {
      std::cout << "valid commutative associative unital algebra, dim " << a.dim << "\n";
    } else {
      for (const auto& issue : issues)
        std::cout << issue.kind << ": " << issue.message << "\n";
    }
  }
  if (!export_path.empty() && issues.empty())
    write_json_file(export_path, algebra_to_json(a));
  return issues.empty() ? kExitOk : kExitDomain;
}

int cmd_idempotents(std::size_t n, int i, std::size_t degree_cap, bool machine)
{
  if (n < 1 || n > degree_cap) {
    std::cerr << "error: n must lie in 1.." << degree_cap << "\n";
    return kExitDomain;
  }
  auto label = [&](std::size_t idx) {
    return machine ? "e_" + std::to_string(n) + "_" + std::to_string(idx) + "="
                   : "e_" + std::to_string(n) + "^(" + std::to_string(idx) + ") = ";
  };
  if (i > 0) {
    std::cout << label(static_cast<std::size_t>(i))
              << eulerian_idempotent(n, static_cast<std::size_t>(i)).to_string() << "\n";
    return kExitOk;
  }
  GroupAlgebraElement sum(n);
  for (std::size_t idx = 1; idx <= n; ++idx) {
    GroupAlgebraElement e = eulerian_idempotent(n, idx);
    sum += e;
    std::cout << label(idx) << e.to_string() << "\n";
  }
  const bool unity = sum == GroupAlgebraElement::unit(n);
  std::cout << (machine ? "partition_of_unity=" : "partition of unity: ")
            << (unity ? "ok" : "FAILED") << "\n";
  return unity ? kExitOk : kExitDomain;
}

int cmd_cohomology(const std::string& path, const std::string& variant_name,
                   std::size_t max_degree, bool representatives, std::size_t cap,
                   bool machine)
{
  StructureAlgebra a = load_algebra(path);
  if (!validate(a).empty()) {
    std::cerr << "error: input algebra fails validation\n";
    return kExitDomain;
  }
  const Variant variant =
      variant_name == "harrison" ? Variant::harrison : Variant::hochschild;
  const SymmetricModule m = SymmetricModule::regular(a);
  for (std::size_t n = variant == Variant::harrison ? 1 : 0; n <= max_degree; ++n) {
    CohomologyReport rep = cohomology(a, m, n, variant, cap);
    if (machine) {
      std::cout << "degree=" << n << " variant=" << variant_name
                << " dim_cochains=" << rep.dim_cochains
                << " dim_cocycles=" << rep.dim_cocycles
                << " dim_coboundaries=" << rep.dim_coboundaries
                << " betti=" << rep.betti << "\n";
    } else {
      std::cout << variant_name << " degree " << n << ": cochains " << rep.dim_cochains
                << ", cocycles " << rep.dim_cocycles << ", coboundaries "
                << rep.dim_coboundaries << ", betti " << rep.betti << "\n";
    }
    if (representatives)
      for (const Cochain& f : rep.representatives)
        std::cout << "representative " << cochain_to_json(f).dump() << "\n";
  }
  return kExitOk;
}

int cmd_homology(const std::string& path, const std::string& variant_name,
                 const std::string& presentation_name, std::size_t max_degree,
                 std::size_t cap, bool machine)
{
  StructureAlgebra a = load_algebra(path);
  if (!validate(a).empty()) {
    std::cerr << "error: input algebra fails validation\n";
    return kExitDomain;
  }
  const Variant variant =
      variant_name == "harrison" ? Variant::harrison : Variant::hochschild;
  const HarrisonPresentation pres = presentation_name == "idempotent"
                                        ? HarrisonPresentation::idempotent_image
                                        : HarrisonPresentation::quotient;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    HomologyReport rep = homology(a, n, variant, pres, cap);
    if (machine) {
      std::cout << "degree=" << n << " variant=" << variant_name;
      if (variant == Variant::harrison)
        std::cout << " presentation=" << presentation_name;
      std::cout << " dim_chains=" << rep.dim_chain_space << " betti=" << rep.betti
                << "\n";
    } else {
      std::cout << variant_name << " degree " << n << ": chain space "
                << rep.dim_chain_space << ", betti " << rep.betti << "\n";
    }
  }
  return kExitOk;
}

int cmd_decompose(const std::string& path, std::size_t max_degree, std::size_t cap,
                  bool machine)
{
  StructureAlgebra a = load_algebra(path);
  if (!validate(a).empty()) {
    std::cerr << "error: input algebra fails validation\n";
    return kExitDomain;
  }
  bool all_ok = true;
  for (std::size_t n = 2; n <= max_degree; ++n) {
    BarrReport rep = barr_decomposition_check(a, n, cap);
    all_ok = all_ok && rep.ok();
    if (machine) {
      std::cout << "degree=" << n << " dim_chains=" << rep.dim_chain_space
                << " dim_shuffles=" << rep.dim_shuffle_span
                << " dim_image=" << rep.dim_idempotent_image
                << " dim_intersection=" << rep.dim_intersection
                << " dim_sum=" << rep.dim_sum
                << " direct_sum=" << (rep.direct_sum ? "yes" : "no")
                << " shuffles_eq_complement="
                << (rep.shuffle_equals_complement ? "yes" : "no") << "\n";
    } else {
      std::cout << "degree " << n << ": shuffle span " << rep.dim_shuffle_span
                << " + idempotent image " << rep.dim_idempotent_image << " = "
                << rep.dim_sum << " of " << rep.dim_chain_space
                << (rep.ok() ? " (direct sum confirmed)" : " (FAILED)") << "\n";
    }
  }
  return all_ok ? kExitOk : kExitDomain;
}

int cmd_deform(const std::string& path, const std::string& seed_path, std::size_t order,
               const std::string& mode_name, const std::string& out_path, bool machine)
{
  StructureAlgebra a = load_algebra(path);
  if (!validate(a).empty()) {
    std::cerr << "error: input algebra fails validation\n";
    return kExitDomain;
  }
  const DeformMode mode =
      mode_name == "associative" ? DeformMode::associative : DeformMode::commutative;
  Cochain seed = cochain_from_json(a, load_json_file(seed_path));
  if (seed.arity != 2) {
    std::cerr << "error: seed must be an arity-2 cochain\n";
    return kExitDomain;
  }
  {
    Cochain d = coboundary(seed);
    if (!d.is_zero()) {
      for (std::size_t row = 0; row < d.values.rows(); ++row)
        for (std::size_t c = 0; c < d.values.cols(); ++c)
          if (sgn(d.values.at(row, c)) != 0) {
            std::cerr << "error: seed is not a 2-cocycle; delta(seed) is nonzero at "
                      << tuple_names(a, index_tuple(row, 3, a.dim)) << "\n";
            return kExitDomain;
          }
    }
    if (mode == DeformMode::commutative && !is_harrison(seed).harrison) {
      std::cerr << "error: seed must be symmetric in commutative mode\n";
      return kExitDomain;
    }
  }
  auto result = extend_deformation(a, seed, order, mode);
  if (std::holds_alternative<ObstructionReport>(result)) {
    const ObstructionReport& rep = std::get<ObstructionReport>(result);
    const char* space = mode == DeformMode::commutative ? "Harr^3" : "HH^3";
    if (machine) {
      std::cout << "obstructed=yes order=" << rep.order << " space=" << space
                << " class_nonzero=" << (rep.cohomology_class_nonzero ? "yes" : "no")
                << "\n";
    } else {
      std::cout << "extension blocked at order " << rep.order
                << ": obstruction class in " << space << " is nonzero\n";
    }
    return kExitObstruction;
  }
  const StarTruncation& s = std::get<StarTruncation>(result);
  if (!out_path.empty())
    write_json_file(out_path, star_to_json(s));
  else
    std::cout << star_to_json(s).dump(2) << "\n";
  if (machine)
    std::cout << "obstructed=no order=" << s.order() << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& path, const std::string& star_path, bool machine)
{
  StructureAlgebra a = load_algebra(path);
  if (!validate(a).empty()) {
    std::cerr << "error: input algebra fails validation\n";
    return kExitDomain;
  }
  StarTruncation s = star_from_json(a, load_json_file(star_path));
  if (!(s.terms[0] == Cochain::multiplication(a))) {
    std::cerr << "error: order-0 term differs from the algebra multiplication\n";
    return kExitDomain;
  }
  bool all_ok = true;
  for (std::size_t n = 0; n <= s.order(); ++n) {
    Cochain an = order_associator(s, n);
    const bool assoc = an.is_zero();
    const bool sym = s.terms[n].is_symmetric();
    all_ok = all_ok && assoc;
    if (machine) {
      std::cout << "order=" << n << " associative=" << (assoc ? "yes" : "no")
                << " symmetric=" << (sym ? "yes" : "no");
      if (!assoc) {
        std::vector<std::size_t> t;
        for (std::size_t row = 0; row < an.values.rows() && t.empty(); ++row)
          for (std::size_t c = 0; c < an.values.cols(); ++c)
            if (sgn(an.values.at(row, c)) != 0) {
              t = index_tuple(row, 3, a.dim);
              break;
            }
        std::cout << " witness=" << tuple_names(a, t);
      }
      std::cout << "\n";
    } else {
      std::cout << "order " << n << ": associator " << (assoc ? "vanishes" : "NONZERO")
                << ", term " << (sym ? "symmetric" : "not symmetric") << "\n";
    }
  }
  MaurerCartanReport mc = maurer_cartan_check(s);
  const bool mc_ok = mc.all_vanish() && mc.consistent_with_associators;
  std::cout << (machine ? "maurer_cartan=" : "Maurer-Cartan check: ")
            << (mc_ok && all_ok ? "ok" : "FAILED") << "\n";
  return all_ok && mc_ok ? kExitOk : kExitDomain;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"exact Hochschild/Harrison cohomology and commutative deformations"};
  app.require_subcommand(1);
  const std::size_t cap0 = default_cap();
  bool machine = false;
  app.add_flag("--machine", machine, "line-oriented key=value output");

  std::string algebra_path, seed_path, star_path, export_path, out_path;
  std::string variant = "hochschild", presentation = "quotient", mode = "commutative";
  std::size_t max_degree = 3, order = 2, cap = cap0, n_value = 1;
  int i_value = 0;
  bool representatives = false;

  CLI::App* validate_cmd = app.add_subcommand("validate", "check algebra invariants");
  validate_cmd->add_option("algebra", algebra_path, "algebra file or builtin:<name>")
      ->required();
  validate_cmd->add_option("--export", export_path, "write the algebra back out");

  CLI::App* idem_cmd = app.add_subcommand("idempotents", "print eulerian idempotents");
  idem_cmd->add_option("n", n_value, "symmetric group degree")->required();
  idem_cmd->add_option("i", i_value, "which idempotent (default: all)");
  std::size_t degree_cap = 8;
  idem_cmd->add_option("--cap", degree_cap, "maximum degree n");

  CLI::App* coh_cmd = app.add_subcommand("cohomology", "betti numbers of HH/Harr");
  coh_cmd->add_option("algebra", algebra_path)->required();
  coh_cmd->add_option("--variant", variant)->check(CLI::IsMember({"hochschild", "harrison"}));
  coh_cmd->add_option("--max-degree", max_degree);
  coh_cmd->add_flag("--representatives", representatives, "print representative cocycles");
  coh_cmd->add_option("--cap", cap, "chain space dimension cap");

  CLI::App* hom_cmd = app.add_subcommand("homology", "homology with coefficients in A");
  hom_cmd->add_option("algebra", algebra_path)->required();
  hom_cmd->add_option("--variant", variant)->check(CLI::IsMember({"hochschild", "harrison"}));
  hom_cmd->add_option("--presentation", presentation)
      ->check(CLI::IsMember({"quotient", "idempotent"}));
  hom_cmd->add_option("--max-degree", max_degree);
  hom_cmd->add_option("--cap", cap, "chain space dimension cap");

  CLI::App* dec_cmd = app.add_subcommand("decompose", "Barr decomposition check");
  dec_cmd->add_option("algebra", algebra_path)->required();
  dec_cmd->add_option("--max-degree", max_degree);
  dec_cmd->add_option("--cap", cap, "chain space dimension cap");

  CLI::App* def_cmd = app.add_subcommand("deform", "extend a seed cocycle to a star product");
  def_cmd->add_option("algebra", algebra_path)->required();
  def_cmd->add_option("seed", seed_path, "seed 2-cocycle file")->required();
  def_cmd->add_option("--order", order)->required();
  def_cmd->add_option("--mode", mode)->check(CLI::IsMember({"commutative", "associative"}));
  def_cmd->add_option("--out", out_path, "star product output file");

  CLI::App* ver_cmd = app.add_subcommand("verify", "verify a star product file");
  ver_cmd->add_option("algebra", algebra_path)->required();
  ver_cmd->add_option("star", star_path, "star product file")->required();

  for (CLI::App* sub : {validate_cmd, idem_cmd, coh_cmd, hom_cmd, dec_cmd, def_cmd, ver_cmd})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed())
      return cmd_validate(algebra_path, export_path, machine);
    if (idem_cmd->parsed())
      return cmd_idempotents(n_value, i_value, degree_cap, machine);
    if (coh_cmd->parsed())
      return cmd_cohomology(algebra_path, variant, max_degree, representatives, cap,
                            machine);
    if (hom_cmd->parsed())
      return cmd_homology(algebra_path, variant, presentation, max_degree, cap, machine);
    if (dec_cmd->parsed())
      return cmd_decompose(algebra_path, max_degree, cap, machine);
    if (def_cmd->parsed())
      return cmd_deform(algebra_path, seed_path, order, mode, out_path, machine);
    if (ver_cmd->parsed())
      return cmd_verify(algebra_path, star_path, machine);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ResourceCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}
