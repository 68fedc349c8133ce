#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hives/bridge.hpp"
#include "hives/category.hpp"
#include "hives/io.hpp"
#include "hives/spacetime.hpp"
#include "hives/tableau.hpp"
#include "hives/triangle.hpp"
#include "hives/verify.hpp"

namespace {

using namespace hives;

// exit codes: 0 success, 1 verification failure, 2 usage/parse error
constexpr int kOk = 0, kVerifyFail = 1, kUsage = 2;

void print_triangle(const std::string& name, const TriangleArray& p,
                    bool normalized) {
  std::cout << name << ":\n"
            << triangle_to_string(normalized ? normalize(p) : p);
}

int cmd_lr(const std::string& ls, const std::string& ms, const std::string& ns,
           const std::string& method, bool list) {
  DominantWeight lambda = parse_weight_arg(ls);
  DominantWeight mu = parse_weight_arg(ms);
  DominantWeight nu = parse_weight_arg(ns);
  if (!is_weakly_decreasing(lambda) || !is_weakly_decreasing(mu) ||
      !is_weakly_decreasing(nu))
    throw std::invalid_argument("lr: weights must be weakly decreasing");
  if (lambda.size() != mu.size() || mu.size() != nu.size())
    throw std::invalid_argument("lr: weights must share length");
  bool want_crystal = method == "crystal" || method == "both";
  if (want_crystal &&
      !(is_partition(lambda) && is_partition(mu) && is_partition(nu)))
    throw std::invalid_argument(
        "lr: the crystal method needs non-negative weights (use --method "
        "hive)");
  LrCount c = lr_count(lambda, mu, nu);
  if (method == "hive") {
    std::cout << c.hive << "\n";
  } else if (method == "crystal") {
    std::cout << *c.crystal << "\n";
  } else {
    std::cout << "hive=" << c.hive << " crystal=" << *c.crystal << "\n";
    if (c.hive != *c.crystal) return kVerifyFail;
  }
  if (list) {
    int idx = 0;
    for (const auto& h : enumerate_hives(lambda, mu, nu))
      print_triangle("hive " + std::to_string(idx++), h.array(), false);
  }
  return kOk;
}

int cmd_assoc(const std::string& mfile, const std::string& nfile, bool inverse,
              bool dump_slices, bool stages, bool normalized) {
  TriangleArray a = parse_triangle_file(mfile);
  TriangleArray b = parse_triangle_file(nfile);
  if (inverse) {
    AssociateInverseResult r = associate_inverse(a, b);
    if (dump_slices)
      std::cout << render_slices(r.state, tetrahedron_region(a.n()));
    print_triangle("M", r.m_raw, normalized);
    print_triangle("N", r.n_raw, normalized);
    return kOk;
  }
  AssociateResult r = associate(a, b);
  if (dump_slices)
    std::cout << render_slices(r.state, tetrahedron_region(a.n()));
  if (stages) {
    auto qs = assoc_stages(r);
    for (size_t k = 0; k < qs.size(); ++k)
      print_triangle("Q^" + std::to_string(qs.size() - 1 - k), qs[k],
                     normalized);
  }
  print_triangle("P", r.p_raw, normalized);
  print_triangle("Q", r.q_raw, normalized);
  return kOk;
}

int cmd_commute(const std::string& pfile, bool dump_slices, bool stages,
                bool normalized) {
  TriangleArray p = parse_triangle_file(pfile);
  CommuteResult r = commute(p);
  if (dump_slices)
    std::cout << render_slices(r.state, quarter_octahedron_region(p.n()));
  if (stages) {
    auto fl = commute_stages(p);
    for (size_t k = 0; k < fl.size(); ++k)
      print_triangle("stage " + std::to_string(k), fl[k].quasi, normalized);
  }
  print_triangle("P*", r.star_raw, normalized);
  return kOk;
}

int cmd_convert(const std::string& kind, const std::string& input,
                const std::string& mus) {
  if (kind == "hat" || kind == "tilde") {
    TriangleArray p = parse_triangle_file(input);
    std::cout << gt_to_string(kind == "hat" ? hat(p) : tilde(p));
  } else if (kind == "unhat") {
    if (mus.empty())
      throw std::invalid_argument("convert unhat: --mu is required");
    GTPattern g = parse_gt_file(input);
    Hive h = unhat(g, parse_weight_arg(mus));
    std::cout << triangle_to_string(h.array());
  } else if (kind == "gt2tab") {
    std::cout << tableau_to_string(tableau_from_gt(parse_gt_file(input)));
  } else if (kind == "tab2gt") {
    std::cout << gt_to_string(gt_from_tableau(parse_tableau_file(input)));
  } else if (kind == "jdt") {
    SkewTableau t = parse_tableau_file(input);
    std::cout << tableau_to_string(jdt_rectify(t).rectified);
  } else if (kind == "xi") {
    std::cout << gt_to_string(schutzenberger(parse_gt_file(input)));
  } else {
    throw std::invalid_argument("convert: unknown kind '" + kind + "'");
  }
  return kOk;
}

int cmd_verify(const std::string& suite, int max_size, unsigned seed) {
  SuiteReport rep = run_suite(suite, max_size, seed);
  std::cout << rep.name << ": " << (rep.checks - rep.failures) << "/"
            << rep.checks << " checks passed";
  if (rep.section_checks)
    std::cout << ", " << (rep.section_checks - rep.section_failures) << "/"
              << rep.section_checks << " section conditions hold";
  std::cout << "\n";
  for (const auto& note : rep.notes) std::cout << "  " << note << "\n";
  return rep.ok() ? kOk : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hive model of gl_n tensor products: octahedron recurrence, "
               "crystals, and the category-level checks"};
  app.require_subcommand(1);

  std::string lam, mu, nu, method = "hive";
  bool list = false;
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
  lr->add_option("lambda", lam)->required();
  lr->add_option("mu", mu)->required();
  lr->add_option("nu", nu)->required();
  lr->add_option("--method", method)
      ->check(CLI::IsMember({"hive", "crystal", "both"}));
  lr->add_flag("--list", list, "print the hives");

  std::string mfile, nfile;
  bool inverse = false, dump = false, stages = false, normalized = false;
  auto* assoc = app.add_subcommand("assoc", "associator on a pair of hives");
  assoc->add_option("M", mfile)->required();
  assoc->add_option("N", nfile)->required();
  assoc->add_flag("--inverse", inverse, "treat inputs as (P,Q)");
  assoc->add_flag("--dump-slices", dump);
  assoc->add_flag("--stages", stages, "print the quasi-hive stages");
  assoc->add_flag("--normalize", normalized, "force top = 0 on output");

  std::string pfile;
  bool cdump = false, cstages = false, cnorm = false;
  auto* comm = app.add_subcommand("commute", "commutor on a hive");
  comm->add_option("P", pfile)->required();
  comm->add_flag("--dump-slices", cdump);
  comm->add_flag("--stages", cstages, "print the flip stages");
  comm->add_flag("--normalize", cnorm, "force top = 0 on output");

  std::string kind, input, muarg;
  auto* conv = app.add_subcommand("convert", "hive/GT/tableau translations");
  conv->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"hat", "tilde", "unhat", "gt2tab", "tab2gt",
                             "jdt", "xi"}));
  conv->add_option("input", input)->required();
  conv->add_option("--mu", muarg, "mu weight for unhat");

  std::string suite;
  int max_size = -1;  // per-suite default
  unsigned seed = 20240814;
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember(verify_suite_names()));
  ver->add_option("--max-size", max_size,
                  "size bound (boundary parts or |lambda|, per suite)");
  ver->add_option("--seed", seed, "reserved for sampled suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (lr->parsed()) return cmd_lr(lam, mu, nu, method, list);
    if (assoc->parsed())
      return cmd_assoc(mfile, nfile, inverse, dump, stages, normalized);
    if (comm->parsed()) return cmd_commute(pfile, cdump, cstages, cnorm);
    if (conv->parsed()) return cmd_convert(kind, input, muarg);
    if (ver->parsed()) return cmd_verify(suite, max_size, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
