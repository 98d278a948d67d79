/// Command-line front end.  Exit codes: 0 success (and, for `verify`, a
/// passing verdict), 1 failing verdict, 2 unreadable or malformed input
/// files, 3 input that is readable but outside a construction's
/// preconditions, 4 internal failure (a construction whose output the
/// independent checker rejects).

#include "liebasis/errors.hpp"
#include "liebasis/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace liebasis;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::Parse:
  case ErrorKind::Structural:
    return 2;
  case ErrorKind::Internal:
    return 4;
  default:
    return 3;
  }
}

/// LIEBASIS_SEED overrides the seed used for randomized checks and the
/// automatic split search.
std::uint64_t seed_from_env() {
  const char* raw = std::getenv("LIEBASIS_SEED");
  if (!raw || !*raw) return kDefaultVerifySeed;
  char* end = nullptr;
  unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0')
    fail(ErrorKind::Parse, "LIEBASIS_SEED must be a decimal integer");
  return static_cast<std::uint64_t>(value);
}

struct RealizeArgs {
  std::string algebra_path;
  std::string mode = "auto";
  std::string split_path;
  std::string out_path;
  std::string report_path;
  bool paper_signs = false;
};

Realization dispatch_realize(const LieAlgebra& L, const RealizeArgs& args,
                             const std::optional<SolvableSplit>& solvable,
                             const std::optional<LeviData>& levi,
                             std::uint64_t seed) {
  RealizeOptions options{args.paper_signs};
  if (args.mode == "nilpotent") return realize_nilpotent(L, options);
  if (args.mode == "solvable") {
    if (!solvable)
      fail(ErrorKind::SplitInvalid,
           "solvable mode needs --split with a 'solvable' object");
    return realize_solvable(L, *solvable, options);
  }
  if (args.mode == "general") {
    if (!levi || !solvable)
      fail(ErrorKind::SplitInvalid,
           "general mode needs --split with 'levi' and 'solvable' objects");
    return realize_general(L, *levi, *solvable, options);
  }
  if (args.mode != "auto")
    fail(ErrorKind::Structural, "unknown mode '" + args.mode + "'");

  if (is_nilpotent(L)) return realize_nilpotent(L, options);
  if (is_solvable(L)) {
    if (solvable) return realize_solvable(L, *solvable, options);
    std::optional<CartanSuggestion> suggestion = heuristic_cartan_split(L, seed);
    if (!suggestion)
      fail(ErrorKind::SplitInvalid,
           "automatic split search failed; rerun with --split naming a "
           "'solvable' object {\"k\": .., \"m\": ..}");
    Realization real =
        realize_solvable(suggestion->transformed, suggestion->split, options);
    real.witness.basis_change = suggestion->change;
    real.witness.notes.push_back(
        "basis reordered by the automatic split search; the output refers to "
        "the transformed structure constants");
    return real;
  }
  if (!levi || !solvable)
    fail(ErrorKind::SplitInvalid,
         "algebra is neither nilpotent nor solvable; rerun with --split "
         "naming 'levi' and 'solvable' objects");
  return realize_general(L, *levi, *solvable, options);
}

int cmd_realize(const RealizeArgs& args) {
  std::uint64_t seed = seed_from_env();
  LieAlgebra L = algebra_from_json(load_json_file(args.algebra_path));
  std::optional<SolvableSplit> solvable;
  std::optional<LeviData> levi;
  if (!args.split_path.empty())
    std::tie(solvable, levi) = splits_from_json(load_json_file(args.split_path));

  Realization real = dispatch_realize(L, args, solvable, levi, seed);
  VerificationReport report = verify_realization(real.algebra, real, seed);
  std::cout << report_to_text(real.algebra, real, report);
  if (!args.out_path.empty()) save_json_file(args.out_path, to_json(real));
  if (!args.report_path.empty())
    save_json_file(args.report_path, to_json(report));
  if (!report.verdict) {
    std::cerr << "error: constructed fields failed independent verification\n";
    return 4;
  }
  return 0;
}

int cmd_verify(const std::string& algebra_path, const std::string& fields_path) {
  LieAlgebra L = algebra_from_json(load_json_file(algebra_path));
  FieldFamily fam = field_family_from_json(load_json_file(fields_path));
  BasicReport report = check_basic(L, fam);
  std::cout << report_to_text(L, fam, report);
  return report.verdict ? 0 : 1;
}

int cmd_peel(const std::string& algebra_path, const std::string& bmatrix_path,
             const std::string& out_path) {
  LieAlgebra L = algebra_from_json(load_json_file(algebra_path));
  PolyMatrix b = poly_matrix_from_json(load_json_file(bmatrix_path));
  FactoredAutomorphism fact = peel_to_factored_automorphism(L, b);
  if (fact.factors.empty()) {
    std::cout << "identity (no factors)\n";
  } else {
    for (const auto& factor : fact.factors)
      std::cout << "exp(ad (" << factor.h.str() << ") (x) l" << factor.column
                << ")\n";
  }
  if (!out_path.empty()) save_json_file(out_path, to_json(fact));
  return 0;
}

int cmd_commute(const std::string& polys_path, const std::string& out_path) {
  std::vector<Polynomial> polys =
      polynomial_list_from_json(load_json_file(polys_path));
  FieldFamily fam = jacobian_dual_basis(polys);
  for (int i = 1; i <= fam.size(); ++i)
    std::cout << "D" << i << " = " << fam.field(i).str() << "\n";
  if (!out_path.empty()) save_json_file(out_path, to_json(fam));
  return 0;
}

template <typename Body>
int run_guarded(Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"polynomial vector-field realizations of Lie algebras"};
  app.require_subcommand(1);

  RealizeArgs rargs;
  CLI::App* realize = app.add_subcommand(
      "realize", "construct fields realizing an algebra and verify them");
  realize->add_option("--algebra", rargs.algebra_path, "algebra JSON file")
      ->required();
  realize->add_option("--mode", rargs.mode,
                      "auto, nilpotent, solvable, or general")
      ->check(CLI::IsMember({"auto", "nilpotent", "solvable", "general"}));
  realize->add_option("--split", rargs.split_path, "split JSON file");
  realize->add_option("--out", rargs.out_path, "write the realization here");
  realize->add_option("--report", rargs.report_path,
                      "write the verification report here");
  realize->add_flag("--paper-signs", rargs.paper_signs,
                    "flip the solvable construction's seed orientation");

  std::string verify_algebra, verify_fields;
  CLI::App* verify = app.add_subcommand(
      "verify", "check whether given fields realize an algebra");
  verify->add_option("--algebra", verify_algebra, "algebra JSON file")
      ->required();
  verify->add_option("--fields", verify_fields, "field family JSON file")
      ->required();

  std::string peel_algebra, peel_bmatrix, peel_out;
  CLI::App* peel = app.add_subcommand(
      "peel", "factor a commuting coefficient matrix into shear automorphisms");
  peel->add_option("--algebra", peel_algebra, "algebra JSON file")->required();
  peel->add_option("--bmatrix", peel_bmatrix, "coefficient matrix JSON file")
      ->required();
  peel->add_option("--out", peel_out, "write the factor list here");

  std::string commute_polys, commute_out;
  CLI::App* commute = app.add_subcommand(
      "commute", "commuting fields attached to a constant-Jacobian map");
  commute->add_option("--polys", commute_polys, "polynomial list JSON file")
      ->required();
  commute->add_option("--out", commute_out, "write the field family here");

  CLI11_PARSE(app, argc, argv);

  if (realize->parsed()) return run_guarded([&] { return cmd_realize(rargs); });
  if (verify->parsed())
    return run_guarded([&] { return cmd_verify(verify_algebra, verify_fields); });
  if (peel->parsed())
    return run_guarded(
        [&] { return cmd_peel(peel_algebra, peel_bmatrix, peel_out); });
  return run_guarded([&] { return cmd_commute(commute_polys, commute_out); });
}
