#include "catalog.hpp"

namespace liebasis::catalog {

LieAlgebra abelian(int dim) { return LieAlgebra::abelian(dim); }

LieAlgebra heisenberg(int r) {
  int n = 2 * r + 1;
  std::vector<BracketEntry> entries;
  for (int i = 1; i <= r; ++i) entries.push_back({i, r + i, n, 1});
  return LieAlgebra::from_entries(n, entries);
}

LieAlgebra filiform4() {
  return LieAlgebra::from_entries(4, {{1, 2, 3, 1}, {1, 3, 4, 1}});
}

LieAlgebra affine_line() {
  return LieAlgebra::from_entries(2, {{1, 2, 2, 1}});
}

LieAlgebra solvable_r3() {
  return LieAlgebra::from_entries(3, {{1, 2, 2, 1}, {1, 3, 2, 1}, {1, 3, 3, 1}});
}

LieAlgebra solvable_r3_diag(const Rational& lambda) {
  return LieAlgebra::from_entries(3, {{1, 2, 2, 1}, {1, 3, 3, lambda}});
}

LieAlgebra sl2() {
  return LieAlgebra::from_entries(3, {{1, 2, 2, 2}, {1, 3, 3, -2}, {2, 3, 1, 1}});
}

std::vector<Entry> all() {
  std::vector<Entry> entries;
  for (int d = 1; d <= 5; ++d)
    entries.push_back({"abelian" + std::to_string(d), abelian(d), {}, {}, {}});
  entries.push_back({"heisenberg3", heisenberg(1), {}, {}, {}});
  entries.push_back({"heisenberg5", heisenberg(2), {}, {}, {}});
  entries.push_back({"filiform4", filiform4(), {}, {}, {}});

  SolvableSplit hyperplane{1, 1};
  entries.push_back({"affine_line", affine_line(), hyperplane, {}, {}});
  entries.push_back({"r3", solvable_r3(), hyperplane, {}, {}});
  entries.push_back({"r3_diag_1", solvable_r3_diag(1), hyperplane, {}, {}});
  entries.push_back({"r3_diag_m1", solvable_r3_diag(-1), hyperplane, {}, {}});
  entries.push_back(
      {"r3_diag_half", solvable_r3_diag(Rational(1, 2)), hyperplane, {}, {}});

  entries.push_back({"sl2", sl2(), {}, LeviData{2}, hyperplane});
  return entries;
}

std::vector<Entry> nilpotent_entries() {
  std::vector<Entry> out;
  for (Entry& entry : all())
    if (is_nilpotent(entry.algebra)) out.push_back(std::move(entry));
  return out;
}

Realization realize_entry(const Entry& entry, const RealizeOptions& options) {
  if (entry.levi)
    return realize_general(entry.algebra, *entry.levi, *entry.inner_split,
                           options);
  if (entry.split) return realize_solvable(entry.algebra, *entry.split, options);
  return realize_nilpotent(entry.algebra, options);
}

} // namespace liebasis::catalog
