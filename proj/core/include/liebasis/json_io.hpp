#ifndef LIEBASIS_JSON_IO_HPP
#define LIEBASIS_JSON_IO_HPP

#include "liebasis/lie_algebra.hpp"
#include "liebasis/poly_matrix.hpp"
#include "liebasis/realize.hpp"
#include "liebasis/tensor.hpp"
#include "liebasis/vector_field.hpp"
#include "liebasis/verify.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <utility>

namespace liebasis {

using Json = nlohmann::json;

/// All readers raise Error(Parse) on malformed data; all writers emit the
/// canonical form (terms in graded-lex order, leading term first, rationals
/// in lowest terms).  Files carry a top-level "format_version": 1.

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const PolyMatrix& m);
PolyMatrix poly_matrix_from_json(const Json& j);

Json to_json(const RatMatrix& m);
RatMatrix rat_matrix_from_json(const Json& j);

Json to_json(const LieAlgebra& L);
LieAlgebra algebra_from_json(const Json& j);

Json to_json(const SolvableSplit& split);
Json to_json(const LeviData& levi);
/// A split file may carry "solvable", "levi", or both.
std::pair<std::optional<SolvableSplit>, std::optional<LeviData>>
splits_from_json(const Json& j);

Json to_json(const FieldFamily& fam);
FieldFamily field_family_from_json(const Json& j);

Json to_json(const TensorElement& t);
TensorElement tensor_from_json(const Json& j,
                               std::shared_ptr<const LieAlgebra> algebra);

Json to_json(const AhatElement& a);
AhatElement ahat_from_json(const Json& j,
                           std::shared_ptr<const LieAlgebra> algebra);

Json to_json(const Realization& real);
Realization realization_from_json(const Json& j);

Json to_json(const FactoredAutomorphism& fact);
FactoredAutomorphism factored_automorphism_from_json(const Json& j);

/// List of polynomials sharing one ring, {"n": n, "polys": [...]}.
Json polynomial_list_to_json(const std::vector<Polynomial>& polys);
std::vector<Polynomial> polynomial_list_from_json(const Json& j);

/// Report for a full realization check; sections that were not run are null.
Json to_json(const VerificationReport& report);
Json to_json(const BasicReport& report);

/// Writes with a "format_version": 1 field added at the top level.
void save_json_file(const std::filesystem::path& path, Json content);

/// Reads and checks the format_version field.
Json load_json_file(const std::filesystem::path& path);

} // namespace liebasis

#endif
