// JSON schemas for every serializable type. Rationals travel as "p/q"
// strings; integers as JSON numbers while they fit 53 bits, strings beyond.
#pragma once

#include <json.hpp>

#include "gct/characters.hpp"
#include "gct/crystal.hpp"
#include "gct/grassmannian.hpp"
#include "gct/lattice.hpp"
#include "gct/lr.hpp"
#include "gct/partition.hpp"
#include "gct/polynomial.hpp"
#include "gct/polytope.hpp"
#include "gct/stability.hpp"

namespace gct {

using Json = nlohmann::ordered_json;

Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json rat_to_json(const Rat& v);
Rat rat_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

Json to_json(const RationalPolytope& P);
RationalPolytope polytope_from_json(const Json& j);

Json to_json(const Quasipolynomial& q);
Quasipolynomial quasipolynomial_from_json(const Json& j);

Json to_json(const SmithDecomposition& s);

Json to_json(const CharacterTable& t);

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const BracketPolynomial& p);
BracketPolynomial bracket_polynomial_from_json(const Json& j);

Json int_matrix_to_json(const IntMat& m);
IntMat int_matrix_from_json(const Json& j);
Json int_vector_to_json(const IntVec& v);
IntVec int_vector_from_json(const Json& j);

Json rat_matrix_to_json(const RatMat& m);
RatMat rat_matrix_from_json(const Json& j);

Json weights_to_json(const std::vector<WeightVector>& ws);
std::vector<WeightVector> weights_from_json(const Json& j);

LRInstance lr_instance_from_json(const Json& j);

}  // namespace gct
