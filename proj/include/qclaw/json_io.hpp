#pragma once

#include "qclaw/bases.hpp"
#include "qclaw/bz_seed.hpp"

#include <json.hpp>

namespace qclaw {

using Json = nlohmann::json;

/// Integers that do not fit in int64 are written as decimal strings.
Json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

/// [[halfExp, c], ...] in increasing halfExp.
Json to_json(const Coefficient& c);
Coefficient coefficient_from_json(const Json& j);

/// [{"m": [...], "c": coefficient}, ...] sorted lexicographically by m.
Json to_json(const TorusElement& z);
TorusElement torus_from_json(const Json& j, const ContextPtr& ctx);

Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);
Json to_json(const IntVector& v);
IntVector vector_from_json(const Json& j);

/// {"labels", "frozen", "B", "Lambda", "vars": {label: element}, "name"};
/// "reference_Lambda" when the variables live in a torus other than the
/// seed's own.
Json to_json(const QuantumSeed& s);
QuantumSeed seed_from_json(const Json& j);

/// [{"mutate": k} | {"permute": [[i, sigma(i)], ...]}, ...]
Json to_json(const MutationPath& p);
MutationPath path_from_json(const Json& j);

/// {"C": rows, "d": [...]}; also accepts a preset name.
Json to_json(const CartanData& c);
CartanData cartan_from_json(const Json& j);

Json to_json(const SignedWord& w);
Json to_json(const WeightLabel& w);
Json to_json(const BZSeed& s);

Json to_json(const MultiIndex& c);
Json to_json(const StandardExpansion& e);

} // namespace qclaw
