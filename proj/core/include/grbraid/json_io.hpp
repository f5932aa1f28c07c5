#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "grbraid/cluster_seed.hpp"
#include "grbraid/ext_crystal.hpp"
#include "grbraid/kring.hpp"
#include "grbraid/multisegment.hpp"
#include "grbraid/pluecker.hpp"
#include "grbraid/translation.hpp"

namespace grbraid {

using Json = nlohmann::ordered_json;

/// Malformed or semantically invalid JSON input.
class JsonFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"rank": n, "segments": [[a,b], ...]} in canonical order.
Json to_json(const Multisegment& m);
Multisegment multisegment_from_json(const Json& j);

/// {"rank": n, "entries": [{"k": k, "segments": [...]}, ...]}, k ascending.
Json to_json(const ExtElement& b);
ExtElement ext_element_from_json(const Json& j);

/// {"m": m, "terms": [{"coeff": "+3", "vars": [[i1..im], ...]}, ...]}.
Json to_json(const PlueckerPoly& p);
PlueckerPoly pluecker_from_json(const Json& j);

/// [{"i": i, "a": a, "exp": e}, ...].
Json to_json(const KMonomial& mono);
KMonomial kmonomial_from_json(const Json& j, int n);

/// [{"coeff": "+1", "monomial": [...]}, ...]; the rank travels separately.
Json to_json(const KPoly& p);
KPoly kpoly_from_json(const Json& j, int n);

Json to_json(const CrystalStats& st);

/// Polynomial, or {"num": poly, "den": poly} for a formal quotient.
Json to_json(const RationalFn& f);
RationalFn rational_from_json(const Json& j);

/// {"m", "N", "vertices": [...], "arrows": [...]}.
Json to_json(const Seed& s);
Seed seed_from_json(const Json& j);

Json to_json(const EqModWitness& w);
/// {"kind", ..., "entries": [{"case", "lhs", "rhs", "equal", "witness"?}]}.
Json to_json(const CheckReport& r);

/// Parses text, mapping parse errors to JsonFormatError.
Json parse_json(const std::string& text);

}  // namespace grbraid
