#ifndef QUATALG_JSON_IO_HPP
#define QUATALG_JSON_IO_HPP

// JSON encodings for every result type. decode<T>(encode(x)) reproduces x;
// objects keep canonical place order.

#include <map>
#include <vector>

#include <json.hpp>

#include "quatalg/brauer_q.hpp"
#include "quatalg/factor_q.hpp"
#include "quatalg/funcfield_fp.hpp"
#include "quatalg/funcfield_q.hpp"
#include "quatalg/number_field.hpp"

namespace quatalg {

using Json = nlohmann::ordered_json;

/// Symbols keyed by place plus their "product".
struct HilbertTable {
  std::map<PlaceQ, int> symbols;
  friend bool operator==(const HilbertTable&, const HilbertTable&) = default;
};

/// A residue table over Q(x) in place order.
struct ResidueTableQ {
  QuaternionFF algebra;
  std::vector<ResidueCharacter> residues;
};

Json encode(const BrauerClassQ& c);
Json encode(const QuaternionQ& q);
Json encode(const FactorizationQ& f);
Json encode(const SquareClassVerdict& v);
Json encode(const HilbertTable& t);
Json encode(const QuaternionFF& d);
Json encode(const ResidueCharacter& r);
Json encode(const ResidueTableQ& t);
Json encode(const IsomorphismVerdict& v);
Json encode(const QuaternionFFp& d);
Json encode(const QuatClassFp& c);
Json encode(const IsomorphismVerdictFp& v);

/// Inverse of encode; throws ParseError on malformed input and MathError
/// when the decoded value violates a type invariant.
template <class T>
T decode(const Json& j);

template <> BrauerClassQ decode<BrauerClassQ>(const Json& j);
template <> QuaternionQ decode<QuaternionQ>(const Json& j);
template <> FactorizationQ decode<FactorizationQ>(const Json& j);
template <> SquareClassVerdict decode<SquareClassVerdict>(const Json& j);
template <> HilbertTable decode<HilbertTable>(const Json& j);
template <> QuaternionFF decode<QuaternionFF>(const Json& j);
template <> ResidueCharacter decode<ResidueCharacter>(const Json& j);
template <> ResidueTableQ decode<ResidueTableQ>(const Json& j);
template <> IsomorphismVerdict decode<IsomorphismVerdict>(const Json& j);
template <> QuaternionFFp decode<QuaternionFFp>(const Json& j);
template <> QuatClassFp decode<QuatClassFp>(const Json& j);
template <> IsomorphismVerdictFp decode<IsomorphismVerdictFp>(const Json& j);

/// Parses JSON text; throws ParseError on a syntax error.
Json parse_json(std::string_view text);

}  // namespace quatalg

#endif
