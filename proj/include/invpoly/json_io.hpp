#pragma once

// JSON encodings shared by the library and the CLI.
//
//   HSequence     {"prefix":[...], "tail_offset":t}
//   PairSet       [[i,j], ...] sorted
//   Permutation   [pi_1, ..., pi_n]
//   BinomialPoly  {"terms":[{"c":c,"s":s,"d":d}, ...]}
//   MonomialPoly  {"num":[...], "den":[...]}
//   QPoly         {"coeffs":[c0, c1, ...]}
//   IntSequence   {"origin":k0, "values":[...]}
//   Poset         {"n":N, "covers":[[a,b], ...]}
//
// Exact integers are JSON numbers when they fit in 64 bits, strings otherwise.

#include "invpoly/core.hpp"
#include "invpoly/expansions.hpp"
#include "invpoly/graded.hpp"
#include "invpoly/polynomial.hpp"
#include "invpoly/poset.hpp"

#include "json.hpp"

namespace invpoly {

using Json = nlohmann::ordered_json;

Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);

void to_json(Json& j, const HSequence& h);
void to_json(Json& j, const PairSet& S);
void to_json(Json& j, const Permutation& pi);
void to_json(Json& j, const BinomialPoly& p);
void to_json(Json& j, const MonomialPoly& p);
void to_json(Json& j, const QPoly& p);
void to_json(Json& j, const IntSequence& s);
void to_json(Json& j, const Poset& P);
void to_json(Json& j, const ExpansionResult& r);
void to_json(Json& j, const GradedExpansion& ge);
void to_json(Json& j, const ConjectureReport& report);
/// Report with one row per checked set, including per-set timing.
Json conjecture_report_json(const ConjectureReport& report, bool per_set);

/// Decoders validate and throw ParseError on malformed input.
HSequence hsequence_from_json(const Json& j);
PairSet pairset_from_json(const Json& j);
Permutation permutation_from_json(const Json& j);
BinomialPoly binomial_poly_from_json(const Json& j);
MonomialPoly monomial_poly_from_json(const Json& j);
QPoly qpoly_from_json(const Json& j);
IntSequence int_sequence_from_json(const Json& j);
Poset poset_from_json(const Json& j);

/// Parse text as JSON, mapping syntax errors to ParseError.
Json parse_json_text(std::string_view text);

}  // namespace invpoly
