#ifndef PETRUSKA_IO_JSON_H_
#define PETRUSKA_IO_JSON_H_

#include <string>
#include <string_view>

#include "petruska/bounds/bounds.h"
#include "petruska/constructions/family.h"
#include "petruska/constructions/verify.h"
#include "petruska/enumeration/enumerate.h"
#include "petruska/enumeration/theorem_k4.h"
#include "petruska/geometry/hole_triangle.h"
#include "petruska/redblue/certificate.h"

// Canonical JSON documents. Rationals are written as decimal strings
// [numerator, denominator]; output is pretty-printed with sorted keys, so
// equal values give equal bytes. Parsers throw petruska::Error naming the
// offending field.
namespace petruska::io {

std::string to_json(const constructions::ConvexFamily& family);
constructions::ConvexFamily family_from_json(std::string_view text);

// {"n": n, "blue": [[i,j,k], ...]} with triples in lexicographic order.
std::string to_json(const rb::RedBlueClique& rb);
std::string to_json(const rb::Hypergraph3& h);
rb::RedBlueClique clique_from_json(std::string_view text);

std::string to_json(const rb::Certificate& c);
std::string to_json(const rb::FVector& f);
std::string to_json(const enumeration::EnumerationReport& r);
std::string to_json(const enumeration::TheoremK4Report& r);
std::string to_json(const constructions::VerificationReport& r);
std::string to_json(const constructions::RegionCoverageReport& r);
std::string to_json(const geom::HoleTriangle& h);
std::string to_json(const bounds::InterconnectChain& c);
std::string to_json(const bounds::CrossCheckReport& r);

}  // namespace petruska::io

#endif  // PETRUSKA_IO_JSON_H_
