#pragma once

#include <string>

#include <json.hpp>

#include "arthur/glconstraints.hpp"
#include "arthur/induction.hpp"
#include "arthur/multisegment.hpp"
#include "arthur/unitarity.hpp"

namespace arthur::io {

using nlohmann::json;

// Readers throw Error(ParseError) with a JSON-pointer path on schema problems.
HalfInt read_halfint(const json& j, const std::string& path);
Rational read_rational(const json& j, const std::string& path);
json write(HalfInt h);
json write(const Rational& r);

VExtZSeg read_vseg(const json& j, const std::string& path);
json write(const VExtZSeg& e);
ZSeq read_zseq(const json& j, const std::string& path);
json write(const ZSeq& s);

CuspidalRegistry read_registry(const json& j, const std::string& path);
json write(const CuspidalRegistry& r);
GroupType read_group(const json& j, const std::string& path);
json write(const GroupType& g);

// {"rows":[...]} with an optional "group"; `fallback` is used when absent.
ExtMultiSegment read_multisegment(const json& j, const std::string& path, const GroupType* fallback = nullptr);
json write(const ExtMultiSegment& E);

json write(const Character& c);
json write(const InductionResult& r);
json write(const UnitarityVerdict& v);
json write(const ConstraintReport& r);

// {"cuspidals":[...],"group":{...},"rows":[...]}
struct MultiSegmentDocument {
  CuspidalRegistry cuspidals;
  ExtMultiSegment E;
};
MultiSegmentDocument read_multisegment_document(const json& j);
json write(const MultiSegmentDocument& d);

// {"cuspidals","group","nu":[{"rho","a","b","x"}],"bp":[{"rho","a","b"}],"gp":{"rows",...}}
struct UnitaryDocument {
  CuspidalRegistry cuspidals;
  APlusRep pi;
};
UnitaryDocument read_unitary_document(const json& j);
json write(const UnitaryDocument& d);

// {"cuspidals","global_type","nu":[{"rho","a","x"}],"tempered":[{"rho","a"}]}
struct GLDocument {
  CuspidalRegistry cuspidals;
  GLLocalComponent component;
};
GLDocument read_gl_document(const json& j);
json write(const GLDocument& d);

// {"cuspidals","group","summands":[{"rho","a","b","x"?}]}
struct ParameterDocument {
  CuspidalRegistry cuspidals;
  ArthurParameter psi;
};
ParameterDocument read_parameter_document(const json& j);
json write(const ParameterDocument& d);

}  // namespace arthur::io
