#include "arthur/io/json_io.hpp"

#include "arthur/error.hpp"

namespace arthur::io {
namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw Error(ErrorKind::ParseError, message, path);
}

const json& member(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "/" + key, std::string("missing field \"") + key + "\"");
  return *it;
}

const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

int read_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  auto v = j.get<std::int64_t>();
  if (v < -1'000'000 || v > 1'000'000) fail(path, "integer out of range");
  return static_cast<int>(v);
}

int read_sign(const json& j, const std::string& path) {
  int v = read_int(j, path);
  if (v != 1 && v != -1) fail(path, "expected +1 or -1");
  return v;
}

std::string read_name(const json& j, const std::string& path) {
  if (!j.is_string() || j.get<std::string>().empty()) fail(path, "expected a non-empty string");
  return j.get<std::string>();
}

// Runs `f`, re-throwing library errors without a path at `path`.
template <class F>
auto at_path(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (!e.path().empty()) throw;
    throw Error(e.kind(), e.what(), path);
  }
}

SelfDuality read_selfduality(const json& j, const std::string& path) {
  std::string s = read_name(j, path);
  if (s == "orthogonal") return SelfDuality::Orthogonal;
  if (s == "symplectic") return SelfDuality::Symplectic;
  if (s == "none") return SelfDuality::None;
  fail(path, "expected \"orthogonal\", \"symplectic\" or \"none\"");
}

}  // namespace

HalfInt read_halfint(const json& j, const std::string& path) {
  if (j.is_number_integer()) return HalfInt(read_int(j, path));
  if (!j.is_string()) fail(path, "expected a half-integer string such as \"3/2\"");
  return at_path(path, [&] { return HalfInt::parse(j.get<std::string>()); });
}

Rational read_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(read_int(j, path));
  if (!j.is_string()) fail(path, "expected a rational string such as \"1/4\"");
  return at_path(path, [&] { return Rational::parse(j.get<std::string>()); });
}

json write(HalfInt h) { return h.to_string(); }
json write(const Rational& r) { return r.to_string(); }

VExtZSeg read_vseg(const json& j, const std::string& path) {
  int A = read_int(member(j, "A", path), path + "/A");
  int B = read_int(member(j, "B", path), path + "/B");
  int l = read_int(member(j, "l", path), path + "/l");
  int eta = read_sign(member(j, "eta", path), path + "/eta");
  return at_path(path, [&] { return VExtZSeg(A, B, l, eta); });
}

json write(const VExtZSeg& e) { return json{{"A", e.A()}, {"B", e.B()}, {"l", e.l()}, {"eta", e.eta()}}; }

ZSeq read_zseq(const json& j, const std::string& path) {
  ZSeq out;
  const json& arr = array_at(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(read_vseg(arr[i], path + "/" + std::to_string(i)));
  return out;
}

json write(const ZSeq& s) {
  json arr = json::array();
  for (const auto& e : s) arr.push_back(write(e));
  return arr;
}

CuspidalRegistry read_registry(const json& j, const std::string& path) {
  std::vector<Cuspidal> out;
  const json& arr = array_at(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = path + "/" + std::to_string(i);
    Cuspidal c;
    c.name = read_name(member(arr[i], "name", p), p + "/name");
    c.dim = read_int(member(arr[i], "dim", p), p + "/dim");
    c.selfdual = read_selfduality(member(arr[i], "selfdual", p), p + "/selfdual");
    if (arr[i].contains("dual")) c.dual = read_name(arr[i]["dual"], p + "/dual");
    out.push_back(std::move(c));
  }
  return CuspidalRegistry(std::move(out));
}

json write(const CuspidalRegistry& r) {
  json arr = json::array();
  for (const auto& c : r.all()) {
    json o{{"name", c.name}, {"dim", c.dim}, {"selfdual", std::string(to_string(c.selfdual))}};
    if (!c.self_dual()) o["dual"] = c.dual;
    arr.push_back(std::move(o));
  }
  return arr;
}

GroupType read_group(const json& j, const std::string& path) {
  std::string kind = read_name(member(j, "kind", path), path + "/kind");
  GroupType g;
  if (kind == "Sp") {
    g.kind = GroupKind::Sp;
  } else if (kind == "SOodd") {
    g.kind = GroupKind::SOodd;
  } else {
    fail(path + "/kind", "expected \"Sp\" or \"SOodd\"");
  }
  g.n = read_int(member(j, "n", path), path + "/n");
  if (g.n < 0) fail(path + "/n", "rank must be non-negative");
  return g;
}

json write(const GroupType& g) { return json{{"kind", std::string(to_string(g.kind))}, {"n", g.n}}; }

ExtMultiSegment read_multisegment(const json& j, const std::string& path, const GroupType* fallback) {
  ExtMultiSegment E;
  if (j.is_object() && j.contains("group")) {
    E.group = read_group(j["group"], path + "/group");
  } else if (fallback) {
    E.group = *fallback;
  } else {
    member(j, "group", path);
  }
  const json& rows = array_at(member(j, "rows", path), path + "/rows");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string rp = path + "/rows/" + std::to_string(r);
    MultiSegmentRow row;
    row.rho = read_name(member(rows[r], "rho", rp), rp + "/rho");
    const json& segs = array_at(member(rows[r], "segments", rp), rp + "/segments");
    for (std::size_t i = 0; i < segs.size(); ++i) {
      const std::string sp = rp + "/segments/" + std::to_string(i);
      HalfInt A = read_halfint(member(segs[i], "A", sp), sp + "/A");
      HalfInt B = read_halfint(member(segs[i], "B", sp), sp + "/B");
      int l = read_int(member(segs[i], "l", sp), sp + "/l");
      int eta = read_sign(member(segs[i], "eta", sp), sp + "/eta");
      row.segments.push_back(at_path(sp, [&] { return ExtSegment(A, B, l, eta); }));
    }
    E.rows.push_back(std::move(row));
  }
  return E;
}

json write(const ExtMultiSegment& E) {
  json rows = json::array();
  for (const auto& r : E.rows) {
    json segs = json::array();
    for (const auto& s : r.segments) {
      segs.push_back(json{{"A", write(s.A())}, {"B", write(s.B())}, {"l", s.l()}, {"eta", s.eta()}});
    }
    rows.push_back(json{{"rho", r.rho}, {"segments", std::move(segs)}});
  }
  return json{{"group", write(E.group)}, {"rows", std::move(rows)}};
}

json write(const Character& c) {
  json arr = json::array();
  for (const auto& [cls, v] : c.values) arr.push_back(json{{"rho", cls.rho}, {"a", cls.a}, {"b", cls.b}, {"value", v}});
  return arr;
}

json write(const InductionResult& r) {
  json comps = json::array();
  for (std::size_t k = 0; k < r.components.size(); ++k) {
    comps.push_back(json{{"inserted", write(r.inserted[k])}, {"multisegment", write(r.components[k])}});
  }
  return json{{"rho", r.rho},
              {"inserted_support", json{{"A", write(r.A)}, {"B", write(r.B)}}},
              {"components", r.components.size()},
              {"members", std::move(comps)}};
}

json write(const UnitarityVerdict& v) {
  json w = json::array();
  for (const auto& x : v.witnesses) {
    w.push_back(json{{"nu_index", x.nu_index}, {"reducible", x.reducible}, {"class_cardinality", x.class_cardinality}});
  }
  return json{{"hermitian", v.hermitian}, {"unitary", v.unitary}, {"witnesses", std::move(w)}};
}

json write(const ConstraintReport& r) { return json{{"ok", r.ok}, {"violations", r.violations}}; }

MultiSegmentDocument read_multisegment_document(const json& j) {
  MultiSegmentDocument d{read_registry(member(j, "cuspidals", ""), "/cuspidals"), read_multisegment(j, "")};
  validate(d.E, d.cuspidals);
  return d;
}

json write(const MultiSegmentDocument& d) {
  json out = write(d.E);
  out["cuspidals"] = write(d.cuspidals);
  return out;
}

UnitaryDocument read_unitary_document(const json& j) {
  UnitaryDocument d;
  d.cuspidals = read_registry(member(j, "cuspidals", ""), "/cuspidals");
  d.pi.group = read_group(member(j, "group", ""), "/group");
  const json& nu = array_at(member(j, "nu", ""), "/nu");
  for (std::size_t i = 0; i < nu.size(); ++i) {
    const std::string p = "/nu/" + std::to_string(i);
    d.pi.nu.push_back(NuEntry{read_name(member(nu[i], "rho", p), p + "/rho"), read_int(member(nu[i], "a", p), p + "/a"),
                              read_int(member(nu[i], "b", p), p + "/b"),
                              read_rational(member(nu[i], "x", p), p + "/x")});
  }
  if (j.contains("bp")) {
    const json& bp = array_at(j["bp"], "/bp");
    for (std::size_t i = 0; i < bp.size(); ++i) {
      const std::string p = "/bp/" + std::to_string(i);
      d.pi.bp.push_back(BpEntry{read_name(member(bp[i], "rho", p), p + "/rho"),
                                read_int(member(bp[i], "a", p), p + "/a"), read_int(member(bp[i], "b", p), p + "/b")});
    }
  }
  const json& gp = member(j, "gp", "");
  if (gp.is_object() && gp.contains("group")) {
    d.pi.gp = read_multisegment(gp, "/gp");
  } else {
    // Infer the rank of the good-parity part from its own dimension.
    GroupType provisional{d.pi.group.kind, 0};
    d.pi.gp = read_multisegment(gp, "/gp", &provisional);
    long long N = 0;
    for (const auto& r : d.pi.gp.rows) {
      const int dim = d.cuspidals.contains(r.rho) ? d.cuspidals.at(r.rho).dim : 1;
      for (const auto& s : r.segments) N += static_cast<long long>(dim) * s.a() * s.b();
    }
    d.pi.gp.group = at_path("/gp", [&] { return GroupType::with_dual_dimension(d.pi.group.kind, static_cast<int>(N)); });
  }
  return d;
}

json write(const UnitaryDocument& d) {
  json nu = json::array();
  for (const auto& e : d.pi.nu) nu.push_back(json{{"rho", e.rho}, {"a", e.a}, {"b", e.b}, {"x", write(e.x)}});
  json bp = json::array();
  for (const auto& e : d.pi.bp) bp.push_back(json{{"rho", e.rho}, {"a", e.a}, {"b", e.b}});
  return json{{"cuspidals", write(d.cuspidals)}, {"group", write(d.pi.group)}, {"nu", std::move(nu)},
              {"bp", std::move(bp)}, {"gp", write(d.pi.gp)}};
}

GLDocument read_gl_document(const json& j) {
  GLDocument d;
  d.cuspidals = read_registry(member(j, "cuspidals", ""), "/cuspidals");
  d.component.global_type = read_selfduality(member(j, "global_type", ""), "/global_type");
  const json& nu = array_at(member(j, "nu", ""), "/nu");
  for (std::size_t i = 0; i < nu.size(); ++i) {
    const std::string p = "/nu/" + std::to_string(i);
    d.component.nu.push_back(GLNuEntry{read_name(member(nu[i], "rho", p), p + "/rho"),
                                       read_int(member(nu[i], "a", p), p + "/a"),
                                       read_rational(member(nu[i], "x", p), p + "/x")});
  }
  if (j.contains("tempered")) {
    const json& t = array_at(j["tempered"], "/tempered");
    for (std::size_t i = 0; i < t.size(); ++i) {
      const std::string p = "/tempered/" + std::to_string(i);
      d.component.tempered.push_back(
          GLTemperedEntry{read_name(member(t[i], "rho", p), p + "/rho"), read_int(member(t[i], "a", p), p + "/a")});
    }
  }
  return d;
}

json write(const GLDocument& d) {
  json nu = json::array();
  for (const auto& e : d.component.nu) nu.push_back(json{{"rho", e.rho}, {"a", e.a}, {"x", write(e.x)}});
  json t = json::array();
  for (const auto& e : d.component.tempered) t.push_back(json{{"rho", e.rho}, {"a", e.a}});
  return json{{"cuspidals", write(d.cuspidals)},
              {"global_type", std::string(to_string(d.component.global_type))},
              {"nu", std::move(nu)},
              {"tempered", std::move(t)}};
}

ParameterDocument read_parameter_document(const json& j) {
  ParameterDocument d;
  d.cuspidals = read_registry(member(j, "cuspidals", ""), "/cuspidals");
  d.psi.group = read_group(member(j, "group", ""), "/group");
  const json& arr = array_at(member(j, "summands", ""), "/summands");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = "/summands/" + std::to_string(i);
    ArthurSummand s{read_name(member(arr[i], "rho", p), p + "/rho"), read_int(member(arr[i], "a", p), p + "/a"),
                    read_int(member(arr[i], "b", p), p + "/b"), Rational(0)};
    if (arr[i].contains("x")) s.x = read_rational(arr[i]["x"], p + "/x");
    if (s.a < 1 || s.b < 1) fail(p, "a and b must be positive");
    if (!d.cuspidals.contains(s.rho)) throw Error(ErrorKind::UnknownCuspidal, "unknown cuspidal " + s.rho, p + "/rho");
    d.psi.summands.push_back(std::move(s));
  }
  return d;
}

json write(const ParameterDocument& d) {
  json arr = json::array();
  for (const auto& s : d.psi.summands) arr.push_back(json{{"rho", s.rho}, {"a", s.a}, {"b", s.b}, {"x", write(s.x)}});
  return json{{"cuspidals", write(d.cuspidals)}, {"group", write(d.psi.group)}, {"summands", std::move(arr)}};
}

}  // namespace arthur::io
