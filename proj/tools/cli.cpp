#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "arthur/arthur.hpp"
#include "arthur/io/json_io.hpp"
#include "arthur/oracle/oracle.hpp"

namespace arthur::cli {
namespace {

using io::json;

struct Options {
  std::string command;
  std::string input;
  std::size_t cap = kDefaultCap;
  bool pretty = false;
  std::string rho;
  int a = 0;
  int b = 0;
};

int exit_code(ErrorKind kind) {
  if (kind == ErrorKind::CapExceeded) return kCapExceeded;
  if (is_internal(kind)) return kInternalError;
  return kInputError;
}

json error_doc(std::string_view kind, const std::string& path, const std::string& message) {
  return json{{"error", {{"kind", kind}, {"path", path}, {"message", message}}}, {"engine_version", kEngineVersion}};
}

void emit(std::ostream& out, json doc, bool pretty) {
  doc["engine_version"] = kEngineVersion;
  out << (pretty ? doc.dump(2) : doc.dump()) << '\n';
}

json load(const std::string& path, std::istream& in) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
    buffer << file.rdbuf();
  }
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what(), "");
  }
}

void require_triple(const Options& o) {
  if (o.rho.empty() || o.a < 1 || o.b < 1) {
    throw Error(ErrorKind::InvalidInput, o.command + " needs --rho, --a >= 1 and --b >= 1");
  }
}

json census_json(const oracle::CensusReport& rep) {
  auto set_json = [](const std::vector<VExtZSeg>& s) { return io::write(ZSeq(s)); };
  json intervals = json::array();
  for (std::size_t k = 0; k < rep.intervals.size(); ++k) {
    json adj = json::array();
    for (const auto& t : rep.adjacency[k]) adj.push_back(set_json(t));
    intervals.push_back(json{{"members", set_json(rep.intervals[k])}, {"adjacent", std::move(adj)}});
  }
  json non = json::array();
  for (const auto& s : rep.non_intervals) non.push_back(set_json(s));
  json ce = json::array();
  for (const auto& c : rep.counterexamples) {
    ce.push_back(json{{"property", c.property}, {"input", c.input}, {"expected", c.expected}, {"actual", c.actual}});
  }
  return json{{"delta", {{"A", rep.delta.A}, {"B", rep.delta.B}}},
              {"elements", rep.elements},
              {"subsets", rep.subsets},
              {"interval_count", rep.intervals.size()},
              {"intervals", std::move(intervals)},
              {"non_intervals", std::move(non)},
              {"counterexamples", std::move(ce)}};
}

json dispatch(const Options& o, std::istream& in) {
  const json doc = load(o.input, in);
  const std::string& c = o.command;

  if (c == "nonvanishing") {
    auto d = io::read_multisegment_document(doc);
    return json{{"nonzero", pi_nonzero(d.E, o.cap)}};
  }
  if (c == "character") {
    auto d = io::read_multisegment_document(doc);
    return json{{"character", io::write(character(d.E, o.cap))}};
  }
  if (c == "orbit") {
    const ZSeq s = io::read_zseq(doc.is_object() && doc.contains("sequence") ? doc["sequence"] : doc, "/sequence");
    if (!is_admissible(s)) throw Error(ErrorKind::NotAdmissible, "sequence is not admissible", "/sequence");
    const Orbit orb = orbit(s, o.cap);
    json members = json::array();
    for (const auto& m : orb.members) members.push_back(io::write(m));
    bool nv = true;
    for (const auto& m : orb.members) nv = nv && tilde_nv(m);
    json out{{"size", orb.members.size()}, {"members", std::move(members)}, {"tilde_nv", tilde_nv(s)},
             {"nonvanishing", nv}};
    if (nv) out["canonical"] = io::write(canonical_p2(s, o.cap));
    return out;
  }
  if (c == "induce") {
    require_triple(o);
    auto d = io::read_multisegment_document(doc);
    const InductionResult r = induce(d.E, d.cuspidals, o.rho, o.a, o.b, o.cap);
    json out = io::write(r);
    for (std::size_t k = 0; k < r.components.size(); ++k) {
      json& m = out["members"][k];
      m["sign"] = local_sign(*r.components[k].row(o.rho), r.inserted_index[k]);
      if (satisfies_p_prime(r.components[k])) m["character"] = io::write(character(r.components[k], o.cap));
    }
    return out;
  }
  if (c == "reducible") {
    require_triple(o);
    auto d = io::read_multisegment_document(doc);
    const bool gp = good_parity(d.cuspidals.at(o.rho), o.a, o.b, d.E.group.kind);
    return json{{"good_parity", gp}, {"reducible", is_reducible(d.E, d.cuspidals, o.rho, o.a, o.b, o.cap)}};
  }
  if (c == "sign-counts") {
    require_triple(o);
    auto d = io::read_multisegment_document(doc);
    const SignCounts s = sign_counts(d.E, d.cuspidals, o.rho, o.a, o.b, o.cap);
    return json{{"m_plus", s.plus}, {"m_minus", s.minus}};
  }
  if (c == "unitary") {
    auto d = io::read_unitary_document(doc);
    return io::write(is_unitary(d.pi, d.cuspidals, o.cap));
  }
  if (c == "gl-constraint") {
    auto d = io::read_gl_document(doc);
    return io::write(check_constraint(d.component, d.cuspidals));
  }
  if (c == "census") {
    const json& delta = doc.is_object() && doc.contains("delta") ? doc["delta"] : doc;
    if (!delta.is_object() || !delta.contains("A") || !delta.contains("B") || !delta["A"].is_number_integer() ||
        !delta["B"].is_number_integer()) {
      throw Error(ErrorKind::ParseError, "expected {\"A\": int, \"B\": int}", "/delta");
    }
    const ZSegment seg = ZSegment::make(delta["A"].get<int>(), delta["B"].get<int>());
    return census_json(oracle::exhaustive_interval_census(seg));
  }
  if (c == "sweep") {
    auto d = io::read_parameter_document(doc);
    std::size_t max_rows = 4;
    if (doc.contains("max_rows")) {
      if (!doc["max_rows"].is_number_unsigned()) throw Error(ErrorKind::ParseError, "expected a count", "/max_rows");
      max_rows = doc["max_rows"].get<std::size_t>();
    }
    const auto rep = oracle::packet_sweep(d.psi, d.cuspidals, max_rows, o.cap);
    json members = json::array();
    for (std::size_t k = 0; k < rep.members.size(); ++k) {
      members.push_back(json{{"multisegment", io::write(rep.members[k])}, {"character", io::write(rep.characters[k])}});
    }
    json ce = json::array();
    for (const auto& x : rep.counterexamples) {
      ce.push_back(json{{"property", x.property}, {"input", x.input}, {"expected", x.expected}, {"actual", x.actual}});
    }
    return json{{"assignments", rep.assignments},   {"packet_size", rep.packet_size},
                {"members", std::move(members)},    {"collisions", rep.collisions},
                {"counterexamples", std::move(ce)}};
  }
  throw Error(ErrorKind::InvalidInput, "unknown command " + c);
}

std::size_t default_cap() {
  if (const char* env = std::getenv("ARTHUR_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultCap;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
  Options o;
  o.cap = default_cap();
  CLI::App app{"Extended multi-segment calculator", "arthur"};
  app.require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"nonvanishing", "decide whether pi(E) is non-zero"},
      {"character", "component-group character of pi(E)"},
      {"orbit", "row-exchange orbit of an integer-level sequence"},
      {"induce", "decompose u_rho(a,b) x pi(E)"},
      {"reducible", "whether u_rho(a,b) x pi(E) is reducible"},
      {"sign-counts", "components split by character sign"},
      {"unitary", "Hermitian / unitary verdict"},
      {"gl-constraint", "parity constraint for a GL local component"},
      {"census", "exhaustive interval census over one segment"},
      {"sweep", "brute-force packet enumeration"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, "JSON document, or - for stdin")->required();
    sub->add_option("--cap", o.cap, "orbit size cap")->check(CLI::PositiveNumber);
    sub->add_flag("--pretty", o.pretty, "indent output");
    if (name == "induce" || name == "reducible" || name == "sign-counts") {
      sub->add_option("--rho", o.rho, "cuspidal name")->required();
      sub->add_option("--a", o.a, "a")->required();
      sub->add_option("--b", o.b, "b")->required();
    }
    sub->callback([&o, name = name] { o.command = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit(out, error_doc("UsageError", "", e.what()), false);
    return kInputError;
  }

  try {
    emit(out, dispatch(o, in), o.pretty);
    return kOk;
  } catch (const Error& e) {
    emit(out, error_doc(to_string(e.kind()), e.path(), e.what()), o.pretty);
    return exit_code(e.kind());
  } catch (const io::json::exception& e) {
    emit(out, error_doc("ParseError", "", e.what()), o.pretty);
    return kInputError;
  } catch (const std::exception& e) {
    emit(out, error_doc("Internal", "", e.what()), o.pretty);
    return kInternalError;
  }
}

}  // namespace arthur::cli
