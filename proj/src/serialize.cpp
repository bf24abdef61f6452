#include "qf/serialize.hpp"

#include "qf/errors.hpp"

namespace qf {

Json state_to_json(const CodeState& s) {
  Json terms = Json::array();
  for (std::size_t t = 0; t < s.size(); ++t) {
    Json term;
    term["string"] = s.term_string(t);
    term["phase"] = s.phase(t);
    terms.push_back(std::move(term));
  }
  Json j;
  j["q"] = s.field().p();
  j["n"] = s.n();
  j["terms"] = std::move(terms);
  return j;
}

CodeState state_from_json(const Json& j) {
  PrimeField f(j.at("q").get<int>());
  int n = j.at("n").get<int>();
  std::vector<std::pair<std::vector<int>, int>> terms;
  for (const Json& term : j.at("terms")) {
    terms.emplace_back(term.at("string").get<std::vector<int>>(), term.at("phase").get<int>());
  }
  return CodeState::from_terms(f, n, terms);
}

Json pauli_to_json(const PauliString& p) {
  Json j;
  j["op"] = pauli_to_text(p);
  j["phase"] = p.phase();
  return j;
}

PauliString pauli_from_json(const PrimeField& field, const Json& j) {
  return pauli_from_text(field, j.at("op").get<std::string>(), j.at("phase").get<int>());
}

namespace {

Json witness_to_json(const Witness& w) {
  Json j;
  j["op"] = w.op_text;
  j["m"] = w.m;
  j["m_prime"] = w.m_prime;
  j["detail"] = w.detail;
  return j;
}

Json check_to_json(const CheckResult& c) {
  Json j;
  j["name"] = c.name;
  j["params"] = c.params;
  j["pass"] = c.pass;
  j["examined"] = c.examined;
  if (c.value.has_value()) j["value"] = *c.value;
  if (c.witness.has_value()) j["witness"] = witness_to_json(*c.witness);
  if (c.name == "knill-laflamme" && c.pass) {
    Json table = Json::array();
    for (const auto& [op, fval] : c.f_nonzero) {
      Json entry;
      entry["op"] = op;
      entry["f"] = fval;
      table.push_back(std::move(entry));
    }
    j["f_nonzero"] = std::move(table);
    j["f_zero_count"] = c.f_zero_count;
  }
  return j;
}

}  // namespace

Json report_to_json(const VerificationReport& report) {
  Json j;
  j["code"] = report.code_label;
  j["options"] = Json{{"budget", report.budget},
                      {"skip_distance", report.skip_distance},
                      {"kl_max_weight", report.kl_max_weight},
                      {"distance_method", report.distance_method}};
  Json checks = Json::array();
  for (const CheckResult& c : report.checks) checks.push_back(check_to_json(c));
  j["checks"] = std::move(checks);
  j["pass"] = report.all_pass();
  return j;
}

Json code_record_to_json(const QuantumCode& code, const VerificationReport* report) {
  Json j;
  j["format"] = "qecc-forge/1";
  j["params"] = Json{{"q", code.field.p()},
                     {"gamma", code.field.gamma()},
                     {"n", code.n},
                     {"k_logical", code.k_logical},
                     {"distance", code.distance_claimed}};
  j["provenance"] = Json{{"construction", code.provenance.construction},
                         {"seed_k", code.provenance.seed_k},
                         {"seed_n", code.provenance.seed_n},
                         {"r", code.provenance.r},
                         {"trim_logical_x", code.provenance.trim_logical_x}};
  j["seed_generator"] = code.seed_generator.matrix().to_rows();
  Json stabs = Json::array();
  for (const auto& s : code.stabilizers) stabs.push_back(pauli_to_json(s));
  j["stabilizers"] = std::move(stabs);
  Json lx = Json::array();
  for (const auto& p : code.logical_x) lx.push_back(pauli_to_json(p));
  j["logical_x"] = std::move(lx);
  Json lz = Json::array();
  for (const auto& p : code.logical_z) lz.push_back(pauli_to_json(p));
  j["logical_z"] = std::move(lz);
  Json cws = Json::array();
  for (const auto& cw : code.codewords) cws.push_back(state_to_json(cw));
  j["codewords"] = std::move(cws);
  j["verification"] = report ? report_to_json(*report) : Json();
  return j;
}

CodeRecord code_record_from_json(const Json& j) {
  if (j.at("format").get<std::string>() != "qecc-forge/1") {
    throw ParseError("unsupported record format");
  }
  const Json& params = j.at("params");
  PrimeField f(params.at("q").get<int>(), params.at("gamma").get<int>());
  int n = params.at("n").get<int>();
  int k_logical = params.at("k_logical").get<int>();
  int distance = params.at("distance").get<int>();

  GeneratorMatrix seed(MatrixGF::from_rows(
      f, j.at("seed_generator").get<std::vector<std::vector<int>>>()));

  const Json& prov = j.at("provenance");
  Provenance p{prov.at("construction").get<std::string>(),
               f.p(),
               f.gamma(),
               prov.at("seed_k").get<int>(),
               prov.at("seed_n").get<int>(),
               prov.at("r").get<int>(),
               prov.at("trim_logical_x").get<bool>()};

  QuantumCode code{f, n, k_logical, distance, {}, {}, {}, {}, p, seed};
  for (const Json& s : j.at("stabilizers")) code.stabilizers.push_back(pauli_from_json(f, s));
  for (const Json& s : j.at("logical_x")) code.logical_x.push_back(pauli_from_json(f, s));
  for (const Json& s : j.at("logical_z")) code.logical_z.push_back(pauli_from_json(f, s));
  for (const Json& s : j.at("codewords")) {
    CodeState st = state_from_json(s);
    if (st.n() != n || st.field().p() != f.p()) {
      throw ParseError("codeword record does not match code parameters");
    }
    code.codewords.push_back(std::move(st));
  }
  if (code.codewords.empty()) throw ParseError("record has no codewords");

  CodeRecord record{std::move(code), Json()};
  if (j.contains("verification")) record.embedded_verification = j.at("verification");
  return record;
}

VerifyOptions verify_options_from_record(const Json& record) {
  VerifyOptions opt;
  if (!record.contains("verification") || record.at("verification").is_null()) return opt;
  const Json& v = record.at("verification");
  if (!v.contains("options")) return opt;
  const Json& o = v.at("options");
  if (o.contains("budget")) opt.budget = o.at("budget").get<std::uint64_t>();
  if (o.contains("skip_distance")) opt.skip_distance = o.at("skip_distance").get<bool>();
  if (o.contains("kl_max_weight")) opt.kl_max_weight = o.at("kl_max_weight").get<int>();
  if (o.contains("distance_method")) {
    std::string m = o.at("distance_method").get<std::string>();
    using Method = VerifyOptions::DistanceMethod;
    opt.method = m == "overlap" ? Method::Overlap : m == "symplectic" ? Method::Symplectic : Method::Auto;
  }
  return opt;
}

}  // namespace qf
