#include "ordercert/serialize.hpp"

#include <ctime>

namespace ordercert {

namespace {

[[noreturn]] void fail(const std::string& what) { throw CertificateError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object holding '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) fail(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

long int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) fail(std::string("field '") + key + "' must be an integer");
  return v.get<long>();
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) fail(std::string("field '") + key + "' must be an array");
  return v;
}

std::vector<std::string> strings(const Json& a) {
  std::vector<std::string> out;
  for (const auto& e : a) {
    if (!e.is_string()) fail("expected a string");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Json knots_json(const std::vector<Knot>& knots) {
  Json out = Json::array();
  for (const auto& k : knots) out.push_back(Json::array({to_json(k.x), to_json(k.y)}));
  return out;
}

std::vector<Knot> knots_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail("expected a non-empty list of knots");
  std::vector<Knot> knots;
  for (const auto& k : j) {
    if (!k.is_array() || k.size() != 2) fail("a knot is a pair [x, y]");
    knots.push_back({rational_from_json(k[0]), rational_from_json(k[1])});
  }
  return knots;
}

Json bound_json(const AbsBound& b) {
  return {{"x", to_json(b.x)}, {"base", to_json(b.base)}, {"exponent", b.exponent}};
}

AbsBound bound_from_json(const Json& j) {
  return {word_from_json(field(j, "x")), word_from_json(field(j, "base")), int_field(j, "exponent")};
}

Json params_json(const Params& p) {
  Json out = Json::object();
  if (!p.words.empty()) {
    Json w = Json::object();
    for (const auto& [k, v] : p.words) w[k] = to_json(v);
    out["words"] = std::move(w);
  }
  if (!p.ints.empty()) out["ints"] = p.ints;
  if (!p.tags.empty()) out["tags"] = p.tags;
  return out;
}

Params params_from_json(const Json& j) {
  if (!j.is_object()) fail("params must be an object");
  Params p;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_object()) fail("params." + key + " must be an object");
    if (key == "words") {
      for (const auto& [k, v] : value.items()) p.words[k] = word_from_json(v);
    } else if (key == "ints") {
      for (const auto& [k, v] : value.items()) {
        if (!v.is_number_integer()) fail("params.ints." + k + " must be an integer");
        p.ints[k] = v.get<long>();
      }
    } else if (key == "tags") {
      for (const auto& [k, v] : value.items()) {
        if (!v.is_string()) fail("params.tags." + k + " must be a string");
        p.tags[k] = v.get<std::string>();
      }
    } else {
      fail("unknown params key '" + key + "'");
    }
  }
  return p;
}

std::string utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const PLMap& m) { return knots_json(m.knots()); }

Json to_json(const PLCocycle& c) { return knots_json(c.knots()); }

Json to_json(const SkewElement& g) { return {{"x_part", to_json(g.x_part)}, {"shift", to_json(g.shift)}}; }

Json to_json(const RelationReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) entries.push_back({{"id", e.id}, {"statement", e.statement}, {"holds", e.holds}});
  return {{"entries", std::move(entries)}, {"all_hold", r.all_hold()}};
}

Json to_json(const FreeWord& w) { return w.str(); }

Json to_json(const Judgment& j) {
  if (j.kind == Judgment::Kind::Contradiction) return {{"kind", "contradiction"}};
  return {{"kind", "less"}, {"lhs", to_json(j.lhs)}, {"rhs", to_json(j.rhs)}};
}

Json to_json(const Fact& f) {
  Json out = {{"id", f.id},
              {"kind", fact_kind_name(f.statement.kind)},
              {"first", to_json(f.statement.first)},
              {"status", fact_status_name(f.status)},
              {"justification", f.justification}};
  if (f.statement.kind != FactKind::NonIdentity) out["second"] = to_json(f.statement.second);
  return out;
}

Json to_json(const Step& s) {
  return {{"id", s.id},
          {"rule", rule_name(s.rule)},
          {"params", params_json(s.params)},
          {"premises", s.premises},
          {"facts", s.facts},
          {"conclusion", to_json(s.conclusion)}};
}

Json to_json(const Split& s) {
  Json branches = Json::array();
  for (const auto& b : s.branches) branches.push_back(to_json(b));
  return {{"id", s.id},
          {"rule", split_rule_name(s.rule)},
          {"params", params_json(s.params)},
          {"premises", s.premises},
          {"facts", s.facts},
          {"branches", std::move(branches)}};
}

Json to_json(const Branch& b) {
  Json assumptions = Json::array();
  for (const auto& a : b.assumptions) assumptions.push_back(to_json(a));
  Json steps = Json::array();
  for (const auto& s : b.steps) steps.push_back(to_json(s));
  Json out = {{"id", b.id}, {"assumptions", std::move(assumptions)}, {"steps", std::move(steps)}};
  if (b.split) out["split"] = to_json(*b.split);
  return out;
}

Json to_json(const Derivation& d) {
  Json facts = Json::array();
  for (const auto& f : d.assumed_facts) facts.push_back(to_json(f));
  Json hyps = Json::array();
  for (const auto& h : d.hypotheses) {
    Json e = bound_json(h.bound);
    e["id"] = h.id;
    hyps.push_back(std::move(e));
  }
  Json goal = {{"kind", "contradiction"}};
  if (d.goal.kind == Goal::Kind::AbsLess) {
    goal = bound_json(d.goal.bound);
    goal["kind"] = "abs_less";
  }
  return {{"name", d.name},
          {"assumed_facts", std::move(facts)},
          {"hypotheses", std::move(hyps)},
          {"goal", std::move(goal)},
          {"root", to_json(d.root)}};
}

Json to_json(const NonLOWitness& w) {
  Json atoms = Json::array();
  for (const auto& a : w.atoms) atoms.push_back(to_json(a));
  Json products = Json::array();
  for (const auto& p : w.products)
    products.push_back({{"signs", p.signs}, {"factors", p.factors}, {"word", to_json(p.word(w.atoms))}});
  return {{"atoms", std::move(atoms)}, {"products", std::move(products)}};
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) fail("a rational must be a string \"p/q\"");
  const auto text = j.get<std::string>();
  try {
    Rational r = Rational::parse(text);
    if (r.str() != text) fail("rational '" + text + "' is not in lowest terms");
    return r;
  } catch (const std::invalid_argument& e) {
    fail("bad rational '" + text + "': " + e.what());
  }
}

PLMap pl_map_from_json(const Json& j) {
  const auto knots = knots_from_json(j);
  try {
    PLMap m = PLMap::from_points(knots);
    if (m.knots() != knots) fail("PL map is not in canonical form");
    return m;
  } catch (const std::invalid_argument& e) {
    fail(std::string("bad PL map: ") + e.what());
  }
}

PLCocycle pl_cocycle_from_json(const Json& j) {
  const auto knots = knots_from_json(j);
  try {
    PLCocycle c = PLCocycle::from_points(knots);
    if (c.knots() != knots) fail("cocycle is not in canonical form");
    return c;
  } catch (const std::invalid_argument& e) {
    fail(std::string("bad cocycle: ") + e.what());
  }
}

SkewElement skew_from_json(const Json& j) {
  return {pl_map_from_json(field(j, "x_part")), pl_cocycle_from_json(field(j, "shift"))};
}

RelationReport relation_report_from_json(const Json& j) {
  RelationReport r;
  for (const auto& e : array_field(j, "entries")) {
    const Json& holds = field(e, "holds");
    if (!holds.is_boolean()) fail("field 'holds' must be a boolean");
    r.entries.push_back({string_field(e, "id"), string_field(e, "statement"), holds.get<bool>()});
  }
  const Json& all = field(j, "all_hold");
  if (!all.is_boolean() || all.get<bool>() != r.all_hold()) fail("'all_hold' disagrees with the entries");
  return r;
}

FreeWord word_from_json(const Json& j) {
  if (!j.is_string()) fail("a word must be a string");
  const auto text = j.get<std::string>();
  try {
    FreeWord w = FreeWord::parse(text);
    if (w.str() != text) fail("word '" + text + "' is not in normal form");
    return w;
  } catch (const std::invalid_argument& e) {
    fail("bad word '" + text + "': " + e.what());
  }
}

Judgment judgment_from_json(const Json& j) {
  const auto kind = string_field(j, "kind");
  if (kind == "contradiction") return Judgment::contradiction();
  if (kind == "less") return Judgment::less(word_from_json(field(j, "lhs")), word_from_json(field(j, "rhs")));
  fail("unknown judgment kind '" + kind + "'");
}

Fact fact_from_json(const Json& j) {
  Fact f;
  f.id = string_field(j, "id");
  const auto kind = parse_fact_kind(string_field(j, "kind"));
  if (!kind) fail("unknown fact kind in " + f.id);
  const auto status = parse_fact_status(string_field(j, "status"));
  if (!status) fail("unknown fact status in " + f.id);
  f.statement.kind = *kind;
  f.statement.first = word_from_json(field(j, "first"));
  if (*kind != FactKind::NonIdentity) f.statement.second = word_from_json(field(j, "second"));
  f.status = *status;
  f.justification = string_field(j, "justification");
  return f;
}

Step step_from_json(const Json& j) {
  Step s;
  s.id = string_field(j, "id");
  const auto rule = parse_rule(string_field(j, "rule"));
  if (!rule) fail("unknown rule in step " + s.id);
  s.rule = *rule;
  s.params = params_from_json(field(j, "params"));
  s.premises = strings(array_field(j, "premises"));
  s.facts = strings(array_field(j, "facts"));
  s.conclusion = judgment_from_json(field(j, "conclusion"));
  return s;
}

Split split_from_json(const Json& j) {
  Split s;
  s.id = string_field(j, "id");
  const auto rule = parse_split_rule(string_field(j, "rule"));
  if (!rule) fail("unknown split rule in " + s.id);
  s.rule = *rule;
  s.params = params_from_json(field(j, "params"));
  s.premises = strings(array_field(j, "premises"));
  s.facts = strings(array_field(j, "facts"));
  for (const auto& b : array_field(j, "branches")) s.branches.push_back(branch_from_json(b));
  return s;
}

Branch branch_from_json(const Json& j) {
  Branch b;
  b.id = string_field(j, "id");
  for (const auto& a : array_field(j, "assumptions")) b.assumptions.push_back(judgment_from_json(a));
  for (const auto& s : array_field(j, "steps")) b.steps.push_back(step_from_json(s));
  if (j.contains("split")) b.split = split_from_json(j["split"]);
  return b;
}

Derivation derivation_from_json(const Json& j) {
  Derivation d;
  d.name = string_field(j, "name");
  for (const auto& f : array_field(j, "assumed_facts")) d.assumed_facts.push_back(fact_from_json(f));
  for (const auto& h : array_field(j, "hypotheses")) d.hypotheses.push_back({string_field(h, "id"), bound_from_json(h)});
  const Json& goal = field(j, "goal");
  const auto kind = string_field(goal, "kind");
  if (kind == "abs_less") {
    d.goal = {Goal::Kind::AbsLess, bound_from_json(goal)};
  } else if (kind != "contradiction") {
    fail("unknown goal kind '" + kind + "'");
  }
  d.root = branch_from_json(field(j, "root"));
  return d;
}

NonLOWitness witness_from_json(const Json& j) {
  NonLOWitness w;
  for (const auto& a : array_field(j, "atoms")) w.atoms.push_back(word_from_json(a));
  for (const auto& p : array_field(j, "products")) {
    SignedProduct sp;
    for (const auto& s : array_field(p, "signs")) {
      if (!s.is_number_integer()) fail("signs must be integers");
      sp.signs.push_back(s.get<int>());
    }
    for (const auto& f : array_field(p, "factors")) {
      if (!f.is_number_unsigned()) fail("factors must be atom indices");
      sp.factors.push_back(f.get<std::size_t>());
    }
    w.products.push_back(std::move(sp));
  }
  return w;
}

std::string_view certificate_kind_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::RelationReport: return "relation-report";
    case CertificateKind::Derivation: return "derivation";
    case CertificateKind::NonLOWitness: return "nonlo-witness";
  }
  return "?";
}

std::optional<CertificateKind> parse_certificate_kind(std::string_view s) {
  for (auto k : {CertificateKind::RelationReport, CertificateKind::Derivation, CertificateKind::NonLOWitness})
    if (certificate_kind_name(k) == s) return k;
  return std::nullopt;
}

Certificate make_certificate(CertificateKind kind, Json payload, bool timestamp) {
  Certificate c;
  c.kind = kind;
  c.payload = std::move(payload);
  if (timestamp) c.timestamp = utc_now();
  return c;
}

std::string dump_certificate(const Certificate& c) {
  Json meta = {{"tool", c.tool}};
  if (c.timestamp) meta["timestamp"] = *c.timestamp;
  const Json doc = {{"version", c.version},
                    {"kind", certificate_kind_name(c.kind)},
                    {"payload", c.payload},
                    {"metadata", std::move(meta)}};
  return doc.dump() + "\n";
}

Certificate parse_certificate(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("not valid JSON: ") + e.what());
  }
  Certificate c;
  c.version = string_field(doc, "version");
  if (c.version != kCertificateVersion) fail("unsupported certificate version '" + c.version + "'");
  const auto kind = parse_certificate_kind(string_field(doc, "kind"));
  if (!kind) fail("unknown certificate kind");
  c.kind = *kind;
  c.payload = field(doc, "payload");
  const Json& meta = field(doc, "metadata");
  c.tool = string_field(meta, "tool");
  if (meta.contains("timestamp")) c.timestamp = string_field(meta, "timestamp");
  return c;
}

}  // namespace ordercert
