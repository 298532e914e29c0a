#include "ordercert_cli/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "ordercert/checker.hpp"
#include "ordercert/scripts.hpp"
#include "ordercert/serialize.hpp"
#include "ordercert/sign_search.hpp"

namespace ordercert::cli {

namespace {

struct Options {
  std::string format = "text";
  bool no_timestamp = false;
  std::string perturb;
  std::string out;
  std::string script = "theorem";
  std::string cert_path;
  std::string word;
  std::string point;
  std::size_t depth = 4;
  std::size_t max_products = 4096;
  std::string atoms;
  std::string oracle = "plane";
};

struct Context {
  const Options& opt;
  std::ostream& out;
  std::ostream& err;
  GeneratorSet gens;
  WitnessSearch search;

  bool json() const { return opt.format == "json"; }
};

std::string ascii_atom(std::string_view name) {
  if (auto s = parse_plane_symbol(name)) return std::string(plane_symbol_name(*s));
  throw UsageError("unknown generator '" + std::string(name) + "'");
}

FreeWord parse_word(std::string_view text) {
  try {
    return FreeWord::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("bad word '" + std::string(text) + "': " + e.what());
  }
}

// Rewrites aliases to canonical generator names.
FreeWord canonical_h_word(const FreeWord& w) {
  std::vector<FreeWord::Syllable> out;
  for (const auto& s : w.syllables()) out.push_back({ascii_atom(s.atom), s.exponent});
  return FreeWord(std::move(out));
}

AtomTable atom_table(const GeneratorSet& gens) { return h_atom_table(gens); }

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b == std::string::npos) throw UsageError("empty entry in list '" + text + "'");
    items.push_back(item.substr(b, e - b + 1));
  }
  return items;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::ios_base::failure("cannot open " + path + " for writing");
  f << bytes;
  if (!f) throw std::ios_base::failure("cannot write " + path);
}

void write_certificate(Context& ctx, const std::string& default_path, CertificateKind kind, Json payload) {
  const std::string path = ctx.opt.out.empty() ? default_path : ctx.opt.out;
  write_file(path, dump_certificate(make_certificate(kind, std::move(payload), !ctx.opt.no_timestamp)));
  if (!ctx.json()) ctx.out << "certificate: " << path << "\n";
}

std::string point_str(const Point& p) { return p.x.str() + "," + p.y.str(); }

std::string knots_str(const std::vector<Knot>& knots) {
  std::string s;
  for (const auto& k : knots) s += (s.empty() ? "" : " ") + std::string("(") + k.x.str() + ", " + k.y.str() + ")";
  return s;
}

std::string xs_str(const std::vector<Rational>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].str();
  return s + "}";
}

int cmd_verify(Context& ctx) {
  RelationReport report = verify_relations(ctx.gens);
  for (auto& e : verify_mirrored_relations(ctx.gens, ctx.search).entries) report.entries.push_back(std::move(e));
  const Json payload = to_json(report);
  if (ctx.json()) {
    ctx.out << payload.dump() << "\n";
  } else {
    for (const auto& e : report.entries)
      ctx.out << (e.holds ? "true  " : "FALSE ") << e.id << "  " << e.statement << "\n";
    ctx.out << (report.all_hold() ? "all relations hold" : "some relations fail") << "\n";
  }
  write_certificate(ctx, "relations.cert.json", CertificateKind::RelationReport, payload);
  return report.all_hold() ? kOk : kFailed;
}

int cmd_epsilon(Context& ctx) {
  const auto factors = epsilon_factors(ctx.gens);
  const SkewElement eps = compute_epsilon(ctx.gens);
  const SkewElement target = power(ctx.gens.beta, -36);
  const bool equal = eps == target;
  std::vector<Rational> offsets;
  Rational sum;
  for (const auto& f : factors) {
    offsets.push_back(f.shift(Rational(0)));
    sum = sum + offsets.back();
  }
  const auto gamma_delta = conjugate(ctx.gens.gamma, ctx.gens.delta);
  if (ctx.json()) {
    Json j = {{"epsilon", to_json(eps)},
              {"offsets_at_0", Json::array()},
              {"offset_sum", to_json(sum)},
              {"gamma_delta_breakpoints", Json::array()},
              {"equals_beta_pow_minus_36", equal}};
    for (const auto& o : offsets) j["offsets_at_0"].push_back(to_json(o));
    for (const auto& x : breakpoint_xs(gamma_delta)) j["gamma_delta_breakpoints"].push_back(to_json(x));
    ctx.out << j.dump() << "\n";
  } else {
    ctx.out << "epsilon x-part: " << knots_str(eps.x_part.knots()) << "\n";
    ctx.out << "epsilon shift:  " << knots_str(eps.shift.knots()) << "\n";
    ctx.out << "offsets at x = 0:";
    for (std::size_t k = 0; k < offsets.size(); ++k) ctx.out << (k ? ", " : " (") << offsets[k].str();
    ctx.out << ")\n";
    ctx.out << "offset sum: " << sum.str() << "\n";
    ctx.out << "breakpoints of gamma^delta: " << xs_str(breakpoint_xs(gamma_delta)) << "\n";
    ctx.out << "epsilon = beta^-36: " << (equal ? "yes" : "no") << "\n";
  }
  return equal ? kOk : kFailed;
}

int report_verdict(Context& ctx, const Derivation& d, const Verdict& v) {
  if (ctx.json()) {
    ctx.out << Json{{"derivation", d.name},
                    {"status", verdict_status_name(v.status)},
                    {"location", v.location},
                    {"reason", v.reason},
                    {"steps_checked", v.steps_checked},
                    {"leaves", v.leaves}}
                   .dump()
            << "\n";
  } else {
    ctx.out << d.name << ": " << v.str() << "\n";
  }
  switch (v.status) {
    case Verdict::Status::Valid: return kOk;
    case Verdict::Status::Invalid: return kFailed;
    case Verdict::Status::UnknownFacts: return kUndecided;
  }
  return kFailed;
}

int cmd_prove(Context& ctx) {
  Derivation d;
  FactBase facts;
  if (ctx.opt.script == "theorem") {
    d = script_theorem_main();
    facts = h_fact_base(ctx.gens, ctx.search);
  } else if (ctx.opt.script == "lemma") {
    d = script_lemma_gen();
  } else {
    throw UsageError("unknown script '" + ctx.opt.script + "'");
  }
  const Verdict v = check_derivation(d, facts);
  const int code = report_verdict(ctx, d, v);
  write_certificate(ctx, d.name + ".cert.json", CertificateKind::Derivation, to_json(d));
  return code;
}

std::unique_ptr<IdentityOracle> make_oracle(const std::string& name, const Context& ctx) {
  if (name == "plane") return std::make_unique<PlaneOracle>(atom_table(ctx.gens), ctx.search);
  if (name == "skew") return std::make_unique<SkewOracle>(ctx.gens);
  if (name == "lattice") return std::make_unique<LatticeOracle>(LatticeOracle::standard());
  if (name == "test-z2") return std::make_unique<FiniteGroupOracle>(FiniteGroupOracle::z2());
  throw UsageError("unknown oracle '" + name + "' (plane, skew, lattice, test-z2)");
}

// Atom names as the oracle knows them.
FreeWord oracle_atom(const std::string& oracle, const std::string& text) {
  const FreeWord w = parse_word(text);
  return oracle == "plane" || oracle == "skew" ? canonical_h_word(w) : w;
}

std::string signs_str(const std::vector<int>& signs) {
  std::string s = "(";
  for (std::size_t i = 0; i < signs.size(); ++i) s += (i ? "," : "") + std::string(signs[i] > 0 ? "+" : "-");
  return s + ")";
}

int cmd_check_cert(Context& ctx) {
  std::ifstream f(ctx.opt.cert_path, std::ios::binary);
  if (!f) throw std::ios_base::failure("cannot read " + ctx.opt.cert_path);
  std::stringstream buf;
  buf << f.rdbuf();
  const Certificate cert = parse_certificate(buf.str());
  switch (cert.kind) {
    case CertificateKind::Derivation: {
      const Derivation d = derivation_from_json(cert.payload);
      return report_verdict(ctx, d, check_derivation(d, h_fact_base(ctx.gens, ctx.search)));
    }
    case CertificateKind::RelationReport: {
      const RelationReport claimed = relation_report_from_json(cert.payload);
      RelationReport fresh = verify_relations(ctx.gens);
      for (auto& e : verify_mirrored_relations(ctx.gens, ctx.search).entries) fresh.entries.push_back(std::move(e));
      const bool same = to_json(claimed) == to_json(fresh);
      ctx.out << "relation report " << (same ? "matches" : "does not match") << " a fresh computation\n";
      return same && fresh.all_hold() ? kOk : kFailed;
    }
    case CertificateKind::NonLOWitness: {
      const auto& p = cert.payload;
      if (!p.contains("oracle") || !p["oracle"].is_string()) throw CertificateError("witness names no oracle");
      const auto oracle = make_oracle(p["oracle"].get<std::string>(), ctx);
      const bool ok = verify_nonlo_witness(witness_from_json(p), *oracle);
      ctx.out << "witness " << (ok ? "accepted" : "rejected") << "\n";
      return ok ? kOk : kFailed;
    }
  }
  return kFailed;
}

int cmd_eval(Context& ctx) {
  const PlaneWord w = parse_h_word(ctx.opt.word, ctx.gens);
  const Point p = parse_point(ctx.opt.point);
  const Point image = w(p);
  if (ctx.json())
    ctx.out << Json{{"x", to_json(image.x)}, {"y", to_json(image.y)}}.dump() << "\n";
  else
    ctx.out << point_str(image) << "\n";
  return kOk;
}

int cmd_search(Context& ctx) {
  const std::string& name = ctx.opt.oracle;
  const auto oracle = make_oracle(name, ctx);
  std::string atoms_text = ctx.opt.atoms;
  if (atoms_text.empty()) atoms_text = name == "test-z2" ? "g" : name == "lattice" ? "x,y" : "a,b";
  std::vector<FreeWord> atoms;
  for (const auto& a : split_list(atoms_text)) atoms.push_back(oracle_atom(name, a));

  const auto witness = sign_search(atoms, {ctx.opt.depth, ctx.opt.max_products}, *oracle);
  if (!witness) {
    ctx.out << "no witness within depth " << ctx.opt.depth << "\n";
    return kUndecided;
  }
  if (!verify_nonlo_witness(*witness, *oracle)) {
    ctx.err << "internal error: search produced a witness that does not verify\n";
    return kFailed;
  }
  for (const auto& p : witness->products) {
    ctx.out << signs_str(p.signs) << " ";
    for (std::size_t i : p.factors) ctx.out << power(atoms[i], p.signs[i]).str() << " ";
    ctx.out << "= 1\n";
  }
  Json payload = to_json(*witness);
  payload["oracle"] = name;
  write_certificate(ctx, "witness.cert.json", CertificateKind::NonLOWitness, std::move(payload));
  return kOk;
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* s = std::getenv("ORDERCERT_SEED");
  if (!s || !*s) return fallback;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used, 0);
    if (s[used] != '\0') throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("ORDERCERT_SEED must be an integer, got '") + s + "'");
  }
}

}  // namespace

GeneratorSet apply_perturbation(std::string_view spec, GeneratorSet gens) {
  const auto pos = spec.find(":=");
  if (pos == std::string_view::npos) throw UsageError("perturbation must look like 'd:=d b'");
  std::string lhs(spec.substr(0, pos));
  lhs.erase(0, lhs.find_first_not_of(' '));
  lhs.erase(lhs.find_last_not_of(' ') + 1);
  const auto target = parse_symbol(lhs);
  if (!target) throw UsageError("cannot perturb '" + lhs + "'");
  const FreeWord rhs = parse_word(spec.substr(pos + 2));
  const GeneratorSet original = gens;
  SkewElement value;
  for (const auto& s : rhs.syllables()) {
    const auto sym = parse_symbol(s.atom);
    if (!sym) throw UsageError("unknown generator '" + s.atom + "' in perturbation");
    value = compose(value, power(original[*sym], s.exponent));
  }
  switch (*target) {
    case Symbol::Alpha: gens.alpha = value; break;
    case Symbol::Beta: gens.beta = value; break;
    case Symbol::Gamma: gens.gamma = value; break;
    case Symbol::Delta: gens.delta = value; break;
  }
  return gens;
}

PlaneWord parse_h_word(std::string_view text, const GeneratorSet& gens) {
  return atom_table(gens).realize(canonical_h_word(parse_word(text)));
}

Point parse_point(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw UsageError("point must look like 'p/q,p/q'");
  try {
    return {Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1))};
  } catch (const std::invalid_argument& e) {
    throw UsageError("bad point '" + std::string(text) + "': " + e.what());
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact verification of the relations in H and of certificates that H has no left-order", "ordercert"};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--no-timestamp", opt.no_timestamp, "Omit the timestamp from certificates");
  app.add_option("--perturb", opt.perturb, "Replace a generator, e.g. 'd:=d b' (test hook)");
  app.add_option("--out", opt.out, "Certificate path");

  auto* verify = app.add_subcommand("verify", "Check the relations of H and their mirrored forms");
  auto* epsilon = app.add_subcommand("epsilon", "Compute the product of the six conjugates");
  auto* prove = app.add_subcommand("prove", "Build, check, and write a derivation certificate");
  prove->add_option("--script", opt.script, "theorem or lemma")->check(CLI::IsMember({"theorem", "lemma"}));
  auto* check = app.add_subcommand("check-cert", "Re-check a certificate file");
  check->add_option("path", opt.cert_path, "Certificate file")->required();
  auto* eval = app.add_subcommand("eval", "Apply a word in the generators to a point");
  eval->add_option("word", opt.word, "Word, e.g. 'c^d' or 'a b^-2'")->required();
  eval->add_option("point", opt.point, "Point 'p/q,p/q'")->required();
  auto* search = app.add_subcommand("search", "Look for a sign-vector witness of non-left-orderability");
  search->add_option("--depth", opt.depth, "Longest product tried");
  search->add_option("--max-products", opt.max_products, "Distinct elements kept per sign vector");
  search->add_option("--atoms", opt.atoms, "Comma-separated atoms");
  search->add_option("--oracle", opt.oracle, "plane, skew, lattice, or test-z2");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    Context ctx{opt, out, err, GeneratorSet::standard(), {}};
    ctx.search.seed = seed_from_env(ctx.search.seed);
    if (!opt.perturb.empty()) ctx.gens = apply_perturbation(opt.perturb, ctx.gens);
    if (verify->parsed()) return cmd_verify(ctx);
    if (epsilon->parsed()) return cmd_epsilon(ctx);
    if (prove->parsed()) return cmd_prove(ctx);
    if (check->parsed()) return cmd_check_cert(ctx);
    if (eval->parsed()) return cmd_eval(ctx);
    if (search->parsed()) return cmd_search(ctx);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const CertificateError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUndecided;
  }
  return kInputError;
}

}  // namespace ordercert::cli
