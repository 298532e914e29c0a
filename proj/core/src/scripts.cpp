#include "ordercert/scripts.hpp"

#include <functional>
#include <set>

namespace ordercert {

namespace {

FreeWord W(std::string_view text) { return FreeWord::parse(text); }

Judgment lt(FreeWord a, FreeWord b) { return Judgment::less(std::move(a), std::move(b)); }

// Appends steps to one branch under a common id prefix.
class Writer {
 public:
  Writer(Branch& branch, std::string prefix) : branch_(branch), prefix_(std::move(prefix)) {}

  Branch& branch() { return branch_; }
  const std::string& prefix() const { return prefix_; }

  std::string step(const std::string& label, Rule rule, Params params, std::vector<std::string> premises,
                   std::vector<std::string> facts, Judgment conclusion) {
    Step s;
    s.id = prefix_ + "." + label;
    s.rule = rule;
    s.params = std::move(params);
    s.premises = std::move(premises);
    s.facts = std::move(facts);
    s.conclusion = std::move(conclusion);
    branch_.steps.push_back(std::move(s));
    return branch_.steps.back().id;
  }

  // Two-way split; returns the children, whose assumptions are filled in.
  std::vector<Branch>& split(const std::string& label, SplitRule rule, Params params,
                             std::vector<std::string> premises, std::vector<std::string> facts,
                             std::vector<std::pair<std::string, std::vector<Judgment>>> cases) {
    Split s;
    s.id = prefix_ + "." + label;
    s.rule = rule;
    s.params = std::move(params);
    s.premises = std::move(premises);
    s.facts = std::move(facts);
    for (auto& [name, assumptions] : cases) {
      Branch b;
      b.id = prefix_ + "/" + name;
      b.assumptions = std::move(assumptions);
      s.branches.push_back(std::move(b));
    }
    branch_.split = std::move(s);
    return branch_.split->branches;
  }

 private:
  Branch& branch_;
  std::string prefix_;
};

Params words(std::initializer_list<std::pair<const std::string, FreeWord>> w,
             std::initializer_list<std::pair<const std::string, long>> i = {},
             std::initializer_list<std::pair<const std::string, std::string>> t = {}) {
  Params p;
  p.words = w;
  p.ints = i;
  p.tags = t;
  return p;
}

// The atoms playing a, b, c, d and the facts that carry the lemma's hypotheses.
struct Roles {
  FreeWord a, b, c, d;
  std::string commute_ab, commute_bc, commute_bd;
  std::string conj_c, conj_d;
  std::string nonid_c;

  // Minimal citations for commute(u, b^+-1).
  std::vector<std::string> commute_with_b(const FreeWord& u) const {
    std::set<std::string> ids;
    const auto atoms = u.atoms();
    auto has = [&](const FreeWord& x) { return atoms.count(x.syllables().front().atom) != 0; };
    if (has(a)) ids.insert(commute_ab);
    if (has(c)) ids.insert(commute_bc);
    if (has(d)) ids.insert(commute_bd);
    return {ids.begin(), ids.end()};
  }
  std::vector<std::string> commute_with_b(const FreeWord& u, const FreeWord& v) const {
    std::set<std::string> ids;
    for (const auto& id : commute_with_b(u)) ids.insert(id);
    for (const auto& id : commute_with_b(v)) ids.insert(id);
    return {ids.begin(), ids.end()};
  }
};

Roles abstract_roles() {
  return {W("a"), W("b"), W("c"), W("d"), "A1", "A2", "A3", "A4", "A5", "A7.c"};
}

Roles h_roles() {
  return {W("alpha"), W("beta"), W("gamma"), W("delta"), "F1", "F2", "F3", "F4", "F5", "F7.gamma"};
}

Roles mirrored_roles() {
  return {W("beta"),   W("alpha"),  W("gamma_eta"), W("delta_eta"),   "F1.eta",
          "F2.eta",    "F3.eta",    "F4.eta",       "F5.eta",         "F7.eta.gamma_eta"};
}

// Called in each surviving branch with the ids of t^-12 < P and P < t^12.
using Finish = std::function<void(Writer&, const std::string& lower, const std::string& upper, const FreeWord& P)>;

// Given 1 < t (t = b or b^-1), a < t and a^-1 < t, bounds the product of the
// six conjugates c^(d a^k) strictly between t^-12 and t^12.
void emit_lemma_body(Writer& w, const Roles& r, const FreeWord& t, const std::string& pos_t,
                     const std::string& a_below, const std::string& a_inv_below, const Finish& finish) {
  auto T = [&](long k) { return power(t, k); };
  const FreeWord& a = r.a;
  const FreeWord& c = r.c;
  const FreeWord& d = r.d;

  // t^-k < a^k < t^k for k = 1..5.
  std::vector<std::string> up(6), lo(6);
  up[1] = a_below;
  lo[1] = w.step("a.lo1", Rule::Invert, words({{"u", inverse(a)}, {"t", t}}, {{"m", 1}}, {{"dir", "lt"}}),
                 {a_inv_below}, r.commute_with_b(a), lt(T(-1), a));
  for (long k = 2; k <= 5; ++k) {
    const FreeWord prev = power(a, k - 1);
    up[k] = w.step("a.up" + std::to_string(k), Rule::Product,
                   words({{"u", prev}, {"v", a}, {"t", t}}, {{"m", k - 1}, {"n", 1}}, {{"dir", "lt"}}),
                   {up[k - 1], up[1]}, r.commute_with_b(a), lt(power(a, k), T(k)));
    lo[k] = w.step("a.lo" + std::to_string(k), Rule::Product,
                   words({{"u", prev}, {"v", a}, {"t", t}}, {{"m", -(k - 1)}, {"n", -1}}, {{"dir", "gt"}}),
                   {lo[k - 1], lo[1]}, r.commute_with_b(a), lt(T(-k), power(a, k)));
  }

  // t^-1 < c < t and t^-1 < d < t, from c^(a^3) = c^-1 and d^(a^3) = d^-1.
  const FreeWord a3 = power(a, 3);
  auto flip = [&](const std::string& name, const FreeWord& u, const std::string& conj_fact, const char* side) {
    std::vector<std::string> facts = r.commute_with_b(u, a3);
    facts.insert(facts.begin(), conj_fact);
    const bool lower = std::string_view(side) == "lower";
    return w.step(name + (lower ? ".lo" : ".up"), Rule::FlipBound,
                  words({{"u", u}, {"v", a3}, {"t", t}}, {{"n1", -3}, {"n2", 3}}, {{"side", side}}),
                  {lo[3], up[3], pos_t}, facts, lower ? lt(T(-1), u) : lt(u, T(1)));
  };
  const std::string c_lo = flip("c", c, r.conj_c, "lower");
  const std::string c_up = flip("c", c, r.conj_c, "upper");
  const std::string d_lo = flip("d", d, r.conj_d, "lower");
  const std::string d_up = flip("d", d, r.conj_d, "upper");

  // t^-(k+1) < d a^k < t^(k+1).
  std::vector<FreeWord> v(6);
  std::vector<std::string> v_lo(6), v_up(6);
  v[0] = d;
  v_lo[0] = d_lo;
  v_up[0] = d_up;
  for (long k = 1; k <= 5; ++k) {
    v[k] = d * power(a, k);
    const FreeWord ak = power(a, k);
    v_up[k] = w.step("v" + std::to_string(k) + ".up", Rule::Product,
                     words({{"u", d}, {"v", ak}, {"t", t}}, {{"m", 1}, {"n", k}}, {{"dir", "lt"}}),
                     {d_up, up[k]}, r.commute_with_b(d, ak), lt(v[k], T(k + 1)));
    v_lo[k] = w.step("v" + std::to_string(k) + ".lo", Rule::Product,
                     words({{"u", d}, {"v", ak}, {"t", t}}, {{"m", -1}, {"n", -k}}, {{"dir", "gt"}}),
                     {d_lo, lo[k]}, r.commute_with_b(d, ak), lt(T(-(k + 1)), v[k]));
  }

  // c lies in (t^-1, 1) or (1, t); c = 1 is excluded.
  auto& cases = w.split("c.window", SplitRule::Window, words({{"v", c}, {"t", t}}, {{"n1", -1}, {"n2", 1}}),
                        {c_lo, c_up}, {r.nonid_c},
                        {{"c<1", {lt(T(-1), c), lt(c, T(0))}}, {"c>1", {lt(T(0), c), lt(c, T(1))}}});

  for (long m = 0; m <= 1; ++m) {
    Branch& br = cases[static_cast<std::size_t>(m)];
    Writer bw(br, br.id);
    const std::string c_lo_m = br.assumption_id(0);
    const std::string c_up_m = br.assumption_id(1);

    // Widening t^(m+1) or t^(m-2) to t^2 / t^-2.
    const std::string widen = m == 0 ? bw.step("widen", Rule::LeftMultiply, words({{"w", T(1)}}), {pos_t}, {},
                                               lt(T(1), T(2)))
                                     : bw.step("widen", Rule::LeftMultiply, words({{"w", T(-2)}}), {pos_t}, {},
                                               lt(T(-2), T(-1)));

    std::vector<FreeWord> g(6);
    std::vector<std::string> g_lo(6), g_up(6);
    for (long k = 0; k <= 5; ++k) {
      const std::string tag = "g" + std::to_string(k);
      g[k] = conjugate(c, v[k]);
      const Params p = words({{"u", c}, {"v", v[k]}, {"t", t}}, {{"m", m}, {"n1", -(k + 1)}, {"n2", k + 1}});
      const std::vector<std::string> prem = {c_lo_m, c_up_m, v_lo[k], v_up[k]};
      const std::vector<std::string> facts = r.commute_with_b(c, v[k]);
      Params lo_p = p;
      lo_p.tags["side"] = "lower";
      Params up_p = p;
      up_p.tags["side"] = "upper";
      std::string lo_id = bw.step(tag + ".lo", Rule::ConjugateWindow, lo_p, prem, facts, lt(T(m - 2), g[k]));
      std::string up_id = bw.step(tag + ".up", Rule::ConjugateWindow, up_p, prem, facts, lt(g[k], T(m + 1)));
      if (m == 0) {
        up_id = bw.step(tag + ".up2", Rule::Transitivity, {}, {up_id, widen}, {}, lt(g[k], T(2)));
      } else {
        lo_id = bw.step(tag + ".lo2", Rule::Transitivity, {}, {widen, lo_id}, {}, lt(T(-2), g[k]));
      }
      g_lo[k] = lo_id;
      g_up[k] = up_id;
    }

    FreeWord P = g[0];
    std::string P_lo = g_lo[0];
    std::string P_up = g_up[0];
    for (long k = 1; k <= 5; ++k) {
      const std::string tag = "prod" + std::to_string(k);
      const std::vector<std::string> facts = r.commute_with_b(P, g[k]);
      const std::string next_up =
          bw.step(tag + ".up", Rule::Product, words({{"u", P}, {"v", g[k]}, {"t", t}}, {{"m", 2 * k}, {"n", 2}}, {{"dir", "lt"}}),
                  {P_up, g_up[k]}, facts, lt(P * g[k], T(2 * k + 2)));
      const std::string next_lo = bw.step(
          tag + ".lo", Rule::Product, words({{"u", P}, {"v", g[k]}, {"t", t}}, {{"m", -2 * k}, {"n", -2}}, {{"dir", "gt"}}),
          {P_lo, g_lo[k]}, facts, lt(T(-2 * k - 2), P * g[k]));
      P = P * g[k];
      P_up = next_up;
      P_lo = next_lo;
    }
    finish(bw, P_lo, P_up, P);
  }
}

// 1 < t^24 by doubling from 1 < t.
std::string positive_power_24(Writer& w, const FreeWord& t, const std::string& pos_t) {
  auto dbl = [&](const std::string& label, long i, long j, const std::string& pi, const std::string& pj) {
    return w.step(label, Rule::Product, words({{"u", power(t, i)}, {"v", power(t, j)}, {"t", t}}, {{"m", 0}, {"n", 0}},
                                              {{"dir", "gt"}}),
                  {pi, pj}, {}, lt(FreeWord(), power(t, i + j)));
  };
  const std::string p2 = dbl("pow2", 1, 1, pos_t, pos_t);
  const std::string p4 = dbl("pow4", 2, 2, p2, p2);
  const std::string p8 = dbl("pow8", 4, 4, p4, p4);
  const std::string p16 = dbl("pow16", 8, 8, p8, p8);
  return dbl("pow24", 16, 8, p16, p8);
}

// With P = b^-36 (fact eps_fact) and t = b^sign, contradicts t^-12 < P < t^12.
Finish close_with_epsilon(const FreeWord& t, int sign, const std::string& pos_t, const std::string& eps_fact) {
  return [=](Writer& w, const std::string& lower, const std::string& upper, const FreeWord&) {
    auto T = [&](long k) { return power(t, k); };
    const std::string p24 = positive_power_24(w, t, pos_t);
    if (sign > 0) {
      // P = t^-36: t^-12 < t^-36 < t^-12.
      const std::string s = w.step("eps.subst", Rule::Substitute, words({}, {}, {{"side", "right"}}), {lower},
                                   {eps_fact}, lt(T(-12), T(-36)));
      const std::string gap =
          w.step("eps.gap", Rule::LeftMultiply, words({{"w", T(-36)}}), {p24}, {}, lt(T(-36), T(-12)));
      const std::string loop = w.step("eps.loop", Rule::Transitivity, {}, {s, gap}, {}, lt(T(-12), T(-12)));
      w.step("eps.absurd", Rule::Absurd, {}, {loop}, {}, Judgment::contradiction());
    } else {
      // P = t^36: t^12 < t^36 < t^12.
      const std::string s = w.step("eps.subst", Rule::Substitute, words({}, {}, {{"side", "left"}}), {upper},
                                   {eps_fact}, lt(T(36), T(12)));
      const std::string gap =
          w.step("eps.gap", Rule::LeftMultiply, words({{"w", T(12)}}), {p24}, {}, lt(T(12), T(36)));
      const std::string loop = w.step("eps.loop", Rule::Transitivity, {}, {gap, s}, {}, lt(T(12), T(12)));
      w.step("eps.absurd", Rule::Absurd, {}, {loop}, {}, Judgment::contradiction());
    }
  };
}

// Splits on 1 < x | x < 1 (x = 1 closed by `nonid`). Calls `body` in each case
// with sign s and the id of a judgment 1 < x^s.
void split_sign(Writer& w, const std::string& label, const FreeWord& x, const std::string& nonid,
                const std::function<void(Writer&, int, const std::string&)>& body) {
  auto& cases = w.split(label, SplitRule::Trichotomy, words({{"u", FreeWord()}, {"v", x}}), {}, {nonid},
                        {{label + "+", {lt(FreeWord(), x)}}, {label + "-", {lt(x, FreeWord())}}});
  {
    Writer pw(cases[0], cases[0].id);
    body(pw, +1, cases[0].assumption_id(0));
  }
  {
    Writer nw(cases[1], cases[1].id);
    const std::string pos = nw.step("flip", Rule::LeftMultiply, words({{"w", inverse(x)}}),
                                    {cases[1].assumption_id(0)}, {}, lt(FreeWord(), inverse(x)));
    body(nw, -1, pos);
  }
}

}  // namespace

Derivation script_lemma_gen() {
  Derivation d;
  d.name = "lemma_gen";
  d.assumed_facts = lemma_hypotheses();
  const Roles r = abstract_roles();
  d.hypotheses = {{"H1", {r.a, r.b, 1}}};
  const FreeWord product = epsilon_word(r.a, r.c, r.d);
  d.goal = {Goal::Kind::AbsLess, {product, r.b, 12}};
  d.root.id = "L";

  Writer root(d.root, "L");
  split_sign(root, "b", r.b, "A7.b", [&](Writer& w, int sign, const std::string& pos) {
    const FreeWord t = power(r.b, sign);
    const std::string a_below = w.step("hyp.direct", Rule::AbsElim, words({}, {}, {{"hyp", "H1"}, {"part", "direct"}}),
                                       {pos}, {}, lt(r.a, t));
    const std::string a_inv_below = w.step("hyp.inverse", Rule::AbsElim,
                                           words({}, {}, {{"hyp", "H1"}, {"part", "inverse"}}), {pos}, {},
                                           lt(inverse(r.a), t));
    emit_lemma_body(w, r, t, pos, a_below, a_inv_below,
                    [&, t, pos](Writer& leaf, const std::string& lower, const std::string&, const FreeWord& P) {
                      leaf.step("goal.inverse", Rule::Invert, words({{"u", P}, {"t", t}}, {{"m", -12}}, {{"dir", "gt"}}),
                                {lower}, r.commute_with_b(P), lt(inverse(P), power(t, 12)));
                    });
  });
  return d;
}

Derivation script_theorem_main() {
  Derivation d;
  d.name = "theorem_main";
  d.goal = {Goal::Kind::Contradiction, {}};
  d.root.id = "T";
  const FreeWord alpha = W("alpha");
  const FreeWord beta = W("beta");

  Writer root(d.root, "T");
  split_sign(root, "beta", beta, "F7.beta", [&](Writer& wb, int sb, const std::string& pos_b) {
    const FreeWord B = power(beta, sb);
    split_sign(wb, "alpha", alpha, "F7.alpha", [&, B, sb, pos_b](Writer& wa, int sa, const std::string& pos_a) {
      const FreeWord A = power(alpha, sa);
      auto& cases = wa.split("cmp", SplitRule::Trichotomy, words({{"u", A}, {"v", B}}), {}, {"F8"},
                             {{"|a|<|b|", {lt(A, B)}}, {"|b|<|a|", {lt(B, A)}}});

      // |alpha| < |beta|: the lemma for (alpha, beta, gamma, delta) with t = |beta|.
      {
        Branch& br = cases[0];
        Writer w(br, br.id);
        const std::string below = w.step("inv", Rule::LeftMultiply, words({{"w", inverse(A)}}), {pos_a}, {},
                                         lt(inverse(A), FreeWord()));
        const std::string inv_below = w.step("inv.t", Rule::Transitivity, {}, {below, pos_b}, {}, lt(inverse(A), B));
        const std::string direct = br.assumption_id(0);
        const auto& [a_below, a_inv_below] = sa > 0 ? std::pair{direct, inv_below} : std::pair{inv_below, direct};
        emit_lemma_body(w, h_roles(), B, pos_b, a_below, a_inv_below, close_with_epsilon(B, sb, pos_b, "F6"));
      }
      // |beta| < |alpha|: the eta-image, (beta, alpha, gamma_eta, delta_eta) with t = |alpha|.
      {
        Branch& br = cases[1];
        Writer w(br, br.id);
        const std::string below = w.step("inv", Rule::LeftMultiply, words({{"w", inverse(B)}}), {pos_b}, {},
                                         lt(inverse(B), FreeWord()));
        const std::string inv_below = w.step("inv.t", Rule::Transitivity, {}, {below, pos_a}, {}, lt(inverse(B), A));
        const std::string direct = br.assumption_id(0);
        const auto& [a_below, a_inv_below] = sb > 0 ? std::pair{direct, inv_below} : std::pair{inv_below, direct};
        emit_lemma_body(w, mirrored_roles(), A, pos_a, a_below, a_inv_below,
                        close_with_epsilon(A, sa, pos_a, "F6.eta"));
      }
    });
  });
  return d;
}

}  // namespace ordercert
