#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grbraid/braid_sigma.hpp"
#include "grbraid/cluster_seed.hpp"
#include "grbraid/ext_crystal.hpp"
#include "grbraid/json_io.hpp"
#include "grbraid/kring.hpp"
#include "grbraid/multisegment.hpp"
#include "grbraid/recognize.hpp"
#include "grbraid/translation.hpp"

namespace grbraid::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Args {
  std::string format = "text";
  int trials = 8;
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  std::string field = "F_p";

  int rank = 0;
  int m = 0;
  int n = 0;
  int N = 0;
  int i = 0;
  int k = 0;
  int times = 1;
  std::string op;
  std::string word;
  std::string var;
  std::string segment;
  std::string input;
  std::string path;
  std::vector<int> window;
  bool raw = false;
};

bool json_mode(const Args& a) { return a.format == "json"; }

void print(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::vector<int> parse_ints(const std::string& text, const char* what) {
  std::vector<int> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    int v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw UsageError(std::string("bad integer '") + token + "' in " + what);
    }
    out.push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t') flush();
    else token += c;
  }
  flush();
  return out;
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  buf << in.rdbuf();
  return buf.str();
}

Json load_json(const std::string& path) { return parse_json(read_input(path)); }

EqModOptions eq_options(const Args& a) {
  EqModOptions o;
  o.trials = a.trials;
  o.prime = a.prime;
  o.seed = a.seed;
  o.field = a.field == "Q" ? FieldKind::rational : FieldKind::prime;
  PrimeField check(o.prime);
  return o;
}

FundIndex parse_fund(int n, const std::string& text) {
  const auto ia = parse_ints(text, "--var");
  if (ia.size() != 2) throw UsageError("--var expects i,a");
  const FundIndex f{ia[0], ia[1]};
  check_fund(n, f);
  return f;
}

void require_rank(int got, int want, const char* what) {
  if (got != want) {
    throw UsageError(std::string(what) + " has rank " + std::to_string(got) + ", expected " +
                     std::to_string(want));
  }
}

// ---------------------------------------------------------------------------

int cmd_crystal(const Args& a, std::ostream& out) {
  const Multisegment m = a.input.empty() ? Multisegment(a.rank) : multisegment_from_json(load_json(a.input));
  require_rank(m.rank(), a.rank, "input multisegment");
  if (a.i < 1 || a.i > a.rank) throw UsageError("--i outside [1, rank]");
  if (a.op == "stats") {
    const CrystalStats st = crystal_stats(m, a.i);
    if (json_mode(a)) print(out, to_json(st));
    else
      out << "eps=" << st.eps << " eps_star=" << st.eps_star << " phi=" << st.phi << " phi_star=" << st.phi_star
          << " wt_i=" << st.wt_i << '\n';
    return 0;
  }
  std::optional<Multisegment> result = m;
  for (int t = 0; t < a.times && result; ++t) {
    if (a.op == "saito") result = saito_reflection(*result, a.i);
    else if (a.op == "saito_star") result = saito_reflection_star(*result, a.i);
    else if (a.op == "tilde_saito") result = tilde_saito_reflection(*result, a.i);
    else if (auto op = parse_crystal_op(a.op)) result = apply_operator(*result, *op, a.i);
    else throw UsageError("unknown crystal op '" + a.op + "'");
  }
  if (json_mode(a)) print(out, result ? to_json(*result) : Json(nullptr));
  else out << (result ? to_string(*result) : "0") << '\n';
  return 0;
}

int cmd_extcrystal(const Args& a, std::ostream& out) {
  const ExtElement b = a.input.empty() ? ExtElement(a.rank) : ext_element_from_json(load_json(a.input));
  require_rank(b.rank(), a.rank, "input element");
  const auto word = parse_ints(a.word, "--word");
  if (a.op == "R" && !word.empty()) {
    const ExtElement r = braid_R_word(b, word);
    if (json_mode(a)) print(out, to_json(r));
    else out << to_string(r) << '\n';
    return 0;
  }
  if (a.i < 1 || a.i > a.rank) throw UsageError("--i outside [1, rank]");
  if (a.op == "eps_hat") {
    const int v = eps_hat(b, a.i, a.k);
    if (json_mode(a)) print(out, Json(v));
    else out << v << '\n';
    return 0;
  }
  ExtElement r = b;
  for (int t = 0; t < a.times; ++t) {
    if (a.op == "F") r = extended_f(r, a.i, a.k);
    else if (a.op == "E") r = extended_e(r, a.i, a.k);
    else if (a.op == "R") r = braid_R(r, a.i);
    else throw UsageError("unknown extcrystal op '" + a.op + "'");
  }
  if (json_mode(a)) print(out, to_json(r));
  else out << to_string(r) << '\n';
  return 0;
}

int cmd_sigma(const Args& a, std::ostream& out) {
  if (a.var.empty() == a.input.empty()) throw UsageError("give exactly one of --var and --input");
  PlueckerPoly p(a.m);
  if (!a.var.empty()) {
    p = PlueckerPoly::variable(a.m, parse_ints(a.var, "--var"));
  } else {
    p = pluecker_from_json(load_json(a.input));
    if (p.width() != a.m) throw UsageError("input polynomial width differs from --m");
  }
  const auto word = parse_ints(a.word, "--word");
  for (int i : word) check_sigma_index(a.m, i);
  PlueckerPoly r = apply_word(p, word);
  if (!a.raw) {
    RecognizeOptions ro;
    ro.seed ^= a.seed;
    ro.prime = a.prime;
    r = simplify(r, ro);
  }
  if (json_mode(a)) print(out, to_json(r));
  else out << to_string(r) << '\n';
  return 0;
}

KPoly kpoly_input(const Args& a) {
  if (a.var.empty() == a.input.empty()) throw UsageError("give exactly one of --var and --input");
  if (!a.var.empty()) return KPoly::variable(a.n, parse_fund(a.n, a.var));
  return kpoly_from_json(load_json(a.input), a.n);
}

KMonomial monomial_input(const Args& a) {
  const KPoly p = kpoly_input(a);
  if (p.size() != 1 || p.terms().begin()->second != 1) throw UsageError("input must be a single monomial");
  return p.terms().begin()->first;
}

void print_kpoly(const Args& a, std::ostream& out, const KPoly& p) {
  if (json_mode(a)) print(out, to_json(p));
  else out << to_string(p) << '\n';
}

int cmd_kring(const Args& a, std::ostream& out) {
  if (a.n < 1) throw UsageError("--n must be positive");
  if (a.op == "locate") {
    const auto [k, base] = locate(a.n, parse_fund(a.n, a.var));
    if (json_mode(a)) print(out, Json{{"k", k}, {"base", {{"i", base.i}, {"a", base.a}}}});
    else out << "k=" << k << " base=" << to_string(base) << '\n';
    return 0;
  }
  if (a.op == "R2") {
    if (a.n != 2) throw UsageError("R2 needs --n 2");
    if (a.i != 1 && a.i != 2) throw UsageError("R2 needs --i 1 or 2");
    print_kpoly(a, out, KPoly::monomial(2, rank2_R(a.i, monomial_input(a))));
    return 0;
  }
  const KPoly p = kpoly_input(a);
  if (a.op == "T") {
    auto word = parse_ints(a.word, "--word");
    if (word.empty()) word.push_back(a.i);
    for (int i : word)
      if (i < 1 || i > a.n) throw UsageError("braid index outside [1, n]");
    print_kpoly(a, out, braid_T_word(p, word));
  } else if (a.op == "shift") {
    print_kpoly(a, out, spectral_shift(p, a.k));
  } else if (a.op == "dual") {
    print_kpoly(a, out, dual(p));
  } else {
    throw UsageError("unknown kring op '" + a.op + "'");
  }
  return 0;
}

int cmd_translate(const Args& a, std::ostream& out) {
  if (a.n < 1) throw UsageError("--n must be positive");
  if (a.op == "phi") {
    const PlueckerPoly p = Phi(kpoly_input(a));
    if (json_mode(a)) print(out, to_json(p));
    else out << to_string(p) << '\n';
  } else if (a.op == "seg") {
    const auto ab = parse_ints(a.segment, "--segment");
    if (ab.size() != 2) throw UsageError("--segment expects a,b");
    const FundIndex f = seg_to_fund(a.n, {ab[0], ab[1]}, a.k);
    if (json_mode(a)) print(out, Json{{"i", f.i}, {"a", f.a}});
    else out << to_string(f) << '\n';
  } else if (a.op == "ext") {
    if (a.input.empty()) throw UsageError("ext needs --input");
    const ExtElement b = ext_element_from_json(load_json(a.input));
    require_rank(b.rank(), a.n, "input element");
    const DominantMonomial mono = ext_to_monomial(b);
    const auto image = known_simple_image(a.n, mono);
    if (json_mode(a)) {
      print(out, Json{{"monomial", to_json(mono)}, {"image", image ? to_json(*image) : Json(nullptr)}});
    } else {
      out << "[V(" << to_string(mono) << ")]";
      if (image) out << " = " << to_string(*image);
      out << '\n';
    }
  } else if (a.op == "mono") {
    const ExtElement b = monomial_to_ext(a.n, monomial_input(a));
    if (json_mode(a)) print(out, to_json(b));
    else out << to_string(b) << '\n';
  } else {
    throw UsageError("unknown translate op '" + a.op + "'");
  }
  return 0;
}

std::vector<Vertex> parse_path(const std::string& text) {
  std::vector<Vertex> out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    std::string stripped;
    for (char c : token)
      if (c != '(' && c != ')') stripped += c;
    const auto ab = parse_ints(stripped, "--path");
    if (ab.size() != 2) throw UsageError("path vertices are written a,b");
    out.push_back({ab[0], ab[1]});
  }
  return out;
}

Seed seed_input(const Args& a) {
  if (!a.input.empty()) return seed_from_json(load_json(a.input));
  if (a.m == 0 || a.N == 0) throw UsageError("give --m and --N, or --input");
  return initial_seed(a.m, a.N);
}

Seed follow_path(Seed s, const Args& a) {
  MutateOptions mo;
  mo.seed ^= a.seed;
  mo.trials = a.trials;
  for (Vertex v : parse_path(a.path)) s = mutate(s, v, mo);
  return s;
}

void print_seed(const Args& a, std::ostream& out, const Seed& s) {
  if (json_mode(a)) {
    print(out, to_json(s));
    return;
  }
  out << "seed m=" << s.width() << " N=" << s.columns() << ": " << s.quiver().vertices().size() << " vertices, "
      << s.quiver().arrow_count() << " arrows\n";
  for (Vertex v : s.quiver().vertices()) {
    const char* role = s.role(v) == VertexRole::frozen ? "frozen" : s.role(v) == VertexRole::boundary ? "boundary" : "mutable";
    out << to_string(v) << ' ' << role << ' ' << to_string(s.labels().at(v)) << ": " << to_string(s.var(v)) << '\n';
  }
  for (const auto& [edge, c] : s.quiver().arrows()) {
    out << to_string(edge.first) << " -> " << to_string(edge.second);
    if (c > 1) out << " x" << c;
    out << '\n';
  }
}

void print_report(const Args& a, std::ostream& out, const CheckReport& r) {
  if (json_mode(a)) {
    print(out, to_json(r));
    return;
  }
  out << r.kind << " n=" << r.n;
  if (!r.word.empty()) {
    out << " word=";
    for (std::size_t t = 0; t < r.word.size(); ++t) out << (t ? " " : "") << r.word[t];
  }
  if (r.kind == "commute") out << " window=[" << r.window.first << "," << r.window.second << "]";
  out << " trials=" << r.options.trials << " prime=" << r.options.prime << " seed=" << r.options.seed
      << " field=" << (r.options.field == FieldKind::rational ? "Q" : "F_p") << '\n';
  for (const auto& e : r.entries) {
    out << (e.equal ? "PASS  " : "FAIL  ") << e.name << '\n';
    if (!e.equal) {
      out << "      lhs: " << e.lhs << "\n      rhs: " << e.rhs << '\n';
      if (e.witness) {
        out << "      witness: seed=" << e.witness->seed << " trial=" << e.witness->trial << " range=["
            << e.witness->lo << "," << e.witness->hi << "] " << e.witness->field << " values " << e.witness->lhs
            << " vs " << e.witness->rhs << '\n';
      }
    }
  }
  out << r.entries.size() << " checks, " << r.failures() << " failures\n";
}

int finish(const Args& a, std::ostream& out, const CheckReport& r) {
  print_report(a, out, r);
  return r.passed() ? 0 : 1;
}

int cmd_verify_commute(const Args& a, std::ostream& out) {
  if (a.n < 1) throw UsageError("--n must be positive");
  int lo = -2 * a.n, hi = 4 * a.n;
  if (!a.window.empty()) {
    if (a.window.size() != 2) throw UsageError("--window takes LO HI");
    lo = a.window[0];
    hi = a.window[1];
  }
  const EqModOptions opts = eq_options(a);
  if (a.i != 0) return finish(a, out, commute_check(a.n, a.i, lo, hi, opts));
  CheckReport all{"commute", a.n, {}, {lo, hi}, opts, {}};
  for (int i = 1; i <= a.n; ++i) {
    CheckReport r = commute_check(a.n, i, lo, hi, opts);
    all.word.push_back(i);
    all.entries.insert(all.entries.end(), r.entries.begin(), r.entries.end());
  }
  return finish(a, out, all);
}

int cmd_verify_crystal(const Args& a, std::ostream& out) {
  if (a.input.empty()) throw UsageError("crystal verification needs --input with the cases");
  const Json j = load_json(a.input);
  std::vector<ExtElement> cases;
  if (j.is_array())
    for (const auto& x : j) cases.push_back(ext_element_from_json(x));
  else
    cases.push_back(ext_element_from_json(j));
  const auto word = parse_ints(a.word, "--word");
  if (word.empty()) throw UsageError("--word is required");
  for (int i : word)
    if (i < 1 || i > a.n) throw UsageError("braid index outside [1, n]");
  return finish(a, out, crystal_commute_check(a.n, word, cases, eq_options(a)));
}

int cmd_verify_exchange(const Args& a, std::ostream& out) {
  const EqModOptions opts = eq_options(a);
  const Seed s = follow_path(seed_input(a), a);
  CheckReport r{"exchange", s.width(), {}, {0, 0}, opts, {}};
  MutateOptions mo;
  mo.seed ^= a.seed;
  mo.trials = a.trials;
  for (Vertex v : s.exchangeable_vertices()) {
    const Seed t = mutate(s, v, mo);
    const bool ok = verify_exchange(s, v, opts);
    r.entries.push_back({"exchange at " + to_string(v), to_string(s.var(v) * t.var(v)),
                         to_string(s.exchange_sum(v)), ok, std::nullopt});
    const Seed back = mutate(t, v, mo);
    r.entries.push_back({"involution at " + to_string(v), to_string(back.var(v)), to_string(s.var(v)),
                         seeds_equivalent(back, s, opts), std::nullopt});
  }
  return finish(a, out, r);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Braid group actions on Grassmannian cluster algebras, extended crystals and Grothendieck rings",
               "gr-braid"};
  app.require_subcommand(1);
  app.fallthrough();
  Args a;
  app.add_option("--format", a.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--trials", a.trials, "random evaluations per equality test")->check(CLI::Range(1, 1 << 20));
  app.add_option("--prime", a.prime, "modulus of the evaluation field");
  app.add_option("--seed", a.seed, "seed of every randomized step");
  app.add_option("--field", a.field, "F_p or Q")->check(CLI::IsMember({"F_p", "Q"}));

  auto* crystal = app.add_subcommand("crystal", "Kashiwara operators, statistics and Saito reflections");
  crystal->add_option("--rank", a.rank)->required()->check(CLI::Range(1, 64));
  crystal->add_option("--op", a.op, "f e f_star e_star stats saito saito_star tilde_saito")->required();
  crystal->add_option("--i", a.i)->required();
  crystal->add_option("--times", a.times)->check(CLI::Range(0, 1 << 16));
  crystal->add_option("--input", a.input, "multisegment JSON; the empty multisegment if omitted");

  auto* ext = app.add_subcommand("extcrystal", "Extended crystal operators and the braid action R");
  ext->add_option("--rank", a.rank)->required()->check(CLI::Range(1, 64));
  ext->add_option("--op", a.op, "F E R eps_hat")->required();
  ext->add_option("--i", a.i);
  ext->add_option("--k", a.k);
  ext->add_option("--times", a.times)->check(CLI::Range(0, 1 << 16));
  ext->add_option("--word", a.word, "R word, first letter applied first");
  ext->add_option("--input", a.input, "extended element JSON; the unit if omitted");

  auto* sig = app.add_subcommand("sigma", "Braid action on the frozen quotient");
  sig->add_option("--m", a.m)->required()->check(CLI::Range(2, kMaxMinorWidth));
  sig->add_option("--word", a.word, "first letter applied first")->required();
  sig->add_option("--var", a.var, "a single variable, e.g. 1,3,4");
  sig->add_option("--input", a.input, "polynomial JSON");
  sig->add_flag("--raw", a.raw, "print the expansion without recognizing a shorter form");

  auto* kr = app.add_subcommand("kring", "Grothendieck ring: T_i, shift, dual, rank-2 R, locate");
  kr->add_option("--n", a.n)->required()->check(CLI::Range(1, kMaxMinorWidth - 1));
  kr->add_option("--op", a.op, "T shift dual R2 locate")->required();
  kr->add_option("--i", a.i);
  kr->add_option("--k", a.k);
  kr->add_option("--word", a.word);
  kr->add_option("--var", a.var, "fundamental i,a");
  kr->add_option("--input", a.input, "polynomial JSON");

  auto* tr = app.add_subcommand("translate", "Dictionaries between the three sides");
  tr->add_option("--n", a.n)->required()->check(CLI::Range(1, kMaxMinorWidth - 1));
  tr->add_option("--op", a.op, "phi seg ext mono")->required();
  tr->add_option("--var", a.var, "fundamental i,a");
  tr->add_option("--segment", a.segment, "a,b");
  tr->add_option("--k", a.k);
  tr->add_option("--input", a.input);

  auto* seed = app.add_subcommand("seed", "Initial seeds and mutation");
  seed->require_subcommand(1);
  auto* show = seed->add_subcommand("show", "print a seed");
  auto* mut = seed->add_subcommand("mutate", "mutate along a path of vertices");
  for (auto* sub : {show, mut}) {
    sub->add_option("--m", a.m);
    sub->add_option("--N", a.N);
    sub->add_option("--input", a.input, "seed JSON instead of the initial seed");
  }
  mut->add_option("--path", a.path, "vertices, e.g. \"1,1 2,2\"")->required();

  auto* verify = app.add_subcommand("verify", "Verification suites");
  verify->require_subcommand(1);
  auto* v_commute = verify->add_subcommand("commute", "Phi o T_i = sigma_i o Phi on fundamentals");
  v_commute->add_option("--n", a.n)->required()->check(CLI::Range(1, kMaxMinorWidth - 1));
  v_commute->add_option("--i", a.i, "braid index; all indices if omitted");
  v_commute->add_option("--window", a.window, "LO HI")->expected(2);
  auto* v_ex = verify->add_subcommand("example63", "the worked rank-2 identities");
  auto* v_crystal = verify->add_subcommand("crystal", "R on extended crystals against sigma");
  v_crystal->add_option("--n", a.n)->required()->check(CLI::Range(1, kMaxMinorWidth - 1));
  v_crystal->add_option("--word", a.word)->required();
  v_crystal->add_option("--input", a.input, "an extended element or a list of them")->required();
  auto* v_exchange = verify->add_subcommand("exchange", "exchange relations and involutivity of a seed");
  v_exchange->add_option("--m", a.m);
  v_exchange->add_option("--N", a.N);
  v_exchange->add_option("--input", a.input);
  v_exchange->add_option("--path", a.path, "mutations applied first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*crystal) return cmd_crystal(a, out);
    if (*ext) return cmd_extcrystal(a, out);
    if (*sig) return cmd_sigma(a, out);
    if (*kr) return cmd_kring(a, out);
    if (*tr) return cmd_translate(a, out);
    if (*show) {
      print_seed(a, out, seed_input(a));
      return 0;
    }
    if (*mut) {
      print_seed(a, out, follow_path(seed_input(a), a));
      return 0;
    }
    if (*v_commute) return cmd_verify_commute(a, out);
    if (*v_ex) return finish(a, out, example63_report(eq_options(a)));
    if (*v_crystal) return cmd_verify_crystal(a, out);
    if (*v_exchange) return cmd_verify_exchange(a, out);
  } catch (const std::exception& e) {
    err << "gr-braid: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace grbraid::cli
