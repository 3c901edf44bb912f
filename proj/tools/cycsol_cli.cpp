// Batch command-line front end for the cycsol library.  Every subcommand
// prints a JSON envelope {command, parameters, payload, elapsed_ms} on
// stdout; --out csv / --out pretty switch the payload to flat text.  Exit
// codes: 0 success, 2 malformed input, 1 a verification suite that failed.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cycsol/algebra.hpp"
#include "cycsol/cosets.hpp"
#include "cycsol/hopf.hpp"
#include "cycsol/oracle.hpp"
#include "cycsol/representation.hpp"
#include "cycsol/struct_consts.hpp"

namespace {

using nlohmann::json;
using namespace cycsol;

enum class OutputMode { kJson, kCsv, kPretty };

struct Options {
  OutputMode out = OutputMode::kJson;
  std::string cache_dir;
};

json to_json(const SignedComposition& c) { return json(c.parts()); }

json to_json(const GroupElement& g) {
  return json{
      {"r", g.r()}, {"n", g.n()}, {"colours", g.colours()}, {"perm", g.perm()}};
}

json to_json(const Polynomial& p) { return json(p.coeffs()); }

SignedComposition parse_composition(const std::string& text) {
  try {
    return SignedComposition::parse(text);
  } catch (const std::exception& e) {
    throw CLI::ValidationError("composition", e.what());
  }
}

// --q accepts an integer, a fraction "p/q", or the formal parameter "x";
// --mod m turns an integer into the residue class mod m.
Coefficient parse_q(const std::string& text, long long mod) {
  if (text == "x") {
    if (mod) throw CLI::ValidationError("--q", "cannot reduce x mod m");
    return Coefficient::symbol_x();
  }
  if (text.find('/') != std::string::npos) {
    if (mod) throw CLI::ValidationError("--q", "cannot reduce a fraction mod m");
    return Coefficient::rational(parse_rational(text));
  }
  long long value = 0;
  try {
    size_t used = 0;
    value = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--q", "expected an integer, p/q, or x");
  }
  return mod ? Coefficient::mod(value, mod) : Coefficient::integer(value);
}

// Listing order for transversal-style element dumps.
std::vector<GroupElement> listing_order(std::vector<GroupElement> v) {
  std::sort(v.begin(), v.end(), [](const GroupElement& a, const GroupElement& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.colours() != b.colours()) return a.colours() < b.colours();
    return a.perm() < b.perm();
  });
  return v;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_ints(const std::vector<int>& v, const char* sep = " ") {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string element_text(const GroupElement& g) {
  return join_ints(g.colours()) + ";" + join_ints(g.perm());
}

void emit(const Options& opt, const std::string& command,
          const json& parameters, const json& payload,
          const std::string& plain,
          std::chrono::steady_clock::time_point start) {
  if (opt.out != OutputMode::kJson) {
    std::cout << plain;
    return;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  json envelope{{"command", command},
                {"parameters", parameters},
                {"payload", payload},
                {"elapsed_ms", elapsed}};
  std::cout << envelope.dump(2) << "\n";
}

// ---- subcommand bodies ----------------------------------------------------

void run_compositions(const Options& opt, int n, bool partitions_only) {
  const auto start = std::chrono::steady_clock::now();
  const auto all =
      partitions_only ? signed_partitions(n) : enumerate_signed_compositions(n);
  json list = json::array();
  std::string plain;
  for (const auto& c : all) {
    list.push_back(to_json(c));
    if (opt.out == OutputMode::kCsv)
      plain += join_ints(c.parts(), ",") + "\n";
    else if (opt.out == OutputMode::kPretty)
      plain += c.to_string() + "\n";
  }
  emit(opt, "compositions",
       {{"n", n}, {"partitions", partitions_only}},
       {{"n", n}, {"count", all.size()}, {"compositions", list}}, plain, start);
}

void run_transversal(const Options& opt, const std::string& mu_text, int r,
                     bool mak) {
  const auto start = std::chrono::steady_clock::now();
  const auto mu = parse_composition(mu_text);
  const auto elements = listing_order(mak ? mak_transversal(mu, r)
                                          : coset_transversal(mu, r));
  json list = json::array();
  std::string plain;
  for (const auto& e : elements) {
    list.push_back(to_json(e));
    if (opt.out == OutputMode::kCsv)
      plain += std::to_string(e.length()) + "," +
               csv_quote(join_ints(e.colours())) + "," +
               csv_quote(join_ints(e.perm())) + "\n";
    else if (opt.out == OutputMode::kPretty)
      plain += e.to_string() + "\n";
  }
  emit(opt, "transversal",
       {{"mu", to_json(mu)}, {"r", r}, {"mak", mak}},
       {{"mu", to_json(mu)},
        {"r", r},
        {"count", elements.size()},
        {"elements", list}},
       plain, start);
}

void run_doublecosets(const Options& opt, const std::string& mu_text,
                      const std::string& nu_text, int r) {
  const auto start = std::chrono::steady_clock::now();
  const auto mu = parse_composition(mu_text);
  const auto nu = parse_composition(nu_text);
  const auto families = double_coset_families(mu, nu);
  const auto minimal = minimal_double_coset_elements(mu, nu, r);
  const long long cosets = double_coset_count(mu, nu, r);
  json list = json::array();
  std::string plain;
  for (const auto& fam : families) {
    list.push_back(json{{"d", to_json(fam.d)},
                        {"weight", fam.weight},
                        {"mu_cap_dnu", to_json(fam.mu_cap_dnu)},
                        {"mud_cap_nu", to_json(fam.mud_cap_nu)}});
    if (opt.out == OutputMode::kCsv)
      plain += csv_quote(join_ints(fam.d.perm())) + "," +
               std::to_string(fam.weight) + "," +
               csv_quote(fam.mu_cap_dnu.to_string()) + "," +
               csv_quote(fam.mud_cap_nu.to_string()) + "\n";
    else if (opt.out == OutputMode::kPretty)
      plain += "d=[" + join_ints(fam.d.perm(), ",") +
               "] weight=" + std::to_string(fam.weight) + "  left " +
               fam.mu_cap_dnu.to_string() + "  right " +
               fam.mud_cap_nu.to_string() + "\n";
  }
  if (opt.out != OutputMode::kJson)
    plain += "double_cosets=" + std::to_string(cosets) +
             " minimal_elements=" + std::to_string(minimal.size()) + "\n";
  emit(opt, "doublecosets",
       {{"mu", to_json(mu)}, {"nu", to_json(nu)}, {"r", r}},
       {{"mu", to_json(mu)},
        {"nu", to_json(nu)},
        {"r", r},
        {"families", list},
        {"double_cosets", cosets},
        {"minimal_elements", minimal.size()}},
       plain, start);
}

void run_constants(const Options& opt, const std::string& mu_text,
                   const std::string& nu_text, const std::string& algo) {
  const auto start = std::chrono::steady_clock::now();
  const auto mu = parse_composition(mu_text);
  const auto nu = parse_composition(nu_text);
  StructureConstants sc;
  if (algo == "cosets")
    sc = structure_constants_via_cosets(mu, nu);
  else if (algo == "matrices")
    sc = structure_constants_via_matrices(mu, nu);
  else
    sc = structure_constants(mu, nu);
  json terms = json::array();
  std::string plain;
  for (const auto& [sigma, poly] : sc.terms) {
    terms.push_back(json{{"sigma", to_json(sigma)},
                         {"poly", to_json(poly)},
                         {"str", poly.to_string()}});
    if (opt.out == OutputMode::kCsv)
      plain += csv_quote(sigma.to_string()) + "," +
               csv_quote(poly.to_string()) + "\n";
    else if (opt.out == OutputMode::kPretty)
      plain += sigma.to_string() + " : " + poly.to_string() + "\n";
  }
  emit(opt, "constants",
       {{"mu", to_json(mu)}, {"nu", to_json(nu)}, {"algo", algo}},
       {{"mu", to_json(mu)}, {"nu", to_json(nu)}, {"terms", terms}}, plain,
       start);
}

void run_product(const Options& opt, const std::string& mu_text,
                 const std::string& nu_text, int r) {
  const auto start = std::chrono::steady_clock::now();
  const auto mu = parse_composition(mu_text);
  const auto nu = parse_composition(nu_text);
  const auto coords = oracle_product(mu, nu, r);
  json terms = json::array();
  std::string plain;
  for (const auto& [sigma, value] : coords) {
    terms.push_back(
        json{{"sigma", to_json(sigma)}, {"value", to_string(value)}});
    if (opt.out == OutputMode::kCsv)
      plain += csv_quote(sigma.to_string()) + "," + to_string(value) + "\n";
    else if (opt.out == OutputMode::kPretty)
      plain += sigma.to_string() + " : " + to_string(value) + "\n";
  }
  emit(opt, "product",
       {{"mu", to_json(mu)}, {"nu", to_json(nu)}, {"r", r}},
       {{"mu", to_json(mu)}, {"nu", to_json(nu)}, {"r", r}, {"terms", terms}},
       plain, start);
}

void run_chartable(const Options& opt, int n, const std::string& q_text,
                   long long mod) {
  const auto start = std::chrono::steady_clock::now();
  const auto q = parse_q(q_text, mod);
  const auto table = character_table(n, q);
  json labels = json::array(), rows = json::array();
  std::string plain;
  if (opt.out != OutputMode::kJson) {
    plain += "label";
    for (const auto& l : table.labels) plain += "," + csv_quote(l.to_string());
    plain += "\n";
  }
  for (size_t i = 0; i < table.labels.size(); ++i) {
    labels.push_back(to_json(table.labels[i]));
    json row = json::array();
    if (opt.out != OutputMode::kJson)
      plain += csv_quote(table.labels[i].to_string());
    for (const auto& entry : table.entries[i]) {
      row.push_back(entry.to_string());
      if (opt.out != OutputMode::kJson)
        plain += "," + csv_quote(entry.to_string());
    }
    rows.push_back(std::move(row));
    if (opt.out != OutputMode::kJson) plain += "\n";
  }
  emit(opt, "chartable",
       {{"n", n}, {"q", q_text}, {"mod", mod}},
       {{"n", n},
        {"q", q.to_string()},
        {"labels", labels},
        {"entries", rows},
        {"lower_triangular", table.is_lower_triangular()}},
       plain, start);
}

void run_radical(const Options& opt, int n, const std::string& q_text,
                 long long mod) {
  const auto start = std::chrono::steady_clock::now();
  const auto q = parse_q(q_text, mod);
  const auto rad = radical_basis(n, q);
  json pairs = json::array(), degenerate = json::array();
  std::string plain;
  for (const auto& [a, b] : rad.difference_pairs) {
    pairs.push_back(json::array({to_json(a), to_json(b)}));
    if (opt.out == OutputMode::kCsv)
      plain += "difference," + csv_quote(a.to_string()) + "," +
               csv_quote(b.to_string()) + "\n";
    else if (opt.out == OutputMode::kPretty)
      plain += "E" + a.to_string() + " - E" + b.to_string() + "\n";
  }
  for (const auto& d : rad.degenerate) {
    degenerate.push_back(to_json(d));
    if (opt.out == OutputMode::kCsv)
      plain += "degenerate," + csv_quote(d.to_string()) + ",\n";
    else if (opt.out == OutputMode::kPretty)
      plain += "E" + d.to_string() + "\n";
  }
  long long total = n > 0 ? 2 : 1;
  for (int i = 1; i < n; ++i) total *= 3;
  if (opt.out == OutputMode::kPretty)
    plain += "radical dimension " + std::to_string(rad.dimension()) +
             ", quotient dimension " +
             std::to_string(total - rad.dimension()) + "\n";
  emit(opt, "radical",
       {{"n", n}, {"q", q_text}, {"mod", mod}},
       {{"n", n},
        {"q", q.to_string()},
        {"difference_pairs", pairs},
        {"degenerate", degenerate},
        {"radical_dimension", rad.dimension()},
        {"quotient_dimension", total - rad.dimension()}},
       plain, start);
}

void run_hopf_coproduct(const Options& opt, const std::string& mu_text) {
  const auto start = std::chrono::steady_clock::now();
  const auto mu = parse_composition(mu_text);
  const auto cop = coproduct(GradedElement::basis(mu));
  json terms = json::array();
  std::string plain;
  for (const auto& [key, value] : cop.terms()) {
    terms.push_back(json{{"left", to_json(key.first)},
                         {"right", to_json(key.second)},
                         {"value", to_string(value)}});
    if (opt.out == OutputMode::kCsv)
      plain += csv_quote(key.first.to_string()) + "," +
               csv_quote(key.second.to_string()) + "," + to_string(value) +
               "\n";
    else if (opt.out == OutputMode::kPretty)
      plain += key.first.to_string() + " (x) " + key.second.to_string() +
               " : " + to_string(value) + "\n";
  }
  emit(opt, "hopf coproduct", {{"mu", to_json(mu)}},
       {{"mu", to_json(mu)}, {"terms", terms}}, plain, start);
}

void run_hopf_primitive(const Options& opt, int k) {
  const auto start = std::chrono::steady_clock::now();
  if (k == 0) throw CLI::ValidationError("--k", "k must be non-zero");
  const auto p = primitive_generator(k);
  json terms = json::array();
  std::string plain;
  for (const auto& [mu, value] : p.terms()) {
    terms.push_back(json{{"mu", to_json(mu)}, {"value", to_string(value)}});
    if (opt.out == OutputMode::kCsv)
      plain += csv_quote(mu.to_string()) + "," + to_string(value) + "\n";
    else if (opt.out == OutputMode::kPretty)
      plain += to_string(value) + " E" + mu.to_string() + "\n";
  }
  emit(opt, "hopf primitive", {{"k", k}},
       {{"k", k}, {"terms", terms}}, plain, start);
}

// The Hopf axiom suite over all compositions of degree <= max_degree:
// coassociativity, the counit laws, compatibility of the coproduct with the
// concatenation product, primitivity of the generators, the antipode axiom,
// and the E <-> P basis round trip.
int run_hopf_verify(const Options& opt, int max_degree) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> failures;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };

  std::vector<SignedComposition> all;
  for (int n = 0; n <= max_degree; ++n)
    for (const auto& mu : enumerate_signed_compositions(n)) all.push_back(mu);

  for (const auto& mu : all) {
    const auto e = GradedElement::basis(mu);
    const auto cop = coproduct(e);
    // (Delta x id) Delta = (id x Delta) Delta, flattened to triples.
    std::map<std::tuple<SignedComposition, SignedComposition, SignedComposition>,
             Rational>
        left, right;
    for (const auto& [key, c] : cop.terms()) {
      const auto cop_left = coproduct(GradedElement::basis(key.first));
      for (const auto& [k2, c2] : cop_left.terms())
        left[{k2.first, k2.second, key.second}] += c * c2;
      const auto cop_right = coproduct(GradedElement::basis(key.second));
      for (const auto& [k2, c2] : cop_right.terms())
        right[{key.first, k2.first, k2.second}] += c * c2;
    }
    for (auto* m : {&left, &right})
      for (auto it = m->begin(); it != m->end();)
        it = it->second == 0 ? m->erase(it) : std::next(it);
    check(left == right, "coassociativity at " + mu.to_string());
    // counit laws
    GradedElement from_left, from_right;
    for (const auto& [key, c] : cop.terms()) {
      if (key.first.size() == 0)
        from_left.add(key.second, c * counit(GradedElement::basis(key.first)));
      if (key.second.size() == 0)
        from_right.add(key.first, c * counit(GradedElement::basis(key.second)));
    }
    check(from_left == e && from_right == e, "counit at " + mu.to_string());
    // antipode axiom: m (S x id) Delta = counit * unit
    GradedElement convolved;
    for (const auto& [key, c] : cop.terms()) {
      const auto s = antipode(GradedElement::basis(key.first));
      for (const auto& [smu, sc] : s.terms())
        convolved.add(smu.concatenated(key.second), c * sc);
    }
    GradedElement expected;
    if (mu.size() == 0) expected = GradedElement::one();
    check(convolved == expected, "antipode at " + mu.to_string());
    // E -> P -> E round trip
    check(expand_from_primitives(expand_in_primitives(e)) == e,
          "primitive round trip at " + mu.to_string());
  }
  // bialgebra compatibility on pairs with |mu| + |nu| <= max_degree
  for (const auto& mu : all)
    for (const auto& nu : all) {
      if (mu.size() + nu.size() > max_degree) continue;
      const auto lhs =
          coproduct(shuffle_product(GradedElement::basis(mu),
                                    GradedElement::basis(nu)));
      const auto rhs = tensor_shuffle_product(
          coproduct(GradedElement::basis(mu)),
          coproduct(GradedElement::basis(nu)));
      check(lhs == rhs, "bialgebra at " + mu.to_string() + "," + nu.to_string());
    }
  // primitivity of the generators
  for (int k = 1; k <= max_degree; ++k)
    for (int sign : {1, -1}) {
      const auto p = primitive_generator(sign * k);
      const auto cop = coproduct(p);
      GradedRationalTensor expected;
      for (const auto& [mu, c] : p.terms()) {
        expected.add({SignedComposition(), mu}, c);
        expected.add({mu, SignedComposition()}, c);
      }
      check(cop == expected, "primitivity of P" + std::to_string(sign * k));
    }

  json fail_list = json::array();
  std::string plain;
  for (const auto& f : failures) {
    fail_list.push_back(f);
    plain += "FAIL " + f + "\n";
  }
  if (opt.out != OutputMode::kJson)
    plain += failures.empty() ? "hopf axioms ok\n" : "hopf axioms FAILED\n";
  emit(opt, "hopf verify", {{"max_degree", max_degree}},
       {{"max_degree", max_degree},
        {"passed", failures.empty()},
        {"failures", fail_list}},
       plain, start);
  return failures.empty() ? 0 : 1;
}

// Cross-checks against the literal group algebra at a fixed (r, n).
int run_verify(const Options& opt, int r, int n, const std::string& suite) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> failures;
  json details = json::object();

  if (suite == "products" || suite == "all") {
    const auto keys = enumerate_signed_compositions(n);
    for (const auto& mu : keys)
      for (const auto& nu : keys) {
        const auto truth = oracle_product(mu, nu, r);
        std::map<SignedComposition, Rational> evaluated;
        for (const auto& [sigma, poly] :
             structure_constants_via_cosets(mu, nu).terms)
          evaluated[sigma] = Rational(static_cast<long>(poly.evaluate_int(r)));
        if (truth != evaluated)
          failures.push_back("product " + mu.to_string() + "*" +
                             nu.to_string());
      }
    details["products_checked"] = keys.size() * keys.size();
  }
  if (suite == "hopf" || suite == "all") {
    int checked = 0;
    for (int m = 0; m <= n; ++m)
      for (const auto& mu : enumerate_signed_compositions(m)) {
        if (!verify_group_coproduct(mu, r))
          failures.push_back("coproduct " + mu.to_string());
        ++checked;
      }
    details["coproducts_checked"] = checked;
  }
  if (suite == "mak" || suite == "all") {
    const auto report = mak_closure_check(n, r);
    details["mak_full_rank"] = report.full_rank;
    details["mak_closed"] = report.closed;
    if (report.witness)
      details["mak_witness"] = json::array(
          {to_json(report.witness->first), to_json(report.witness->second)});
    if (!report.full_rank) failures.push_back("mak span rank deficient");
    if (!report.closed) failures.push_back("mak span not closed");
  }

  json fail_list = json::array();
  std::string plain;
  for (const auto& f : failures) {
    fail_list.push_back(f);
    plain += "FAIL " + f + "\n";
  }
  if (opt.out != OutputMode::kJson)
    plain += failures.empty() ? "verify ok\n" : "verify FAILED\n";
  details["passed"] = failures.empty();
  details["failures"] = fail_list;
  details["r"] = r;
  details["n"] = n;
  details["suite"] = suite;
  emit(opt, "verify", {{"r", r}, {"n", n}, {"suite", suite}}, details, plain,
       start);
  return failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact descent algebra computations for wreath products"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::string out_text = "json";
  bool json_flag = false;
  app.add_option("--out", out_text, "output format: json, csv, or pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_flag("--json", json_flag, "alias for --out json");
  app.add_option("--cache", opt.cache_dir,
                 "directory for the structure-constant disk cache");

  int n = 0, r = 2, k = 0, max_degree = 3;
  bool partitions_only = false, mak = false;
  std::string mu_text, nu_text, q_text = "x", algo = "auto", suite = "all";
  long long mod = 0;
  int exit_code = 0;

  // Subcommand callbacks fire inside parse(), so the shared options have to
  // be resolved from inside them rather than after parse() returns.
  auto resolve = [&] {
    if (json_flag || out_text == "json") opt.out = OutputMode::kJson;
    else if (out_text == "csv") opt.out = OutputMode::kCsv;
    else opt.out = OutputMode::kPretty;
    if (!opt.cache_dir.empty())
      set_constants_disk_cache(std::filesystem::path(opt.cache_dir));
  };

  auto* compositions =
      app.add_subcommand("compositions", "list signed compositions of n");
  compositions->add_option("--n", n, "degree")->required();
  compositions->add_flag("--partitions", partitions_only,
                         "restrict to signed partitions");
  compositions->callback([&] {
    resolve();
    run_compositions(opt, n, partitions_only);
  });

  auto* transversal = app.add_subcommand(
      "transversal", "minimal coset representatives of a reflection subgroup");
  transversal->add_option("--mu", mu_text, "signed composition")->required();
  transversal->add_option("--r", r, "colour order (>= 2)");
  transversal->add_flag("--mak", mak, "use the alternative representatives");
  transversal->callback([&] {
    resolve();
    run_transversal(opt, mu_text, r, mak);
  });

  auto* doublecosets = app.add_subcommand(
      "doublecosets", "double coset families for a pair of subgroups");
  doublecosets->add_option("--mu", mu_text, "left signed composition")
      ->required();
  doublecosets->add_option("--nu", nu_text, "right signed composition")
      ->required();
  doublecosets->add_option("--r", r, "colour order (>= 2)");
  doublecosets->callback([&] {
    resolve();
    run_doublecosets(opt, mu_text, nu_text, r);
  });

  auto* constants = app.add_subcommand(
      "constants", "structure-constant polynomials of a basis product");
  constants->add_option("--mu", mu_text, "left signed composition")->required();
  constants->add_option("--nu", nu_text, "right signed composition")
      ->required();
  constants->add_option("--algo", algo, "cosets, matrices, or auto")
      ->check(CLI::IsMember({"auto", "cosets", "matrices"}));
  constants->callback([&] {
    resolve();
    run_constants(opt, mu_text, nu_text, algo);
  });

  auto* product = app.add_subcommand(
      "product", "brute-force basis product inside the group algebra");
  product->add_option("--mu", mu_text, "left signed composition")->required();
  product->add_option("--nu", nu_text, "right signed composition")->required();
  product->add_option("--r", r, "colour order (>= 2)");
  product->callback([&] {
    resolve();
    run_product(opt, mu_text, nu_text, r);
  });

  auto* chartable =
      app.add_subcommand("chartable", "character table at a parameter value");
  chartable->add_option("--n", n, "degree")->required();
  chartable->add_option("--q", q_text, "parameter: integer, p/q, or x");
  chartable->add_option("--mod", mod, "reduce q modulo a prime");
  chartable->callback([&] {
    resolve();
    run_chartable(opt, n, q_text, mod);
  });

  auto* radical =
      app.add_subcommand("radical", "radical basis at a parameter value");
  radical->add_option("--n", n, "degree")->required();
  radical->add_option("--q", q_text, "parameter: integer, p/q, or x");
  radical->add_option("--mod", mod, "reduce q modulo a prime");
  radical->callback([&] {
    resolve();
    run_radical(opt, n, q_text, mod);
  });

  auto* hopf = app.add_subcommand("hopf", "graded coproduct operations");
  hopf->require_subcommand(1);
  auto* hopf_coproduct =
      hopf->add_subcommand("coproduct", "coproduct of a basis element");
  hopf_coproduct->add_option("--mu", mu_text, "signed composition")->required();
  hopf_coproduct->callback([&] {
    resolve();
    run_hopf_coproduct(opt, mu_text);
  });
  auto* hopf_primitive =
      hopf->add_subcommand("primitive", "primitive generator of degree |k|");
  hopf_primitive->add_option("--k", k, "signed degree")->required();
  hopf_primitive->callback([&] {
    resolve();
    run_hopf_primitive(opt, k);
  });
  auto* hopf_verify =
      hopf->add_subcommand("verify", "run the coproduct axiom suite");
  hopf_verify->add_option("--max-degree", max_degree, "largest degree checked");
  hopf_verify->callback([&] {
    resolve();
    exit_code = run_hopf_verify(opt, max_degree);
  });

  auto* verify = app.add_subcommand(
      "verify", "cross-check the combinatorics against the group algebra");
  verify->add_option("--r", r, "colour order (>= 2)")->required();
  verify->add_option("--n", n, "degree")->required();
  verify->add_option("--suite", suite, "products, hopf, mak, or all")
      ->check(CLI::IsMember({"products", "hopf", "mak", "all"}));
  verify->callback([&] {
    resolve();
    exit_code = run_verify(opt, r, n, suite);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
