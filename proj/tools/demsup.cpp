// demsup: Demazure characters and Demazure-module support varieties for
// small type-A root systems.
//
// Exit codes: 0 ok (including symbolic answers), 1 a property check
// failed, 2 bad input, 3 concrete classification requested at a rank
// where only bounds are known.

#include <CLI11.hpp>
#include <iostream>

#include "demsup/checks.hpp"
#include "demsup/render.hpp"

namespace {

using namespace demsup;

struct TypeSpec {
  char letter = 'A';
  int rank = 2;
};

TypeSpec parse_type(const std::string& s) {
  if (s.size() != 2 || !std::isalpha(static_cast<unsigned char>(s[0])) || !std::isdigit(static_cast<unsigned char>(s[1])))
    throw std::domain_error("type: expected a letter and a rank digit, e.g. A2, got '" + s + "'");
  return {static_cast<char>(std::toupper(static_cast<unsigned char>(s[0]))), s[1] - '0'};
}

WeightVec parse_lambda(const std::string& s, int rank) {
  std::vector<Int> coords;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      coords.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::domain_error("lambda: '" + item + "' is not an integer");
    }
  }
  if (static_cast<int>(coords.size()) != rank)
    throw std::domain_error("lambda: expected " + std::to_string(rank) + " comma-separated entries, got " +
                            std::to_string(coords.size()));
  return WeightVec{std::move(coords)};
}

WeylElement parse_w(const std::string& s, const RootSystem& rs) {
  if (s == "w0") return long_element(rs.rank(), SimpleSubset::full(rs.rank()));
  return from_word(rs.rank(), parse_word(s, rs.rank()));
}

std::vector<Int> parse_primes(const std::string& s) {
  std::vector<Int> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    Int p = std::stoll(item);
    require_prime(p);
    out.push_back(p);
  }
  if (out.empty()) throw std::domain_error("primes: empty list");
  return out;
}

int run_support(const std::string& type, Int p, const std::string& w_text, const std::string& lambda_text,
                bool json) {
  const TypeSpec ts = parse_type(type);
  const RootSystem rs(ts.letter, ts.rank);
  require_prime(p);
  const WeightVec lambda = parse_lambda(lambda_text, rs.rank());
  if (!lambda.is_dominant()) throw std::domain_error("lambda: must be dominant (all entries >= 0)");
  const WeylElement w = parse_w(w_text, rs);
  const SupportReport rep = support_report(rs, w, lambda, p);
  if (json)
    std::cout << rep.json.dump(2) << "\n";
  else
    std::cout << rep.text;
  return rep.exit_code;
}

int run_character(const std::string& type, const std::string& w_text, const std::string& lambda_text) {
  const TypeSpec ts = parse_type(type);
  const RootSystem rs(ts.letter, ts.rank);
  const WeightVec lambda = parse_lambda(lambda_text, rs.rank());
  const WeylElement w = parse_w(w_text, rs);
  Json out;
  out["type"] = rs.name();
  out["w"] = to_string(w);
  out["lambda"] = to_json(lambda);
  const Json body = character_json(demazure_character(rs, w, lambda));
  out["dimension"] = body["dimension"];
  out["terms"] = body["terms"];
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_check(const std::string& name, const std::string& type, Int lmax, const std::string& primes_text) {
  CheckOutcome outcome;
  if (name == "saturation") {
    const TypeSpec ts = parse_type(type);
    const RootSystem rs(ts.letter, ts.rank);
    const auto primes = parse_primes(primes_text);
    outcome = check_saturation(rs, lmax, primes);
    if (!outcome.ok) {
      const CheckOutcome weak = check_saturation_weak(rs, lmax, primes);
      std::cout << "note: the weak-order form of the inclusion "
                << (weak.ok ? "holds on the same grid" : "also fails: " + weak.counterexample) << "\n";
    }
  } else if (name == "lemma531") {
    const TypeSpec ts = parse_type(type);
    outcome = check_parabolic_closure_law(RootSystem(ts.letter, ts.rank));
  } else if (name == "dimension") {
    outcome = check_dimension(lmax);
  } else if (name == "words") {
    outcome = check_word_independence(lmax);
  } else {
    throw std::domain_error("check: unknown property '" + name + "' (expected saturation|lemma531|dimension|words)");
  }
  if (outcome.ok) {
    std::cout << "check " << name << ": " << outcome.cases << " cases, all passed\n";
    return 0;
  }
  std::cout << "check " << name << ": FAILED, first counterexample: " << outcome.counterexample << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Demazure characters and Demazure-module support varieties (type A, rank <= 4)"};
  app.require_subcommand(1);

  std::string type = "A2", w_text = "e", lambda_text, table_name, check_name, primes_text = "2,3,5,7";
  Int p = 3, lmax = 15;
  bool json = false;

  auto* sup = app.add_subcommand("support", "classify the support variety of H^0(w, lambda)");
  sup->add_option("--type", type, "root system, e.g. A1, A2, A3")->capture_default_str();
  sup->add_option("--p", p, "prime characteristic")->required();
  sup->add_option("--w", w_text, "Weyl word: space-separated indices, or e, or w0")->required();
  sup->add_option("--lambda", lambda_text, "dominant weight, comma-separated")->required();
  sup->add_flag("--json", json, "emit JSON");

  auto* tab = app.add_subcommand("table", "print a summary table (steinberg|a1|a2|a2p2)");
  tab->add_option("name", table_name, "table name")->required();
  tab->add_option("--p", p, "prime characteristic")->capture_default_str();
  tab->add_flag("--json", json, "emit JSON");

  auto* chk = app.add_subcommand("check", "run an exhaustive property sweep");
  chk->add_option("name", check_name, "saturation|lemma531|dimension|words")->required();
  chk->add_option("--type", type, "root system for saturation/lemma531")->capture_default_str();
  chk->add_option("--lmax", lmax, "largest weight entry in the sweep")->capture_default_str();
  chk->add_option("--primes", primes_text, "comma-separated primes for saturation")->capture_default_str();

  auto* chr = app.add_subcommand("character", "print the Demazure character of H^0(w, lambda) as JSON");
  chr->add_option("--type", type, "root system")->capture_default_str();
  chr->add_option("--w", w_text, "Weyl word")->required();
  chr->add_option("--lambda", lambda_text, "dominant weight, comma-separated")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sup->parsed()) return run_support(type, p, w_text, lambda_text, json);
    if (tab->parsed()) {
      std::cout << render_table(table_name, p, json);
      return 0;
    }
    if (chk->parsed()) return run_check(check_name, type, lmax, primes_text);
    if (chr->parsed()) return run_character(type, w_text, lambda_text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
