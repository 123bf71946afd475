#include "ppl/cli_app.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <charconv>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ppl/errors.hpp"
#include "ppl/family.hpp"
#include "ppl/finite_group.hpp"
#include "ppl/parse.hpp"
#include "ppl/period.hpp"
#include "ppl/prng.hpp"
#include "ppl/report.hpp"
#include "ppl/sampling.hpp"
#include "ppl/theorems.hpp"
#include "ppl/word.hpp"

namespace ppl {
namespace {

constexpr long long kDefaultNodeBudget = 5'000'000;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// Reads the enumeration node budget from PPL_NODE_BUDGET, falling back
/// to the default when the variable is unset.
long long node_budget_from_env() {
  const char* raw = std::getenv("PPL_NODE_BUDGET");
  if (raw == nullptr) return kDefaultNodeBudget;
  std::string text(raw);
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value <= 0) {
    fail(ErrorCode::Usage,
         "PPL_NODE_BUDGET must be a positive integer, got '" + text + "'");
  }
  return value;
}

RepetitionEngine engine_from_name(const std::string& name) {
  if (name == "scan") return RepetitionEngine::Scan;
  if (name == "runs") return RepetitionEngine::Runs;
  fail(ErrorCode::Usage, "unknown engine '" + name + "' (expected scan or runs)");
}

/// Resolves an element label (display name, else decimal index) inside
/// one factor group.
Elt resolve_element(const GroupPtr& g, const std::string& label) {
  if (auto byname = g->element_by_name(label)) return *byname;
  int index = 0;
  auto [ptr, ec] =
      std::from_chars(label.data(), label.data() + label.size(), index);
  if (ec == std::errc() && ptr == label.data() + label.size() && index >= 0 &&
      index < g->order()) {
    return static_cast<Elt>(index);
  }
  fail(ErrorCode::BadReference,
       "no element named '" + label + "' in group " + g->name());
}

void add_verdict_fields(ReportLine& line, const Verdict& v) {
  line.field(question_name(v.question), answer_name(v.answer));
  line.field("cite", v.citation);
  if (!v.reason_code.empty()) line.field("reason_code", v.reason_code);
  if (!v.reason.empty()) line.field("reason", v.reason);
  if (v.outside_hypotheses) line.field("note", "outside theorem hypotheses");
}

void add_verdict_line(Report& rep, const Verdict& v) {
  add_verdict_fields(rep.add("VERDICT"), v);
}

void add_factor_verdict_line(Report& rep, const Verdict& v,
                             const std::string& factor_name) {
  auto& line = rep.add("VERDICT");
  line.field(question_name(v.question), answer_name(v.answer));
  line.field("factor", factor_name);
  line.field("cite", v.citation);
  if (!v.reason_code.empty()) line.field("reason_code", v.reason_code);
  if (!v.reason.empty()) line.field("reason", v.reason);
  if (v.outside_hypotheses) line.field("note", "outside theorem hypotheses");
}

bool is_cyclic(const GroupPtr& g) {
  for (Elt x = 0; x < g->order(); ++x) {
    if (g->element_order(x) == g->order()) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Subcommand handlers.  Each returns the report to print; input errors
// propagate as ppl::Error.
// ---------------------------------------------------------------------------

Report cmd_validate(const FactorFamily& family) {
  Report rep;
  auto& head = rep.add("PRODUCT");
  head.field("n", std::to_string(family.n()));
  head.field("mode", family.strict() ? "strict" : "lenient");
  head.field("factors", std::to_string(family.factor_count()));
  head.field("n_in_theorem_range", yes_no(family.n_in_theorem_range()));
  head.field("involution_free", yes_no(family.involution_free()));
  for (int i = 0; i < family.factor_count(); ++i) {
    const GroupPtr& g = family.factor(i);
    auto& line = rep.add("FACTOR");
    line.field("name", family.factor_name(i));
    line.field("order", std::to_string(g->order()));
    line.field("involutions", std::to_string(g->involutions().size()));
    line.field("exponent_divides_n", yes_no(g->exponent_divides(family.n())));
  }
  rep.add("OK");
  return rep;
}

Report cmd_analyze(const FactorFamily& family, int group_bound) {
  Report rep;
  add_verdict_line(rep, hopfian_verdict(family));
  add_verdict_line(rep, simplicity_verdict(family));
  for (int i = 0; i < family.factor_count(); ++i) {
    try {
      add_factor_verdict_line(rep, inheritably_factorizable_verdict(family, i, group_bound),
                              family.factor_name(i));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BoundExceeded) throw;
      auto& line = rep.add("VERDICT");
      line.field("inheritably_factorizable", "inapplicable");
      line.field("factor", family.factor_name(i));
      line.field("cite", "Corollary2");
      line.field("reason_code", "bound_exceeded");
      line.field("reason", std::string(e.what()) +
                               "; raise --group-bound to enumerate this factor");
    }
  }
  for (int i = 0; i < family.factor_count(); ++i) {
    auto& line = rep.add("COROLLARY1");
    line.field("factor", family.factor_name(i));
    try {
      Corollary1Report c1 =
          corollary1_scan(family.factor(i), family.n(), group_bound);
      line.field("premise", yes_no(c1.premise));
      line.field("factorizable", yes_no(c1.factorizable_criterion));
      line.field("has_involution", yes_no(c1.has_involution));
      line.field("conclusion", yes_no(c1.conclusion));
      line.field("unique_involution", yes_no(c1.unique_involution));
      line.field("central_involution", yes_no(c1.central));
      line.field("tension", yes_no(c1.tension));
      line.field("cite", "Corollary1");
      if (c1.involution) {
        line.field("involution",
                   family.factor(i)->element_name(*c1.involution));
      }
      if (!c1.detail.empty()) line.field("detail", c1.detail);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BoundExceeded) throw;
      line.field("premise", "undetermined");
      line.field("cite", "Corollary1");
      line.field("reason_code", "bound_exceeded");
      line.field("reason", std::string(e.what()) +
                               "; raise --group-bound to scan this factor");
    }
  }
  bool cyclic_same_order = true;
  const int base_order = family.factor(0)->order();
  for (int i = 0; i < family.factor_count(); ++i) {
    if (family.factor(i)->order() != base_order || !is_cyclic(family.factor(i))) {
      cyclic_same_order = false;
      break;
    }
  }
  if (cyclic_same_order) {
    Corollary3Verdict c3 =
        corollary3_verdict(family.factor_count(), base_order, family.n());
    auto& line = rep.add("COROLLARY3");
    line.field("m", std::to_string(family.factor_count()));
    line.field("r", std::to_string(base_order));
    line.field("n", std::to_string(family.n()));
    if (c3.applicable()) {
      line.field("hopfian", answer_name(c3.hopfian));
      line.field("residually_finite", answer_name(c3.residually_finite));
      line.field("simple", answer_name(c3.simple));
      line.field("cite", c3.citation);
      if (c3.note) line.field("note", *c3.note);
    } else {
      line.field("answer", "inapplicable");
      line.field("cite", c3.citation);
      line.field("reason_code", c3.reason_code);
      line.field("reason", c3.reason);
    }
  }
  return rep;
}

Report cmd_normal_subgroups(const FactorFamily& family,
                            const std::string& factor_filter, int group_bound) {
  Report rep;
  bool matched = false;
  for (int i = 0; i < family.factor_count(); ++i) {
    if (!factor_filter.empty() && family.factor_name(i) != factor_filter) {
      continue;
    }
    matched = true;
    const GroupPtr& g = family.factor(i);
    std::vector<SubgroupSet> lattice = enumerate_normal_subgroups(g, group_bound);
    auto& head = rep.add("FACTOR");
    head.field("name", family.factor_name(i));
    head.field("order", std::to_string(g->order()));
    head.field("normal_subgroups", std::to_string(lattice.size()));
    for (const SubgroupSet& sub : lattice) {
      Verdict v = inheritably_normal_verdict(family, i, sub);
      auto& line = rep.add("NORMAL");
      line.field("order", std::to_string(sub.order()));
      line.field("members", sub.describe_members());
      line.field("inheritably_normal", answer_name(v.answer));
      line.field("cite", v.citation);
      if (!v.reason_code.empty()) line.field("reason_code", v.reason_code);
      if (!v.reason.empty()) line.field("reason", v.reason);
      if (v.outside_hypotheses) line.field("note", "outside theorem hypotheses");
    }
  }
  if (!matched) {
    fail(ErrorCode::BadReference,
         "no factor named '" + factor_filter + "' in this product");
  }
  return rep;
}

Report cmd_periods(const FactorFamily& family, int max_syllables,
                   long long limit, RepetitionEngine engine) {
  EnumerationOptions options;
  options.max_syllables = max_syllables;
  options.limit = limit;
  options.node_budget = node_budget_from_env();
  options.engine = engine;
  std::vector<CyclicWord> certified = enumerate_certified(family, options);
  Report rep;
  for (const CyclicWord& w : certified) {
    auto& line = rep.add("PERIOD");
    line.field("word", render_word(w.canonical()));
    line.field("length", std::to_string(w.length()));
    line.field("relation", render_relation(Relation{w, family.n()}));
  }
  auto& count = rep.add("COUNT");
  count.field("certified", std::to_string(certified.size()));
  count.field("max_syllables", std::to_string(max_syllables));
  return rep;
}

Report cmd_classify(const FactorFamily& family, const std::string& literal,
                    RepetitionEngine engine) {
  Word w = parse_word(family, literal);
  PeriodClassification c = classify_rank1(w, engine);
  Report rep;
  rep.add("CLASS", period_tag_name(c.tag));
  auto& core = rep.add("CORE");
  core.field("word", c.core ? render_word(c.core->canonical()) : "1");
  core.field("length", std::to_string(c.core ? c.core->length() : 0));
  core.field("conjugator", render_word(c.conjugator));
  if (c.witness) {
    auto& wit = rep.add("WITNESS");
    wit.field("shift", std::to_string(c.witness->shift));
    wit.field("half", std::to_string(c.witness->half));
    wit.field("c1_pos", std::to_string(c.witness->c1_pos));
    wit.field("c2_pos", std::to_string(c.witness->c2_pos));
    InvolutionPair pair = reconstruct_involutions(*c.core, *c.witness);
    auto& inv = rep.add("INVOLUTIONS");
    inv.field("c", render_word(pair.c));
    inv.field("d", render_word(pair.d));
  }
  if (c.nine_power) {
    auto& nine = rep.add("NINEPOWER");
    nine.field("period", std::to_string(c.nine_power->period));
    nine.field("start", std::to_string(c.nine_power->start));
    nine.field("run", std::to_string(c.nine_power->run_length));
  }
  if (c.tag == PeriodTag::CertifiedRank1) {
    auto& rel = rep.add("RELATION");
    rel.field("text", render_relation(relation_for(*c.core, engine)));
  }
  return rep;
}

/// Draws a random conjugated involution u c u^-1 from the pools.
Word random_conjugated_involution(
    const FactorFamily& family, SplitMix64& rng,
    const std::vector<int>& involution_factors,
    const std::vector<std::vector<Elt>>& pools, int max_conj) {
  int pick = involution_factors[static_cast<std::size_t>(
      rng.below(involution_factors.size()))];
  const std::vector<Elt>& pool = pools[static_cast<std::size_t>(pick)];
  Elt c = pool[static_cast<std::size_t>(rng.below(pool.size()))];
  int len = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_conj) + 1));
  Word u = random_word(family, rng, len);
  Word center = reduce(family, {{pick, c}});
  return multiply(multiply(u, center), invert(u));
}

Report cmd_lemma1_scan(const FactorFamily& family, int max_conj,
                       long long samples, std::uint64_t seed) {
  if (max_conj < 0) fail(ErrorCode::Usage, "--max-conj must be >= 0");
  if (samples <= 0) fail(ErrorCode::Usage, "--samples must be positive");
  std::vector<int> involution_factors;
  std::vector<std::vector<Elt>> pools(
      static_cast<std::size_t>(family.factor_count()));
  for (int i = 0; i < family.factor_count(); ++i) {
    pools[static_cast<std::size_t>(i)] = family.factor(i)->involutions();
    if (!pools[static_cast<std::size_t>(i)].empty()) {
      involution_factors.push_back(i);
    }
  }
  if (involution_factors.empty()) {
    fail(ErrorCode::InvalidFamily,
         "no factor contains an involution; nothing to scan");
  }
  SplitMix64 rng(seed);
  long long pairs = 0;
  long long mismatches = 0;
  for (long long s = 0; s < samples; ++s) {
    Word p1 = random_conjugated_involution(family, rng, involution_factors,
                                           pools, max_conj);
    Word p2 = random_conjugated_involution(family, rng, involution_factors,
                                           pools, max_conj);
    Word w = multiply(p1, p2);
    ++pairs;
    CyclicReduction cr = cyclic_reduce(w);
    // Cores of length < 2 live inside one factor; the witness scheme
    // only covers genuinely alternating products.
    if (!cr.cyclic || cr.cyclic->length() < 2) continue;
    bool ok = false;
    try {
      if (auto wit = two_involution_witness(*cr.cyclic)) {
        InvolutionPair pair = reconstruct_involutions(*cr.cyclic, *wit);
        // w = conjugator . core . conjugator^-1 and the canonical form
        // starts rotation() syllables into the core, so the involutions
        // transport back through conjugator . prefix.
        const auto& core_syllables = cr.core.syllables();
        std::vector<Syllable> prefix(
            core_syllables.begin(),
            core_syllables.begin() + cr.cyclic->rotation());
        Word q = multiply(cr.conjugator,
                          Word::from_syllables(family, std::move(prefix)));
        Word q_inv = invert(q);
        Word c_full = multiply(multiply(q, pair.c), q_inv);
        Word d_full = multiply(multiply(q, pair.d), q_inv);
        ok = power(c_full, 2).empty() && power(d_full, 2).empty() &&
             multiply(c_full, d_full) == w;
      }
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) ++mismatches;
  }
  Report rep;
  auto& line = rep.add("SCAN", mismatches == 0 ? "ok" : "failed");
  line.field("pairs", std::to_string(pairs));
  line.field("mismatches", std::to_string(mismatches));
  return rep;
}

Report cmd_proof_suite(const FactorFamily& family,
                       const std::map<std::string, std::string>& raw_bindings) {
  if (family.factor_count() != 2) {
    fail(ErrorCode::InvalidFamily,
         "the proof-word suite runs on two-factor products only");
  }
  ProofWordBindings bindings;
  auto bind = [&](const std::string& key, int factor_index,
                  std::optional<Elt> ProofWordBindings::* slot) {
    auto it = raw_bindings.find(key);
    if (it == raw_bindings.end()) return;
    bindings.*slot =
        resolve_element(family.factor(factor_index), it->second);
  };
  bind("a", 0, &ProofWordBindings::a);
  bind("a1", 0, &ProofWordBindings::a1);
  bind("a2", 0, &ProofWordBindings::a2);
  bind("g", 0, &ProofWordBindings::g);
  bind("b", 1, &ProofWordBindings::b);
  bind("b1", 1, &ProofWordBindings::b1);
  bind("b2", 1, &ProofWordBindings::b2);
  ProofWordReport result = proof_word_suite(family, bindings);
  Report rep;
  auto& head = rep.add("CASE", std::to_string(result.case_number));
  head.field("description", result.description);
  auto& word_line = rep.add("WORD");
  word_line.field("text", render_word(result.word));
  word_line.field("length", std::to_string(result.word.length()));
  auto& sub = rep.add("SUBGROUP");
  sub.field("order", std::to_string(result.subgroup.order()));
  sub.field("members", result.subgroup.describe_members());
  rep.add("CLASS", period_tag_name(result.classification.tag));
  auto& cong = rep.add("CONGRUENCE");
  cong.field("image", render_word(result.image));
  cong.field("target", render_word(result.target));
  cong.field("ok", yes_no(result.congruence_ok));
  auto& pow_line = rep.add("POWER");
  pow_line.field("exponent", std::to_string(family.n()));
  pow_line.field("image", render_word(result.power_image));
  pow_line.field("target", render_word(result.power_target));
  pow_line.field("ok", yes_no(result.power_congruence_ok));
  rep.add("RESULT", result.pass ? "PASS" : "FAIL");
  return rep;
}

void escape_into(std::ostream& os, const std::string& text) {
  os << '"';
  for (char ch : text) {
    if (ch == '"' || ch == '\\') os << '\\';
    os << ch;
  }
  os << '"';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"calculus and decision procedures for n-periodic products of finite groups"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string file;
  int group_bound = 512;
  std::string factor_filter;
  int max_syllables = 3;
  long long limit = 0;
  std::string engine_name = "scan";
  std::string word_literal;
  int max_conj = 4;
  long long samples = 10000;
  std::uint64_t seed = 1;
  std::map<std::string, std::string> raw_bindings;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "product description file")->required();
    sub->fallthrough();
  };

  CLI::App* validate = app.add_subcommand(
      "validate", "parse a product file and summarize its factors");
  add_file(validate);

  CLI::App* analyze = app.add_subcommand(
      "analyze", "run every decision procedure that fits the product");
  add_file(analyze);
  analyze->add_option("--group-bound", group_bound,
                      "largest factor order enumerated exhaustively");

  CLI::App* normal = app.add_subcommand(
      "normal-subgroups",
      "list normal subgroups of each factor with inheritance verdicts");
  add_file(normal);
  normal->add_option("--factor", factor_filter, "restrict to one factor by name");
  normal->add_option("--group-bound", group_bound,
                     "largest factor order enumerated exhaustively");

  CLI::App* periods = app.add_subcommand(
      "periods", "enumerate certified rank-1 periods up to a syllable bound");
  add_file(periods);
  periods->add_option("--max-syllables", max_syllables,
                      "maximum syllable length to enumerate");
  periods->add_option("--limit", limit, "stop after this many periods (0 = all)");
  periods->add_option("--engine", engine_name, "repetition engine: scan or runs")
      ->check(CLI::IsMember({"scan", "runs"}));

  CLI::App* classify = app.add_subcommand(
      "classify", "classify one word against the rank-1 period criterion");
  add_file(classify);
  classify->add_option("--word", word_literal, "word literal to classify")
      ->required();
  classify->add_option("--engine", engine_name, "repetition engine: scan or runs")
      ->check(CLI::IsMember({"scan", "runs"}));

  CLI::App* lemma1 = app.add_subcommand(
      "lemma1-scan",
      "stress the involution-product witness against random samples");
  add_file(lemma1);
  lemma1->add_option("--max-conj", max_conj, "maximum conjugator length");
  lemma1->add_option("--samples", samples, "number of random pairs");
  lemma1->add_option("--seed", seed, "deterministic sampling seed");

  CLI::App* proof = app.add_subcommand(
      "proof-suite", "build and check the normal-subgroup proof words");
  add_file(proof);
  for (const char* key : {"a", "a1", "a2", "g", "b", "b1", "b2"}) {
    proof->add_option(std::string("--") + key, raw_bindings[key],
                      std::string("binding for element ") + key);
  }

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("ppl");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ERROR code=Usage message=";
    escape_into(err, e.what());
    err << "\n";
    return 1;
  }

  try {
    // Bindings may arrive empty when a flag is not passed; drop those so
    // the suite can tell "absent" from "bound".
    for (auto it = raw_bindings.begin(); it != raw_bindings.end();) {
      if (it->second.empty()) {
        it = raw_bindings.erase(it);
      } else {
        ++it;
      }
    }
    FactorFamily family = parse_product_file(file);
    Report rep;
    if (app.got_subcommand(validate)) {
      rep = cmd_validate(family);
    } else if (app.got_subcommand(analyze)) {
      rep = cmd_analyze(family, group_bound);
    } else if (app.got_subcommand(normal)) {
      rep = cmd_normal_subgroups(family, factor_filter, group_bound);
    } else if (app.got_subcommand(periods)) {
      rep = cmd_periods(family, max_syllables, limit,
                        engine_from_name(engine_name));
    } else if (app.got_subcommand(classify)) {
      rep = cmd_classify(family, word_literal, engine_from_name(engine_name));
    } else if (app.got_subcommand(lemma1)) {
      rep = cmd_lemma1_scan(family, max_conj, samples, seed);
    } else if (app.got_subcommand(proof)) {
      rep = cmd_proof_suite(family, raw_bindings);
    } else {
      fail(ErrorCode::Usage, "no subcommand selected");
    }
    if (format == "json") {
      out << report_to_json(rep);
    } else {
      out << report_to_text(rep);
    }
    if (!rep.lines.empty() && rep.lines.front().tag == "SCAN" &&
        rep.lines.front().head && *rep.lines.front().head == "failed") {
      return 3;
    }
    return 0;
  } catch (const Error& e) {
    err << "ERROR code=" << error_code_name(e.code()) << " message=";
    escape_into(err, e.what());
    err << "\n";
    switch (e.code()) {
      case ErrorCode::Usage:
        return 1;
      case ErrorCode::Internal:
        return 3;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    err << "ERROR code=Internal message=";
    escape_into(err, e.what());
    err << "\n";
    return 3;
  }
}

}  // namespace ppl
