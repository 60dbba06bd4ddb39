// sck: command-line front end for the semiring circuit toolkit.
//
// Exit status: 0 pass, 1 verification failure, 2 usage error,
// 3 cap or budget exceeded.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sck/boolfun.hpp"
#include "sck/circuit_io.hpp"
#include "sck/families.hpp"
#include "sck/formal_poly.hpp"
#include "sck/multilinear.hpp"
#include "sck/transforms.hpp"
#include "sck/tropical.hpp"

using namespace sck;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kLimit = 3 };

struct Globals {
  bool json = false;
  std::uint64_t seed = 0;
  std::optional<std::size_t> max_set_size;
  std::optional<std::uint64_t> max_degree;
  std::vector<std::string> argv;
};

std::uint64_t fnv1a(std::uint64_t h, std::string_view bytes) {
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

/// Collects what a command produced; printed once at the end.
class Report {
 public:
  explicit Report(const Globals& g) : g_(g) {}

  void input(std::string_view bytes) {
    digest_ = fnv1a(digest_, bytes);
    digest_ = fnv1a(digest_, std::string_view("\0", 1));
  }
  void verdict(const std::string& name, bool pass) {
    verdicts_[name] = pass;
    if (!pass) failed_ = true;
  }
  void count(const std::string& name, std::uint64_t value) { counts_[name] = value; }
  void value(const std::string& name, const std::string& text) { values_[name] = text; }
  /// Text printed verbatim in text mode (a circuit, a polynomial).
  void body(std::string text) { body_ = std::move(text); }
  void caps(const ProductionCaps& caps) {
    caps_["maxSetSize"] = caps.max_set_size;
    if (caps.max_degree) caps_["maxDegree"] = *caps.max_degree;
  }

  int emit() const {
    if (g_.json) {
      json out;
      out["schemaVersion"] = 1;
      out["command"] = g_.argv;
      char hex[17];
      std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(digest_));
      out["inputsDigest"] = hex;
      out["verdicts"] = verdicts_.empty() ? json::object() : verdicts_;
      out["counts"] = counts_.empty() ? json::object() : counts_;
      out["values"] = values_.empty() ? json::object() : values_;
      if (body_) out["output"] = *body_;
      json prov;
      prov["seed"] = g_.seed;
      prov["caps"] = caps_.empty() ? json::object() : caps_;
      out["provenance"] = prov;
      std::cout << out.dump(2) << '\n';
    } else {
      if (body_) std::cout << *body_;
      for (const auto& [k, v] : counts_.items()) std::cout << k << ": " << v.dump() << '\n';
      for (const auto& [k, v] : values_.items()) std::cout << k << ": " << v.get<std::string>() << '\n';
      for (const auto& [k, v] : verdicts_.items()) std::cout << k << ": " << (v.get<bool>() ? "pass" : "FAIL") << '\n';
    }
    return failed_ ? kFail : kPass;
  }

 private:
  const Globals& g_;
  std::uint64_t digest_ = 1469598103934665603ull;
  json verdicts_ = json::object();
  json counts_ = json::object();
  json values_ = json::object();
  json caps_ = json::object();
  std::optional<std::string> body_;
  bool failed_ = false;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::optional<std::string>& path, const std::string& text, Report& report) {
  if (path) {
    std::ofstream out(*path);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + *path);
    out << text;
    report.value("written", *path);
  } else {
    report.body(text);
  }
}

ProductionCaps caps_of(const Globals& g) {
  auto caps = ProductionCaps::from_environment();
  if (g.max_set_size) caps.max_set_size = *g.max_set_size;
  caps.max_degree = g.max_degree;
  return caps;
}

Circuit load_circuit(const std::string& path, Report& report) {
  const auto text = slurp(path);
  report.input(text);
  return parse_circuit(text);
}

BooleanFunction load_function(const std::string& literal, std::uint32_t arity, Report& report) {
  report.input(literal);
  return parse_function(literal, arity);
}

std::string k_text(const std::optional<std::uint32_t>& k) { return k ? std::to_string(*k) : "unbounded"; }

int exit_for(const Error& e) {
  if (e.is_resource_limit()) return kLimit;
  switch (e.kind()) {
    case ErrorKind::NotComputingF:
    case ErrorKind::NotReadK:
    case ErrorKind::NotApproximating:
    case ErrorKind::ExponentSetNotLowF:
    case ErrorKind::NotHomogeneous:
    case ErrorKind::DegreeTooSmall:
    case ErrorKind::ConstantFunction: return kFail;
    default: return kUsage;
  }
}

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> x;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) continue;
    const auto slash = item.find('/');
    try {
      BigInt p{item.substr(0, slash)};
      BigInt q{slash == std::string::npos ? std::string("1") : item.substr(slash + 1)};
      if (q == 0) throw Error(ErrorKind::ParseError, "zero denominator");
      x.emplace_back(p, q);
    } catch (const std::runtime_error&) {
      throw Error(ErrorKind::ParseError, "bad value '" + item + "' in --at");
    }
  }
  return x;
}

Rational parse_factor(const std::string& text) {
  const auto x = parse_point(text);
  if (x.size() != 1) throw Error(ErrorKind::ParseError, "bad factor '" + text + "'");
  return x.front();
}

// ---------------------------------------------------------------------------
// Commands

struct GapOptions {
  std::uint32_t m = 3;
  std::uint64_t samples = 200'000;
};

int report_gap(const GapOptions& opt, const Globals& g) {
  Report report(g);
  const auto caps = caps_of(g);
  report.caps(caps);
  if (opt.m < 2) throw Error(ErrorKind::Precondition, "report gap needs m >= 2");
  const std::uint32_t m = opt.m;
  const std::uint32_t n = m * m;
  const auto read2 = read2_lines_circuit(m);
  const auto dual_circuit = dual_lines_read1_circuit(m);
  report.count("m", m);
  report.count("n", n);
  report.count("read2Size", read2.size());
  report.count("dualRead1Size", dual_circuit.size());
  report.verdict("read2SizeAtMost2n", read2.size() <= 2 * n);
  report.verdict("dualSizeAtMost2n", dual_circuit.size() <= 2 * n);
  const auto family = lines_family(m, 2);

  if (n > kDefaultTableCap) {
    // Beyond truth tables: compare against the blocking predicate on
    // seeded random inputs.
    std::mt19937_64 rng(g.seed);
    bool read2_ok = true, dual_ok = true;
    std::vector<Rational> x(n);
    std::vector<std::uint8_t> bits(n), flipped(n);
    for (std::uint64_t s = 0; s < opt.samples / 64 + 1; ++s) {
      for (std::uint32_t i = 0; i < n; ++i) {
        bits[i] = rng() & 1;
        flipped[i] = 1 - bits[i];
        x[i] = bits[i];
      }
      read2_ok &= (evaluate(read2, x) == 1) == is_blocking(family, bits);
      dual_ok &= (evaluate(dual_circuit, x) == 1) == !is_blocking(family, flipped);
    }
    report.value("mode", "sampled");
    report.verdict("read2ComputesLinesSampled", read2_ok);
    report.verdict("dualComputesDualSampled", dual_ok);
    return report.emit();
  }

  const auto lines = blocking_function(family);
  const auto lines_dual = dual(lines);
  report.value("mode", "exact");
  report.verdict("read2ComputesLines", compute_function(read2) == lines);
  const auto cls = classify_read_k(read2, lines, caps);
  report.count("read2SyntacticK", cls.syntactic_k);
  report.verdict("read2SyntacticK2", cls.syntactic_k == 2);
  report.verdict("read2Tight", is_tight(read2, lines, caps));
  report.verdict("dualComputesDual", compute_function(dual_circuit) == lines_dual);
  const auto dcls = classify_read_k(dual_circuit, lines_dual, caps);
  report.value("dualSemanticK", k_text(dcls.semantic_k));
  report.verdict("dualSemanticK1", dcls.semantic_k == 1u);
  const auto low = lowest_ones(lines);
  const auto envelope = lower_envelope(low);
  report.count("linesLowestOnes", low.size());
  report.count("envelopeSize", envelope.size());
  report.verdict("envelopeEqualsMatchings", envelope == lowest_ones(matching_function(m)));
  const auto tropical = boolean_read_k_to_tropical(read2, lines, 2, caps);
  GridSpec grid;
  grid.seed = g.seed;
  grid.samples = opt.samples;
  const auto check = check_approximation(tropical, MinProblem::lowest_ones_of(lines), 2, grid, caps);
  report.count("tropicalSize", tropical.size());
  report.count("gridPoints", check.points);
  report.count("gridMaxValue", check.max_value);
  report.value("gridMode", check.exhaustive ? "exhaustive" : "sampled");
  report.value("worstRatio", to_fraction_string(check.worst_ratio));
  report.verdict("tropicalFactor2Structural", check.structural);
  report.verdict("tropicalFactor2Grid", check.grid);
  return report.emit();
}

int verify_trop(const std::string& circ, const std::string& prob, const std::string& factor_text,
                const std::string& mode, std::uint64_t samples, std::optional<std::uint64_t> max_value,
                const Globals& g) {
  Report report(g);
  const auto caps = caps_of(g);
  report.caps(caps);
  const auto c = load_circuit(circ, report);
  const auto prob_text = slurp(prob);
  report.input(prob_text);
  const auto p = parse_min_problem(prob_text);
  const auto k = parse_factor(factor_text);
  GridSpec grid;
  grid.seed = g.seed;
  grid.samples = samples;
  grid.max_value = max_value;
  if (mode == "exhaustive") grid.mode = GridMode::Exhaustive;
  else if (mode == "sampled") grid.mode = GridMode::Sampled;
  else if (mode != "auto") throw Error(ErrorKind::InvalidArgument, "grid mode must be auto, exhaustive or sampled");
  const auto check = check_approximation(c, p, k, grid, caps);
  report.value("factor", to_fraction_string(k));
  report.count("gridPoints", check.points);
  report.count("gridMaxValue", check.max_value);
  report.value("gridMode", check.exhaustive ? "exhaustive" : "sampled");
  report.value("worstRatio", to_fraction_string(check.worst_ratio));
  report.value("structuralScope", k == 1 ? "necessary and sufficient" : "necessary only");
  report.verdict("structural", check.structural);
  report.verdict("grid", check.grid);
  return report.emit();
}

int verify_mlin(const std::string& circ, const std::optional<std::string>& function, const Globals& g) {
  Report report(g);
  const auto c = load_circuit(circ, report);
  const auto f = function ? load_function(*function, c.num_vars(), report) : compute_function(c);
  report.verdict("syntactic", is_syntactically_multilinear(c));
  report.verdict("semantic", is_semantically_multilinear(c));
  if (f(0)) {
    report.value("impedes", "not applicable (f(0) = 1)");
  } else {
    report.verdict("impedes", impedes_zero_terms(c, f));
  }
  return report.emit();
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  for (int i = 0; i < argc; ++i) g.argv.emplace_back(i == 0 ? "sck" : argv[i]);

  CLI::App app{"Semiring circuit toolkit: production, classification, transformations and verifiers."};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", g.json, "Machine-readable report");
  app.add_option("--seed", g.seed, "Seed for every random choice (default 0)");
  app.add_option("--max-set-size", g.max_set_size, "Cap on produced set sizes (else SCK_MAX_SET_SIZE or 1000000)");
  app.add_option("--max-degree", g.max_degree, "Drop produced monomials above this degree");

  std::function<int()> run;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate family circuits and problems");
  gen->require_subcommand(1);
  std::optional<std::string> gen_out, gen_problem;
  std::uint32_t gm = 0, gk = 0, gn = 0;
  bool gen_dual = false;
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("-o,--output", gen_out, "Circuit file (default: standard output)");
    sub->add_option("--problem", gen_problem, "Also write the minimization problem over the lowest ones");
  };
  auto family_gen = [&](const LineFamily& family) {
    Report report(g);
    const auto c = blocking_circuit(family);
    report.count("points", family.point_count);
    report.count("lines", family.lines.size());
    report.count("uniformity", family.uniformity);
    report.count("regularity", family.regularity);
    report.count("size", c.size());
    report.verdict("gateCountFormula", c.size() == std::size_t{family.uniformity} * family.lines.size() - 1);
    report.verdict("doubleCounting", std::uint64_t{family.uniformity} * family.lines.size() ==
                                         std::uint64_t{family.regularity} * family.point_count);
    if (gen_problem) {
      const auto low = lowest_ones(blocking_function(family));
      write_min_problem_file(*gen_problem, MinProblem(low));
      report.count("minimalBlockingSets", low.size());
    }
    write_text(gen_out, print_circuit(c), report);
    return report.emit();
  };
  auto* gen_lines = gen->add_subcommand("lines", "Blocking circuit of the axis-parallel lines of [m]^k");
  gen_lines->add_option("m", gm)->required();
  gen_lines->add_option("k", gk)->required();
  add_out(gen_lines);
  gen_lines->callback([&] { run = [&] { return family_gen(lines_family(gm, gk)); }; });
  auto* gen_cov = gen->add_subcommand("cov", "Blocking circuit of the k-subsets of [m] covering family");
  gen_cov->add_option("m", gm)->required();
  gen_cov->add_option("k", gk)->required();
  add_out(gen_cov);
  gen_cov->callback([&] { run = [&] { return family_gen(cov_family(gm, gk)); }; });
  auto* gen_perm = gen->add_subcommand("perm", "Arithmetic permanent circuit");
  gen_perm->add_option("n", gn)->required();
  add_out(gen_perm);
  gen_perm->callback([&] {
    run = [&] {
      Report report(g);
      const auto c = permanent_circuit(gn);
      report.count("size", c.size());
      report.count("mulGates", c.count(NodeKind::Mul));
      report.count("addGates", c.count(NodeKind::Add));
      if (gen_problem) {
        std::vector<ExpVec> matchings;
        std::vector<VarIndex> perm(gn);
        for (std::uint32_t i = 0; i < gn; ++i) perm[i] = i;
        do {
          VarSet cells;
          for (std::uint32_t i = 0; i < gn; ++i) cells.push_back(i * gn + perm[i]);
          matchings.push_back(ExpVec::from_support(cells));
        } while (std::next_permutation(perm.begin(), perm.end()));
        write_min_problem_file(*gen_problem, MinProblem(ExpVecSet(gn * gn, std::move(matchings))));
      }
      write_text(gen_out, print_circuit(c), report);
      return report.emit();
    };
  });
  auto* gen_gap = gen->add_subcommand("gap", "Read-2 circuit for the lines of the m x m grid");
  gen_gap->add_option("m", gm)->required();
  gen_gap->add_flag("--dual", gen_dual, "Emit the read-1 circuit for the dual function instead");
  add_out(gen_gap);
  gen_gap->callback([&] {
    run = [&] {
      Report report(g);
      const auto c = gen_dual ? dual_lines_read1_circuit(gm) : read2_lines_circuit(gm);
      report.count("size", c.size());
      if (gen_problem) {
        const auto f = blocking_function(lines_family(gm, 2));
        write_min_problem_file(*gen_problem, MinProblem(lowest_ones(gen_dual ? dual(f) : f)));
      }
      write_text(gen_out, print_circuit(c), report);
      return report.emit();
    };
  });

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate a circuit at a point");
  std::string circ_path, at_text, semiring_text;
  eval->add_option("circuit", circ_path)->required();
  eval->add_option("--at", at_text, "Comma-separated values, e.g. 2,3,5 or 1/2,0")->required();
  eval->add_option("--semiring", semiring_text, "boolean, arithmetic or tropical (default: the circuit's)");
  eval->callback([&] {
    run = [&] {
      Report report(g);
      const auto c = load_circuit(circ_path, report);
      report.input(at_text);
      Semiring s = c.semiring();
      if (!semiring_text.empty()) {
        const auto parsed = parse_semiring(semiring_text);
        if (!parsed) throw Error(ErrorKind::InvalidArgument, "unknown semiring '" + semiring_text + "'");
        s = *parsed;
      }
      const auto x = parse_point(at_text);
      const auto values = evaluate_outputs(c, s, x);
      report.value("semiring", std::string(to_string(s)));
      std::string rendered;
      for (const auto& v : values) {
        if (!rendered.empty()) rendered += ' ';
        rendered += is_integral(v) ? numerator(v).str() : to_fraction_string(v);
      }
      report.value("value", rendered);
      return report.emit();
    };
  });

  // expand
  auto* expand = app.add_subcommand("expand", "Print the produced polynomial");
  expand->add_option("circuit", circ_path)->required();
  expand->callback([&] {
    run = [&] {
      Report report(g);
      const auto caps = caps_of(g);
      report.caps(caps);
      const auto c = load_circuit(circ_path, report);
      const auto p = produced_polynomial(c, caps);
      report.count("terms", p.size());
      if (!p.empty()) report.count("degree", p.degree());
      report.body(print_polynomial(p));
      return report.emit();
    };
  });

  // classify
  auto* classify = app.add_subcommand("classify", "Semantic and syntactic read parameters");
  std::string function_text;
  classify->add_option("circuit", circ_path)->required();
  classify->add_option("--function", function_text, "table:<n>:<hex> or dnf:<expr>")->required();
  classify->callback([&] {
    run = [&] {
      Report report(g);
      const auto caps = caps_of(g);
      report.caps(caps);
      const auto c = load_circuit(circ_path, report);
      const auto f = load_function(function_text, c.num_vars(), report);
      const auto cls = classify_read_k(c, f, caps);
      report.value("semanticK", k_text(cls.semantic_k) + (cls.truncated ? " (truncated)" : ""));
      report.value("syntacticK", std::to_string(cls.syntactic_k) + (cls.truncated ? " (truncated)" : ""));
      report.count("size", c.size());
      return report.emit();
    };
  });

  // transform
  auto* transform = app.add_subcommand("transform", "Apply a circuit pass");
  std::string pass;
  std::optional<std::string> out_path;
  transform->add_option("pass", pass,
                        "elim-const | homparts:<r> | envelope | pos | degree-reduce:<k> | read1-from-arith | "
                        "const-free | retarget:<semiring>")
      ->required();
  transform->add_option("circuit", circ_path)->required();
  transform->add_option("-o,--output", out_path, "Output circuit file (default: standard output)");
  transform->add_option("--function", function_text, "Target function for degree-reduce and read1-from-arith");
  transform->callback([&] {
    run = [&] {
      Report report(g);
      const auto caps = caps_of(g);
      const auto c = load_circuit(circ_path, report);
      const auto colon = pass.find(':');
      const std::string name = pass.substr(0, colon);
      const std::string arg = colon == std::string::npos ? "" : pass.substr(colon + 1);
      auto number = [&]() -> std::uint32_t {
        try {
          std::size_t used = 0;
          const auto v = std::stoul(arg, &used);
          if (used == arg.size()) return static_cast<std::uint32_t>(v);
        } catch (const std::exception&) {
        }
        throw Error(ErrorKind::InvalidArgument, "pass '" + name + "' needs a numeric argument");
      };
      auto need_function = [&] {
        if (function_text.empty()) throw Error(ErrorKind::InvalidArgument, "pass '" + name + "' needs --function");
        return load_function(function_text, c.num_vars(), report);
      };
      Circuit result;
      if (name == "elim-const") {
        result = eliminate_constants(c);
      } else if (name == "homparts") {
        const auto r = number();
        const auto parts = homogeneous_parts(c, r);
        std::string map;
        for (std::uint32_t i = 0; i <= r; ++i) {
          map += (i ? " " : "") + (parts.output_of_degree[i] ? std::to_string(*parts.output_of_degree[i]) : "-");
        }
        report.value("outputOfDegree", map);
        report.verdict("sizeBound", parts.circuit.size() <= c.size() * (r + 1) * (r + 1));
        result = parts.circuit;
      } else if (name == "envelope") {
        result = lower_envelope_circuit(c);
      } else if (name == "pos") {
        result = positive_version(c);
      } else if (name == "degree-reduce") {
        result = degree_reduce_read_k(c, number(), need_function(), caps);
      } else if (name == "read1-from-arith") {
        result = arithmetic_to_read1(c, need_function(), caps);
      } else if (name == "const-free") {
        result = constant_free_version(c);
      } else if (name == "retarget") {
        const auto s = parse_semiring(arg);
        if (!s) throw Error(ErrorKind::InvalidArgument, "unknown semiring '" + arg + "'");
        result = retarget(c, *s);
      } else {
        throw Error(ErrorKind::InvalidArgument, "unknown pass '" + pass + "'");
      }
      report.count("sizeBefore", c.size());
      report.count("sizeAfter", result.size());
      write_text(out_path, print_circuit(result), report);
      return report.emit();
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Structural verifiers");
  verify->require_subcommand(1);
  auto* v_struct = verify->add_subcommand("struct", "Structural test for 'circuit computes f'");
  v_struct->add_option("circuit", circ_path)->required();
  v_struct->add_option("--function", function_text)->required();
  v_struct->callback([&] {
    run = [&] {
      Report report(g);
      const auto caps = caps_of(g);
      report.caps(caps);
      const auto c = load_circuit(circ_path, report);
      const auto f = load_function(function_text, c.num_vars(), report);
      const auto s = verify_structure(c, f, caps);
      report.verdict("supportsCovered", s.supports_covered);
      report.verdict("insideUpwardClosure", s.inside_upward);
      report.verdict("computesByTruthTable", compute_function(c) == f);
      return report.emit();
    };
  });
  auto* v_tight = verify->add_subcommand("tight", "Produced supports equal prime implicant supports");
  v_tight->add_option("circuit", circ_path)->required();
  v_tight->add_option("--function", function_text)->required();
  v_tight->callback([&] {
    run = [&] {
      Report report(g);
      const auto caps = caps_of(g);
      report.caps(caps);
      const auto c = load_circuit(circ_path, report);
      const auto f = load_function(function_text, c.num_vars(), report);
      report.verdict("tight", is_tight(c, f, caps));
      return report.emit();
    };
  });
  std::optional<std::string> mlin_function;
  auto mlin_setup = [&](CLI::App* sub) {
    sub->add_option("circuit", circ_path)->required();
    sub->add_option("--function", mlin_function, "Function for the zero-term test (default: computed)");
    sub->callback([&] { run = [&] { return verify_mlin(circ_path, mlin_function, g); }; });
  };
  mlin_setup(verify->add_subcommand("mlin", "Syntactic and semantic multilinearity"));
  auto* v_impede = verify->add_subcommand("impede", "Zero terms have positive factors below the closure of f");
  v_impede->add_option("circuit", circ_path)->required();
  v_impede->add_option("--function", mlin_function);
  v_impede->callback([&] {
    run = [&] {
      Report report(g);
      const auto c = load_circuit(circ_path, report);
      const auto f = mlin_function ? load_function(*mlin_function, c.num_vars(), report) : compute_function(c);
      const bool impedes = impedes_zero_terms(c, f);
      report.verdict("impedes", impedes);
      report.verdict("positiveVersionComputesClosure",
                     compute_function(positive_version(c)) == upward_closure(f));
      return report.emit();
    };
  });
  std::string prob_path, factor_text = "1", grid_mode = "auto";
  std::uint64_t samples = 200'000;
  std::optional<std::uint64_t> max_value;
  auto trop_setup = [&](CLI::App* sub) {
    sub->add_option("circuit", circ_path)->required();
    sub->add_option("problem", prob_path)->required();
    sub->add_option("--factor", factor_text, "Approximation factor k >= 1 (default 1)");
    sub->add_option("--grid", grid_mode, "auto | exhaustive | sampled");
    sub->add_option("--samples", samples, "Grid points when sampling");
    sub->add_option("--max-value", max_value, "Largest weight on the grid (default ceil(k)*n+1)");
    sub->callback([&] {
      run = [&] { return verify_trop(circ_path, prob_path, factor_text, grid_mode, samples, max_value, g); };
    });
  };
  trop_setup(verify->add_subcommand("trop", "Tropical approximation check"));

  auto* trop = app.add_subcommand("trop", "Tropical commands");
  trop->require_subcommand(1);
  trop_setup(trop->add_subcommand("check", "Same as 'verify trop'"));
  auto* mlin = app.add_subcommand("mlin", "Multilinearity commands");
  mlin->require_subcommand(1);
  mlin_setup(mlin->add_subcommand("check", "Same as 'verify mlin'"));

  // report
  auto* report_cmd = app.add_subcommand("report", "Composite reports");
  report_cmd->require_subcommand(1);
  GapOptions gap;
  auto* r_gap = report_cmd->add_subcommand("gap", "Desk-scale table for the read-2 versus read-1 gap");
  r_gap->add_option("--m", gap.m, "Grid side (default 3)");
  r_gap->add_option("--samples", gap.samples, "Grid points when sampling");
  r_gap->callback([&] { run = [&] { return report_gap(gap, g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }
  try {
    return run();
  } catch (const Error& e) {
    std::cerr << "sck: " << e.what() << '\n';
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "sck: " << e.what() << '\n';
    return kUsage;
  }
}
