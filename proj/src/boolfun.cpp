#include "sck/boolfun.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace sck {

namespace {

constexpr std::uint32_t kHardTableCap = 30;

// Bits x in 0..63 with bit i of x set.
constexpr std::uint64_t kVarMask[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

std::size_t word_count(std::uint32_t arity) { return arity <= 6 ? 1 : std::size_t{1} << (arity - 6); }

std::uint64_t valid_mask(std::uint32_t arity) {
  return arity >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::uint64_t{1} << arity)) - 1;
}

void check_arity(std::uint32_t arity, std::uint32_t cap) {
  if (arity > std::min(cap, kHardTableCap)) {
    throw Error(ErrorKind::ArityTooLarge, "truth table over " + std::to_string(arity) + " variables exceeds cap " +
                                              std::to_string(std::min(cap, kHardTableCap)));
  }
}

using Words = std::vector<std::uint64_t>;

/// x -> x_i and t(x with bit i cleared).
Words shift_up(const Words& t, std::uint32_t i) {
  Words out(t.size(), 0);
  if (i < 6) {
    const auto s = 1u << i;
    for (std::size_t w = 0; w < t.size(); ++w) out[w] = (t[w] & ~kVarMask[i]) << s;
  } else {
    const std::size_t bit = std::size_t{1} << (i - 6);
    for (std::size_t w = 0; w < t.size(); ++w) {
      if (w & bit) out[w] = t[w ^ bit];
    }
  }
  return out;
}

/// x -> t(x with bit i flipped).
Words flip(const Words& t, std::uint32_t i) {
  Words out(t.size(), 0);
  if (i < 6) {
    const auto s = 1u << i;
    for (std::size_t w = 0; w < t.size(); ++w) {
      out[w] = ((t[w] & ~kVarMask[i]) << s) | ((t[w] & kVarMask[i]) >> s);
    }
  } else {
    const std::size_t bit = std::size_t{1} << (i - 6);
    for (std::size_t w = 0; w < t.size(); ++w) out[w] = t[w ^ bit];
  }
  return out;
}

Words variable_words(std::uint32_t arity, std::uint32_t var) {
  Words out(word_count(arity));
  for (std::size_t w = 0; w < out.size(); ++w) {
    if (var < 6) {
      out[w] = kVarMask[var];
    } else {
      out[w] = ((w >> (var - 6)) & 1) ? ~std::uint64_t{0} : 0;
    }
  }
  out.back() &= valid_mask(arity);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// BooleanFunction

BooleanFunction::BooleanFunction(std::uint32_t arity, std::uint32_t cap) : arity_(arity) {
  check_arity(arity, cap);
  words_.assign(word_count(arity), 0);
}

BooleanFunction BooleanFunction::constant(std::uint32_t arity, bool value, std::uint32_t cap) {
  BooleanFunction f(arity, cap);
  if (value) {
    std::fill(f.words_.begin(), f.words_.end(), ~std::uint64_t{0});
    f.finish();
  }
  return f;
}

BooleanFunction BooleanFunction::variable(std::uint32_t arity, std::uint32_t var, std::uint32_t cap) {
  if (var >= arity) throw Error(ErrorKind::InvalidArgument, "variable out of range");
  BooleanFunction f(arity, cap);
  f.words_ = variable_words(arity, var);
  f.finish();
  return f;
}

BooleanFunction BooleanFunction::from_words(std::uint32_t arity, std::vector<std::uint64_t> words,
                                            std::uint32_t cap) {
  BooleanFunction f(arity, cap);
  if (words.size() != f.words_.size()) throw Error(ErrorKind::ArityMismatch, "table length does not match arity");
  f.words_ = std::move(words);
  f.finish();
  return f;
}

BooleanFunction BooleanFunction::from_predicate(std::uint32_t arity, const std::function<bool(std::uint64_t)>& pred,
                                                std::uint32_t cap) {
  BooleanFunction f(arity, cap);
  for (std::uint64_t x = 0; x < f.table_size(); ++x) {
    if (pred(x)) f.words_[x >> 6] |= std::uint64_t{1} << (x & 63);
  }
  f.finish();
  return f;
}

void BooleanFunction::finish() {
  words_.back() &= valid_mask(arity_);
  monotone_ = true;
  for (std::uint32_t i = 0; i < arity_ && monotone_; ++i) {
    const auto up = shift_up(words_, i);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (up[w] & ~words_[w]) {
        monotone_ = false;
        break;
      }
    }
  }
}

bool BooleanFunction::at(std::span<const std::uint8_t> bits) const {
  if (bits.size() != arity_) throw Error(ErrorKind::ArityMismatch, "assignment length does not match arity");
  std::uint64_t x = 0;
  for (std::uint32_t i = 0; i < arity_; ++i) {
    if (bits[i] > 1) throw Error(ErrorKind::DomainError, "Boolean input must be 0 or 1");
    if (bits[i]) x |= std::uint64_t{1} << i;
  }
  return (*this)(x);
}

bool BooleanFunction::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool BooleanFunction::is_constant() const { return is_zero() || count_ones() == table_size(); }

std::uint64_t BooleanFunction::count_ones() const {
  std::uint64_t n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

BooleanFunction BooleanFunction::operator~() const {
  BooleanFunction f = *this;
  for (auto& w : f.words_) w = ~w;
  f.finish();
  return f;
}

namespace {

template <class Op>
BooleanFunction combine(const BooleanFunction& a, const BooleanFunction& b, Op op) {
  if (a.arity() != b.arity()) throw Error(ErrorKind::ArityMismatch, "functions differ in arity");
  std::vector<std::uint64_t> words(a.words().size());
  for (std::size_t w = 0; w < words.size(); ++w) words[w] = op(a.words()[w], b.words()[w]);
  return BooleanFunction::from_words(a.arity(), std::move(words), kHardTableCap);
}

}  // namespace

BooleanFunction operator&(const BooleanFunction& a, const BooleanFunction& b) {
  return combine(a, b, [](auto x, auto y) { return x & y; });
}
BooleanFunction operator|(const BooleanFunction& a, const BooleanFunction& b) {
  return combine(a, b, [](auto x, auto y) { return x | y; });
}
BooleanFunction operator^(const BooleanFunction& a, const BooleanFunction& b) {
  return combine(a, b, [](auto x, auto y) { return x ^ y; });
}

bool BooleanFunction::implies(const BooleanFunction& other) const {
  if (arity_ != other.arity_) throw Error(ErrorKind::ArityMismatch, "functions differ in arity");
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Terms and antichains

bool Term::is_zero_term() const {
  std::size_t i = 0, j = 0;
  while (i < positives.size() && j < negatives.size()) {
    if (positives[i] == negatives[j]) return true;
    if (positives[i] < negatives[j]) ++i;
    else ++j;
  }
  return false;
}

Term Term::conjoin(const Term& other) const {
  Term t;
  std::set_union(positives.begin(), positives.end(), other.positives.begin(), other.positives.end(),
                 std::back_inserter(t.positives));
  std::set_union(negatives.begin(), negatives.end(), other.negatives.begin(), other.negatives.end(),
                 std::back_inserter(t.negatives));
  return t;
}

std::string Term::to_string() const {
  std::vector<std::pair<VarIndex, bool>> lits;
  for (auto v : positives) lits.emplace_back(v, false);
  for (auto v : negatives) lits.emplace_back(v, true);
  std::sort(lits.begin(), lits.end());
  if (lits.empty()) return "1";
  std::string out;
  for (const auto& [v, neg] : lits) {
    if (!out.empty()) out += '&';
    if (neg) out += '!';
    out += 'x' + std::to_string(v + 1);
  }
  return out;
}

void require_antichain(const ExpVecSet& a) {
  if (!a.is_zero_one()) throw Error(ErrorKind::InvalidAntichain, "vectors must be 0-1");
  if (!a.is_antichain()) throw Error(ErrorKind::InvalidAntichain, "vectors must be pairwise incomparable");
}

BooleanFunction function_of_antichain(const ExpVecSet& a, std::uint32_t cap) {
  std::vector<std::uint64_t> masks;
  for (const auto& v : a) masks.push_back(v.support_mask());
  return BooleanFunction::from_predicate(
      a.arity(),
      [&](std::uint64_t x) {
        return std::any_of(masks.begin(), masks.end(), [x](std::uint64_t m) { return (x & m) == m; });
      },
      cap);
}

// ---------------------------------------------------------------------------
// Tabulation

namespace {

std::vector<std::optional<Words>> tabulate(const Circuit& c, std::uint32_t cap, bool release) {
  require_valid(c);
  const auto n = c.num_vars();
  check_arity(n, cap);
  const auto& nodes = c.nodes();
  const auto mark = c.reachable();
  std::vector<std::size_t> last(nodes.size(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].is_gate()) {
      last[nodes[i].lhs] = std::max(last[nodes[i].lhs], i);
      last[nodes[i].rhs] = std::max(last[nodes[i].rhs], i);
    }
  }
  for (NodeId o : c.outputs()) last[o] = SIZE_MAX;

  const auto valid = valid_mask(n);
  std::vector<std::optional<Words>> tables(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!mark[i]) continue;
    const Node& node = nodes[i];
    Words t;
    switch (node.kind) {
      case NodeKind::Input: t = variable_words(n, node.var); break;
      case NodeKind::Literal:
        t = variable_words(n, node.var);
        if (node.negated) {
          for (auto& w : t) w = ~w;
          t.back() &= valid;
        }
        break;
      case NodeKind::Const:
        if (node.value != 0 && node.value != 1) {
          throw Error(ErrorKind::DomainError, "Boolean evaluation needs 0/1 constants");
        }
        t.assign(word_count(n), node.value == 1 ? ~std::uint64_t{0} : 0);
        t.back() &= valid;
        break;
      case NodeKind::Add:
      case NodeKind::Mul: {
        const Words& l = *tables[node.lhs];
        const Words& r = *tables[node.rhs];
        t.resize(l.size());
        const bool is_or = node.kind == NodeKind::Add;
        for (std::size_t w = 0; w < t.size(); ++w) t[w] = is_or ? (l[w] | r[w]) : (l[w] & r[w]);
        break;
      }
    }
    tables[i] = std::move(t);
    if (release && node.is_gate()) {
      if (last[node.lhs] == i) tables[node.lhs].reset();
      if (last[node.rhs] == i) tables[node.rhs].reset();
    }
  }
  return tables;
}

}  // namespace

BooleanFunction compute_function(const Circuit& c, std::uint32_t cap) {
  Circuit single = c;
  single.set_outputs({c.output()});
  auto tables = tabulate(single, cap, true);
  return BooleanFunction::from_words(c.num_vars(), std::move(*tables[c.output()]), kHardTableCap);
}

std::vector<BooleanFunction> compute_node_functions(const Circuit& c, std::uint32_t cap) {
  auto tables = tabulate(c, cap, false);
  std::vector<BooleanFunction> out;
  out.reserve(tables.size());
  for (auto& t : tables) {
    out.push_back(t ? BooleanFunction::from_words(c.num_vars(), std::move(*t), kHardTableCap)
                    : BooleanFunction(c.num_vars(), kHardTableCap));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Closures and derived functions

BooleanFunction upward_closure(const BooleanFunction& f) {
  Words t = f.words();
  for (std::uint32_t i = 0; i < f.arity(); ++i) {
    const auto up = shift_up(t, i);
    for (std::size_t w = 0; w < t.size(); ++w) t[w] |= up[w];
  }
  return BooleanFunction::from_words(f.arity(), std::move(t), kHardTableCap);
}

Antichain lowest_ones(const BooleanFunction& f) {
  // a is minimal iff f(a) = 1 and no strict minorant lies in the upward
  // closure, i.e. the closure vanishes on every a - e_i.
  const auto closure = upward_closure(f);
  Words below(f.words().size(), 0);
  for (std::uint32_t i = 0; i < f.arity(); ++i) {
    const auto up = shift_up(closure.words(), i);
    for (std::size_t w = 0; w < below.size(); ++w) below[w] |= up[w];
  }
  std::vector<ExpVec> low;
  for (std::size_t w = 0; w < below.size(); ++w) {
    std::uint64_t bits = f.words()[w] & ~below[w];
    while (bits) {
      const auto b = static_cast<std::uint64_t>(std::countr_zero(bits));
      low.push_back(ExpVec::from_mask((static_cast<std::uint64_t>(w) << 6) | b));
      bits &= bits - 1;
    }
  }
  return Antichain(f.arity(), std::move(low));
}

BooleanFunction dual(const BooleanFunction& f) {
  const auto top = f.table_size() - 1;
  return BooleanFunction::from_predicate(f.arity(), [&](std::uint64_t x) { return !f(top ^ x); }, kHardTableCap);
}

VarSet depends_on(const BooleanFunction& f) {
  VarSet out;
  for (std::uint32_t i = 0; i < f.arity(); ++i) {
    if (flip(f.words(), i) != f.words()) out.push_back(i);
  }
  return out;
}

std::vector<Term> prime_implicants(const BooleanFunction& f) {
  const auto n = f.arity();
  if (n > 13) throw Error(ErrorKind::ArityTooLarge, "prime implicant search is limited to 13 variables");
  std::vector<std::uint64_t> pow3(n + 1, 1);
  for (std::uint32_t i = 1; i <= n; ++i) pow3[i] = pow3[i - 1] * 3;
  // Digit i of a term code: 0 absent, 1 positive, 2 negated.
  std::vector<std::uint8_t> implicant(pow3[n], 0);
  for (std::uint64_t code = pow3[n]; code-- > 0;) {
    std::uint64_t rest = code;
    std::optional<std::uint32_t> free_var;
    std::uint64_t x = 0;
    for (std::uint32_t i = 0; i < n; ++i, rest /= 3) {
      const auto d = rest % 3;
      if (d == 0 && !free_var) free_var = i;
      if (d == 1) x |= std::uint64_t{1} << i;
    }
    if (!free_var) {
      implicant[code] = f(x);
    } else {
      implicant[code] = implicant[code + pow3[*free_var]] && implicant[code + 2 * pow3[*free_var]];
    }
  }
  std::vector<Term> out;
  for (std::uint64_t code = 0; code < pow3[n]; ++code) {
    if (!implicant[code]) continue;
    bool prime = true;
    Term t;
    std::uint64_t rest = code;
    for (std::uint32_t i = 0; i < n; ++i, rest /= 3) {
      const auto d = rest % 3;
      if (d == 0) continue;
      if (implicant[code - d * pow3[i]]) prime = false;
      (d == 1 ? t.positives : t.negatives).push_back(i);
    }
    if (prime) out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint32_t max_prime_implicant_width(const BooleanFunction& f) {
  std::uint32_t m = 0;
  for (const auto& a : lowest_ones(f)) m = std::max<std::uint32_t>(m, static_cast<std::uint32_t>(a.support_size()));
  return m;
}

// ---------------------------------------------------------------------------
// Structural verifiers

namespace {

void require_same_arity(const Circuit& c, const BooleanFunction& f) {
  if (c.num_vars() != f.arity()) throw Error(ErrorKind::ArityMismatch, "circuit and function differ in arity");
}

void require_computes(const Circuit& c, const BooleanFunction& f) {
  require_same_arity(c, f);
  if (!(compute_function(c, kHardTableCap) == f)) {
    throw Error(ErrorKind::NotComputingF, "circuit does not compute the given function");
  }
}

bool family_subset(const SupportFamily& a, const SupportFamily& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

StructureCheck verify_structure(const Circuit& c, const BooleanFunction& f, const ProductionCaps& caps) {
  require_same_arity(c, f);
  if (!c.is_monotone()) throw Error(ErrorKind::NonMonotone, "circuit has negated literals");
  if (!f.is_monotone()) throw Error(ErrorKind::NonMonotone, "function is not monotone");
  const auto produced = produced_exponent_set(c, caps);
  const auto low = lowest_ones(f);
  StructureCheck out;
  out.supports_covered = family_subset(low.supports(), produced.supports());
  out.inside_upward =
      std::all_of(produced.begin(), produced.end(), [&](const ExpVec& b) { return low.upward_contains(b); });
  return out;
}

ReadKClassification classify_read_k(const Circuit& c, const BooleanFunction& f, const ProductionCaps& caps) {
  if (!c.is_monotone()) throw Error(ErrorKind::NonMonotone, "circuit has negated literals");
  require_computes(c, f);
  const auto produced = produced_exponent_set(c, caps);
  std::map<VarSet, std::uint32_t> best_shadow;
  for (const auto& b : produced) {
    auto [it, fresh] = best_shadow.emplace(b.support(), b.max_entry());
    if (!fresh) it->second = std::min(it->second, b.max_entry());
  }
  ReadKClassification out;
  out.truncated = caps.max_degree.has_value();
  out.syntactic_k = produced.empty() ? 0 : produced.max_entry();
  std::uint32_t k = 0;
  for (const auto& a : lowest_ones(f)) {
    auto it = best_shadow.find(a.support());
    if (it == best_shadow.end()) return out;
    k = std::max(k, it->second);
  }
  out.semantic_k = k;
  return out;
}

bool is_cover_free(const std::vector<ExpVec>& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) {
      const auto sum = a[i] + a[j];
      for (std::size_t l = 0; l < a.size(); ++l) {
        if (l == i || l == j || a[l] == a[i] || a[l] == a[j]) continue;
        if (sum.dominates(a[l])) return false;
      }
    }
  }
  return true;
}

bool is_tight(const Circuit& c, const BooleanFunction& f, const ProductionCaps& caps) {
  if (!c.is_monotone()) throw Error(ErrorKind::NonMonotone, "circuit has negated literals");
  require_computes(c, f);
  return produced_exponent_set(c, caps).supports() == lowest_ones(f).supports();
}

// ---------------------------------------------------------------------------
// Function literals

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorKind::ParseError, msg); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int hex_value(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
  if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
  return -1;
}

BooleanFunction parse_table(std::string_view body, std::uint32_t cap) {
  std::string spaced(body);
  std::replace(spaced.begin(), spaced.end(), ':', ' ');
  std::istringstream in{spaced};
  std::string n_text, hex, extra;
  if (!(in >> n_text >> hex) || (in >> extra)) parse_fail("expected 'table <n> <hex>'");
  std::uint32_t n = 0;
  try {
    std::size_t used = 0;
    n = static_cast<std::uint32_t>(std::stoul(n_text, &used));
    if (used != n_text.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    parse_fail("bad arity '" + n_text + "'");
  }
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex = hex.substr(2);
  BooleanFunction probe(n, cap);
  std::vector<std::uint64_t> words(probe.words().size(), 0);
  const std::uint64_t bits = std::uint64_t{1} << n;
  for (std::size_t d = 0; d < hex.size(); ++d) {
    const int v = hex_value(hex[hex.size() - 1 - d]);
    if (v < 0) parse_fail("bad hex digit in table");
    for (int b = 0; b < 4; ++b) {
      if (!((v >> b) & 1)) continue;
      const std::uint64_t x = 4 * d + b;
      if (x >= bits) parse_fail("table has bits beyond 2^n entries");
      words[x >> 6] |= std::uint64_t{1} << (x & 63);
    }
  }
  return BooleanFunction::from_words(n, std::move(words), cap);
}

struct Literal {
  std::uint32_t var;
  bool negated;
};

BooleanFunction parse_dnf(std::string_view body, std::optional<std::uint32_t> arity, std::uint32_t cap) {
  std::string text;
  for (char ch : body) {
    if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
  }
  if (text.empty()) parse_fail("empty dnf");
  // Each term: nullopt for the constant 1, otherwise its literals. A term
  // that is the literal `0` is dropped.
  std::vector<std::vector<Literal>> terms;
  std::uint32_t max_var = 0;
  bool any_var = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto bar = text.find('|', pos);
    if (bar == std::string::npos) bar = text.size();
    const std::string term_text = text.substr(pos, bar - pos);
    if (term_text.empty()) parse_fail("empty term in dnf");
    std::vector<Literal> lits;
    bool is_false = false;
    std::size_t p = 0;
    while (p <= term_text.size()) {
      auto amp = term_text.find_first_of("&*", p);
      if (amp == std::string::npos) amp = term_text.size();
      std::string lit = term_text.substr(p, amp - p);
      if (lit.empty()) parse_fail("empty literal in '" + term_text + "'");
      bool neg = false;
      while (!lit.empty() && (lit[0] == '!' || lit[0] == '~')) {
        neg = !neg;
        lit.erase(0, 1);
      }
      if (lit == "1" && !neg) {
      } else if (lit == "0" && !neg) {
        is_false = true;
      } else {
        std::uint32_t var = 0;
        static constexpr std::string_view kLetters = "xyzuvw";
        if (lit.size() > 1 && lit[0] == 'x' &&
            std::all_of(lit.begin() + 1, lit.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
          const auto idx = std::stoul(lit.substr(1));
          if (idx == 0) parse_fail("variables are numbered from x1");
          var = static_cast<std::uint32_t>(idx - 1);
        } else if (lit.size() == 1 && kLetters.find(lit[0]) != std::string_view::npos) {
          var = static_cast<std::uint32_t>(kLetters.find(lit[0]));
        } else {
          parse_fail("bad literal '" + lit + "'");
        }
        max_var = std::max(max_var, var);
        any_var = true;
        lits.push_back({var, neg});
      }
      p = amp + 1;
    }
    if (!is_false) terms.push_back(std::move(lits));
    pos = bar + 1;
  }
  const std::uint32_t n = arity ? *arity : (any_var ? max_var + 1 : 0);
  if (any_var && max_var >= n) parse_fail("variable x" + std::to_string(max_var + 1) + " exceeds arity");
  return BooleanFunction::from_predicate(
      n,
      [&](std::uint64_t x) {
        for (const auto& t : terms) {
          if (std::all_of(t.begin(), t.end(),
                          [x](const Literal& l) { return (((x >> l.var) & 1) != 0) != l.negated; })) {
            return true;
          }
        }
        return false;
      },
      cap);
}

}  // namespace

BooleanFunction parse_function(std::string_view text, std::optional<std::uint32_t> arity, std::uint32_t cap) {
  text = trim(text);
  auto strip = [&](std::string_view kw) {
    if (text.starts_with(kw) && text.size() > kw.size() &&
        (text[kw.size()] == ':' || std::isspace(static_cast<unsigned char>(text[kw.size()])))) {
      text.remove_prefix(kw.size() + 1);
      return true;
    }
    return false;
  };
  if (strip("table")) {
    auto f = parse_table(text, cap);
    if (arity && *arity != f.arity()) parse_fail("table arity does not match");
    return f;
  }
  if (strip("dnf")) return parse_dnf(text, arity, cap);
  parse_fail("function literal must start with 'table' or 'dnf'");
}

std::string format_function(const BooleanFunction& f) {
  const std::uint64_t bits = f.table_size();
  const std::uint64_t digits = std::max<std::uint64_t>(1, bits / 4);
  std::string hex;
  hex.reserve(digits);
  static constexpr char kDigits[] = "0123456789abcdef";
  for (std::uint64_t d = digits; d-- > 0;) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      const std::uint64_t x = 4 * d + b;
      if (x < bits && f(x)) v |= 1 << b;
    }
    hex += kDigits[v];
  }
  return "table " + std::to_string(f.arity()) + " " + hex;
}

}  // namespace sck
