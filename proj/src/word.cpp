#include "ppl/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <sstream>
#include <string>

#include "ppl/errors.hpp"

namespace ppl {

namespace {

void check_letter(const FactorFamily& family, int factor, Elt element) {
  if (factor < 0 || factor >= family.factor_count()) {
    fail(ErrorCode::BadReference,
         "factor index " + std::to_string(factor) + " out of range");
  }
  if (int(element) >= family.factor(factor)->order()) {
    fail(ErrorCode::BadReference,
         "element index " + std::to_string(element) + " out of range for " +
             family.factor_name(factor));
  }
}

void require_same_family(const Word& u, const Word& v) {
  if (!u.family().same_family(v.family())) {
    fail(ErrorCode::FamilyMismatch,
         "words belong to different factor families");
  }
}

/// Booth's least-rotation algorithm over the syllable order.
int least_rotation(const std::vector<Syllable>& s) {
  const int n = int(s.size());
  std::vector<int> f(std::size_t(2) * n, -1);
  int k = 0;
  for (int j = 1; j < 2 * n; ++j) {
    int i = f[j - k - 1];
    while (i != -1 && s[j % n] != s[(k + i + 1) % n]) {
      if (s[j % n] < s[(k + i + 1) % n]) k = j - i - 1;
      i = f[i];
    }
    if (i == -1 && s[j % n] != s[(k + i + 1) % n]) {
      if (s[j % n] < s[(k + i + 1) % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k;
}

}  // namespace

Word Word::identity(const FactorFamily& family) {
  return Word(family, {});
}

Word Word::from_syllables(const FactorFamily& family,
                          std::vector<Syllable> syllables) {
  for (std::size_t i = 0; i < syllables.size(); ++i) {
    check_letter(family, syllables[i].factor, syllables[i].element);
    const auto& g = family.factor(syllables[i].factor);
    if (syllables[i].element == g->identity()) {
      fail(ErrorCode::Internal, "identity syllable in a reduced word");
    }
    if (i > 0 && syllables[i].factor == syllables[i - 1].factor) {
      fail(ErrorCode::Internal,
           "adjacent syllables share a factor in a reduced word");
    }
  }
  return Word(family, std::move(syllables));
}

Word reduce(const FactorFamily& family,
            const std::vector<std::pair<int, Elt>>& raw) {
  std::vector<Syllable> stack;
  for (const auto& [factor, element] : raw) {
    check_letter(family, factor, element);
    const auto& g = family.factor(factor);
    Elt value = element;
    if (value == g->identity()) continue;
    if (!stack.empty() && stack.back().factor == factor) {
      Elt merged = g->mul(stack.back().element, value);
      if (merged == g->identity()) {
        stack.pop_back();
      } else {
        stack.back().element = merged;
      }
    } else {
      stack.push_back(Syllable{factor, value});
    }
  }
  return Word::from_syllables(family, std::move(stack));
}

Word multiply(const Word& u, const Word& v) {
  require_same_family(u, v);
  std::vector<std::pair<int, Elt>> raw;
  raw.reserve(u.syllables().size() + v.syllables().size());
  for (const auto& s : u.syllables()) raw.emplace_back(s.factor, s.element);
  for (const auto& s : v.syllables()) raw.emplace_back(s.factor, s.element);
  return reduce(u.family(), raw);
}

Word invert(const Word& u) {
  std::vector<Syllable> out(u.syllables().rbegin(), u.syllables().rend());
  for (auto& s : out) {
    s.element = u.family().factor(s.factor)->inv(s.element);
  }
  return Word::from_syllables(u.family(), std::move(out));
}

Word power(const Word& u, long long m) {
  Word base = m < 0 ? invert(u) : u;
  unsigned long long e =
      m < 0 ? -(unsigned long long)(m) : (unsigned long long)(m);
  Word acc = Word::identity(u.family());
  while (e > 0) {
    if (e & 1) acc = multiply(acc, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return acc;
}

CyclicWord::CyclicWord(const Word& w) : canonical_(w) {
  const auto& s = w.syllables();
  if (s.empty()) {
    fail(ErrorCode::Internal, "cyclic word requires a nonempty input");
  }
  if (s.size() >= 2 && s.front().factor == s.back().factor) {
    fail(ErrorCode::Internal,
         "cyclic word requires a cyclically reduced input");
  }
  rotation_ = s.size() >= 2 ? least_rotation(s) : 0;
  if (rotation_ != 0) canonical_ = rotate(w, rotation_);
}

Word rotate(const Word& w, int s) {
  const int len = w.length();
  if (len <= 1) return w;
  s = ((s % len) + len) % len;
  if (s == 0) return w;
  std::vector<Syllable> out;
  out.reserve(len);
  for (int i = 0; i < len; ++i) {
    out.push_back(w.syllables()[std::size_t((s + i) % len)]);
  }
  return Word::from_syllables(w.family(), std::move(out));
}

CyclicReduction cyclic_reduce(const Word& w) {
  std::deque<Syllable> core(w.syllables().begin(), w.syllables().end());
  std::vector<Syllable> conj;
  while (core.size() >= 2 && core.front().factor == core.back().factor) {
    const Syllable first = core.front();
    const Syllable last = core.back();
    const auto& g = w.family().factor(first.factor);
    core.pop_front();
    core.pop_back();
    // s1^-1 (s1 ... sL) s1 = s2 ... s_{L-1} (sL s1)
    Elt merged = g->mul(last.element, first.element);
    if (merged != g->identity()) {
      core.push_back(Syllable{first.factor, merged});
    }
    conj.push_back(first);
  }
  CyclicReduction out{
      Word::from_syllables(w.family(), {core.begin(), core.end()}),
      Word::from_syllables(w.family(), std::move(conj)), std::nullopt};
  if (!out.core.empty()) out.cyclic.emplace(out.core);
  return out;
}

bool is_conjugate(const Word& u, const Word& v) {
  require_same_family(u, v);
  CyclicReduction cu = cyclic_reduce(u);
  CyclicReduction cv = cyclic_reduce(v);
  if (cu.core.length() != cv.core.length()) return false;
  if (cu.core.empty()) return true;
  if (cu.core.length() == 1) {
    const Syllable a = cu.core.syllables()[0];
    const Syllable b = cv.core.syllables()[0];
    if (a.factor != b.factor) return false;
    const auto& g = u.family().factor(a.factor);
    for (Elt t = 0; t < Elt(g->order()); ++t) {
      if (g->mul(g->mul(t, a.element), g->inv(t)) == b.element) return true;
    }
    return false;
  }
  // Length >= 2: conjugate in the free product iff rotations of each
  // other, i.e. equal canonical forms.
  return *cu.cyclic == *cv.cyclic;
}

std::optional<TorsionCore> torsion_core(const Word& w) {
  CyclicReduction cr = cyclic_reduce(w);
  if (cr.core.length() >= 2) return std::nullopt;
  TorsionCore out{std::nullopt, cr.conjugator};
  if (cr.core.length() == 1) out.element = cr.core.syllables()[0];
  return out;
}

bool is_involution(const Word& w) {
  auto tc = torsion_core(w);
  if (!tc || !tc->element) return false;
  const auto& g = w.family().factor(tc->element->factor);
  return g->element_order(tc->element->element) == 2;
}

std::optional<TwoInvolutionWitness> two_involution_witness(
    const CyclicWord& w) {
  const int len = w.length();
  if (len < 2 || len % 2 != 0) return std::nullopt;
  const int k = len / 2;
  const auto& family = w.canonical().family();
  const auto& s = w.canonical().syllables();
  auto at = [&](int shift, int i) -> const Syllable& {
    return s[std::size_t((shift + i) % len)];
  };
  auto is_factor_involution = [&](const Syllable& x) {
    return family.factor(x.factor)->element_order(x.element) == 2;
  };
  for (int shift = 0; shift < len; ++shift) {
    if (!is_factor_involution(at(shift, 0))) continue;
    if (!is_factor_involution(at(shift, k))) continue;
    bool ok = true;
    for (int i = 1; i < k && ok; ++i) {
      const Syllable& a = at(shift, i);
      const Syllable& b = at(shift, 2 * k - i);
      ok = a.factor == b.factor &&
           a.element == family.factor(b.factor)->inv(b.element);
    }
    if (ok) {
      return TwoInvolutionWitness{shift, k, shift, (shift + k) % len};
    }
  }
  return std::nullopt;
}

InvolutionPair reconstruct_involutions(const CyclicWord& w,
                                       const TwoInvolutionWitness& witness) {
  const Word& canon = w.canonical();
  const auto& s = canon.syllables();
  if (witness.shift < 0 || witness.shift >= canon.length() ||
      witness.half * 2 != canon.length()) {
    fail(ErrorCode::Internal, "witness does not fit the word");
  }
  Word u = Word::from_syllables(
      canon.family(), {s.begin(), s.begin() + witness.shift});
  Word c1 = Word::from_syllables(canon.family(), {s[witness.shift]});
  Word c = multiply(multiply(u, c1), invert(u));
  Word d = multiply(invert(c), canon);
  if (!power(c, 2).empty() || !power(d, 2).empty() ||
      !(multiply(c, d) == canon)) {
    fail(ErrorCode::Internal, "involution reconstruction failed to verify");
  }
  return InvolutionPair{c, d};
}

Word deletion_retraction(const Word& w, const std::vector<int>& kill) {
  std::vector<bool> gone(std::size_t(w.family().factor_count()), false);
  for (int f : kill) {
    if (f < 0 || f >= w.family().factor_count()) {
      fail(ErrorCode::BadReference,
           "factor index " + std::to_string(f) + " out of range");
    }
    gone[std::size_t(f)] = true;
  }
  std::vector<std::pair<int, Elt>> raw;
  for (const auto& s : w.syllables()) {
    if (!gone[std::size_t(s.factor)]) raw.emplace_back(s.factor, s.element);
  }
  return reduce(w.family(), raw);
}

QuotientWordMap::QuotientWordMap(FactorFamily source, FactorFamily target,
                                 int factor, std::vector<Elt> projection)
    : source_(std::move(source)),
      target_(std::move(target)),
      factor_(factor),
      projection_(std::move(projection)) {}

Word QuotientWordMap::apply(const Word& w) const {
  if (!w.family().same_family(source_)) {
    fail(ErrorCode::FamilyMismatch,
         "word does not belong to the source family of this map");
  }
  std::vector<std::pair<int, Elt>> raw;
  raw.reserve(w.syllables().size());
  for (const auto& s : w.syllables()) {
    Elt image = s.factor == factor_ ? projection_[s.element] : s.element;
    raw.emplace_back(s.factor, image);
  }
  return reduce(target_, raw);
}

QuotientWordMap induced_quotient_hom(const FactorFamily& family, int i,
                                     const SubgroupSet& n) {
  if (i < 0 || i >= family.factor_count()) {
    fail(ErrorCode::BadReference,
         "factor index " + std::to_string(i) + " out of range");
  }
  if (n.parent() != family.factor(i)) {
    fail(ErrorCode::BadReference,
         "subgroup does not live in factor " + family.factor_name(i));
  }
  QuotientResult q = quotient(family.factor(i), n);
  FactorFamily target = FactorFamily::replace_factor(family, i, q.group);
  return QuotientWordMap(family, target, i, std::move(q.projection));
}

namespace {

long long parse_exponent(std::string_view text, std::string_view token) {
  long long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    fail(ErrorCode::ParseError,
         "bad exponent in word token '" + std::string(token) + "'");
  }
  return value;
}

Elt resolve_element(const FactorFamily& family, int factor,
                    std::string_view text, std::string_view token) {
  const auto& g = family.factor(factor);
  if (auto byname = g->element_by_name(text)) return *byname;
  int index = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, index);
  if (ec == std::errc() && ptr == last && index >= 0 && index < g->order()) {
    return Elt(index);
  }
  fail(ErrorCode::ParseError, "unknown element '" + std::string(text) +
                                  "' of factor " + family.factor_name(factor) +
                                  " in word token '" + std::string(token) +
                                  "'");
}

}  // namespace

Word parse_word(const FactorFamily& family, std::string_view literal) {
  std::vector<std::pair<int, Elt>> raw;
  std::istringstream in{std::string(literal)};
  std::string token;
  bool any = false;
  while (in >> token) {
    any = true;
    if (token == "1") continue;
    const std::size_t colon = token.find(':');
    if (colon == std::string::npos || colon == 0) {
      fail(ErrorCode::ParseError,
           "word token '" + token + "' is not of the form factor:element");
    }
    const std::string factor_name = token.substr(0, colon);
    const int factor = family.factor_index(factor_name);
    if (factor < 0) {
      fail(ErrorCode::ParseError, "unknown factor '" + factor_name +
                                      "' in word token '" + token + "'");
    }
    std::string rest = token.substr(colon + 1);
    long long exponent = 1;
    const std::size_t caret = rest.rfind('^');
    if (caret != std::string::npos) {
      exponent = parse_exponent(std::string_view(rest).substr(caret + 1),
                                token);
      rest.resize(caret);
    }
    if (rest.empty()) {
      fail(ErrorCode::ParseError,
           "missing element in word token '" + token + "'");
    }
    Elt base = resolve_element(family, factor, rest, token);
    raw.emplace_back(factor, family.factor(factor)->pow(base, exponent));
  }
  if (!any) fail(ErrorCode::ParseError, "empty word literal");
  return reduce(family, raw);
}

std::string render_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += w.family().factor_name(s.factor);
    out += ':';
    out += w.family().factor(s.factor)->element_name(s.element);
  }
  return out;
}

}  // namespace ppl
