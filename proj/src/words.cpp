#include "cosetorder/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace cosetorder {

Alphabet::Alphabet(std::vector<std::string> ids) : ids_(std::move(ids)) {
  for (int i = 0; i < static_cast<int>(ids_.size()); ++i) {
    const std::string& id = ids_[i];
    if (id.empty() || !std::islower(static_cast<unsigned char>(id[0])))
      throw word_error("bad generator id '" + id + "'");
    for (char c : id)
      if (!std::islower(static_cast<unsigned char>(c)) &&
          !std::isdigit(static_cast<unsigned char>(c)) && c != '_')
        throw word_error("bad generator id '" + id + "'");
    if (!index_.emplace(id, i).second)
      throw word_error("duplicate generator id '" + id + "'");
  }
}

std::shared_ptr<const Alphabet> Alphabet::make(std::vector<std::string> ids) {
  return std::shared_ptr<const Alphabet>(new Alphabet(std::move(ids)));
}

int Alphabet::index(std::string_view id) const {
  auto it = index_.find(std::string(id));
  return it == index_.end() ? -1 : it->second;
}

ReducedWord ReducedWord::identity(AlphabetPtr alphabet) {
  return ReducedWord(std::move(alphabet), {});
}

ReducedWord ReducedWord::reduce(AlphabetPtr alphabet,
                                std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (const Letter& l : raw) {
    if (l.gen < 0 || l.gen >= alphabet->size())
      throw word_error("letter outside alphabet");
    if (l.exp != 1 && l.exp != -1) throw word_error("letter exponent not +-1");
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return ReducedWord(std::move(alphabet), std::move(out));
}

bool ReducedWord::operator==(const ReducedWord& other) const {
  if (alphabet_ != other.alphabet_ && !(*alphabet_ == *other.alphabet_))
    return false;
  return letters_ == other.letters_;
}

void require_same_alphabet(const ReducedWord& u, const ReducedWord& v) {
  if (u.alphabet() == v.alphabet()) return;
  if (*u.alphabet() == *v.alphabet()) return;
  throw word_error("alphabet mismatch");
}

ReducedWord multiply(const ReducedWord& u, const ReducedWord& v) {
  require_same_alphabet(u, v);
  std::vector<Letter> out = u.letters();
  for (const Letter& l : v.letters()) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return ReducedWord(u.alphabet(), std::move(out));
}

ReducedWord inverse(const ReducedWord& u) {
  std::vector<Letter> out;
  out.reserve(u.size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it)
    out.push_back(it->inverse());
  return ReducedWord(u.alphabet(), std::move(out));
}

ReducedWord commutator(const ReducedWord& x, const ReducedWord& y) {
  return multiply(multiply(inverse(x), inverse(y)), multiply(x, y));
}

ReducedWord power(const ReducedWord& u, long long k) {
  ReducedWord base = k < 0 ? inverse(u) : u;
  ReducedWord acc = ReducedWord::identity(u.alphabet());
  for (long long i = 0, n = k < 0 ? -k : k; i < n; ++i)
    acc = multiply(acc, base);
  return acc;
}

CyclicReduction cyclic_reduce(const ReducedWord& u) {
  const auto& ls = u.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == ls[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core(ls.begin() + lo, ls.begin() + hi);
  std::vector<Letter> conj(ls.begin(), ls.begin() + lo);
  return {ReducedWord::reduce(u.alphabet(), core),
          ReducedWord::reduce(u.alphabet(), conj)};
}

RootPower root(const ReducedWord& u) {
  if (u.empty()) throw word_error("root of the empty word");
  CyclicReduction cr = cyclic_reduce(u);
  const auto& core = cr.core.letters();
  const std::size_t n = core.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i)
      periodic = core[i] == core[i - d];
    if (periodic) {
      std::vector<Letter> seg(core.begin(), core.begin() + d);
      ReducedWord r = multiply(
          multiply(cr.conjugator, ReducedWord::reduce(u.alphabet(), seg)),
          inverse(cr.conjugator));
      return {r, static_cast<int>(n / d)};
    }
  }
  return {u, 1};  // unreachable: d = n always succeeds
}

bool is_maximal_cyclic_generator(const ReducedWord& u) {
  return !u.empty() && root(u).exponent == 1;
}

ReducedWord parse_word(std::string_view text, AlphabetPtr alphabet) {
  std::vector<Letter> raw;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (text[i] == '1') {
      ++i;
      if (i < n && !std::isspace(static_cast<unsigned char>(text[i])))
        throw parse_error("unexpected character after '1'", i);
      continue;  // identity token contributes nothing
    }
    if (!std::islower(static_cast<unsigned char>(text[i])))
      throw parse_error("expected generator id", i);
    std::size_t j = i;
    while (j < n && (std::islower(static_cast<unsigned char>(text[j])) ||
                     std::isdigit(static_cast<unsigned char>(text[j])) ||
                     text[j] == '_'))
      ++j;
    std::string id(text.substr(i, j - i));
    int gen = alphabet->index(id);
    if (gen < 0) throw parse_error("unknown generator '" + id + "'", start);
    i = j;
    long long exp = 1;
    if (i < n && text[i] == '^') {
      ++i;
      std::size_t e0 = i;
      bool neg = false;
      if (i < n && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error("expected exponent", e0);
      long long mag = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        mag = mag * 10 + (text[i] - '0');
        if (mag > 1000000) throw parse_error("exponent too large", e0);
        ++i;
      }
      exp = neg ? -mag : mag;
    }
    if (i < n && !std::isspace(static_cast<unsigned char>(text[i])))
      throw parse_error("unexpected character in token", i);
    int sgn = exp < 0 ? -1 : 1;
    for (long long k = 0, m = exp < 0 ? -exp : exp; k < m; ++k)
      raw.push_back({gen, sgn});
  }
  return ReducedWord::reduce(std::move(alphabet), raw);
}

std::string format_word(const ReducedWord& u) {
  if (u.empty()) return "1";
  std::string out;
  const auto& ls = u.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long long exp = static_cast<long long>(j - i) * ls[i].exp;
    if (!out.empty()) out += ' ';
    out += u.alphabet()->id(ls[i].gen);
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  return out;
}

ReducedWord substitute(const ReducedWord& u,
                       const std::vector<ReducedWord>& images) {
  if (static_cast<int>(images.size()) != u.alphabet()->size())
    throw word_error("substitution image count mismatch");
  AlphabetPtr target = images.empty() ? u.alphabet() : images[0].alphabet();
  ReducedWord acc = ReducedWord::identity(target);
  for (const Letter& l : u.letters()) {
    const ReducedWord& img = images[l.gen];
    acc = multiply(acc, l.exp > 0 ? img : inverse(img));
  }
  return acc;
}

}  // namespace cosetorder
